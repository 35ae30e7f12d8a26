#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wrnet/egraph.hpp"
#include "wrnet/rational.hpp"

namespace wrnet {

/// x^y for a positive rational x. Exponents must be integers.
Rational monomial(const RatVec& x, const RatVec& y);
double monomial(const std::vector<double>& x, const RatVec& y);

/// Mass-action vector field sum k x^y (y' - y), exactly. x must be positive.
RatVec rhs(const EGraph& g, const RateVector& k, const RatVec& x);
std::vector<double> rhs(const EGraph& g, const RateVector& k, const std::vector<double>& x);

/// Inflow equals outflow at every vertex, exactly.
bool is_complex_balanced_at(const EGraph& g, const RateVector& k, const RatVec& x);

struct SimulateOptions
{
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    double positivity_floor = 1e-12;
    std::size_t max_steps = 5'000'000;
};

struct Trajectory
{
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    bool halted = false;  // a coordinate fell below the positivity floor
};

/// RK4 with step-doubling error control on [0, t_end].
Trajectory simulate(const EGraph& g, const RateVector& k, const std::vector<double>& x0, double t_end,
                    const SimulateOptions& opts = {});

/// CSV: header "t,<species...>", then one row per step, 17 significant digits.
void write_csv(std::ostream& out, const Trajectory& traj, const std::vector<std::string>& species);

/// Max over quasi-random points of the box [lo, hi]^n of the sup-norm
/// difference between the two vector fields.
double numeric_equivalence_deviation(const EGraph& g, const RateVector& k, const EGraph& g2,
                                     const RateVector& k2, std::size_t samples, double lo, double hi);

/// As above, each sample divided by the largest term k x^y |y' - y| of either
/// system at that point.
double scaled_equivalence_deviation(const EGraph& g, const RateVector& k, const EGraph& g2,
                                    const RateVector& k2, std::size_t samples, double lo, double hi);

/// Point i of the Halton sequence in [lo, hi]^dim.
std::vector<double> halton_point(std::size_t i, std::size_t dim, double lo, double hi);

}  // namespace wrnet
