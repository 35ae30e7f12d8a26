#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wrnet/rational.hpp"

namespace wrnet {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string to_string(LpStatus s);

struct LpConstraint
{
    RatVec row;
    Relation relation = Relation::Equal;
    Rational rhs;
};

struct LpVariable
{
    std::string name;
    std::optional<Rational> lower;
    std::optional<Rational> upper;
};

/// Exact linear program over the rationals. Declare variables first; rows are
/// dense over the variables declared so far and must cover all of them by the
/// time the program is solved.
class LinProgram
{
public:
    /// Default bounds are [0, +inf). Pass std::nullopt for a free side.
    std::size_t add_variable(std::string name, std::optional<Rational> lower = Rational(0),
                             std::optional<Rational> upper = std::nullopt);

    void add_constraint(RatVec row, Relation relation, Rational rhs);
    void add_sparse(const std::vector<std::pair<std::size_t, Rational>>& terms,
                    Relation relation, Rational rhs);

    void set_objective(RatVec row, Sense sense);
    void set_objective_coefficient(std::size_t var, Rational coefficient);
    void set_sense(Sense sense) { sense_ = sense; }

    std::size_t num_variables() const { return variables_.size(); }
    const std::vector<LpVariable>& variables() const { return variables_; }
    const std::vector<LpConstraint>& constraints() const { return constraints_; }
    const RatVec& objective() const { return objective_; }
    Sense sense() const { return sense_; }

    /// Throws PreconditionError when rows and variables disagree or a bound pair is empty.
    void validate() const;

private:
    std::vector<LpVariable> variables_;
    std::vector<LpConstraint> constraints_;
    RatVec objective_;
    Sense sense_ = Sense::Minimize;
};

struct LpSolution
{
    LpStatus status = LpStatus::Infeasible;
    RatVec assignment;  // meaningful only when Optimal
    Rational objective_value;
};

/// Two-phase dense-tableau simplex with Bland's rule; exact and deterministic.
LpSolution simplex_solve(const LinProgram& program);

/// Replays every bound and constraint of `program` at `x` in exact arithmetic.
bool satisfies(const LinProgram& program, const RatVec& x);

}  // namespace wrnet
