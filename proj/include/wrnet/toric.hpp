#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "wrnet/egraph.hpp"
#include "wrnet/rational.hpp"

namespace wrnet {

/// Edge fluxes keyed by (source, target) coordinates.
using FluxVector = std::map<std::pair<RatVec, RatVec>, Rational>;

struct P2Solution
{
    FluxVector j;        // on the edges of g, every entry >= 1
    FluxVector j_prime;  // on the edges of the complete graph, entries >= 0
    std::optional<EGraph> support;  // positive part of j_prime; empty when j_prime = 0
};

/// Fluxes J > 0 on g and J' >= 0 on its complete graph with equal net fluxes
/// at every vertex and J' balanced at every vertex. Minimises sum J'.
/// Nothing when no such pair exists.
std::optional<P2Solution> solve_p2(const EGraph& g);

/// Checks the flux-equivalence and flux-balance equations exactly. On failure
/// `why` (if given) names the first violated equation.
bool p2_constraints_hold(const EGraph& g, const FluxVector& j, const FluxVector& j_prime,
                         std::string* why = nullptr);

/// Graph on the strictly positive entries. Throws InvariantError unless it is
/// weakly reversible and InvalidGraph if there are none.
EGraph extract_wr_support(std::size_t dimension, const FluxVector& j_prime);

/// Rates k2 > 0 on g2 with (g2, k2) equivalent to (g, k) and complex balanced
/// at x, or nothing. x must be strictly positive.
std::optional<RateVector> disguised_membership_at(const EGraph& g, const RateVector& k, const EGraph& g2,
                                                  const RatVec& x);

/// A weakly reversible realization of (g, k) on g itself when it is weakly
/// reversible, otherwise on the support of a P2 solution.
std::optional<std::pair<EGraph, RateVector>> solve_p1_fixed_k(const EGraph& g, const RateVector& k);

/// Flux vector of a rated graph at x = 1 (the rates themselves), keyed by coordinates.
FluxVector as_flux(const EGraph& g, const RateVector& k);

}  // namespace wrnet
