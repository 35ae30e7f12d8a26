#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wrnet/endotactic.hpp"
#include "wrnet/network_io.hpp"
#include "wrnet/realization.hpp"

namespace wrnet::report {

using nlohmann::json;

/// Structural report: reversibility, endotactic predicates, components,
/// stoichiometric dimension, planar hull and (with rates) terminal interior check.
json check(const Network& net, const EndotacticOptions& opts = {});

struct RealizeOutcome
{
    json report;
    std::optional<RealizationResult> result;
};

/// Never throws RealizationError; failures are reported with success = false.
RealizeOutcome realize(const Network& net, RealizeMode mode, const EndotacticOptions& opts = {});

/// P2 certificate, and fixed-x membership when `at` is given. "feasible" is the verdict.
json disguised(const Network& net, const std::optional<RatVec>& at);

/// Exact verdict plus float deviation over [lo, hi]^n.
json equiv(const Network& a, const Network& b, std::size_t samples = 200, double lo = 0.1, double hi = 10.0);

RealizeMode parse_mode(const std::string& s);

/// Rational vector as an array of strings such as "3/2".
json vec(const RatVec& v);

}  // namespace wrnet::report
