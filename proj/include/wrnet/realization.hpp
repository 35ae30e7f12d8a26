#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wrnet/egraph.hpp"
#include "wrnet/endotactic.hpp"
#include "wrnet/rational.hpp"

namespace wrnet {

enum class RealizationFailure {
    NotTwoDimensional,
    NotStronglyEndotactic,
    DegenerateHull,
    NotPlanar,
    InteriorSources,
    NeitherConditionHolds,
    HypothesisFailed,
};

std::string to_string(RealizationFailure f);

/// A hypothesis of the requested construction does not hold for the input.
class RealizationError : public std::runtime_error
{
public:
    RealizationError(RealizationFailure kind, const std::string& detail)
        : std::runtime_error(to_string(kind) + ": " + detail), kind_(kind)
    {
    }
    RealizationFailure kind() const { return kind_; }

private:
    RealizationFailure kind_;
};

/// Net reaction vectors of both systems at one monomial exponent.
struct CertificateEntry
{
    RatVec vertex;
    RatVec original;
    RatVec realized;
};

struct RealizationResult
{
    EGraph target;
    RateVector rates;
    std::vector<CertificateEntry> certificate;
    std::string method;  // "identity", "boundary", "interior" or "terminal"
};

/// Per-exponent comparison of the two vector fields, sorted by vertex.
std::vector<CertificateEntry> equivalence_certificate(const EGraph& g, const RateVector& k,
                                                      const EGraph& g2, const RateVector& k2);

/// (g, k) and (g2, k2) generate the same mass-action vector field.
bool verify_equivalence(const EGraph& g, const RateVector& k, const EGraph& g2, const RateVector& k2);

/// Weakly reversible single-linkage graph on the source vertices of g whose
/// cones contain the cones of g. Requires a strongly endotactic g with a 2D
/// stoichiometric subspace and every source on the hull boundary.
EGraph construct_wr_graph_2d(const EGraph& g, const EndotacticOptions& opts = {});

/// Strictly positive rates on `target` reproducing the net reaction vectors of
/// (g, k) at every source of target, or nothing if some vertex admits none.
std::optional<RateVector> rate_solve(const EGraph& g, const RateVector& k, const EGraph& target);

RealizationResult realize_2d(const EGraph& g, const RateVector& k, const EndotacticOptions& opts = {});
RealizationResult realize_highdim(const EGraph& g, const RateVector& k);

enum class RealizeMode { TwoD, HighDim, Auto };

/// Auto picks the planar pipeline when the stoichiometric subspace is 2D.
RealizationResult realize(const EGraph& g, const RateVector& k, RealizeMode mode = RealizeMode::Auto,
                          const EndotacticOptions& opts = {});

}  // namespace wrnet
