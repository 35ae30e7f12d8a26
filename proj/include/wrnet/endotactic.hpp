#pragma once

#include <optional>
#include <vector>

#include "wrnet/egraph.hpp"
#include "wrnet/errors.hpp"
#include "wrnet/rational.hpp"

namespace wrnet {

/// The direction arrangement has more distinct hyperplanes than allowed.
class ArrangementTooLarge : public PreconditionError
{
public:
    using PreconditionError::PreconditionError;
};

/// A direction v and an edge y -> y' with v.(y'-y) < 0 that nothing rescues.
struct DirectionWitness
{
    RatVec v;
    Edge violating_edge;
};

struct EndotacticResult
{
    bool holds = true;
    std::optional<DirectionWitness> witness;
};

struct EndotacticOptions
{
    std::size_t max_hyperplanes = 20;
};

/// w_y = sum over y -> y' of k (y' - y). Zero for non-sources.
RatVec net_reaction_vector(const EGraph& g, const RateVector& k, VertexId y);

struct NetReactionGraph
{
    EGraph graph;                      // one edge y -> y + w_y per source with w_y != 0
    std::vector<RatVec> zero_sources;  // sources of the input whose net vector vanishes
};

NetReactionGraph net_reaction_graph(const EGraph& g, const RateVector& k);

/// Direct evaluation of the endotactic condition at one direction. Returns the
/// first unrescued edge, if any.
std::optional<Edge> endotactic_violation_at(const EGraph& g, const RatVec& v, bool strong);

/// Hyperplane normals whose arrangement decides the predicates: reaction
/// vectors and differences of distinct sources, deduplicated up to scaling.
std::vector<RatVec> direction_hyperplanes(const EGraph& g);

/// One nonzero representative direction per face of the direction arrangement.
/// Throws ArrangementTooLarge beyond opts.max_hyperplanes.
std::vector<RatVec> direction_representatives(const EGraph& g, const EndotacticOptions& opts = {});

EndotacticResult is_endotactic(const EGraph& g, const EndotacticOptions& opts = {});
EndotacticResult is_strongly_endotactic(const EGraph& g, const EndotacticOptions& opts = {});

struct TerminalComponentReport
{
    std::vector<VertexId> vertices;
    std::size_t linkage_class = 0;          // index into linkage_classes(g)
    std::optional<VertexId> interior_vertex; // first vertex passing the test
    bool passed = false;
};

struct TerminalInteriorReport
{
    bool holds = true;
    std::vector<TerminalComponentReport> components;
};

/// Every terminal strong component has a vertex whose net reaction vector is
/// nonzero and points into the relative interior of the Newton polytope of its
/// linkage class (for a relatively interior vertex: lies in its direction space).
TerminalInteriorReport check_terminal_interior(const EGraph& g, const RateVector& k);

}  // namespace wrnet
