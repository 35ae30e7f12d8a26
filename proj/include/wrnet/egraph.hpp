#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wrnet/rational.hpp"

namespace wrnet {

using VertexId = std::size_t;

/// Directed edge y -> y' between vertex ids of one graph.
struct Edge
{
    VertexId source = 0;
    VertexId target = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A reaction network embedded in Q^n: vertices are complexes, edges are reactions.
///
/// Immutable after construction. The constructor enforces the E-graph invariants:
/// no self-loops, at most one edge per ordered pair, no isolated vertices, and
/// pairwise distinct coordinates. Vertices given twice are merged (the merge is
/// recorded in warnings()).
class EGraph
{
public:
    EGraph() = default;
    EGraph(std::size_t dimension, std::vector<RatVec> vertices, std::vector<Edge> edges);

    /// Builds a graph from (source, target) coordinate pairs. Vertex ids follow
    /// first appearance; repeated coordinates map to the same vertex.
    static EGraph from_reactions(std::size_t dimension,
                                 const std::vector<std::pair<RatVec, RatVec>>& reactions);

    std::size_t dimension() const { return dimension_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    const RatVec& vertex(VertexId v) const { return vertices_.at(v); }
    const std::vector<RatVec>& vertices() const { return vertices_; }
    const Edge& edge(std::size_t e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::optional<VertexId> find_vertex(const RatVec& coords) const;
    std::optional<std::size_t> find_edge(VertexId source, VertexId target) const;
    std::optional<std::size_t> find_edge(const RatVec& source, const RatVec& target) const;

    /// Edge indices leaving / entering a vertex.
    std::span<const std::size_t> out_edges(VertexId v) const { return out_.at(v); }
    std::span<const std::size_t> in_edges(VertexId v) const { return in_.at(v); }

    bool is_source(VertexId v) const { return !out_.at(v).empty(); }

    /// y' - y for edge y -> y'.
    RatVec reaction_vector(std::size_t e) const;

    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    std::size_t dimension_ = 0;
    std::vector<RatVec> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
    std::map<RatVec, VertexId> index_;
    std::map<Edge, std::size_t> edge_index_;
    std::vector<std::string> warnings_;
};

/// Reaction rate constants, one strictly positive value per edge (aligned with
/// EGraph::edges()).
class RateVector
{
public:
    RateVector() = default;
    RateVector(const EGraph& graph, std::vector<Rational> values);

    static RateVector uniform(const EGraph& graph, const Rational& value = 1);

    const Rational& operator[](std::size_t e) const { return values_.at(e); }
    const std::vector<Rational>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }

private:
    std::vector<Rational> values_;
};

struct StrongComponent
{
    std::vector<VertexId> vertices;  // sorted
    bool terminal = false;
};

/// Ids of vertices with out-degree >= 1, ascending.
std::vector<VertexId> source_vertices(const EGraph& g);

/// Weakly connected components, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> linkage_classes(const EGraph& g);

/// Strongly connected components (Tarjan), ordered by smallest member.
std::vector<StrongComponent> strong_components(const EGraph& g);

bool is_weakly_reversible(const EGraph& g);

/// Basis (RREF rows) of span{y' - y}.
std::vector<RatVec> stoichiometric_subspace(const EGraph& g);
std::size_t stoichiometric_dimension(const EGraph& g);

/// Same vertices, all m(m-1) ordered pairs as edges (lexicographic by id).
EGraph complete_graph(const EGraph& g);

/// Subgraph keeping the listed edges; vertices not touched by them are dropped.
EGraph edge_subgraph(const EGraph& g, const std::vector<std::size_t>& edges);

/// Edge set by coordinates, for comparing graphs with different vertex numbering.
std::set<std::pair<RatVec, RatVec>> edge_coordinates(const EGraph& g);

}  // namespace wrnet
