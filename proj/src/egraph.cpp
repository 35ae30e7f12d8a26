#include "wrnet/egraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "wrnet/errors.hpp"
#include "wrnet/linalg.hpp"

namespace wrnet {

EGraph::EGraph(std::size_t dimension, std::vector<RatVec> vertices, std::vector<Edge> edges)
    : dimension_(dimension)
{
    std::vector<VertexId> remap(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        auto& coords = vertices[i];
        if (coords.size() != dimension)
            throw InvalidGraph("vertex " + std::to_string(i) + " has " +
                               std::to_string(coords.size()) + " coordinates, expected " +
                               std::to_string(dimension));
        for (auto& x : coords) x.canonicalize();
        auto [it, inserted] = index_.emplace(coords, vertices_.size());
        if (inserted) {
            vertices_.push_back(coords);
        } else {
            warnings_.push_back("duplicate vertex " + to_string(coords) + " merged (ids " +
                                std::to_string(it->second) + " and " + std::to_string(i) + ")");
        }
        remap[i] = it->second;
    }

    out_.resize(vertices_.size());
    in_.resize(vertices_.size());
    for (const auto& raw : edges) {
        if (raw.source >= remap.size() || raw.target >= remap.size())
            throw InvalidGraph("edge endpoint out of range");
        Edge e{remap[raw.source], remap[raw.target]};
        if (e.source == e.target)
            throw InvalidGraph("self-loop at vertex " + to_string(vertices_[e.source]));
        auto [it, inserted] = edge_index_.emplace(e, edges_.size());
        if (!inserted)
            throw InvalidGraph("duplicate edge " + to_string(vertices_[e.source]) + " -> " +
                               to_string(vertices_[e.target]));
        out_[e.source].push_back(edges_.size());
        in_[e.target].push_back(edges_.size());
        edges_.push_back(e);
    }

    for (VertexId v = 0; v < vertices_.size(); ++v)
        if (out_[v].empty() && in_[v].empty())
            throw InvalidGraph("isolated vertex " + to_string(vertices_[v]));
}

EGraph EGraph::from_reactions(std::size_t dimension,
                              const std::vector<std::pair<RatVec, RatVec>>& reactions)
{
    std::vector<RatVec> vertices;
    std::map<RatVec, VertexId> seen;
    auto id_of = [&](const RatVec& c) {
        auto [it, inserted] = seen.emplace(c, vertices.size());
        if (inserted) vertices.push_back(c);
        return it->second;
    };
    std::vector<Edge> edges;
    edges.reserve(reactions.size());
    for (const auto& [s, t] : reactions) {
        auto a = id_of(s);
        auto b = id_of(t);
        edges.push_back({a, b});
    }
    return EGraph(dimension, std::move(vertices), std::move(edges));
}

std::optional<VertexId> EGraph::find_vertex(const RatVec& coords) const
{
    auto it = index_.find(coords);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> EGraph::find_edge(VertexId source, VertexId target) const
{
    auto it = edge_index_.find(Edge{source, target});
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> EGraph::find_edge(const RatVec& source, const RatVec& target) const
{
    auto s = find_vertex(source);
    auto t = find_vertex(target);
    if (!s || !t) return std::nullopt;
    return find_edge(*s, *t);
}

RatVec EGraph::reaction_vector(std::size_t e) const
{
    const auto& ed = edges_.at(e);
    return vertices_[ed.target] - vertices_[ed.source];
}

RateVector::RateVector(const EGraph& graph, std::vector<Rational> values)
    : values_(std::move(values))
{
    if (values_.size() != graph.num_edges())
        throw InvalidRates("rate vector has " + std::to_string(values_.size()) +
                           " entries for " + std::to_string(graph.num_edges()) + " edges");
    for (std::size_t e = 0; e < values_.size(); ++e) {
        values_[e].canonicalize();
        if (values_[e] <= 0)
            throw InvalidRates("rate of edge " + std::to_string(e) + " is not positive");
    }
}

RateVector RateVector::uniform(const EGraph& graph, const Rational& value)
{
    return RateVector(graph, std::vector<Rational>(graph.num_edges(), value));
}

std::vector<VertexId> source_vertices(const EGraph& g)
{
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.is_source(v)) out.push_back(v);
    return out;
}

std::vector<std::vector<VertexId>> linkage_classes(const EGraph& g)
{
    std::vector<VertexId> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), VertexId{0});
    std::function<VertexId(VertexId)> find = [&](VertexId x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& e : g.edges()) {
        auto a = find(e.source);
        auto b = find(e.target);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<VertexId, std::vector<VertexId>> groups;
    for (VertexId v = 0; v < g.num_vertices(); ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<VertexId>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StrongComponent> strong_components(const EGraph& g)
{
    // Iterative Tarjan.
    const std::size_t n = g.num_vertices();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexId> stack;
    std::vector<std::vector<VertexId>> components;
    std::size_t counter = 0;

    struct Frame
    {
        VertexId v;
        std::size_t next;
    };
    for (VertexId root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& fr = call.back();
            auto outs = g.out_edges(fr.v);
            if (fr.next < outs.size()) {
                VertexId w = g.edge(outs[fr.next++]).target;
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[fr.v] = std::min(low[fr.v], index[w]);
                }
                continue;
            }
            VertexId v = fr.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<VertexId> members;
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = components.size();
                    members.push_back(w);
                } while (w != v);
                std::sort(members.begin(), members.end());
                components.push_back(std::move(members));
            }
        }
    }

    std::vector<StrongComponent> out;
    out.reserve(components.size());
    for (std::size_t c = 0; c < components.size(); ++c) {
        bool terminal = true;
        for (VertexId v : components[c])
            for (auto e : g.out_edges(v))
                if (comp[g.edge(e).target] != c) terminal = false;
        out.push_back({std::move(components[c]), terminal});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.vertices.front() < b.vertices.front();
    });
    return out;
}

bool is_weakly_reversible(const EGraph& g)
{
    return strong_components(g).size() == linkage_classes(g).size();
}

std::vector<RatVec> stoichiometric_subspace(const EGraph& g)
{
    linalg::Matrix rows;
    rows.reserve(g.num_edges());
    for (std::size_t e = 0; e < g.num_edges(); ++e) rows.push_back(g.reaction_vector(e));
    return linalg::row_space_basis(std::move(rows), g.dimension());
}

std::size_t stoichiometric_dimension(const EGraph& g) { return stoichiometric_subspace(g).size(); }

EGraph complete_graph(const EGraph& g)
{
    std::vector<Edge> edges;
    const auto m = g.num_vertices();
    edges.reserve(m * (m > 0 ? m - 1 : 0));
    for (VertexId a = 0; a < m; ++a)
        for (VertexId b = 0; b < m; ++b)
            if (a != b) edges.push_back({a, b});
    return EGraph(g.dimension(), g.vertices(), std::move(edges));
}

EGraph edge_subgraph(const EGraph& g, const std::vector<std::size_t>& edges)
{
    std::vector<std::pair<RatVec, RatVec>> reactions;
    reactions.reserve(edges.size());
    for (auto e : edges) {
        const auto& ed = g.edge(e);
        reactions.emplace_back(g.vertex(ed.source), g.vertex(ed.target));
    }
    return EGraph::from_reactions(g.dimension(), reactions);
}

std::set<std::pair<RatVec, RatVec>> edge_coordinates(const EGraph& g)
{
    std::set<std::pair<RatVec, RatVec>> out;
    for (const auto& e : g.edges()) out.emplace(g.vertex(e.source), g.vertex(e.target));
    return out;
}

}  // namespace wrnet
