#include "wrnet/endotactic.hpp"

#include <set>

#include "wrnet/arrangement.hpp"
#include "wrnet/geometry.hpp"

namespace wrnet {

RatVec net_reaction_vector(const EGraph& g, const RateVector& k, VertexId y)
{
    RatVec w = zeros(g.dimension());
    for (auto e : g.out_edges(y)) axpy(w, k[e], g.reaction_vector(e));
    return w;
}

NetReactionGraph net_reaction_graph(const EGraph& g, const RateVector& k)
{
    NetReactionGraph out;
    std::vector<std::pair<RatVec, RatVec>> reactions;
    for (auto y : source_vertices(g)) {
        auto w = net_reaction_vector(g, k, y);
        if (is_zero(w))
            out.zero_sources.push_back(g.vertex(y));
        else
            reactions.emplace_back(g.vertex(y), g.vertex(y) + w);
    }
    out.graph = EGraph::from_reactions(g.dimension(), reactions);
    return out;
}

std::optional<Edge> endotactic_violation_at(const EGraph& g, const RatVec& v, bool strong)
{
    auto sources = source_vertices(g);
    std::vector<Rational> height(g.num_vertices());
    for (VertexId y = 0; y < g.num_vertices(); ++y) height[y] = dot(v, g.vertex(y));
    std::optional<Rational> lowest;
    for (auto y : sources)
        if (!lowest || height[y] < *lowest) lowest = height[y];

    std::vector<Rational> slope(g.num_edges());
    for (std::size_t e = 0; e < g.num_edges(); ++e) slope[e] = dot(v, g.reaction_vector(e));

    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        if (slope[e] >= 0) continue;
        const auto& y = g.edge(e).source;
        bool rescued = false;
        for (std::size_t f = 0; f < g.num_edges() && !rescued; ++f) {
            const auto& yt = g.edge(f).source;
            if (slope[f] <= 0 || height[yt] >= height[y]) continue;
            if (strong && height[yt] > *lowest) continue;
            rescued = true;
        }
        if (!rescued) return g.edge(e);
    }
    return std::nullopt;
}

std::vector<RatVec> direction_hyperplanes(const EGraph& g)
{
    std::set<RatVec> normals;
    for (std::size_t e = 0; e < g.num_edges(); ++e) normals.insert(normalize_direction(g.reaction_vector(e)));
    auto sources = source_vertices(g);
    for (std::size_t i = 0; i < sources.size(); ++i)
        for (std::size_t j = i + 1; j < sources.size(); ++j)
            normals.insert(normalize_direction(g.vertex(sources[i]) - g.vertex(sources[j])));
    return {normals.begin(), normals.end()};
}

std::vector<RatVec> direction_representatives(const EGraph& g, const EndotacticOptions& opts)
{
    auto normals = direction_hyperplanes(g);
    if (normals.size() > opts.max_hyperplanes)
        throw ArrangementTooLarge("direction arrangement has " + std::to_string(normals.size()) +
                                  " distinct hyperplanes, limit is " +
                                  std::to_string(opts.max_hyperplanes));
    std::vector<RatVec> reps;
    for (auto& f : arrangement_faces(normals, g.dimension())) {
        bool vacuous = true;
        for (int s : f.signs)
            if (s != 0) vacuous = false;
        if (!vacuous) reps.push_back(std::move(f.representative));
    }
    return reps;
}

namespace {

EndotacticResult decide(const EGraph& g, const EndotacticOptions& opts, bool strong)
{
    EndotacticResult r;
    if (g.num_edges() == 0) return r;
    for (const auto& v : direction_representatives(g, opts)) {
        if (auto bad = endotactic_violation_at(g, v, strong)) {
            r.holds = false;
            r.witness = DirectionWitness{v, *bad};
            return r;
        }
    }
    return r;
}

}  // namespace

EndotacticResult is_endotactic(const EGraph& g, const EndotacticOptions& opts)
{
    return decide(g, opts, false);
}

EndotacticResult is_strongly_endotactic(const EGraph& g, const EndotacticOptions& opts)
{
    return decide(g, opts, true);
}

TerminalInteriorReport check_terminal_interior(const EGraph& g, const RateVector& k)
{
    TerminalInteriorReport report;
    auto classes = linkage_classes(g);
    std::vector<std::size_t> class_of(g.num_vertices());
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (auto v : classes[c]) class_of[v] = c;

    std::vector<std::vector<RatVec>> class_sources(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c)
        class_sources[c] = NewtonPolytope::of_sources(g, classes[c]).points;

    for (const auto& comp : strong_components(g)) {
        if (!comp.terminal) continue;
        TerminalComponentReport cr;
        cr.vertices = comp.vertices;
        cr.linkage_class = class_of[comp.vertices.front()];
        for (auto y : comp.vertices) {
            if (!g.is_source(y)) continue;
            auto w = net_reaction_vector(g, k, y);
            if (is_zero(w)) continue;
            if (in_tangent_cone_relint(class_sources[cr.linkage_class], g.vertex(y), w)) {
                cr.interior_vertex = y;
                cr.passed = true;
                break;
            }
        }
        report.holds = report.holds && cr.passed;
        report.components.push_back(std::move(cr));
    }
    return report;
}

}  // namespace wrnet
