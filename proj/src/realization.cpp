#include "wrnet/realization.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wrnet/geometry.hpp"
#include "wrnet/simplex.hpp"

namespace wrnet {

std::string to_string(RealizationFailure f)
{
    switch (f) {
    case RealizationFailure::NotTwoDimensional: return "NotTwoDimensional";
    case RealizationFailure::NotStronglyEndotactic: return "NotStronglyEndotactic";
    case RealizationFailure::DegenerateHull: return "DegenerateHull";
    case RealizationFailure::NotPlanar: return "NotPlanar";
    case RealizationFailure::InteriorSources: return "InteriorSources";
    case RealizationFailure::NeitherConditionHolds: return "NeitherConditionHolds";
    case RealizationFailure::HypothesisFailed: return "HypothesisFailed";
    }
    return "Unknown";
}

namespace {

using EdgeSet = std::set<std::pair<VertexId, VertexId>>;

// Strictly positive c with sum c_i dirs_i = w; maximises min c_i, capped at 1.
std::optional<RatVec> positive_rates(const std::vector<RatVec>& dirs, const RatVec& w)
{
    if (dirs.empty()) return is_zero(w) ? std::optional<RatVec>(RatVec{}) : std::nullopt;
    LinProgram lp;
    for (std::size_t i = 0; i < dirs.size(); ++i) lp.add_variable("k" + std::to_string(i));
    auto t = lp.add_variable("t", Rational(0), Rational(1));
    for (std::size_t c = 0; c < w.size(); ++c) {
        std::vector<std::pair<std::size_t, Rational>> terms;
        for (std::size_t i = 0; i < dirs.size(); ++i)
            if (dirs[i][c] != 0) terms.emplace_back(i, dirs[i][c]);
        lp.add_sparse(terms, Relation::Equal, w[c]);
    }
    for (std::size_t i = 0; i < dirs.size(); ++i)
        lp.add_sparse({{i, 1}, {t, -1}}, Relation::GreaterEqual, 0);
    lp.set_objective_coefficient(t, 1);
    lp.set_sense(Sense::Maximize);
    auto sol = simplex_solve(lp);
    if (sol.status != LpStatus::Optimal || sol.assignment[t] <= 0) return std::nullopt;
    sol.assignment.pop_back();
    return sol.assignment;
}

RatVec net_vector_at(const EGraph& g, const RateVector& k, const RatVec& y)
{
    auto v = g.find_vertex(y);
    if (!v) return zeros(g.dimension());
    return net_reaction_vector(g, k, *v);
}

EGraph graph_from_ids(const EGraph& g, const EdgeSet& edges)
{
    std::vector<std::pair<RatVec, RatVec>> reactions;
    for (const auto& [a, b] : edges) reactions.emplace_back(g.vertex(a), g.vertex(b));
    return EGraph::from_reactions(g.dimension(), reactions);
}

HullClassification2D planar_preconditions(const EGraph& g, const EndotacticOptions& opts)
{
    auto dim = stoichiometric_dimension(g);
    if (dim != 2)
        throw RealizationError(RealizationFailure::NotTwoDimensional,
                               "stoichiometric subspace has dimension " + std::to_string(dim));
    auto se = is_strongly_endotactic(g, opts);
    if (!se.holds) {
        const auto& w = *se.witness;
        throw RealizationError(RealizationFailure::NotStronglyEndotactic,
                               "direction " + to_string(w.v) + " is not rescued for edge " +
                                   to_string(g.vertex(w.violating_edge.source)) + " -> " +
                                   to_string(g.vertex(w.violating_edge.target)));
    }
    try {
        return classify_hull_2d(g);
    } catch (const DegenerateHull& e) {
        throw RealizationError(RealizationFailure::DegenerateHull, e.what());
    } catch (const NotPlanar& e) {
        throw RealizationError(RealizationFailure::NotPlanar, e.what());
    }
}

// Edges of the planar construction among the boundary sources. `skip` is left
// without outgoing edges for the caller to fill in.
EdgeSet boundary_construction(const EGraph& g, const HullClassification2D& h,
                              std::optional<VertexId> skip = std::nullopt)
{
    EdgeSet out;
    const auto& corners = h.corners;
    const std::size_t p = corners.size();
    const auto& cycle = h.boundary_cycle;
    auto plane = [&](VertexId from, VertexId to) {
        return h.plane_direction(g.vertex(to) - g.vertex(from));
    };
    auto corner_pos = [&](VertexId c) {
        return static_cast<std::size_t>(std::find(corners.begin(), corners.end(), c) - corners.begin());
    };
    // Side vertices strictly between corners[i] and corners[i+1] in clockwise order.
    auto sides_after = [&](std::size_t i) {
        std::vector<VertexId> s;
        auto it = std::find(cycle.begin(), cycle.end(), corners[i]);
        for (++it; it != cycle.end() && !h.is_corner(*it); ++it) s.push_back(*it);
        return s;
    };

    for (std::size_t i = 0; i < p; ++i) {
        VertexId y = corners[i];
        if (skip && *skip == y) continue;
        VertexId prev = corners[(i + p - 1) % p];
        VertexId next = corners[(i + 1) % p];
        auto A = plane(y, prev);
        auto B = plane(y, next);
        auto det = cross2(A, B);
        bool to_prev = false, to_next = false;
        for (auto e : g.out_edges(y)) {
            auto R = h.plane_direction(g.reaction_vector(e));
            Rational alpha = cross2(R, B) / det;
            Rational beta = cross2(A, R) / det;
            if (alpha > 0 && beta > 0) {
                to_prev = to_next = true;
            } else if (alpha > 0 && beta == 0) {
                to_prev = true;
            } else if (alpha == 0 && beta > 0) {
                to_next = true;
            } else {
                throw InvariantError("reaction " + to_string(g.vertex(y)) + " -> " +
                                     to_string(g.vertex(g.edge(e).target)) +
                                     " leaves the hull at a corner");
            }
        }
        if (to_prev && to_next) {
            for (auto v : cycle)
                if (v != y) out.emplace(y, v);
        } else if (to_prev) {
            out.emplace(y, prev);
            for (auto s : sides_after((i + p - 1) % p)) out.emplace(y, s);
        } else if (to_next) {
            out.emplace(y, next);
            for (auto s : sides_after(i)) out.emplace(y, s);
        }
    }

    for (auto s : h.sides) {
        if (skip && *skip == s) continue;
        auto [c0, c1] = h.side_flanks.at(s);
        out.emplace(s, c0);
        out.emplace(s, c1);
        auto edge_dir = plane(c0, c1);
        bool inward = false;
        for (auto e : g.out_edges(s)) {
            auto c = cross2(edge_dir, h.plane_direction(g.reaction_vector(e)));
            if (c > 0)
                throw InvariantError("reaction at side vertex " + to_string(g.vertex(s)) +
                                     " leaves the hull");
            if (c < 0) inward = true;
        }
        if (inward) out.emplace(s, corners[(corner_pos(c1) + 1) % p]);
    }
    return out;
}

RealizationResult finish(const EGraph& g, const RateVector& k, EGraph target, RateVector rates,
                         std::string method)
{
    if (!is_weakly_reversible(target))
        throw InvariantError("constructed target is not weakly reversible");
    auto cert = equivalence_certificate(g, k, target, rates);
    for (const auto& c : cert)
        if (c.original != c.realized)
            throw InvariantError("constructed rates do not reproduce the net reaction vector at " +
                                 to_string(c.vertex));
    return {std::move(target), std::move(rates), std::move(cert), std::move(method)};
}

}  // namespace

std::vector<CertificateEntry> equivalence_certificate(const EGraph& g, const RateVector& k,
                                                      const EGraph& g2, const RateVector& k2)
{
    if (g.dimension() != g2.dimension())
        throw PreconditionError("networks have different dimensions (" +
                                std::to_string(g.dimension()) + " and " +
                                std::to_string(g2.dimension()) + ")");
    std::map<RatVec, CertificateEntry> by_vertex;
    auto entry = [&](const RatVec& y) -> CertificateEntry& {
        auto it = by_vertex.find(y);
        if (it == by_vertex.end())
            it = by_vertex.emplace(y, CertificateEntry{y, zeros(g.dimension()), zeros(g.dimension())}).first;
        return it->second;
    };
    for (auto y : source_vertices(g)) entry(g.vertex(y)).original = net_reaction_vector(g, k, y);
    for (auto y : source_vertices(g2)) entry(g2.vertex(y)).realized = net_reaction_vector(g2, k2, y);
    std::vector<CertificateEntry> out;
    for (auto& [y, c] : by_vertex) out.push_back(std::move(c));
    return out;
}

bool verify_equivalence(const EGraph& g, const RateVector& k, const EGraph& g2, const RateVector& k2)
{
    for (const auto& c : equivalence_certificate(g, k, g2, k2))
        if (c.original != c.realized) return false;
    return true;
}

EGraph construct_wr_graph_2d(const EGraph& g, const EndotacticOptions& opts)
{
    auto h = planar_preconditions(g, opts);
    if (!h.interior.empty())
        throw RealizationError(RealizationFailure::InteriorSources,
                               std::to_string(h.interior.size()) +
                                   " source vertices lie in the interior of the Newton polytope");
    return graph_from_ids(g, boundary_construction(g, h));
}

std::optional<RateVector> rate_solve(const EGraph& g, const RateVector& k, const EGraph& target)
{
    if (g.dimension() != target.dimension()) return std::nullopt;
    for (auto y : source_vertices(g)) {
        auto t = target.find_vertex(g.vertex(y));
        if ((!t || !target.is_source(*t)) && !is_zero(net_reaction_vector(g, k, y))) return std::nullopt;
    }
    std::vector<Rational> rates(target.num_edges());
    for (auto y : source_vertices(target)) {
        auto w = net_vector_at(g, k, target.vertex(y));
        std::vector<RatVec> dirs;
        for (auto e : target.out_edges(y)) dirs.push_back(target.reaction_vector(e));
        auto c = positive_rates(dirs, w);
        if (!c) return std::nullopt;
        auto outs = target.out_edges(y);
        for (std::size_t i = 0; i < outs.size(); ++i) rates[outs[i]] = (*c)[i];
    }
    return RateVector(target, std::move(rates));
}

RealizationResult realize_2d(const EGraph& g, const RateVector& k, const EndotacticOptions& opts)
{
    auto h = planar_preconditions(g, opts);

    if (h.interior.empty()) {
        auto target = graph_from_ids(g, boundary_construction(g, h));
        auto rates = rate_solve(g, k, target);
        if (!rates) throw InvariantError("no positive rates on the boundary construction");
        return finish(g, k, std::move(target), std::move(*rates), "boundary");
    }

    std::vector<RatVec> all_sources;
    for (auto v : source_vertices(g)) all_sources.push_back(g.vertex(v));

    std::optional<VertexId> y0;
    RatVec w0;
    for (auto v : h.boundary_cycle) {
        auto w = net_reaction_vector(g, k, v);
        if (!is_zero(w) && in_tangent_cone_relint(all_sources, g.vertex(v), w)) {
            y0 = v;
            w0 = std::move(w);
            break;
        }
    }
    if (!y0)
        throw RealizationError(RealizationFailure::NeitherConditionHolds,
                               std::to_string(h.interior.size()) +
                                   " interior source vertices and no boundary source whose net "
                                   "reaction vector points into the interior");

    const RatVec& base = g.vertex(*y0);
    RatVec s = zeros(g.dimension());
    for (auto v : h.interior) s += g.vertex(v) - base;

    // Largest kappa keeping w0 - kappa*s in the closed tangent cone at y0.
    LinProgram lp;
    std::vector<std::size_t> lam;
    for (std::size_t i = 0; i < all_sources.size(); ++i) lam.push_back(lp.add_variable("l" + std::to_string(i)));
    auto kappa = lp.add_variable("kappa");
    for (std::size_t c = 0; c < base.size(); ++c) {
        std::vector<std::pair<std::size_t, Rational>> terms;
        for (std::size_t i = 0; i < all_sources.size(); ++i) {
            Rational d = all_sources[i][c] - base[c];
            if (d != 0) terms.emplace_back(lam[i], d);
        }
        if (s[c] != 0) terms.emplace_back(kappa, s[c]);
        lp.add_sparse(terms, Relation::Equal, w0[c]);
    }
    lp.set_objective_coefficient(kappa, 1);
    lp.set_sense(Sense::Maximize);
    auto sol = simplex_solve(lp);
    if (sol.status == LpStatus::Infeasible || (sol.status == LpStatus::Optimal && sol.assignment[kappa] <= 0))
        throw InvariantError("interior split of the net reaction vector failed");
    Rational k_split = sol.status == LpStatus::Unbounded ? Rational(1) : Rational(sol.assignment[kappa] / 2);
    RatVec w_tilde = w0;
    axpy(w_tilde, -k_split, s);

    EdgeSet edges = boundary_construction(g, h, *y0);
    for (auto v : h.boundary_cycle)
        if (v != *y0) edges.emplace(*y0, v);
    for (auto v : h.interior) {
        edges.emplace(*y0, v);
        for (auto b : h.boundary_cycle) edges.emplace(v, b);
    }
    auto target = graph_from_ids(g, edges);

    std::vector<Rational> rates(target.num_edges());
    for (auto y : source_vertices(target)) {
        const auto& coords = target.vertex(y);
        bool is_y0 = coords == base;
        auto w = is_y0 ? w_tilde : net_vector_at(g, k, coords);
        std::vector<RatVec> dirs;
        std::vector<std::size_t> free_edges;
        for (auto e : target.out_edges(y)) {
            if (is_y0 && std::find(h.interior.begin(), h.interior.end(),
                                   *g.find_vertex(target.vertex(target.edge(e).target))) != h.interior.end()) {
                rates[e] = k_split;
                continue;
            }
            dirs.push_back(target.reaction_vector(e));
            free_edges.push_back(e);
        }
        auto c = positive_rates(dirs, w);
        if (!c) throw InvariantError("no positive rates at " + to_string(coords));
        for (std::size_t i = 0; i < free_edges.size(); ++i) rates[free_edges[i]] = (*c)[i];
    }
    RateVector rv(target, std::move(rates));
    return finish(g, k, std::move(target), std::move(rv), "interior");
}

RealizationResult realize_highdim(const EGraph& g, const RateVector& k)
{
    if (is_weakly_reversible(g)) return finish(g, k, g, k, "identity");

    auto classes = linkage_classes(g);
    auto comps = strong_components(g);
    std::vector<std::size_t> comp_class(comps.size());
    std::vector<std::size_t> comps_per_class(classes.size(), 0);
    std::vector<std::size_t> class_of(g.num_vertices());
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (auto v : classes[c]) class_of[v] = c;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        comp_class[i] = class_of[comps[i].vertices.front()];
        ++comps_per_class[comp_class[i]];
    }

    // Vertex -> replacement out-edges with rates.
    std::map<VertexId, std::vector<std::pair<VertexId, Rational>>> replaced;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        auto c = comp_class[i];
        if (comps_per_class[c] == 1 || !comps[i].terminal) continue;
        const auto& cls = classes[c];
        bool found = false;
        for (auto y : comps[i].vertices) {
            auto w = net_reaction_vector(g, k, y);
            if (is_zero(w)) continue;
            std::vector<VertexId> others;
            std::vector<RatVec> dirs;
            for (auto v : cls)
                if (v != y) {
                    others.push_back(v);
                    dirs.push_back(g.vertex(v) - g.vertex(y));
                }
            auto alpha = positive_rates(dirs, w);
            if (!alpha) continue;
            auto& out = replaced[y];
            for (std::size_t j = 0; j < others.size(); ++j) out.emplace_back(others[j], (*alpha)[j]);
            found = true;
            break;
        }
        if (!found) {
            std::string names;
            for (auto v : comps[i].vertices) names += (names.empty() ? "" : ", ") + to_string(g.vertex(v));
            throw RealizationError(RealizationFailure::HypothesisFailed,
                                   "terminal component {" + names +
                                       "} has no vertex whose net reaction vector points into the "
                                       "relative interior of its linkage class polytope");
        }
    }

    std::vector<std::pair<RatVec, RatVec>> reactions;
    std::vector<Rational> values;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        if (replaced.count(ed.source)) continue;
        reactions.emplace_back(g.vertex(ed.source), g.vertex(ed.target));
        values.push_back(k[e]);
    }
    for (const auto& [y, outs] : replaced)
        for (const auto& [v, rate] : outs) {
            reactions.emplace_back(g.vertex(y), g.vertex(v));
            values.push_back(rate);
        }
    auto target = EGraph::from_reactions(g.dimension(), reactions);
    RateVector rv(target, std::move(values));
    return finish(g, k, std::move(target), std::move(rv), "terminal");
}

RealizationResult realize(const EGraph& g, const RateVector& k, RealizeMode mode,
                          const EndotacticOptions& opts)
{
    switch (mode) {
    case RealizeMode::TwoD: return realize_2d(g, k, opts);
    case RealizeMode::HighDim: return realize_highdim(g, k);
    case RealizeMode::Auto: break;
    }
    if (stoichiometric_dimension(g) == 2) return realize_2d(g, k, opts);
    return realize_highdim(g, k);
}

}  // namespace wrnet
