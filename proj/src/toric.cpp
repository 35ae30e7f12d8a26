#include "wrnet/toric.hpp"

#include "wrnet/endotactic.hpp"
#include "wrnet/errors.hpp"
#include "wrnet/massaction.hpp"
#include "wrnet/realization.hpp"
#include "wrnet/simplex.hpp"

namespace wrnet {

std::optional<P2Solution> solve_p2(const EGraph& g)
{
    const auto gc = complete_graph(g);
    const auto n = g.dimension();
    LinProgram lp;
    std::vector<std::size_t> j, jp;
    for (std::size_t e = 0; e < g.num_edges(); ++e) j.push_back(lp.add_variable("J" + std::to_string(e), Rational(1)));
    for (std::size_t f = 0; f < gc.num_edges(); ++f) jp.push_back(lp.add_variable("Jc" + std::to_string(f)));

    // Vertex ids agree between g and gc (same vertex list).
    for (VertexId y = 0; y < g.num_vertices(); ++y) {
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<std::pair<std::size_t, Rational>> terms;
            for (auto e : g.out_edges(y)) {
                auto r = g.reaction_vector(e);
                if (r[c] != 0) terms.emplace_back(j[e], r[c]);
            }
            for (auto f : gc.out_edges(y)) {
                auto r = gc.reaction_vector(f);
                if (r[c] != 0) terms.emplace_back(jp[f], -r[c]);
            }
            if (!terms.empty()) lp.add_sparse(terms, Relation::Equal, 0);
        }
        std::vector<std::pair<std::size_t, Rational>> balance;
        for (auto f : gc.out_edges(y)) balance.emplace_back(jp[f], 1);
        for (auto f : gc.in_edges(y)) balance.emplace_back(jp[f], -1);
        if (!balance.empty()) lp.add_sparse(balance, Relation::Equal, 0);
    }
    for (auto v : jp) lp.set_objective_coefficient(v, 1);
    lp.set_sense(Sense::Minimize);

    auto sol = simplex_solve(lp);
    if (sol.status != LpStatus::Optimal) return std::nullopt;

    P2Solution out;
    for (std::size_t e = 0; e < g.num_edges(); ++e)
        out.j[{g.vertex(g.edge(e).source), g.vertex(g.edge(e).target)}] = sol.assignment[j[e]];
    bool any = false;
    for (std::size_t f = 0; f < gc.num_edges(); ++f) {
        out.j_prime[{gc.vertex(gc.edge(f).source), gc.vertex(gc.edge(f).target)}] = sol.assignment[jp[f]];
        if (sol.assignment[jp[f]] > 0) any = true;
    }
    if (any) out.support = extract_wr_support(n, out.j_prime);
    return out;
}

bool p2_constraints_hold(const EGraph& g, const FluxVector& j, const FluxVector& j_prime, std::string* why)
{
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const auto n = g.dimension();
    std::map<RatVec, RatVec> net;
    std::map<RatVec, Rational> balance;
    for (const auto& v : g.vertices()) {
        net[v] = zeros(n);
        balance[v] = 0;
    }

    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto& s = g.vertex(g.edge(e).source);
        const auto& t = g.vertex(g.edge(e).target);
        auto it = j.find({s, t});
        if (it == j.end()) return fail("J has no entry for " + to_string(s) + " -> " + to_string(t));
        if (it->second <= 0) return fail("J is not positive on " + to_string(s) + " -> " + to_string(t));
        axpy(net[s], it->second, t - s);
    }
    if (j.size() != g.num_edges()) return fail("J has entries outside the edge set");

    for (const auto& [edge, flux] : j_prime) {
        const auto& [s, t] = edge;
        if (!g.find_vertex(s) || !g.find_vertex(t) || s == t)
            return fail("J' entry " + to_string(s) + " -> " + to_string(t) + " is not a complete-graph edge");
        if (flux < 0) return fail("J' is negative on " + to_string(s) + " -> " + to_string(t));
        axpy(net[s], -flux, t - s);
        balance[s] += flux;
        balance[t] -= flux;
    }
    for (const auto& [v, r] : net)
        if (!is_zero(r)) return fail("flux equivalence fails at " + to_string(v) + " by " + to_string(r));
    for (const auto& [v, b] : balance)
        if (b != 0) return fail("J' is not balanced at " + to_string(v) + " (net " + to_string(b) + ")");
    return true;
}

EGraph extract_wr_support(std::size_t dimension, const FluxVector& j_prime)
{
    std::vector<std::pair<RatVec, RatVec>> reactions;
    for (const auto& [edge, flux] : j_prime)
        if (flux > 0) reactions.push_back(edge);
    if (reactions.empty()) throw InvalidGraph("flux vector has no positive entries");
    auto g = EGraph::from_reactions(dimension, reactions);
    if (!is_weakly_reversible(g)) throw InvariantError("support of a balanced flux is not weakly reversible");
    return g;
}

std::optional<RateVector> disguised_membership_at(const EGraph& g, const RateVector& k, const EGraph& g2,
                                                  const RatVec& x)
{
    if (x.size() != g.dimension() || g2.dimension() != g.dimension())
        throw PreconditionError("dimension mismatch");
    for (const auto& v : x)
        if (v <= 0) throw PreconditionError("x must be strictly positive");

    const auto n = g.dimension();
    LinProgram lp;
    std::vector<std::size_t> kv;
    for (std::size_t e = 0; e < g2.num_edges(); ++e) kv.push_back(lp.add_variable("k" + std::to_string(e)));
    auto t = lp.add_variable("t", Rational(0), Rational(1));

    // Flux equivalence, one block per exponent appearing in either graph.
    std::map<RatVec, std::vector<std::pair<std::size_t, RatVec>>> lhs;
    std::map<RatVec, RatVec> target;
    for (auto y : source_vertices(g)) target[g.vertex(y)] = net_reaction_vector(g, k, y);
    for (std::size_t e = 0; e < g2.num_edges(); ++e) {
        const auto& s = g2.vertex(g2.edge(e).source);
        lhs[s].emplace_back(e, g2.reaction_vector(e));
        target.emplace(s, zeros(n));
    }
    for (const auto& [y, w] : target) {
        Rational m = monomial(x, y);
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<std::pair<std::size_t, Rational>> terms;
            for (const auto& [e, r] : lhs[y])
                if (r[c] != 0) terms.emplace_back(kv[e], m * r[c]);
            lp.add_sparse(terms, Relation::Equal, m * w[c]);
        }
    }

    // Complex balance of k2 x^y on g2.
    std::vector<Rational> mono(g2.num_vertices());
    for (VertexId v = 0; v < g2.num_vertices(); ++v) mono[v] = monomial(x, g2.vertex(v));
    for (VertexId v = 0; v < g2.num_vertices(); ++v) {
        std::vector<std::pair<std::size_t, Rational>> terms;
        for (auto e : g2.out_edges(v)) terms.emplace_back(kv[e], mono[v]);
        for (auto e : g2.in_edges(v)) terms.emplace_back(kv[e], -mono[g2.edge(e).source]);
        lp.add_sparse(terms, Relation::Equal, 0);
    }

    for (auto v : kv) lp.add_sparse({{v, 1}, {t, -1}}, Relation::GreaterEqual, 0);
    lp.set_objective_coefficient(t, 1);
    lp.set_sense(Sense::Maximize);
    auto sol = simplex_solve(lp);
    if (sol.status != LpStatus::Optimal || sol.assignment[t] <= 0) return std::nullopt;
    std::vector<Rational> rates;
    for (auto v : kv) rates.push_back(sol.assignment[v]);
    return RateVector(g2, std::move(rates));
}

std::optional<std::pair<EGraph, RateVector>> solve_p1_fixed_k(const EGraph& g, const RateVector& k)
{
    if (is_weakly_reversible(g)) return std::make_pair(g, k);
    auto p2 = solve_p2(g);
    if (!p2 || !p2->support) return std::nullopt;
    auto rates = rate_solve(g, k, *p2->support);
    if (!rates) return std::nullopt;
    return std::make_pair(*p2->support, std::move(*rates));
}

FluxVector as_flux(const EGraph& g, const RateVector& k)
{
    FluxVector f;
    for (std::size_t e = 0; e < g.num_edges(); ++e)
        f[{g.vertex(g.edge(e).source), g.vertex(g.edge(e).target)}] = k[e];
    return f;
}

}  // namespace wrnet
