#pragma once

// Shared helpers for the unit and acceptance tests: fixture loading, random
// graphs, and brute-force oracles that do not reuse library internals.

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wrnet/egraph.hpp"
#include "wrnet/geometry.hpp"
#include "wrnet/linalg.hpp"
#include "wrnet/network_io.hpp"
#include "wrnet/rational.hpp"
#include "wrnet/simplex.hpp"

#ifndef WRNET_NETWORKS_DIR
#define WRNET_NETWORKS_DIR "networks"
#endif

namespace testkit {

using wrnet::EGraph;
using wrnet::Rational;
using wrnet::RatVec;

inline RatVec v(std::initializer_list<long> xs)
{
    RatVec out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

/// Placeholder species names for printing random graphs in failure messages.
inline std::vector<std::string> species_for(std::size_t dim)
{
    std::vector<std::string> names{"A", "B", "C", "D", "E", "F"};
    names.resize(dim);
    return names;
}

inline std::string show(const EGraph& g) { return wrnet::print_network(species_for(g.dimension()), g); }

inline wrnet::Network net(const std::string& text) { return wrnet::parse_network(text); }

inline wrnet::Network fixture(const std::string& name)
{
    return wrnet::read_network_file(std::string(WRNET_NETWORKS_DIR) + "/" + name);
}

/// Edge set of a graph written as network-file reactions over species X, Y.
inline std::set<std::pair<RatVec, RatVec>> edge_set(const std::string& reactions)
{
    return wrnet::edge_coordinates(net("species X Y\n" + reactions).graph);
}

/// Weakly reversible 7-edge graphs for the Thomas and Selkov models.
inline const char* kThomasWrGraph =
    "0 -> X\n0 -> Y\n0 -> X + Y\nX -> 0\nY -> 0\nX + Y -> X\nX + Y -> Y\n";

inline const char* kSelkovWrGraph =
    "Y -> 3Y\nY -> X + 2Y\nY -> X\nX + 2Y -> X\nX + 2Y -> 3Y\nX -> X + 2Y\n3Y -> Y\n";

/// Balanced fluxes listed for the Thomas model (on the 7-edge support).
inline const char* kThomasJPrime =
    "species X Y\n0 -> X : 1\n0 -> Y : 1\nX + Y -> X : 1\nX + Y -> Y : 1\n"
    "X -> 0 : 2\nY -> 0 : 2\n0 -> X + Y : 2\n";

inline const char* kSelkovJPrime =
    "species X Y\nY -> 3Y : 1\nY -> X + 2Y : 1\nY -> X : 1\nX + 2Y -> X : 1\n"
    "X + 2Y -> 3Y : 2\nX -> X + 2Y : 2\n3Y -> Y : 3\n";

/// Deterministic random E-graphs on small integer grids.
class GraphGen
{
public:
    explicit GraphGen(unsigned seed) : rng_(seed) {}

    std::mt19937& rng() { return rng_; }

    EGraph graph(std::size_t dim, std::size_t max_vertices, std::size_t max_edges, long grid = 3)
    {
        std::uniform_int_distribution<std::size_t> nv(2, max_vertices);
        std::uniform_int_distribution<long> coord(0, grid);
        std::size_t m = nv(rng_);
        std::set<RatVec> pts;
        while (pts.size() < m) {
            RatVec p(dim);
            for (auto& c : p) c = coord(rng_);
            pts.insert(p);
        }
        std::vector<RatVec> vs(pts.begin(), pts.end());
        std::shuffle(vs.begin(), vs.end(), rng_);

        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                if (a != b) pairs.emplace_back(a, b);
        std::shuffle(pairs.begin(), pairs.end(), rng_);
        std::uniform_int_distribution<std::size_t> ne(1, std::min(max_edges, pairs.size()));
        pairs.resize(ne(rng_));

        std::vector<std::pair<RatVec, RatVec>> reactions;
        for (auto [a, b] : pairs) reactions.emplace_back(vs[a], vs[b]);
        return EGraph::from_reactions(dim, reactions);
    }

    /// Weakly reversible graph: a random directed cycle through every vertex
    /// plus random chords closed into cycles.
    EGraph weakly_reversible(std::size_t dim, std::size_t max_vertices, long grid = 3)
    {
        std::uniform_int_distribution<std::size_t> nv(2, max_vertices);
        std::uniform_int_distribution<long> coord(0, grid);
        std::size_t m = nv(rng_);
        std::set<RatVec> pts;
        while (pts.size() < m) {
            RatVec p(dim);
            for (auto& c : p) c = coord(rng_);
            pts.insert(p);
        }
        std::vector<RatVec> vs(pts.begin(), pts.end());
        std::shuffle(vs.begin(), vs.end(), rng_);
        std::vector<std::pair<RatVec, RatVec>> reactions;
        for (std::size_t i = 0; i < m; ++i) reactions.emplace_back(vs[i], vs[(i + 1) % m]);
        if (m > 2 && rng_() % 2) reactions.emplace_back(vs[1], vs[0]);
        return EGraph::from_reactions(dim, reactions);
    }

    Rational rate()
    {
        std::uniform_int_distribution<long> num(1, 9), den(1, 4);
        Rational q(mpz_class(num(rng_)), mpz_class(den(rng_)));
        q.canonicalize();
        return q;
    }

    wrnet::RateVector rates(const EGraph& g)
    {
        std::vector<Rational> k;
        for (std::size_t e = 0; e < g.num_edges(); ++e) k.push_back(rate());
        return wrnet::RateVector(g, std::move(k));
    }

private:
    std::mt19937 rng_;
};

/// The endotactic quantifier evaluated literally at one direction.
/// Returns true when some edge with v.(y'-y) < 0 has no rescuing edge.
inline bool raw_violation(const EGraph& g, const RatVec& v, bool strong)
{
    using wrnet::dot;
    Rational min_source;
    bool first = true;
    for (std::size_t y = 0; y < g.num_vertices(); ++y) {
        if (!g.is_source(y)) continue;
        Rational s = dot(v, g.vertex(y));
        if (first || s < min_source) min_source = s;
        first = false;
    }
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        if (dot(v, g.reaction_vector(e)) >= 0) continue;
        Rational vy = dot(v, g.vertex(ed.source));
        bool rescued = false;
        for (std::size_t f = 0; f < g.num_edges() && !rescued; ++f) {
            const auto& fd = g.edge(f);
            Rational vs = dot(v, g.vertex(fd.source));
            if (!(vs < vy) || !(dot(v, g.reaction_vector(f)) > 0)) continue;
            if (strong && vs > min_source) continue;
            rescued = true;
        }
        if (!rescued) return true;
    }
    return false;
}

/// Directions for the planar sweep: both unit directions of every line
/// a.v = 0, one direction strictly inside every arc between consecutive
/// line directions, and a dense grid of integer directions.
inline std::vector<RatVec> sweep_directions(const std::vector<RatVec>& normals, long dense = 7)
{
    auto half = [](const RatVec& d) { return d[1] > 0 || (d[1] == 0 && d[0] > 0) ? 0 : 1; };
    auto cross = [](const RatVec& a, const RatVec& b) { return Rational(a[0] * b[1] - a[1] * b[0]); };
    auto less_angle = [&](const RatVec& a, const RatVec& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        return cross(a, b) > 0;
    };

    std::vector<RatVec> rays;
    for (const auto& a : normals) {
        RatVec d{Rational(-a[1]), a[0]};
        rays.push_back(d);
        rays.push_back(RatVec{Rational(-d[0]), Rational(-d[1])});
    }
    std::sort(rays.begin(), rays.end(), less_angle);
    rays.erase(std::unique(rays.begin(), rays.end(),
                           [&](const RatVec& a, const RatVec& b) { return !less_angle(a, b) && !less_angle(b, a); }),
               rays.end());

    std::vector<RatVec> out = rays;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const auto& a = rays[i];
        const auto& b = rays[(i + 1) % rays.size()];
        if (rays.size() > 2 && cross(a, b) > 0) {
            out.push_back(RatVec{Rational(a[0] + b[0]), Rational(a[1] + b[1])});
        } else {
            out.push_back(RatVec{Rational(-a[1]), a[0]});  // arc of exactly pi
        }
    }
    if (rays.empty()) out.push_back(RatVec{Rational(1), Rational(0)});
    for (long x = -dense; x <= dense; ++x)
        for (long y = -dense; y <= dense; ++y)
            if (x != 0 || y != 0) out.push_back(RatVec{Rational(x), Rational(y)});
    return out;
}

/// Brute-force planar endotactic decision over sweep_directions.
inline bool sweep_endotactic(const EGraph& g, const std::vector<RatVec>& normals, bool strong)
{
    for (const auto& d : sweep_directions(normals))
        if (raw_violation(g, d, strong)) return false;
    return true;
}

/// Generator y is interior iff it is a convex combination of all generators
/// with every coefficient positive (max-min LP, independent of the library
/// geometry module).
inline bool oracle_interior(const std::vector<RatVec>& pts, const RatVec& y)
{
    wrnet::LinProgram lp;
    std::vector<std::size_t> lam;
    for (std::size_t i = 0; i < pts.size(); ++i) lam.push_back(lp.add_variable("l" + std::to_string(i)));
    auto t = lp.add_variable("t", Rational(0), Rational(1));
    for (std::size_t c = 0; c < y.size(); ++c) {
        std::vector<std::pair<std::size_t, Rational>> row;
        for (std::size_t i = 0; i < pts.size(); ++i) row.emplace_back(lam[i], pts[i][c]);
        lp.add_sparse(row, wrnet::Relation::Equal, y[c]);
    }
    std::vector<std::pair<std::size_t, Rational>> sum;
    for (auto l : lam) sum.emplace_back(l, 1);
    lp.add_sparse(sum, wrnet::Relation::Equal, 1);
    for (auto l : lam) lp.add_sparse({{l, 1}, {t, -1}}, wrnet::Relation::GreaterEqual, 0);
    lp.set_objective_coefficient(t, 1);
    lp.set_sense(wrnet::Sense::Maximize);
    auto sol = wrnet::simplex_solve(lp);
    return sol.status == wrnet::LpStatus::Optimal && sol.objective_value > 0;
}

inline std::vector<RatVec> source_points(const EGraph& g)
{
    std::vector<RatVec> out;
    for (auto y : wrnet::source_vertices(g)) out.push_back(g.vertex(y));
    return out;
}

/// Each point set lies in the convex hull of the other.
inline bool same_hull(const std::vector<RatVec>& a, const std::vector<RatVec>& b)
{
    for (const auto& p : a)
        if (!wrnet::in_convex_hull(b, p)) return false;
    for (const auto& p : b)
        if (!wrnet::in_convex_hull(a, p)) return false;
    return true;
}

}  // namespace testkit
