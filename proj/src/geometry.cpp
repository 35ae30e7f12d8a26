#include "wrnet/geometry.hpp"

#include <algorithm>
#include <optional>

#include "wrnet/linalg.hpp"
#include "wrnet/simplex.hpp"

namespace wrnet {

namespace {

// Largest t in [0,1] with target = sum lambda_i vecs_i, lambda_i >= t (and
// sum lambda_i = 1 when convex). nullopt when no nonnegative combination exists.
std::optional<Rational> max_min_combination(const std::vector<RatVec>& vecs, const RatVec& target,
                                            bool convex)
{
    LinProgram lp;
    std::vector<std::size_t> lambda;
    for (std::size_t i = 0; i < vecs.size(); ++i)
        lambda.push_back(lp.add_variable("lambda" + std::to_string(i)));
    auto t = lp.add_variable("t", Rational(0), Rational(1));

    for (std::size_t c = 0; c < target.size(); ++c) {
        std::vector<std::pair<std::size_t, Rational>> terms;
        for (std::size_t i = 0; i < vecs.size(); ++i)
            if (vecs[i][c] != 0) terms.emplace_back(lambda[i], vecs[i][c]);
        lp.add_sparse(terms, Relation::Equal, target[c]);
    }
    if (convex) {
        std::vector<std::pair<std::size_t, Rational>> terms;
        for (auto l : lambda) terms.emplace_back(l, 1);
        lp.add_sparse(terms, Relation::Equal, 1);
    }
    for (auto l : lambda) lp.add_sparse({{l, 1}, {t, -1}}, Relation::GreaterEqual, 0);
    lp.set_objective_coefficient(t, 1);
    lp.set_sense(Sense::Maximize);

    auto sol = simplex_solve(lp);
    if (sol.status != LpStatus::Optimal) return std::nullopt;
    return sol.assignment[t];
}

std::size_t affine_dimension(const std::vector<RatVec>& points, std::size_t ambient)
{
    if (points.empty()) return 0;
    linalg::Matrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
    return linalg::rank(std::move(diffs), ambient);
}

bool point_in_relint(const std::vector<RatVec>& points, const RatVec& y)
{
    auto t = max_min_combination(points, y, true);
    return t && *t > 0;
}

using P2 = std::array<Rational, 2>;

P2 sub2(const P2& a, const P2& b) { return {a[0] - b[0], a[1] - b[1]}; }
Rational dot2(const P2& a, const P2& b) { return a[0] * b[0] + a[1] * b[1]; }

}  // namespace

Rational cross2(const std::array<Rational, 2>& a, const std::array<Rational, 2>& b)
{
    return a[0] * b[1] - a[1] * b[0];
}

NewtonPolytope NewtonPolytope::of(const EGraph& g)
{
    std::vector<VertexId> all(g.num_vertices());
    for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
    return of_sources(g, all);
}

NewtonPolytope NewtonPolytope::of_sources(const EGraph& g, const std::vector<VertexId>& subset)
{
    NewtonPolytope p;
    p.ambient_dim = g.dimension();
    for (auto v : subset)
        if (g.is_source(v)) {
            p.generators.push_back(v);
            p.points.push_back(g.vertex(v));
        }
    p.affine_dim = affine_dimension(p.points, p.ambient_dim);
    return p;
}

NewtonPolytope NewtonPolytope::from_points(std::vector<RatVec> points)
{
    NewtonPolytope p;
    p.ambient_dim = points.empty() ? 0 : points.front().size();
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != p.ambient_dim)
            throw PreconditionError("polytope points have mixed dimensions");
        p.generators.push_back(i);
    }
    p.points = std::move(points);
    p.affine_dim = affine_dimension(p.points, p.ambient_dim);
    return p;
}

bool NewtonPolytope::is_generator(const RatVec& y) const
{
    return std::find(points.begin(), points.end(), y) != points.end();
}

bool on_boundary(const NewtonPolytope& p, const RatVec& y)
{
    if (!p.is_generator(y)) throw PreconditionError(to_string(y) + " is not a generator of the polytope");
    return !point_in_relint(p.points, y);
}

bool in_convex_hull(const std::vector<RatVec>& points, const RatVec& y)
{
    return max_min_combination(points, y, true).has_value();
}

bool in_tangent_cone_relint(const std::vector<RatVec>& points, const RatVec& y, const RatVec& w)
{
    std::vector<RatVec> dirs;
    dirs.reserve(points.size());
    for (const auto& g : points) dirs.push_back(g - y);
    auto t = max_min_combination(dirs, w, false);
    return t && *t > 0;
}

bool points_into_relative_interior(const NewtonPolytope& p, const RatVec& y, const RatVec& w)
{
    if (is_zero(w)) throw PreconditionError("direction must be nonzero");
    if (!in_convex_hull(p.points, y)) throw PreconditionError(to_string(y) + " is outside the polytope");
    if (point_in_relint(p.points, y))
        throw PreconditionError(to_string(y) + " is not on the polytope boundary");
    return in_tangent_cone_relint(p.points, y, w);
}

std::string to_string(ConeMembership c)
{
    switch (c) {
    case ConeMembership::Interior: return "interior";
    case ConeMembership::Boundary: return "boundary";
    case ConeMembership::Outside: return "outside";
    case ConeMembership::ZeroCone: return "zero_cone";
    }
    return "unknown";
}

ConeMembership cone_membership(const EGraph& g, VertexId y, const RatVec& w)
{
    if (is_zero(w)) throw PreconditionError("direction must be nonzero");
    if (w.size() != g.dimension()) throw PreconditionError("direction has wrong dimension");
    if (!g.is_source(y)) return ConeMembership::ZeroCone;
    std::vector<RatVec> gens;
    for (auto e : g.out_edges(y)) gens.push_back(g.reaction_vector(e));
    auto t = max_min_combination(gens, w, false);
    if (!t) return ConeMembership::Outside;
    return *t > 0 ? ConeMembership::Interior : ConeMembership::Boundary;
}

bool HullClassification2D::is_corner(VertexId v) const
{
    return std::find(corners.begin(), corners.end(), v) != corners.end();
}

bool HullClassification2D::is_side(VertexId v) const { return side_flanks.count(v) > 0; }

std::array<Rational, 2> HullClassification2D::plane_direction(const RatVec& d) const
{
    auto c = linalg::coordinates_in({basis[0], basis[1]}, d);
    if (!c) throw PreconditionError(to_string(d) + " is not parallel to the hull plane");
    return {(*c)[0], (*c)[1]};
}

HullClassification2D classify_hull_2d(const EGraph& g)
{
    HullClassification2D h;
    auto sources = source_vertices(g);
    std::vector<RatVec> pts;
    for (auto v : sources) pts.push_back(g.vertex(v));
    const auto n = g.dimension();

    auto dim = affine_dimension(pts, n);
    if (dim < 2)
        throw DegenerateHull("source vertices span an affine set of dimension " + std::to_string(dim));
    if (dim > 2)
        throw NotPlanar("source vertices span an affine set of dimension " + std::to_string(dim));

    if (n == 2) {
        h.origin = zeros(2);
        h.basis = {RatVec{1, 0}, RatVec{0, 1}};
    } else {
        h.origin = pts[0];
        linalg::Matrix chosen;
        for (std::size_t i = 1; i < pts.size() && chosen.size() < 2; ++i) {
            auto d = pts[i] - pts[0];
            if (is_zero(d)) continue;
            chosen.push_back(d);
            if (linalg::rank(chosen, n) < chosen.size()) chosen.pop_back();
        }
        h.basis = {chosen[0], chosen[1]};
    }

    std::vector<P2> q;
    for (const auto& p : pts) q.push_back(h.plane_direction(p - h.origin));
    const std::size_t m = q.size();

    std::size_t start = 0;
    for (std::size_t i = 1; i < m; ++i)
        if (q[i][1] < q[start][1] || (q[i][1] == q[start][1] && q[i][0] < q[start][0])) start = i;

    // Jarvis march over strict corners: keep every other point on the right.
    std::vector<std::size_t> corner_idx;
    std::size_t cur = start;
    do {
        corner_idx.push_back(cur);
        std::size_t cand = cur == 0 ? 1 : 0;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == cur || r == cand) continue;
            auto a = sub2(q[cand], q[cur]);
            auto b = sub2(q[r], q[cur]);
            auto c = cross2(a, b);
            if (c > 0 || (c == 0 && dot2(b, b) > dot2(a, a))) cand = r;
        }
        cur = cand;
        if (corner_idx.size() > m) throw InvariantError("hull walk did not close");
    } while (cur != start);

    std::vector<bool> on_hull(m, false);
    for (std::size_t i = 0; i < corner_idx.size(); ++i) {
        auto a = corner_idx[i];
        auto b = corner_idx[(i + 1) % corner_idx.size()];
        on_hull[a] = true;
        h.boundary_cycle.push_back(sources[a]);
        h.corners.push_back(sources[a]);

        auto d = sub2(q[b], q[a]);
        auto len = dot2(d, d);
        std::vector<std::pair<Rational, std::size_t>> between;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == a || r == b) continue;
            auto e = sub2(q[r], q[a]);
            if (cross2(d, e) != 0) continue;
            auto s = dot2(e, d);
            if (s > 0 && s < len) between.emplace_back(s, r);
        }
        std::sort(between.begin(), between.end());
        for (const auto& [s, r] : between) {
            on_hull[r] = true;
            h.boundary_cycle.push_back(sources[r]);
            h.sides.push_back(sources[r]);
            h.side_flanks[sources[r]] = {sources[a], sources[b]};
        }
    }

    for (std::size_t r = 0; r < m; ++r) {
        if (on_hull[r]) continue;
        if (!point_in_relint(pts, pts[r]))
            throw InvariantError("hull walk missed boundary point " + to_string(pts[r]));
        h.interior.push_back(sources[r]);
    }
    return h;
}

}  // namespace wrnet
