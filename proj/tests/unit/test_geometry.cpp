#include <algorithm>

#include "doctest.h"
#include "testkit.hpp"
#include "wrnet/errors.hpp"
#include "wrnet/geometry.hpp"

using namespace wrnet;
using testkit::net;
using testkit::v;

namespace {

RatVec q(long a, long b, long c, long d) { return RatVec{Rational(a, b), Rational(c, d)}; }

std::vector<RatVec> coords(const EGraph& g, const std::vector<VertexId>& ids)
{
    std::vector<RatVec> out;
    for (auto i : ids) out.push_back(g.vertex(i));
    return out;
}

std::vector<RatVec> sorted(std::vector<RatVec> xs)
{
    std::sort(xs.begin(), xs.end());
    return xs;
}

}  // namespace

TEST_CASE("on_boundary")
{
    auto tri = NewtonPolytope::from_points({v({0, 0}), v({1, 0}), v({0, 1})});
    CHECK(on_boundary(tri, v({0, 0})));

    auto mid = NewtonPolytope::from_points({v({0, 0}), v({2, 0}), v({0, 2}), v({1, 1})});
    CHECK(on_boundary(mid, v({1, 1})));

    auto inner = NewtonPolytope::from_points({v({0, 0}), v({2, 0}), v({0, 2}), q(1, 1, 1, 2)});
    CHECK_FALSE(on_boundary(inner, q(1, 1, 1, 2)));

    CHECK_THROWS_AS(on_boundary(tri, v({1, 1})), PreconditionError);
}

TEST_CASE("classify_hull_2d")
{
    auto thomas = testkit::fixture("thomas.crn").graph;
    auto h = classify_hull_2d(thomas);
    CHECK(h.corners.size() == 4);
    CHECK(h.sides.empty());
    CHECK(h.interior.empty());

    auto side = net("species X Y\n0 -> 2X\n2X -> X\nX -> 2Y\n2Y -> 0").graph;
    auto hs = classify_hull_2d(side);
    CHECK(sorted(coords(side, hs.corners)) == sorted({v({0, 0}), v({2, 0}), v({0, 2})}));
    CHECK(coords(side, hs.sides) == std::vector<RatVec>{v({1, 0})});
    auto flank = hs.side_flanks.at(hs.sides[0]);
    CHECK(sorted({side.vertex(flank.first), side.vertex(flank.second)}) == sorted({v({0, 0}), v({2, 0})}));

    auto selkov = testkit::fixture("selkov.crn").graph;
    auto hk = classify_hull_2d(selkov);
    CHECK(hk.boundary_cycle.size() == 4);
    CHECK(hk.interior.empty());

    // Lowest-then-leftmost start, clockwise.
    CHECK(thomas.vertex(h.boundary_cycle[0]) == v({0, 0}));
    CHECK(thomas.vertex(h.boundary_cycle[1]) == v({0, 1}));

    CHECK_THROWS_AS(classify_hull_2d(net("species X Y\n0 -> X\nX -> 2X").graph), DegenerateHull);
    CHECK_THROWS_AS(classify_hull_2d(net("species X Y Z\n0 -> X\nX -> Y\nY -> Z\nZ -> 0").graph), NotPlanar);
}

TEST_CASE("classify_hull_2d in a plane of higher ambient dimension")
{
    // Sources on the plane x + y + z = 2.
    auto g = net("species X Y Z\n2X -> 2Y\n2Y -> 2Z\n2Z -> 2X\nX + Y -> 2Z").graph;
    auto h = classify_hull_2d(g);
    CHECK(h.corners.size() == 3);
    CHECK(h.sides.size() == 1);
    CHECK(g.vertex(h.sides[0]) == v({1, 1, 0}));
}

TEST_CASE("cone_membership")
{
    auto g = net("species X Y\n0 -> X\n0 -> Y").graph;
    auto o = *g.find_vertex(v({0, 0}));
    CHECK(cone_membership(g, o, v({1, 1})) == ConeMembership::Interior);
    CHECK(cone_membership(g, o, v({1, 0})) == ConeMembership::Boundary);
    CHECK(cone_membership(g, o, v({-1, 0})) == ConeMembership::Outside);
    CHECK_THROWS_AS(cone_membership(g, o, v({0, 0})), PreconditionError);
    CHECK(cone_membership(g, *g.find_vertex(v({1, 0})), v({1, 0})) == ConeMembership::ZeroCone);

    auto line = net("species X Y\n0 -> X\n0 -> 2X").graph;
    auto lo = *line.find_vertex(v({0, 0}));
    CHECK(cone_membership(line, lo, v({3, 0})) == ConeMembership::Interior);
    CHECK(cone_membership(line, lo, v({0, 1})) == ConeMembership::Outside);
}

TEST_CASE("points_into_relative_interior")
{
    auto square = NewtonPolytope::from_points({v({0, 0}), v({1, 0}), v({0, 1}), v({1, 1})});
    CHECK(points_into_relative_interior(square, v({0, 0}), v({1, 1})));
    CHECK_FALSE(points_into_relative_interior(square, v({0, 0}), v({1, 0})));
    CHECK_FALSE(points_into_relative_interior(square, v({0, 0}), v({-1, -1})));
    CHECK_THROWS_AS(points_into_relative_interior(square, v({0, 0}), v({0, 0})), PreconditionError);

    auto inner = NewtonPolytope::from_points({v({0, 0}), v({2, 0}), v({0, 2}), v({1, 1}), q(1, 2, 1, 2)});
    CHECK_THROWS_AS(points_into_relative_interior(inner, q(1, 2, 1, 2), v({1, 0})), PreconditionError);
    CHECK_THROWS_AS(points_into_relative_interior(square, v({2, 2}), v({-1, -1})), PreconditionError);

    // A segment in the plane: the relative interior is the open segment.
    auto seg = NewtonPolytope::from_points({v({0, 0}), v({2, 2})});
    CHECK(points_into_relative_interior(seg, v({0, 0}), v({1, 1})));
    CHECK_FALSE(points_into_relative_interior(seg, v({0, 0}), v({1, 0})));
}

TEST_CASE("property: hull orientation, boundary oracle, edge cones, scaling")
{
    testkit::GraphGen gen(23);
    int classified = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto g = gen.graph(2, 6, 10, 4);
        INFO(testkit::show(g));
        auto pts = testkit::source_points(g);
        auto p = NewtonPolytope::of(g);

        for (const auto& y : pts) CHECK(on_boundary(p, y) == !testkit::oracle_interior(pts, y));

        for (std::size_t e = 0; e < g.num_edges(); ++e)
            CHECK(cone_membership(g, g.edge(e).source, g.reaction_vector(e)) != ConeMembership::Outside);

        if (p.affine_dim == 2) {
            auto h = classify_hull_2d(g);
            ++classified;
            CHECK(h.corners.size() >= 3);
            CHECK(h.corners.size() + h.sides.size() + h.interior.size() == pts.size());
            const auto& cyc = h.boundary_cycle;
            Rational total = 0;
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                auto a = g.vertex(cyc[i]);
                auto b = g.vertex(cyc[(i + 1) % cyc.size()]);
                auto c = g.vertex(cyc[(i + 2) % cyc.size()]);
                Rational turn = cross2(h.plane_direction(b - a), h.plane_direction(c - b));
                CHECK(turn <= 0);
                CHECK((turn == 0) == h.is_side(cyc[(i + 1) % cyc.size()]));
                total += turn;
            }
            CHECK(total < 0);

            for (auto y : h.boundary_cycle) {
                for (std::size_t e = 0; e < g.num_edges(); ++e) {
                    if (g.edge(e).source != y) continue;
                    auto w = g.reaction_vector(e);
                    bool base = points_into_relative_interior(p, g.vertex(y), w);
                    CHECK(points_into_relative_interior(p, g.vertex(y), Rational(7, 3) * w) == base);
                }
            }
        }
    }
    CHECK(classified >= 50);
}

TEST_CASE("property: boundary oracle in three dimensions")
{
    testkit::GraphGen gen(29);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = gen.graph(3, 6, 10, 2);
        auto pts = testkit::source_points(g);
        auto p = NewtonPolytope::of(g);
        for (const auto& y : pts) CHECK(on_boundary(p, y) == !testkit::oracle_interior(pts, y));
    }
}
