#include <algorithm>
#include <functional>

#include "doctest.h"
#include "testkit.hpp"
#include "wrnet/endotactic.hpp"
#include "wrnet/errors.hpp"
#include "wrnet/linalg.hpp"
#include "wrnet/realization.hpp"

using namespace wrnet;
using testkit::net;
using testkit::v;

namespace {

RealizationFailure failure_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const RealizationError& e) {
        return e.kind();
    }
    FAIL("expected a RealizationError");
    return RealizationFailure::HypothesisFailed;
}

bool is_subset(const std::set<std::pair<RatVec, RatVec>>& a, const std::set<std::pair<RatVec, RatVec>>& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void check_result(const EGraph& g, const RateVector& k, const RealizationResult& r)
{
    CHECK(is_weakly_reversible(r.target));
    CHECK(verify_equivalence(g, k, r.target, r.rates));
    for (const auto& c : r.certificate) CHECK(c.original == c.realized);
    for (auto y : source_vertices(r.target)) CHECK(g.find_vertex(r.target.vertex(y)).has_value());
    if (linkage_classes(r.target).size() == 1) {
        CHECK(linalg::same_span(stoichiometric_subspace(g), stoichiometric_subspace(r.target), g.dimension()));
        CHECK(testkit::same_hull(testkit::source_points(g), testkit::source_points(r.target)));
    }
}

// Square cycle along the hull edges plus a reaction from the centre.
const char* kTangentialSquare = "species X Y\n0 -> 2X : 1\n2X -> 2X + 2Y : 1\n2X + 2Y -> 2Y : 1\n2Y -> 0 : 1\nX + Y -> 0 : 1\n";

// Same square, with 0 also pushing toward 2Y so its net vector points inward.
const char* kInwardSquare = "species X Y\n0 -> 2X : 1\n0 -> 2Y : 1\n2X -> 2X + 2Y : 1\n2X + 2Y -> 2Y : 1\n2Y -> 0 : 1\nX + Y -> 0 : 1\n";

EGraph highdim_triangle()
{
    RatVec a = v({0, 0}), b = v({2, 0}), c = v({0, 2});
    RatVec d{Rational(2, 3), Rational(2, 3)};
    return EGraph::from_reactions(2, {{a, b}, {c, d}, {b, d}, {d, b}});
}

}  // namespace

TEST_CASE("verify_equivalence")
{
    auto a = testkit::fixture("intro1.crn");
    auto b = testkit::fixture("intro2.crn");
    CHECK(verify_equivalence(a.graph, *a.rates, b.graph, *b.rates));
    CHECK(verify_equivalence(a.graph, *a.rates, a.graph, *a.rates));

    auto c = net("species X Y\n0 -> X : 1\n0 -> Y : 2\nX + Y -> 2X + Y : 1\n2X + Y -> 0 : 1\n");
    CHECK_FALSE(verify_equivalence(a.graph, *a.rates, c.graph, *c.rates));

    auto one = net("species X\nX -> 0 : 1\n");
    CHECK_THROWS_AS(verify_equivalence(a.graph, *a.rates, one.graph, *one.rates), PreconditionError);
}

TEST_CASE("construct_wr_graph_2d on the fixtures")
{
    auto thomas = testkit::fixture("thomas.crn").graph;
    auto gt = construct_wr_graph_2d(thomas);
    CHECK(is_weakly_reversible(gt));
    CHECK(linkage_classes(gt).size() == 1);
    CHECK(is_subset(testkit::edge_set(testkit::kThomasWrGraph), edge_coordinates(gt)));
    CHECK(edge_coordinates(gt).size() == 8);
    CHECK(gt.find_edge(v({1, 1}), v({0, 0})).has_value());

    auto selkov = testkit::fixture("selkov.crn").graph;
    auto gs = construct_wr_graph_2d(selkov);
    CHECK(is_weakly_reversible(gs));
    CHECK(linkage_classes(gs).size() == 1);
    CHECK(is_subset(testkit::edge_set(testkit::kSelkovWrGraph), edge_coordinates(gs)));
    CHECK(edge_coordinates(gs).size() == 8);
}

TEST_CASE("construct_wr_graph_2d on a square with a reversible diagonal")
{
    auto g = net("species X Y\n0 <-> X + Y\nX -> 0\nY -> X + Y\n").graph;
    auto gp = construct_wr_graph_2d(g);
    CHECK(is_weakly_reversible(gp));
    CHECK(linkage_classes(gp).size() == 1);
    CHECK(source_vertices(gp).size() == 4);
}

TEST_CASE("construct_wr_graph_2d hypotheses")
{
    CHECK(failure_of([] { construct_wr_graph_2d(net("species X Y Z\n0 -> X\nX -> Y\nY -> Z\nZ -> 0\n").graph); }) ==
          RealizationFailure::NotTwoDimensional);
    CHECK(failure_of([] { construct_wr_graph_2d(net("species X Y\n0 -> X\n0 -> Y\n").graph); }) ==
          RealizationFailure::NotStronglyEndotactic);
    CHECK(failure_of([] { construct_wr_graph_2d(net(kTangentialSquare).graph); }) ==
          RealizationFailure::InteriorSources);
}

TEST_CASE("realize_2d")
{
    auto thomas = testkit::fixture("thomas.crn");
    auto r = realize_2d(thomas.graph, *thomas.rates);
    check_result(thomas.graph, *thomas.rates, r);
    CHECK(r.method == "boundary");
    CHECK(linkage_classes(r.target).size() == 1);

    // The listed balanced fluxes are one valid rate vector on the reference graph.
    auto jp = net(testkit::kThomasJPrime);
    CHECK(verify_equivalence(thomas.graph, *thomas.rates, jp.graph, *jp.rates));

    auto tangential = net(kTangentialSquare);
    CHECK(is_strongly_endotactic(tangential.graph).holds);
    CHECK(failure_of([&] { realize_2d(tangential.graph, *tangential.rates); }) ==
          RealizationFailure::NeitherConditionHolds);

    auto inward = net(kInwardSquare);
    auto ri = realize_2d(inward.graph, *inward.rates);
    CHECK(ri.method == "interior");
    check_result(inward.graph, *inward.rates, ri);
    CHECK(ri.target.find_edge(v({0, 0}), v({1, 1})).has_value());
}

TEST_CASE("property: boundary-only squares realize for random rates")
{
    auto g = net("species X Y\n0 <-> X + Y\nX -> 0\nY -> X + Y\n").graph;
    testkit::GraphGen gen(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto k = gen.rates(g);
        auto r = realize_2d(g, k);
        check_result(g, k, r);
    }
}

TEST_CASE("realize_highdim")
{
    auto xy = net("species X Y\nX <-> Y : 2, 3\n");
    auto id = realize_highdim(xy.graph, *xy.rates);
    CHECK(id.method == "identity");
    CHECK(edge_coordinates(id.target) == edge_coordinates(xy.graph));
    CHECK(id.rates.values() == xy.rates->values());

    auto one = net("species X Y\nX -> Y : 1\n");
    CHECK(failure_of([&] { realize_highdim(one.graph, *one.rates); }) == RealizationFailure::HypothesisFailed);

    auto tri = highdim_triangle();
    auto k = RateVector::uniform(tri);
    CHECK(check_terminal_interior(tri, k).holds);
    auto r = realize_highdim(tri, k);
    CHECK(r.method == "terminal");
    check_result(tri, k, r);
    // One vertex of the terminal component {B, D} now reaches every other vertex.
    int hubs = 0;
    for (auto y : source_vertices(r.target))
        if (r.target.out_edges(y).size() == 3) ++hubs;
    CHECK(hubs == 1);
}

TEST_CASE("realize dispatch")
{
    auto thomas = testkit::fixture("thomas.crn");
    CHECK(realize(thomas.graph, *thomas.rates, RealizeMode::Auto).method == "boundary");
    auto tri = highdim_triangle();
    auto k = RateVector::uniform(tri);
    auto r = realize(tri, k, RealizeMode::HighDim);
    CHECK(r.method == "terminal");
    auto line = net("species X Y\n0 <-> X : 1, 1\n");
    CHECK(realize(line.graph, *line.rates, RealizeMode::Auto).method == "identity");
    CHECK(failure_of([&] { realize(line.graph, *line.rates, RealizeMode::TwoD); }) ==
          RealizationFailure::NotTwoDimensional);
}

TEST_CASE("rate_solve")
{
    auto thomas = testkit::fixture("thomas.crn");
    auto target = net(std::string("species X Y\n") + testkit::kThomasWrGraph).graph;
    auto k2 = rate_solve(thomas.graph, *thomas.rates, target);
    REQUIRE(k2);
    CHECK(verify_equivalence(thomas.graph, *thomas.rates, target, *k2));
    for (const auto& x : k2->values()) CHECK(x > 0);

    auto back = net("species X Y\nY -> X : 1\n");
    auto both = net("species X Y\nX <-> Y\n").graph;
    CHECK_FALSE(rate_solve(back.graph, *back.rates, both).has_value());

    auto single = net("species X Y\nX -> Y : 2\n");
    auto ks = rate_solve(single.graph, *single.rates, single.graph);
    REQUIRE(ks);
    CHECK((*ks)[0] == 2);
}

TEST_CASE("property: realization round trip on weakly reversible input")
{
    testkit::GraphGen gen(17);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = gen.weakly_reversible(2 + trial % 2, 5);
        auto k = gen.rates(g);
        auto r = realize(g, k, RealizeMode::HighDim);
        CHECK(verify_equivalence(g, k, r.target, r.rates));
        CHECK(edge_coordinates(r.target) == edge_coordinates(g));
    }
}
