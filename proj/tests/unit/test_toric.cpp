#include "doctest.h"
#include "testkit.hpp"
#include "wrnet/errors.hpp"
#include "wrnet/massaction.hpp"
#include "wrnet/realization.hpp"
#include "wrnet/toric.hpp"

using namespace wrnet;
using testkit::net;
using testkit::v;

namespace {

FluxVector scaled(const FluxVector& f, const Rational& s)
{
    FluxVector out;
    for (const auto& [e, x] : f) out[e] = s * x;
    return out;
}

RateVector rates_on(const EGraph& g, const FluxVector& f)
{
    std::vector<Rational> k;
    for (const auto& e : g.edges()) k.push_back(f.at({g.vertex(e.source), g.vertex(e.target)}));
    return RateVector(g, std::move(k));
}

}  // namespace

TEST_CASE("solve_p2 on the fixtures")
{
    for (const char* name : {"thomas.crn", "selkov.crn"}) {
        CAPTURE(name);
        auto n = testkit::fixture(name);
        auto p2 = solve_p2(n.graph);
        REQUIRE(p2);
        std::string why;
        CHECK_MESSAGE(p2_constraints_hold(n.graph, p2->j, p2->j_prime, &why), why);
        REQUIRE(p2->support);
        CHECK(is_weakly_reversible(*p2->support));
        for (const auto& [e, x] : p2->j) CHECK(x >= 1);
    }
}

TEST_CASE("listed balanced fluxes satisfy the flux program exactly")
{
    struct Case
    {
        const char* file;
        const char* j_prime;
        const char* wr_graph;
    };
    for (auto c : {Case{"thomas.crn", testkit::kThomasJPrime, testkit::kThomasWrGraph},
                   Case{"selkov.crn", testkit::kSelkovJPrime, testkit::kSelkovWrGraph}}) {
        CAPTURE(c.file);
        auto g = testkit::fixture(c.file);
        auto jp = net(c.j_prime);
        auto j = as_flux(g.graph, *g.rates);
        auto jpf = as_flux(jp.graph, *jp.rates);
        std::string why;
        CHECK_MESSAGE(p2_constraints_hold(g.graph, j, jpf, &why), why);
        CHECK(edge_coordinates(extract_wr_support(2, jpf)) == testkit::edge_set(c.wr_graph));
    }
}

TEST_CASE("p2_constraints_hold reports violations")
{
    auto g = testkit::fixture("thomas.crn");
    auto jp = net(testkit::kThomasJPrime);
    auto j = as_flux(g.graph, *g.rates);
    auto jpf = as_flux(jp.graph, *jp.rates);
    std::string why;
    jpf[{v({0, 0}), v({1, 1})}] = 3;
    CHECK_FALSE(p2_constraints_hold(g.graph, j, jpf, &why));
    CHECK_FALSE(why.empty());
    auto jbad = j;
    jbad.begin()->second = 0;
    CHECK_FALSE(p2_constraints_hold(g.graph, jbad, as_flux(jp.graph, *jp.rates)));
}

TEST_CASE("solve_p2 infeasibility")
{
    CHECK_FALSE(solve_p2(net("species X\n0 -> X\n").graph).has_value());
    CHECK_FALSE(solve_p2(net("species X Y\nX -> Y\n").graph).has_value());
}

TEST_CASE("extract_wr_support")
{
    FluxVector cycle{{{v({0, 0}), v({1, 0})}, 1}, {{v({1, 0}), v({0, 1})}, 1}, {{v({0, 1}), v({0, 0})}, 1}};
    auto g = extract_wr_support(2, cycle);
    CHECK(g.num_edges() == 3);
    CHECK(is_weakly_reversible(g));

    FluxVector zero{{{v({0, 0}), v({1, 0})}, 0}};
    CHECK_THROWS_AS(extract_wr_support(2, zero), InvalidGraph);

    FluxVector path{{{v({0, 0}), v({1, 0})}, 1}};
    CHECK_THROWS_AS(extract_wr_support(2, path), InvariantError);
}

TEST_CASE("disguised membership at a fixed state")
{
    struct Case
    {
        const char* file;
        const char* j_prime;
    };
    for (auto c : {Case{"thomas.crn", testkit::kThomasJPrime}, Case{"selkov.crn", testkit::kSelkovJPrime}}) {
        CAPTURE(c.file);
        auto g = testkit::fixture(c.file);
        auto jp = net(c.j_prime);
        auto k2 = disguised_membership_at(g.graph, *g.rates, jp.graph, v({1, 1}));
        REQUIRE(k2);
        CHECK(verify_equivalence(g.graph, *g.rates, jp.graph, *k2));
        CHECK(is_complex_balanced_at(jp.graph, *k2, v({1, 1})));
        CHECK(k2->values() == jp.rates->values());
    }

    auto thomas = testkit::fixture("thomas.crn");
    auto wr = net(std::string("species X Y\n") + testkit::kThomasWrGraph).graph;
    CHECK_THROWS_AS(disguised_membership_at(thomas.graph, *thomas.rates, wr, v({1, 0})), PreconditionError);

    // Off the balanced point the same rates need not be complex balanced on this graph.
    auto off = disguised_membership_at(thomas.graph, *thomas.rates, wr, v({2, 1}));
    if (off) {
        CHECK(verify_equivalence(thomas.graph, *thomas.rates, wr, *off));
        CHECK(is_complex_balanced_at(wr, *off, v({2, 1})));
    }
}

TEST_CASE("solve_p1_fixed_k")
{
    auto thomas = testkit::fixture("thomas.crn");
    auto p1 = solve_p1_fixed_k(thomas.graph, *thomas.rates);
    REQUIRE(p1);
    CHECK(is_weakly_reversible(p1->first));
    CHECK(verify_equivalence(thomas.graph, *thomas.rates, p1->first, p1->second));

    auto xy = net("species X Y\nX <-> Y : 1, 4\n");
    auto id = solve_p1_fixed_k(xy.graph, *xy.rates);
    REQUIRE(id);
    CHECK(id->second.values() == xy.rates->values());

    auto one = net("species X\n0 -> X : 1\n");
    CHECK_FALSE(solve_p1_fixed_k(one.graph, *one.rates).has_value());
}

TEST_CASE("property: flux program homogeneity, support, membership soundness")
{
    testkit::GraphGen gen(31);
    int feasible = 0;
    for (int trial = 0; trial < 120; ++trial) {
        auto g = trial % 3 == 0 ? gen.weakly_reversible(2, 5) : gen.graph(2, 5, 8);
        INFO(testkit::show(g));
        auto p2 = solve_p2(g);
        if (!p2) continue;
        ++feasible;
        CHECK(p2_constraints_hold(g, p2->j, p2->j_prime));
        CHECK(p2_constraints_hold(g, scaled(p2->j, Rational(5, 3)), scaled(p2->j_prime, Rational(5, 3))));
        if (!p2->support) continue;
        CHECK(is_weakly_reversible(*p2->support));

        auto k = rates_on(g, p2->j);
        auto ones = RatVec(2, Rational(1));
        auto k2 = disguised_membership_at(g, k, *p2->support, ones);
        REQUIRE(k2);
        CHECK(verify_equivalence(g, k, *p2->support, *k2));
        CHECK(is_complex_balanced_at(*p2->support, *k2, ones));
        auto jk = rates_on(*p2->support, p2->j_prime);
        CHECK(verify_equivalence(g, k, *p2->support, jk));
        CHECK(is_complex_balanced_at(*p2->support, jk, ones));
    }
    CHECK(feasible > 20);
}
