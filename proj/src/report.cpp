#include "wrnet/report.hpp"

#include "wrnet/geometry.hpp"
#include "wrnet/massaction.hpp"
#include "wrnet/toric.hpp"

namespace wrnet::report {

json vec(const RatVec& v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

namespace {

json vertex_list(const Network& net, const EGraph& g, const std::vector<VertexId>& ids)
{
    json a = json::array();
    for (auto v : ids) a.push_back(format_complex(g.vertex(v), net.species));
    return a;
}

json endotactic_json(const Network& net, const EndotacticResult& r)
{
    json j{{"holds", r.holds}, {"witness", nullptr}};
    if (r.witness) {
        const auto& e = r.witness->violating_edge;
        j["witness"] = {{"direction", vec(r.witness->v)},
                        {"edge",
                         {{"source", format_complex(net.graph.vertex(e.source), net.species)},
                          {"target", format_complex(net.graph.vertex(e.target), net.species)}}}};
    }
    return j;
}

json edges_json(const std::vector<std::string>& species, const EGraph& g, const std::optional<RateVector>& k)
{
    json a = json::array();
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        json item{{"source", format_complex(g.vertex(g.edge(e).source), species)},
                  {"target", format_complex(g.vertex(g.edge(e).target), species)}};
        if (k) item["rate"] = (*k)[e].get_str();
        a.push_back(std::move(item));
    }
    return a;
}

json flux_json(const std::vector<std::string>& species, const FluxVector& f, bool positive_only)
{
    json a = json::array();
    for (const auto& [edge, value] : f) {
        if (positive_only && value == 0) continue;
        a.push_back({{"source", format_complex(edge.first, species)},
                     {"target", format_complex(edge.second, species)},
                     {"flux", value.get_str()}});
    }
    return a;
}

const RateVector& require_rates(const Network& net, const char* what)
{
    if (!net.rates) throw PreconditionError(std::string(what) + " needs rate constants on every reaction");
    return *net.rates;
}

}  // namespace

json check(const Network& net, const EndotacticOptions& opts)
{
    const auto& g = net.graph;
    json r;
    r["command"] = "check";
    r["species"] = net.species;
    r["num_vertices"] = g.num_vertices();
    r["num_edges"] = g.num_edges();
    r["weakly_reversible"] = is_weakly_reversible(g);
    r["endotactic"] = endotactic_json(net, is_endotactic(g, opts));
    r["strongly_endotactic"] = endotactic_json(net, is_strongly_endotactic(g, opts));

    json classes = json::array();
    for (const auto& c : linkage_classes(g)) classes.push_back(vertex_list(net, g, c));
    r["linkage_classes"] = classes;

    json comps = json::array();
    for (const auto& c : strong_components(g))
        comps.push_back({{"vertices", vertex_list(net, g, c.vertices)}, {"terminal", c.terminal}});
    r["strong_components"] = comps;

    auto dim = stoichiometric_dimension(g);
    r["stoichiometric_dimension"] = dim;

    r["hull"] = nullptr;
    if (dim == 2) {
        try {
            auto h = classify_hull_2d(g);
            r["hull"] = {{"boundary_cycle", vertex_list(net, g, h.boundary_cycle)},
                         {"corners", vertex_list(net, g, h.corners)},
                         {"sides", vertex_list(net, g, h.sides)},
                         {"interior", vertex_list(net, g, h.interior)}};
        } catch (const PreconditionError& e) {
            r["hull"] = {{"error", e.what()}};
        }
    }

    r["terminal_interior"] = nullptr;
    if (net.rates) {
        auto ti = check_terminal_interior(g, *net.rates);
        json cs = json::array();
        for (const auto& c : ti.components) {
            json item{{"vertices", vertex_list(net, g, c.vertices)}, {"passed", c.passed}, {"interior_vertex", nullptr}};
            if (c.interior_vertex) item["interior_vertex"] = format_complex(g.vertex(*c.interior_vertex), net.species);
            cs.push_back(std::move(item));
        }
        r["terminal_interior"] = {{"holds", ti.holds}, {"components", cs}};
    }
    r["warnings"] = g.warnings();
    return r;
}

RealizeMode parse_mode(const std::string& s)
{
    if (s == "2d") return RealizeMode::TwoD;
    if (s == "highdim") return RealizeMode::HighDim;
    if (s == "auto") return RealizeMode::Auto;
    throw PreconditionError("unknown mode '" + s + "' (expected 2d, highdim or auto)");
}

RealizeOutcome realize(const Network& net, RealizeMode mode, const EndotacticOptions& opts)
{
    const auto& k = require_rates(net, "realize");
    RealizeOutcome out;
    auto& r = out.report;
    r["command"] = "realize";
    r["mode"] = mode == RealizeMode::TwoD ? "2d" : mode == RealizeMode::HighDim ? "highdim" : "auto";
    try {
        auto res = wrnet::realize(net.graph, k, mode, opts);
        r["success"] = true;
        r["method"] = res.method;
        r["target"] = {{"edges", edges_json(net.species, res.target, res.rates)},
                       {"network", print_network(net.species, res.target, res.rates)}};
        r["weakly_reversible"] = is_weakly_reversible(res.target);
        r["linkage_classes"] = linkage_classes(res.target).size();
        json cert = json::array();
        bool exact = true;
        for (const auto& c : res.certificate) {
            cert.push_back({{"vertex", format_complex(c.vertex, net.species)},
                            {"original", vec(c.original)},
                            {"realized", vec(c.realized)}});
            exact = exact && c.original == c.realized;
        }
        r["certificate"] = {{"exact", exact}, {"entries", cert}};
        out.result = std::move(res);
    } catch (const RealizationError& e) {
        r["success"] = false;
        r["failure"] = to_string(e.kind());
        r["reason"] = e.what();
    }
    return out;
}

json disguised(const Network& net, const std::optional<RatVec>& at)
{
    const auto& g = net.graph;
    json r;
    r["command"] = "disguised";
    auto p2 = solve_p2(g);
    json prog;
    prog["feasible"] = p2.has_value();
    if (p2) {
        prog["j"] = flux_json(net.species, p2->j, false);
        prog["j_prime"] = flux_json(net.species, p2->j_prime, true);
        if (p2->support) {
            prog["support"] = edges_json(net.species, *p2->support, std::nullopt);
            prog["support_weakly_reversible"] = is_weakly_reversible(*p2->support);
        } else {
            prog["support"] = nullptr;
            prog["support_weakly_reversible"] = false;
        }
        prog["statement"] = "balanced fluxes exist; the disguised toric locus is nonempty";
    } else {
        prog["statement"] = "the flux linear program is infeasible; the disguised toric locus is empty";
    }
    r["flux_program"] = prog;
    bool feasible = p2.has_value() && p2->support.has_value();

    r["membership"] = nullptr;
    if (at) {
        const auto& k = require_rates(net, "membership at a point");
        json m{{"x", vec(*at)}, {"member", false}, {"rates", nullptr}};
        if (feasible) {
            auto k2 = disguised_membership_at(g, k, *p2->support, *at);
            if (k2) {
                m["member"] = true;
                m["rates"] = edges_json(net.species, *p2->support, *k2);
            }
        }
        feasible = m["member"].get<bool>();
        r["membership"] = m;
    }
    r["feasible"] = feasible;
    return r;
}

json equiv(const Network& a, const Network& b, std::size_t samples, double lo, double hi)
{
    if (a.species != b.species) throw PreconditionError("networks declare different species lists");
    const auto& ka = require_rates(a, "equiv");
    const auto& kb = require_rates(b, "equiv");
    json r;
    r["command"] = "equiv";
    json mismatches = json::array();
    for (const auto& c : equivalence_certificate(a.graph, ka, b.graph, kb))
        if (c.original != c.realized)
            mismatches.push_back({{"vertex", format_complex(c.vertex, a.species)},
                                  {"first", vec(c.original)},
                                  {"second", vec(c.realized)}});
    r["exact"] = mismatches.empty();
    r["mismatches"] = mismatches;
    r["samples"] = samples;
    r["box"] = {lo, hi};
    r["max_deviation"] = numeric_equivalence_deviation(a.graph, ka, b.graph, kb, samples, lo, hi);
    r["scaled_deviation"] = scaled_equivalence_deviation(a.graph, ka, b.graph, kb, samples, lo, hi);
    return r;
}

}  // namespace wrnet::report
