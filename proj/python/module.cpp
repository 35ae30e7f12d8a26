#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wrnet/errors.hpp"
#include "wrnet/massaction.hpp"
#include "wrnet/network_io.hpp"
#include "wrnet/report.hpp"

namespace py = pybind11;

namespace {

wrnet::RatVec parse_point(const std::vector<std::string>& parts)
{
    wrnet::RatVec x;
    for (const auto& p : parts) x.push_back(wrnet::parse_rational(p));
    return x;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Reaction network analysis (native part)";

    py::register_exception<wrnet::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<wrnet::InvariantError>(m, "InvariantError", PyExc_RuntimeError);

    m.def("normalize", [](const std::string& text) { return wrnet::print_network(wrnet::parse_network(text)); },
          "Parse a network file and print it back in canonical form.");

    m.def(
        "check",
        [](const std::string& text, std::size_t max_hyperplanes) {
            wrnet::EndotacticOptions opts;
            opts.max_hyperplanes = max_hyperplanes;
            return wrnet::report::check(wrnet::parse_network(text), opts).dump();
        },
        py::arg("text"), py::arg("max_hyperplanes") = 20);

    m.def(
        "realize",
        [](const std::string& text, const std::string& mode) {
            auto net = wrnet::parse_network(text);
            return wrnet::report::realize(net, wrnet::report::parse_mode(mode)).report.dump();
        },
        py::arg("text"), py::arg("mode") = "auto");

    m.def(
        "disguised",
        [](const std::string& text, std::optional<std::vector<std::string>> at) {
            std::optional<wrnet::RatVec> point;
            if (at) point = parse_point(*at);
            return wrnet::report::disguised(wrnet::parse_network(text), point).dump();
        },
        py::arg("text"), py::arg("at") = py::none());

    m.def(
        "equiv",
        [](const std::string& a, const std::string& b, std::size_t samples, double lo, double hi) {
            return wrnet::report::equiv(wrnet::parse_network(a), wrnet::parse_network(b), samples, lo, hi).dump();
        },
        py::arg("a"), py::arg("b"), py::arg("samples") = 200, py::arg("lo") = 0.1, py::arg("hi") = 10.0);

    m.def(
        "simulate",
        [](const std::string& text, const std::vector<double>& x0, double t_end, double tol) {
            auto net = wrnet::parse_network(text);
            if (!net.rates) throw wrnet::PreconditionError("simulate needs rate constants on every reaction");
            wrnet::SimulateOptions so;
            so.rel_tol = tol;
            auto tr = wrnet::simulate(net.graph, *net.rates, x0, t_end, so);
            return py::make_tuple(tr.times, tr.states, tr.halted);
        },
        py::arg("text"), py::arg("x0"), py::arg("t_end"), py::arg("tol") = 1e-8);
}
