// wrnet command-line tool: check, realize, disguised, equiv, simulate.
//
// Exit codes: 0 success / property holds, 1 property false or infeasible,
// 2 usage or input error, 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wrnet/errors.hpp"
#include "wrnet/massaction.hpp"
#include "wrnet/network_io.hpp"
#include "wrnet/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        parts.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
    }
    return parts;
}

wrnet::RatVec parse_point(const std::string& s, std::size_t dim)
{
    wrnet::RatVec x;
    for (const auto& p : split_commas(s)) x.push_back(wrnet::parse_rational(p));
    if (x.size() != dim)
        throw wrnet::PreconditionError("point has " + std::to_string(x.size()) + " entries, expected " +
                                       std::to_string(dim));
    return x;
}

std::vector<double> parse_doubles(const std::string& s, std::size_t dim)
{
    std::vector<double> x;
    for (const auto& p : split_commas(s)) {
        std::size_t used = 0;
        double v = std::stod(p, &used);
        if (used != p.size()) throw wrnet::PreconditionError("malformed number '" + p + "'");
        x.push_back(v);
    }
    if (x.size() != dim)
        throw wrnet::PreconditionError("point has " + std::to_string(x.size()) + " entries, expected " +
                                       std::to_string(dim));
    return x;
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Structural analysis and weakly reversible realizations of reaction networks"};
    app.require_subcommand(1);

    std::size_t max_hyperplanes = 20;
    app.add_option("--max-hyperplanes", max_hyperplanes,
                   "Largest direction arrangement examined by the endotactic checks")
        ->capture_default_str();

    std::string file, file2, mode = "auto", out_path, at, x0_text;
    double t_end = 0, tol = 1e-8;
    std::size_t samples = 200;
    double lo = 0.1, hi = 10.0;

    auto* check = app.add_subcommand("check", "Report structural properties as JSON");
    check->add_option("FILE", file, "Network file")->required();

    auto* realize = app.add_subcommand("realize", "Build a weakly reversible equivalent system");
    realize->add_option("FILE", file, "Network file with rates")->required();
    realize->add_option("--mode", mode, "2d, highdim or auto")
        ->check(CLI::IsMember({"2d", "highdim", "auto"}))
        ->capture_default_str();
    realize->add_option("--out", out_path, "Write the realized network here");

    auto* disguised = app.add_subcommand("disguised", "Solve the balanced-flux linear program");
    disguised->add_option("FILE", file, "Network file")->required();
    disguised->add_option("--at", at, "Fixed state x1,x2,... for membership (needs rates)");

    auto* equiv = app.add_subcommand("equiv", "Compare two rated networks");
    equiv->add_option("FILE1", file, "First network")->required();
    equiv->add_option("FILE2", file2, "Second network")->required();
    equiv->add_option("--samples", samples, "Number of sample points")->capture_default_str();
    equiv->add_option("--lo", lo, "Lower corner of the sample box")->capture_default_str();
    equiv->add_option("--hi", hi, "Upper corner of the sample box")->capture_default_str();

    auto* simulate = app.add_subcommand("simulate", "Integrate the mass-action system, CSV output");
    simulate->add_option("FILE", file, "Network file with rates")->required();
    simulate->add_option("--x0", x0_text, "Initial state x1,x2,...")->required();
    simulate->add_option("--t-end", t_end, "Final time")->required();
    simulate->add_option("--tol", tol, "Relative tolerance")->capture_default_str();
    simulate->add_option("--out", out_path, "Write CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    wrnet::EndotacticOptions opts;
    opts.max_hyperplanes = max_hyperplanes;

    try {
        if (*check) {
            auto net = wrnet::read_network_file(file);
            std::cout << wrnet::report::check(net, opts).dump(2) << '\n';
            return kOk;
        }
        if (*realize) {
            auto net = wrnet::read_network_file(file);
            auto outcome = wrnet::report::realize(net, wrnet::report::parse_mode(mode), opts);
            std::cout << outcome.report.dump(2) << '\n';
            if (!outcome.result) return kFalse;
            if (!out_path.empty())
                write_file(out_path, wrnet::print_network(net.species, outcome.result->target, outcome.result->rates));
            return kOk;
        }
        if (*disguised) {
            auto net = wrnet::read_network_file(file);
            std::optional<wrnet::RatVec> point;
            if (!at.empty()) point = parse_point(at, net.species.size());
            auto r = wrnet::report::disguised(net, point);
            std::cout << r.dump(2) << '\n';
            return r["feasible"].get<bool>() ? kOk : kFalse;
        }
        if (*equiv) {
            auto a = wrnet::read_network_file(file);
            auto b = wrnet::read_network_file(file2);
            auto r = wrnet::report::equiv(a, b, samples, lo, hi);
            std::cout << r.dump(2) << '\n';
            return r["exact"].get<bool>() ? kOk : kFalse;
        }
        if (*simulate) {
            auto net = wrnet::read_network_file(file);
            if (!net.rates) throw wrnet::PreconditionError("simulate needs rate constants on every reaction");
            wrnet::SimulateOptions so;
            so.rel_tol = tol;
            auto traj = wrnet::simulate(net.graph, *net.rates, parse_doubles(x0_text, net.species.size()), t_end, so);
            if (out_path.empty()) {
                wrnet::write_csv(std::cout, traj, net.species);
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
                wrnet::write_csv(out, traj, net.species);
            }
            if (traj.halted) std::cerr << "warning: a concentration fell below the positivity floor; stopped early\n";
            return kOk;
        }
    } catch (const wrnet::ParseError& e) {
        std::cerr << file << ": " << e.what() << '\n';
        return kUsage;
    } catch (const wrnet::InvariantError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}
