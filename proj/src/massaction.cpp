#include "wrnet/massaction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "wrnet/errors.hpp"

namespace wrnet {

namespace {

void require_positive(const RatVec& x, std::size_t dim)
{
    if (x.size() != dim)
        throw PreconditionError("state has " + std::to_string(x.size()) + " entries, expected " +
                                std::to_string(dim));
    for (const auto& v : x)
        if (v <= 0) throw PreconditionError("state must be strictly positive");
}

void require_positive(const std::vector<double>& x, std::size_t dim)
{
    if (x.size() != dim)
        throw PreconditionError("state has " + std::to_string(x.size()) + " entries, expected " +
                                std::to_string(dim));
    for (double v : x)
        if (!(v > 0) || !std::isfinite(v)) throw PreconditionError("state must be strictly positive");
}

// Float copy of a rated network for repeated evaluation.
struct FloatSystem
{
    std::vector<std::vector<double>> exponents;  // per edge: source coordinates
    std::vector<std::vector<double>> vectors;    // per edge: reaction vector
    std::vector<double> rates;

    FloatSystem(const EGraph& g, const RateVector& k)
    {
        for (std::size_t e = 0; e < g.num_edges(); ++e) {
            exponents.push_back(to_doubles(g.vertex(g.edge(e).source)));
            vectors.push_back(to_doubles(g.reaction_vector(e)));
            rates.push_back(k[e].get_d());
        }
    }

    double term(std::size_t e, const std::vector<double>& x) const
    {
        double m = rates[e];
        for (std::size_t i = 0; i < x.size(); ++i)
            if (exponents[e][i] != 0) m *= std::pow(x[i], exponents[e][i]);
        return m;
    }

    void eval(const std::vector<double>& x, std::vector<double>& out) const
    {
        std::fill(out.begin(), out.end(), 0.0);
        for (std::size_t e = 0; e < rates.size(); ++e) {
            double m = term(e, x);
            for (std::size_t i = 0; i < x.size(); ++i) out[i] += m * vectors[e][i];
        }
    }

    double scale(const std::vector<double>& x) const
    {
        double s = 0;
        for (std::size_t e = 0; e < rates.size(); ++e) {
            double len = 0;
            for (double v : vectors[e]) len = std::max(len, std::abs(v));
            s = std::max(s, term(e, x) * len);
        }
        return s;
    }
};

double deviation(const EGraph& g, const RateVector& k, const EGraph& g2, const RateVector& k2,
                 std::size_t samples, double lo, double hi, bool scaled)
{
    if (g.dimension() != g2.dimension()) throw PreconditionError("networks have different dimensions");
    if (!(lo > 0) || !(hi >= lo)) throw PreconditionError("sample box must satisfy 0 < lo <= hi");
    FloatSystem a(g, k), b(g2, k2);
    const auto n = g.dimension();
    std::vector<double> fa(n), fb(n);
    double worst = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        auto x = halton_point(s + 1, n, lo, hi);
        a.eval(x, fa);
        b.eval(x, fb);
        double d = 0;
        for (std::size_t i = 0; i < n; ++i) d = std::max(d, std::abs(fa[i] - fb[i]));
        if (scaled) {
            double sc = std::max(a.scale(x), b.scale(x));
            if (sc > 0) d /= sc;
        }
        worst = std::max(worst, d);
    }
    return worst;
}

}  // namespace

Rational monomial(const RatVec& x, const RatVec& y)
{
    Rational m = 1;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == 0) continue;
        if (y[i].get_den() != 1) throw PreconditionError("exact monomials need integer exponents");
        const mpz_class& e = y[i].get_num();
        if (!e.fits_slong_p()) throw PreconditionError("exponent too large");
        long p = e.get_si();
        Rational base = p < 0 ? Rational(1 / x[i]) : x[i];
        mpz_class num, den;
        unsigned long up = static_cast<unsigned long>(p < 0 ? -p : p);
        mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), up);
        mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), up);
        Rational f(num, den);
        f.canonicalize();
        m *= f;
    }
    return m;
}

double monomial(const std::vector<double>& x, const RatVec& y)
{
    double m = 1;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i] != 0) m *= std::pow(x[i], y[i].get_d());
    return m;
}

RatVec rhs(const EGraph& g, const RateVector& k, const RatVec& x)
{
    require_positive(x, g.dimension());
    RatVec f = zeros(g.dimension());
    for (std::size_t e = 0; e < g.num_edges(); ++e)
        axpy(f, k[e] * monomial(x, g.vertex(g.edge(e).source)), g.reaction_vector(e));
    return f;
}

std::vector<double> rhs(const EGraph& g, const RateVector& k, const std::vector<double>& x)
{
    require_positive(x, g.dimension());
    std::vector<double> f(g.dimension());
    FloatSystem(g, k).eval(x, f);
    return f;
}

bool is_complex_balanced_at(const EGraph& g, const RateVector& k, const RatVec& x)
{
    require_positive(x, g.dimension());
    std::vector<Rational> balance(g.num_vertices(), Rational(0));
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        Rational flux = k[e] * monomial(x, g.vertex(ed.source));
        balance[ed.source] -= flux;
        balance[ed.target] += flux;
    }
    for (const auto& b : balance)
        if (b != 0) return false;
    return true;
}

Trajectory simulate(const EGraph& g, const RateVector& k, const std::vector<double>& x0, double t_end,
                    const SimulateOptions& opts)
{
    require_positive(x0, g.dimension());
    if (!(t_end > 0) || !std::isfinite(t_end)) throw PreconditionError("t_end must be positive");
    if (!(opts.rel_tol > 0)) throw PreconditionError("tolerance must be positive");

    const FloatSystem sys(g, k);
    const auto n = x0.size();
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);

    auto rk4 = [&](const std::vector<double>& y, double h, std::vector<double>& out) {
        sys.eval(y, k1);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
        sys.eval(tmp, k2);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
        sys.eval(tmp, k3);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
        sys.eval(tmp, k4);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = y[i] + h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    };

    Trajectory tr;
    std::vector<double> x = x0, full(n), half(n), twice(n);
    double t = 0;
    double h = std::min(t_end, 1e-3);
    tr.times.push_back(t);
    tr.states.push_back(x);

    for (std::size_t step = 0; t < t_end && step < opts.max_steps; ++step) {
        h = std::min(h, t_end - t);
        rk4(x, h, full);
        rk4(x, 0.5 * h, half);
        rk4(half, 0.5 * h, twice);

        double err = 0;
        bool finite = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (!std::isfinite(twice[i])) finite = false;
            double sc = opts.abs_tol + opts.rel_tol * std::max(std::abs(x[i]), std::abs(twice[i]));
            err = std::max(err, std::abs(twice[i] - full[i]) / (15.0 * sc));
        }
        if (!finite) {
            h *= 0.1;
            if (h < 1e-300) throw InvariantError("integration step underflow");
            continue;
        }
        if (err <= 1.0) {
            for (std::size_t i = 0; i < n; ++i) x[i] = twice[i] + (twice[i] - full[i]) / 15.0;
            t = (t_end - t <= h) ? t_end : t + h;
            tr.times.push_back(t);
            tr.states.push_back(x);
            bool below = false;
            for (double v : x)
                if (v < opts.positivity_floor) below = true;
            if (below) {
                tr.halted = true;
                break;
            }
        }
        double factor = err == 0 ? 5.0 : 0.9 * std::pow(err, -0.2);
        h *= std::clamp(factor, 0.1, 5.0);
    }
    return tr;
}

void write_csv(std::ostream& out, const Trajectory& traj, const std::vector<std::string>& species)
{
    out << "t";
    for (const auto& s : species) out << ',' << s;
    out << '\n';
    char buf[64];
    for (std::size_t r = 0; r < traj.times.size(); ++r) {
        std::snprintf(buf, sizeof buf, "%.17g", traj.times[r]);
        out << buf;
        for (double v : traj.states[r]) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << ',' << buf;
        }
        out << '\n';
    }
}

double numeric_equivalence_deviation(const EGraph& g, const RateVector& k, const EGraph& g2,
                                     const RateVector& k2, std::size_t samples, double lo, double hi)
{
    return deviation(g, k, g2, k2, samples, lo, hi, false);
}

double scaled_equivalence_deviation(const EGraph& g, const RateVector& k, const EGraph& g2,
                                    const RateVector& k2, std::size_t samples, double lo, double hi)
{
    return deviation(g, k, g2, k2, samples, lo, hi, true);
}

std::vector<double> halton_point(std::size_t i, std::size_t dim, double lo, double hi)
{
    static const unsigned primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
    std::vector<double> p(dim);
    for (std::size_t d = 0; d < dim; ++d) {
        unsigned base = primes[d % 16];
        double f = 1, r = 0;
        for (std::size_t n = i; n > 0; n /= base) {
            f /= base;
            r += f * static_cast<double>(n % base);
        }
        p[d] = lo + (hi - lo) * r;
    }
    return p;
}

}  // namespace wrnet
