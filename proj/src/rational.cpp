#include "wrnet/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace wrnet {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class pow10(long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("empty number");

    Rational q;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
        mpz_class d(std::string(den), 10);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        q = Rational(mpz_class(std::string(num), 10), d);
    } else {
        std::string_view mantissa = s;
        long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            mantissa = s.substr(0, e);
            auto exp_text = std::string(s.substr(e + 1));
            std::size_t used = 0;
            try {
                exponent = std::stol(exp_text, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != exp_text.size() || exp_text.empty())
                throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
        }
        std::string digits;
        long frac_digits = 0;
        if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
            auto ip = mantissa.substr(0, dot);
            auto fp = mantissa.substr(dot + 1);
            if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
                (ip.empty() && fp.empty()))
                throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
            digits = std::string(ip) + std::string(fp);
            frac_digits = static_cast<long>(fp.size());
        } else {
            if (!all_digits(mantissa))
                throw std::invalid_argument("malformed number '" + std::string(text) + "'");
            digits = std::string(mantissa);
        }
        long shift = exponent - frac_digits;
        mpz_class n(digits, 10);
        if (shift >= 0)
            q = Rational(n * pow10(shift));
        else
            q = Rational(n, pow10(-shift));
    }
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const RatVec& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].get_str();
    }
    return out + ")";
}

RatVec zeros(std::size_t n) { return RatVec(n, Rational(0)); }

bool is_zero(const RatVec& v)
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Rational dot(const RatVec& a, const RatVec& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec operator+(const RatVec& a, const RatVec& b)
{
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec operator-(const RatVec& a, const RatVec& b)
{
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec operator*(const Rational& s, const RatVec& v)
{
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

RatVec& operator+=(RatVec& a, const RatVec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

void axpy(RatVec& a, const Rational& s, const RatVec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
}

bool same_ray(const RatVec& a, const RatVec& b)
{
    // a = c b with c > 0  <=>  all 2x2 minors vanish and a.b > 0
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return dot(a, b) > 0;
}

RatVec normalize_direction(const RatVec& v)
{
    for (const auto& x : v)
        if (x != 0) {
            Rational inv = 1 / x;
            return inv * v;
        }
    return v;
}

std::vector<double> to_doubles(const RatVec& v)
{
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.get_d());
    return out;
}

Rational from_double(double x)
{
    Rational q(x);
    q.canonicalize();
    return q;
}

}  // namespace wrnet
