#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace wrnet {

/// Exact rational number. GMP keeps it in lowest terms as long as every value
/// entering the library goes through parse_rational or integer construction.
using Rational = mpq_class;

/// Dense exact vector (vertex coordinates, reaction vectors, directions).
using RatVec = std::vector<Rational>;

/// Parses "7", "-3/4", "0.125" or "1e-3" exactly. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const RatVec& v);

inline int sign(const Rational& q) { return sgn(q); }

RatVec zeros(std::size_t n);
bool is_zero(const RatVec& v);

Rational dot(const RatVec& a, const RatVec& b);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rational& s, const RatVec& v);
RatVec& operator+=(RatVec& a, const RatVec& b);

/// a += s * b
void axpy(RatVec& a, const Rational& s, const RatVec& b);

/// True iff a = c * b for some c > 0. Both must be nonzero.
bool same_ray(const RatVec& a, const RatVec& b);

/// Scales v so its first nonzero entry is +1; used to identify parallel normals.
RatVec normalize_direction(const RatVec& v);

std::vector<double> to_doubles(const RatVec& v);

/// Exact value of a finite double.
Rational from_double(double x);

}  // namespace wrnet
