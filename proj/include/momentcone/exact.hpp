#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace momentcone {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

/// Thrown by the int64 fast paths when an intermediate leaves the machine range.
struct Overflow : std::runtime_error {
  Overflow() : std::runtime_error("int64 overflow") {}
};

Integer gcd_of(const IntVec& v);
Integer gcd_of_differences(const IntVec& v);
bool is_zero(const IntVec& v);

/// Divide by the gcd of all entries. Throws on the zero vector.
IntVec primitive(IntVec v);

/// Clear denominators and divide by the gcd; direction is preserved.
IntVec canonicalize(const RatVec& v);

Integer dot(const IntVec& a, const IntVec& b);
Rational dot(const IntVec& a, const RatVec& b);

/// Exact rank over the rationals. Tries a fraction-free int64 elimination first.
std::size_t rank(const std::vector<IntVec>& rows);

/// Integer basis of {x : Ax = 0}, one basis vector per free column of the RREF.
std::vector<IntVec> nullspace(const std::vector<IntVec>& rows, std::size_t ncols);

/// "p/q" with the denominator always present.
std::string format_rational(const Rational& q);
/// Accepts "p", "p/q" and optional surrounding blanks.
Rational parse_rational(const std::string& s);

std::int64_t to_int64(const Integer& x);
IntVec to_intvec(const std::vector<long long>& v);
RatVec to_ratvec(const IntVec& v);

std::string to_string(const IntVec& v);

}  // namespace momentcone
