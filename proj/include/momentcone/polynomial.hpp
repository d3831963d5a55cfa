#pragma once

#include "momentcone/exact.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace momentcone {

/// Sum of coeff * x_var; sorted by variable, no zero coefficients.
using LinearForm = std::vector<std::pair<int, std::int64_t>>;

void add_term(LinearForm& f, int var, std::int64_t coeff);

/// Sorted variable ids with repetition, e.g. x_3^2 x_5 = {3,3,5}.
using Monomial = std::vector<int>;

class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(const Integer& c);
  static Polynomial variable(int v);
  static Polynomial from_linear(const LinearForm& f);

  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t total_degree() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  /// Evaluation modulo p; values indexed by variable id.
  std::uint64_t eval_mod(const std::vector<std::uint64_t>& values, std::uint64_t p) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::map<Monomial, Integer> terms_;
  void add(const Monomial& m, const Integer& c);
};

namespace modp {
constexpr std::uint64_t kPrime = (std::uint64_t(1) << 61) - 1;
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p = kPrime);
std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p = kPrime);
std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p = kPrime);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p = kPrime);
std::uint64_t inv(std::uint64_t a, std::uint64_t p = kPrime);
std::uint64_t from_signed(std::int64_t x, std::uint64_t p = kPrime);
/// Determinant of a square matrix over F_p; destroys its argument.
std::uint64_t det(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p = kPrime);
}  // namespace modp

}  // namespace momentcone
