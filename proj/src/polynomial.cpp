#include "momentcone/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace momentcone {

void add_term(LinearForm& f, int var, std::int64_t coeff) {
  auto it = std::lower_bound(f.begin(), f.end(), var, [](const auto& t, int v) { return t.first < v; });
  if (it != f.end() && it->first == var) {
    it->second += coeff;
    if (it->second == 0) f.erase(it);
  } else if (coeff != 0) {
    f.insert(it, {var, coeff});
  }
}

Polynomial Polynomial::constant(const Integer& c) {
  Polynomial p;
  if (c != 0) p.terms_[{}] = c;
  return p;
}

Polynomial Polynomial::variable(int v) {
  Polynomial p;
  p.terms_[{v}] = 1;
  return p;
}

Polynomial Polynomial::from_linear(const LinearForm& f) {
  Polynomial p;
  for (const auto& [v, c] : f) p.add({v}, Integer(static_cast<long>(c)));
  return p;
}

void Polynomial::add(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::size_t Polynomial::total_degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.size());
  return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m;
      m.reserve(m1.size() + m2.size());
      std::merge(m1.begin(), m1.end(), m2.begin(), m2.end(), std::back_inserter(m));
      out.add(m, c1 * c2);
    }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::uint64_t Polynomial::eval_mod(const std::vector<std::uint64_t>& values, std::uint64_t p) const {
  std::uint64_t acc = 0;
  for (const auto& [m, c] : terms_) {
    Integer cr = c % Integer(static_cast<unsigned long>(p));
    if (cr < 0) cr += static_cast<unsigned long>(p);
    std::uint64_t t = cr.get_ui();
    for (int v : m) t = modp::mul(t, values.at(static_cast<std::size_t>(v)), p);
    acc = modp::add(acc, t, p);
  }
  return acc;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    std::string coeff = c.get_str();
    if (!s.empty()) s += (c < 0) ? " - " : " + ";
    else if (c < 0) s += "-";
    if (c < 0) coeff = coeff.substr(1);
    std::string mono;
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      if (!mono.empty()) mono += "*";
      const auto v = static_cast<std::size_t>(m[i]);
      mono += v < names.size() ? names[v] : "x" + std::to_string(m[i]);
      if (j - i > 1) mono += "^" + std::to_string(j - i);
      i = j;
    }
    if (mono.empty()) s += coeff;
    else if (coeff == "1") s += mono;
    else s += coeff + "*" + mono;
  }
  return s;
}

namespace modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}
std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero");
  return pow(a, p - 2, p);
}
std::uint64_t from_signed(std::int64_t x, std::uint64_t p) {
  std::int64_t r = x % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

std::uint64_t det(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  const std::size_t n = m.size();
  std::uint64_t d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = sub(0, d, p);
    }
    d = mul(d, m[c][c], p);
    const std::uint64_t iv = inv(m[c][c], p);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const std::uint64_t f = mul(m[r][c], iv, p);
      for (std::size_t j = c; j < n; ++j) m[r][j] = sub(m[r][j], mul(f, m[c][j], p), p);
    }
  }
  return d;
}

}  // namespace modp

}  // namespace momentcone
