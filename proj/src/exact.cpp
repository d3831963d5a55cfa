#include "momentcone/exact.hpp"

#include <algorithm>
#include <cctype>

namespace momentcone {

Integer gcd_of(const IntVec& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

Integer gcd_of_differences(const IntVec& v) {
  Integer g = 0;
  for (std::size_t i = 1; i < v.size(); ++i) g = gcd(g, Integer(v[i] - v[0]));
  return g;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntVec primitive(IntVec v) {
  Integer g = gcd_of(v);
  if (g == 0) throw std::invalid_argument("cannot normalize the zero vector");
  if (g != 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

IntVec canonicalize(const RatVec& v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, Integer(q.get_den()));
  IntVec out;
  out.reserve(v.size());
  for (const auto& q : v) out.emplace_back(q.get_num() * (l / q.get_den()));
  return primitive(std::move(out));
}

Integer dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

std::size_t rank_int64(std::vector<std::vector<std::int64_t>> m, std::size_t ncols) {
  std::size_t r = 0;
  std::int64_t prev = 1;
  const std::size_t nrows = m.size();
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && m[p][c] == 0) ++p;
    if (p == nrows) continue;
    std::swap(m[p], m[r]);
    const std::int64_t piv = m[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const std::int64_t f = m[i][c];
      for (std::size_t j = c + 1; j < ncols; ++j) {
        __int128 t = static_cast<__int128>(piv) * m[i][j] - static_cast<__int128>(f) * m[r][j];
        t /= prev;
        if (t > INT64_MAX || t < INT64_MIN) throw Overflow();
        m[i][j] = static_cast<std::int64_t>(t);
      }
      m[i][c] = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

std::size_t rank_mpz(std::vector<IntVec> m, std::size_t ncols) {
  std::size_t r = 0;
  Integer prev = 1;
  const std::size_t nrows = m.size();
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && m[p][c] == 0) ++p;
    if (p == nrows) continue;
    std::swap(m[p], m[r]);
    const Integer piv = m[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const Integer f = m[i][c];
      for (std::size_t j = c + 1; j < ncols; ++j) {
        m[i][j] = piv * m[i][j] - f * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const std::vector<IntVec>& rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  bool fits = true;
  std::vector<std::vector<std::int64_t>> small(rows.size(), std::vector<std::int64_t>(ncols));
  for (std::size_t i = 0; i < rows.size() && fits; ++i)
    for (std::size_t j = 0; j < ncols; ++j) {
      if (!rows[i][j].fits_slong_p()) {
        fits = false;
        break;
      }
      small[i][j] = rows[i][j].get_si();
    }
  if (fits) {
    try {
      return rank_int64(std::move(small), ncols);
    } catch (const Overflow&) {
    }
  }
  return rank_mpz(rows, ncols);
}

std::vector<IntVec> nullspace(const std::vector<IntVec>& rows, std::size_t ncols) {
  std::vector<RatVec> m;
  for (const auto& r : rows) m.push_back(to_ratvec(r));
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < ncols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<IntVec> basis;
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(ncols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    basis.push_back(canonicalize(v));
  }
  return basis;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw std::invalid_argument("malformed rational: " + raw);
    return Rational(Integer(strip_plus(s)));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational: " + raw);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + raw);
  Rational q(Integer(strip_plus(num)), d);
  q.canonicalize();
  return q;
}

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) throw Overflow();
  return x.get_si();
}

IntVec to_intvec(const std::vector<long long>& v) {
  IntVec out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

RatVec to_ratvec(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace momentcone
