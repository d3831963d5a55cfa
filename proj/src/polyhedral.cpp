#include "momentcone/polyhedral.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace momentcone {

namespace {

using Bits = std::vector<std::uint64_t>;

struct I64Arith {
  using T = std::int64_t;
  using Vec = std::vector<T>;

  static T from(const Integer& x) {
    if (!x.fits_slong_p()) throw Overflow();
    return x.get_si();
  }
  static Integer to(T x) { return Integer(static_cast<long>(x)); }
  static int sign(T x) { return (x > 0) - (x < 0); }
  static T neg(T x) {
    if (x == std::numeric_limits<T>::min()) throw Overflow();
    return -x;
  }

  static T dot(const Vec& a, const Vec& b, std::size_t n) {
    __int128 s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      __int128 p = static_cast<__int128>(a[i]) * b[i];
      if (__builtin_add_overflow(s, p, &s)) throw Overflow();
    }
    if (s > std::numeric_limits<T>::max() || s < std::numeric_limits<T>::min()) throw Overflow();
    return static_cast<T>(s);
  }

  static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
      auto t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  /// ca*x - cb*y, divided by the gcd of its first n entries.
  static Vec combine(T ca, const Vec& x, T cb, const Vec& y, std::size_t n) {
    std::vector<__int128> w(x.size());
    unsigned __int128 g = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      __int128 p = static_cast<__int128>(ca) * x[i];
      __int128 q = static_cast<__int128>(cb) * y[i];
      if (__builtin_sub_overflow(p, q, &w[i])) throw Overflow();
      if (i < n && w[i] != 0) g = gcd128(g, static_cast<unsigned __int128>(w[i] < 0 ? -w[i] : w[i]));
    }
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      __int128 v = g > 1 ? w[i] / static_cast<__int128>(g) : w[i];
      if (v > std::numeric_limits<T>::max() || v < std::numeric_limits<T>::min()) throw Overflow();
      out[i] = static_cast<T>(v);
    }
    return out;
  }
};

struct MpzArith {
  using T = Integer;
  using Vec = std::vector<T>;

  static T from(const Integer& x) { return x; }
  static Integer to(const T& x) { return x; }
  static int sign(const T& x) { return sgn(x); }
  static T neg(const T& x) { return -x; }

  static T dot(const Vec& a, const Vec& b, std::size_t n) {
    T s = 0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
  }

  static Vec combine(const T& ca, const Vec& x, const T& cb, const Vec& y, std::size_t n) {
    Vec out(x.size());
    Integer g = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      out[i] = ca * x[i] - cb * y[i];
      if (i < n) g = gcd(g, out[i]);
    }
    if (g > 1)
      for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return out;
  }
};

/// Incremental double description on {y in Z^D : A y >= 0}.
/// Every generator carries its slack vector A y appended after the D coordinates.
template <class N>
class DoubleDescription {
 public:
  using T = typename N::T;
  using Vec = typename N::Vec;

  DoubleDescription(const std::vector<IntVec>& a, std::size_t d) : D_(d), m_(a.size()), words_((a.size() + 63) / 64) {
    for (const auto& row : a) {
      Vec r;
      for (const auto& x : row) r.push_back(N::from(x));
      A_.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < D_; ++i) {
      Vec e(D_, T(0));
      e[i] = T(1);
      lin_.push_back(extend(e));
    }
    done_.assign(m_, false);
    processed_.assign(words_, 0);
  }

  void run() {
    lineality_phase();
    counting_phase();
  }

  std::vector<IntVec> rays() const { return export_vectors(rays_); }
  std::vector<IntVec> lineality() const { return export_vectors(lin_); }

 private:
  std::size_t D_, m_, words_;
  std::vector<Vec> A_;
  std::vector<Vec> rays_;
  std::vector<Bits> zeros_;
  std::vector<Vec> lin_;
  std::vector<bool> done_;
  Bits processed_;

  Vec extend(const Vec& y) const {
    Vec out = y;
    out.reserve(D_ + m_);
    for (const auto& row : A_) out.push_back(N::dot(row, y, D_));
    return out;
  }

  const T& slack(const Vec& v, std::size_t k) const { return v[D_ + k]; }

  std::vector<IntVec> export_vectors(const std::vector<Vec>& vs) const {
    std::vector<IntVec> out;
    for (const auto& v : vs) {
      IntVec x;
      for (std::size_t i = 0; i < D_; ++i) x.push_back(N::to(v[i]));
      out.push_back(std::move(x));
    }
    return out;
  }

  static void set_bit(Bits& b, std::size_t k) { b[k >> 6] |= std::uint64_t(1) << (k & 63); }

  void lineality_phase() {
    for (std::size_t k = 0; k < m_ && !lin_.empty(); ++k) {
      std::size_t l = lin_.size();
      for (std::size_t j = 0; j < lin_.size(); ++j)
        if (N::sign(slack(lin_[j], k)) != 0) {
          l = j;
          break;
        }
      if (l == lin_.size()) continue;
      Vec piv = lin_[l];
      if (N::sign(slack(piv, k)) < 0)
        for (auto& x : piv) x = N::neg(x);
      const T s = slack(piv, k);
      for (auto& r : rays_) r = N::combine(s, r, slack(r, k), piv, D_);
      std::vector<Vec> rest;
      for (std::size_t j = 0; j < lin_.size(); ++j)
        if (j != l) rest.push_back(N::combine(s, lin_[j], slack(lin_[j], k), piv, D_));
      lin_ = std::move(rest);
      for (auto& z : zeros_) set_bit(z, k);
      rays_.push_back(piv);
      zeros_.push_back(processed_);
      set_bit(processed_, k);
      done_[k] = true;
    }
  }

  void counting_phase() {
    std::vector<std::int64_t> count(m_, 0);
    for (std::size_t k = 0; k < m_; ++k) {
      if (done_[k]) continue;
      for (const auto& r : rays_)
        if (N::sign(slack(r, k)) < 0) ++count[k];
    }
    const std::size_t threshold = D_ >= 2 + lin_.size() ? D_ - 2 - lin_.size() : 0;
    while (true) {
      std::size_t best = m_;
      for (std::size_t k = 0; k < m_; ++k) {
        if (done_[k]) continue;
        if (count[k] == 0) {
          done_[k] = true;
          continue;
        }
        if (best == m_ || count[k] > count[best]) best = k;
      }
      if (best == m_) break;
      step(best, threshold, count);
    }
  }

  void step(std::size_t k, std::size_t threshold, std::vector<std::int64_t>& count) {
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      const int sg = N::sign(slack(rays_[i], k));
      if (sg > 0) pos.push_back(i);
      else if (sg < 0) neg.push_back(i);
    }
    std::vector<Vec> fresh;
    std::vector<Bits> fresh_zeros;
    Bits z(words_);
    for (std::size_t p : pos)
      for (std::size_t n : neg) {
        std::size_t pc = 0;
        for (std::size_t w = 0; w < words_; ++w) {
          z[w] = zeros_[p][w] & zeros_[n][w];
          pc += static_cast<std::size_t>(std::popcount(z[w]));
        }
        if (pc < threshold) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays_.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          const auto& zr = zeros_[r];
          bool subset = true;
          for (std::size_t w = 0; w < words_; ++w)
            if ((z[w] & ~zr[w]) != 0) {
              subset = false;
              break;
            }
          if (subset) adjacent = false;
        }
        if (!adjacent) continue;
        const T sp = slack(rays_[p], k);
        const T sn = slack(rays_[n], k);
        fresh.push_back(N::combine(sp, rays_[n], sn, rays_[p], D_));
        Bits zz = z;
        set_bit(zz, k);
        fresh_zeros.push_back(std::move(zz));
      }
    for (std::size_t n : neg)
      for (std::size_t j = 0; j < m_; ++j)
        if (!done_[j] && N::sign(slack(rays_[n], j)) < 0) --count[j];
    for (const auto& v : fresh)
      for (std::size_t j = 0; j < m_; ++j)
        if (!done_[j] && N::sign(slack(v, j)) < 0) ++count[j];
    std::vector<Vec> kept;
    std::vector<Bits> kept_zeros;
    std::size_t ni = 0;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      if (ni < neg.size() && neg[ni] == i) {
        ++ni;
        continue;
      }
      if (N::sign(slack(rays_[i], k)) == 0) set_bit(zeros_[i], k);
      kept.push_back(std::move(rays_[i]));
      kept_zeros.push_back(std::move(zeros_[i]));
    }
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      kept.push_back(std::move(fresh[i]));
      kept_zeros.push_back(std::move(fresh_zeros[i]));
    }
    rays_ = std::move(kept);
    zeros_ = std::move(kept_zeros);
    set_bit(processed_, k);
    done_[k] = true;
  }
};

template <class N>
std::pair<std::vector<IntVec>, std::vector<IntVec>> run_dd(const std::vector<IntVec>& a, std::size_t d) {
  DoubleDescription<N> dd(a, d);
  dd.run();
  return {dd.rays(), dd.lineality()};
}

/// x = B y with B given by its columns.
IntVec lift(const std::vector<IntVec>& basis, const IntVec& y, std::size_t n) {
  IntVec x(n, Integer(0));
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (y[j] != 0)
      for (std::size_t i = 0; i < n; ++i) x[i] += basis[j][i] * y[j];
  return x;
}

}  // namespace

ConeVRep dual_description(const ConeHRep& h) {
  for (const auto& e : h.equalities)
    if (e.size() != h.dim) throw std::invalid_argument("equality has wrong dimension");
  for (const auto& a : h.inequalities)
    if (a.size() != h.dim) throw std::invalid_argument("inequality has wrong dimension");
  const std::vector<IntVec> basis = nullspace(h.equalities, h.dim);
  const std::size_t D = basis.size();
  std::vector<IntVec> projected;
  projected.reserve(h.inequalities.size());
  for (const auto& a : h.inequalities) {
    IntVec p(D);
    for (std::size_t j = 0; j < D; ++j) p[j] = dot(a, basis[j]);
    if (!is_zero(p)) p = primitive(std::move(p));
    projected.push_back(std::move(p));
  }
  std::pair<std::vector<IntVec>, std::vector<IntVec>> res;
  try {
    res = run_dd<I64Arith>(projected, D);
  } catch (const Overflow&) {
    res = run_dd<MpzArith>(projected, D);
  }
  ConeVRep out;
  out.dim = h.dim;
  for (const auto& y : res.first) out.rays.push_back(primitive(lift(basis, y, h.dim)));
  for (const auto& y : res.second) out.lineality.push_back(primitive(lift(basis, y, h.dim)));
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

FacetReduction remove_redundant(const ConeHRep& h) {
  FacetReduction fr;
  fr.vrep = dual_description(h);
  const std::size_t D = h.dim - rank(h.equalities);
  std::vector<IntVec> gens = fr.vrep.rays;
  gens.insert(gens.end(), fr.vrep.lineality.begin(), fr.vrep.lineality.end());
  fr.cone_dim = rank(gens);
  if (fr.cone_dim < D) throw DimensionDeficiency(D, fr.cone_dim);
  fr.facets.dim = h.dim;
  fr.facets.equalities = h.equalities;
  std::set<std::vector<bool>> seen;
  for (std::size_t i = 0; i < h.inequalities.size(); ++i) {
    const auto& a = h.inequalities[i];
    std::vector<bool> tight(fr.vrep.rays.size());
    std::vector<IntVec> rows = fr.vrep.lineality;
    for (std::size_t r = 0; r < fr.vrep.rays.size(); ++r) {
      tight[r] = dot(a, fr.vrep.rays[r]) == 0;
      if (tight[r]) rows.push_back(fr.vrep.rays[r]);
    }
    if (rows.size() + 1 < fr.cone_dim) continue;
    if (rank(rows) != fr.cone_dim - 1) continue;
    if (!seen.insert(tight).second) continue;
    fr.kept.push_back(i);
    fr.facets.inequalities.push_back(a);
  }
  return fr;
}

bool contains(const ConeHRep& h, const RatVec& x) {
  if (x.size() != h.dim) throw std::invalid_argument("contains: dimension mismatch");
  for (const auto& e : h.equalities)
    if (dot(e, x) != 0) return false;
  for (const auto& a : h.inequalities)
    if (dot(a, x) < 0) return false;
  return true;
}

bool contains(const ConeHRep& h, const IntVec& x) { return contains(h, to_ratvec(x)); }

std::size_t dimension(const ConeHRep& h) {
  ConeVRep v = dual_description(h);
  std::vector<IntVec> gens = v.rays;
  gens.insert(gens.end(), v.lineality.begin(), v.lineality.end());
  return rank(gens);
}

std::vector<IntVec> symmetry_images(const IntVec& v, const SymmetrySpec& s) {
  std::vector<IntVec> images{v};
  for (const auto& group : s.groups) {
    std::vector<IntVec> next;
    std::vector<std::size_t> perm(group.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (const auto& img : images) {
      std::vector<std::size_t> p = perm;
      do {
        IntVec out = img;
        for (std::size_t t = 0; t < group.size(); ++t) {
          const auto& dst = s.blocks[group[t]];
          const auto& src = s.blocks[group[p[t]]];
          for (std::size_t i = 0; i < dst.second; ++i) out[dst.first + i] = img[src.first + i];
        }
        next.push_back(std::move(out));
      } while (std::next_permutation(p.begin(), p.end()));
    }
    images = std::move(next);
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

IntVec orbit_representative(const IntVec& v, const SymmetrySpec& s) { return symmetry_images(v, s).front(); }

OrbitReduction dedupe_up_to_perms(const std::vector<IntVec>& items, const SymmetrySpec& s) {
  OrbitReduction out;
  std::map<IntVec, std::size_t> index;
  std::vector<std::pair<IntVec, std::size_t>> reps;
  std::vector<IntVec> rep_of(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto images = symmetry_images(items[i], s);
    rep_of[i] = images.front();
    if (!index.count(images.front())) {
      index.emplace(images.front(), 0);
      reps.emplace_back(images.front(), images.size());
    }
  }
  std::sort(reps.begin(), reps.end());
  for (std::size_t r = 0; r < reps.size(); ++r) {
    index[reps[r].first] = r;
    out.representatives.push_back(reps[r].first);
    out.orbit_sizes.push_back(reps[r].second);
  }
  for (const auto& r : rep_of) out.orbit_of.push_back(index.at(r));
  return out;
}

SymmetrySpec block_symmetry(const std::vector<std::size_t>& lengths) {
  SymmetrySpec s;
  std::size_t off = 0;
  for (auto len : lengths) {
    s.blocks.emplace_back(off, len);
    off += len;
  }
  std::vector<bool> used(lengths.size(), false);
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> g;
    for (std::size_t j = i; j < lengths.size(); ++j)
      if (!used[j] && lengths[j] == lengths[i]) {
        used[j] = true;
        g.push_back(j);
      }
    if (g.size() > 1) s.groups.push_back(std::move(g));
  }
  return s;
}

}  // namespace momentcone
