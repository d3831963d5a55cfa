#include "momentcone/horncone.hpp"

#include "momentcone/parallel.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace momentcone {

void validate(const SubsetTriple& t) {
  if (t.r < 1 || t.r >= t.d) throw std::invalid_argument("need 1 <= r < d");
  for (const auto& s : t.sets) {
    if (static_cast<int>(s.size()) != t.r) throw std::invalid_argument("subset size differs from r");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 1 || s[i] > t.d) throw std::invalid_argument("subset element out of range");
      if (i > 0 && s[i] <= s[i - 1]) throw std::invalid_argument("subset is not strictly increasing");
    }
  }
}

std::string to_string(const SubsetTriple& t) {
  std::string out;
  for (std::size_t f = 0; f < 3; ++f) {
    if (f) out += ";";
    out += "{";
    for (std::size_t i = 0; i < t.sets[f].size(); ++i) out += (i ? "," : "") + std::to_string(t.sets[f][i]);
    out += "}";
  }
  return out;
}

SubsetTriple parse_subset_triple(const std::string& s, int d) {
  SubsetTriple t;
  t.d = d;
  std::stringstream in(s);
  std::string part;
  std::size_t f = 0;
  while (std::getline(in, part, ';')) {
    if (f == 3) throw std::invalid_argument("expected three subsets");
    std::string digits;
    for (char ch : part) {
      if (ch == '{' || ch == '}' || ch == ' ') continue;
      if (ch != ',' && (ch < '0' || ch > '9')) throw std::invalid_argument("bad character in subset: " + part);
      digits += ch;
    }
    std::stringstream items(digits);
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.empty()) throw std::invalid_argument("empty subset entry");
      t.sets[f].push_back(std::stoi(item));
    }
    ++f;
  }
  if (f != 3) throw std::invalid_argument("expected three subsets");
  t.r = static_cast<int>(t.sets[0].size());
  validate(t);
  return t;
}

std::vector<int> complement(const std::vector<int>& subset, int d) {
  std::vector<int> out;
  std::size_t k = 0;
  for (int i = 1; i <= d; ++i) {
    if (k < subset.size() && subset[k] == i) ++k;
    else out.push_back(i);
  }
  return out;
}

std::vector<int> subset_partition(const std::vector<int>& subset, int d) {
  const int r = static_cast<int>(subset.size());
  std::vector<int> out;
  for (int a = 1; a <= r; ++a) out.push_back(d - r - (subset[static_cast<std::size_t>(a - 1)] - a));
  return out;
}

namespace {

int partition_size(const std::vector<int>& subset, int d) {
  const auto p = subset_partition(subset, d);
  return std::accumulate(p.begin(), p.end(), 0);
}

}  // namespace

bool horn_trace(const SubsetTriple& t) {
  int total = 0;
  for (const auto& s : t.sets) total += partition_size(s, t.d);
  return total == 2 * (t.d - t.r) * t.r;
}

std::vector<std::vector<int>> subsets_of_size(int d, int r) {
  std::vector<std::vector<int>> out;
  if (r < 0 || r > d) return out;
  std::vector<int> cur(static_cast<std::size_t>(r));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == d - r + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

namespace {

std::recursive_mutex memo_mutex;
std::map<std::pair<int, int>, std::vector<SubsetTriple>> memo;

bool passes_sub_inequalities(const SubsetTriple& t) {
  const int d = t.d;
  for (int s = 1; s < t.r; ++s) {
    const int bound = s * (d + 1) + s * (s + 1) / 2;
    for (const auto& sub : horn_sets(t.r, s)) {
      int sum = 0;
      for (std::size_t f = 0; f < 3; ++f)
        for (int pos : sub.sets[f]) sum += t.sets[f][static_cast<std::size_t>(pos - 1)];
      if (sum > bound) return false;
    }
  }
  return true;
}

}  // namespace

const std::vector<SubsetTriple>& horn_sets(int d, int r) {
  if (r < 1 || r >= d) throw std::invalid_argument("horn_sets: need 1 <= r < d");
  std::lock_guard<std::recursive_mutex> lock(memo_mutex);
  auto it = memo.find({d, r});
  if (it != memo.end()) return it->second;
  const auto subs = subsets_of_size(d, r);
  std::vector<int> sizes;
  for (const auto& s : subs) sizes.push_back(partition_size(s, d));
  const int target = 2 * (d - r) * r;
  std::vector<SubsetTriple> out;
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < subs.size(); ++j)
      for (std::size_t k = 0; k < subs.size(); ++k) {
        if (sizes[i] + sizes[j] + sizes[k] != target) continue;
        SubsetTriple t{d, r, {subs[i], subs[j], subs[k]}};
        if (passes_sub_inequalities(t)) out.push_back(std::move(t));
      }
  return memo.emplace(std::make_pair(d, r), std::move(out)).first->second;
}

Rational horn_form(const SubsetTriple& t, const HornPoint& p) {
  const RatVec* v[3] = {&p.x, &p.y, &p.z};
  Rational s = 0;
  for (std::size_t f = 0; f < 3; ++f)
    for (int i : t.sets[f]) s += (*v[f])[static_cast<std::size_t>(i - 1)];
  return s;
}

HornVerdict horn_membership(const HornPoint& p) {
  HornVerdict v;
  const std::size_t d = p.x.size();
  if (d == 0 || p.y.size() != d || p.z.size() != d) {
    v.reason = "x, y, z must be nonempty and of equal length";
    return v;
  }
  const RatVec* parts[3] = {&p.x, &p.y, &p.z};
  const char* names[3] = {"x", "y", "z"};
  for (std::size_t f = 0; f < 3; ++f)
    for (std::size_t i = 1; i < d; ++i)
      if ((*parts[f])[i] > (*parts[f])[i - 1]) {
        v.reason = std::string(names[f]) + " is not non-increasing";
        return v;
      }
  if (p.x.back() < 0 || p.y.back() < 0) {
    v.reason = "x and y must be non-negative";
    return v;
  }
  if (p.z.front() > 0) {
    v.reason = "z must be non-positive";
    return v;
  }
  Rational total = 0;
  for (const auto* part : parts)
    for (const auto& q : *part) total += q;
  if (total != 0) {
    v.reason = "trace |x| + |y| + |z| = " + format_rational(total) + " is not zero";
    return v;
  }
  const int dd = static_cast<int>(d);
  for (int r = 1; r < dd; ++r)
    for (const auto& t : horn_sets(dd, r))
      if (horn_form(t, p) < 0) {
        v.reason = "violates the inequality " + to_string(t);
        v.violated = t;
        return v;
      }
  v.member = true;
  return v;
}

namespace {

RatVec shifted(const std::vector<int>& part, int shift) {
  RatVec out;
  for (int x : part) out.emplace_back(x + shift);
  return out;
}

}  // namespace

HornPoint horn_condition_point(const SubsetTriple& t) {
  const int d = t.d, r = t.r;
  return {shifted(subset_partition(t.sets[0], d), 0), shifted(subset_partition(t.sets[1], d), 0),
          shifted(subset_partition(t.sets[2], d), -2 * (d - r))};
}

HornPoint horn_dual_point(const SubsetTriple& t) {
  const int d = t.d, r = t.r;
  return {shifted(subset_partition(complement(t.sets[0], d), d), 0),
          shifted(subset_partition(complement(t.sets[1], d), d), 0),
          shifted(subset_partition(complement(t.sets[2], d), d), -r)};
}

bool horn_condition(const SubsetTriple& t) { return horn_membership(horn_condition_point(t)).member; }
bool horn_dual_condition(const SubsetTriple& t) { return horn_membership(horn_dual_point(t)).member; }

WeightVector kappa_ijk(const SubsetTriple& t) {
  const HornPoint a = horn_condition_point(t);
  const HornPoint b = horn_dual_point(t);
  WeightVector w;
  for (const RatVec* v : {&a.x, &a.y, &a.z, &b.x, &b.y, &b.z}) {
    IntVec part;
    for (const auto& q : *v) part.push_back(q.get_num());
    w.parts.push_back(std::move(part));
  }
  return w;
}

TangentMatrix horn_tangent_matrix(const SubsetTriple& t) {
  validate(t);
  const int d = t.d, r = t.r, q = d - r;
  // allowed entries (row b of the complement, column a of the subset)
  std::array<std::vector<std::pair<int, int>>, 3> allowed;
  for (std::size_t f = 0; f < 3; ++f) {
    const auto comp = complement(t.sets[f], d);
    for (int b = 0; b < q; ++b)
      for (int a = 0; a < r; ++a)
        if (t.sets[f][static_cast<std::size_t>(a)] < comp[static_cast<std::size_t>(b)]) allowed[f].push_back({b, a});
  }
  const int n_rows = 2 * q * r;
  const int var_a = 0, var_b = r * r, var_ap = 2 * r * r, var_bp = 2 * r * r + q * q;
  std::vector<std::vector<LinearForm>> cols;
  auto fresh = [&] { return std::vector<LinearForm>(static_cast<std::size_t>(n_rows)); };
  for (std::size_t f = 0; f < 2; ++f) {
    const int block = static_cast<int>(f) * q * r;
    const int mat = f == 0 ? var_a : var_b;
    // X a: entry X_{b,m} feeds row (b, col) with a_{m,col}
    for (const auto& [b, m] : allowed[f]) {
      auto col = fresh();
      for (int c = 0; c < r; ++c) add_term(col[static_cast<std::size_t>(block + b * r + c)], mat + m * r + c, 1);
      cols.push_back(std::move(col));
    }
  }
  // - a' Z and - b' Z: entry Z_{m,c} feeds row (p, c) of both blocks with a'_{p,m} and b'_{p,m}
  for (const auto& [m, c] : allowed[2]) {
    auto col = fresh();
    for (int p = 0; p < q; ++p) {
      add_term(col[static_cast<std::size_t>(p * r + c)], var_ap + p * q + m, -1);
      add_term(col[static_cast<std::size_t>(q * r + p * r + c)], var_bp + p * q + m, -1);
    }
    cols.push_back(std::move(col));
  }
  if (static_cast<int>(cols.size()) != n_rows)
    throw TraceViolation("Horn tangent map is not square: domain " + std::to_string(cols.size()) + ", codomain " +
                         std::to_string(n_rows));
  std::vector<std::vector<LinearForm>> entries(static_cast<std::size_t>(n_rows),
                                               std::vector<LinearForm>(static_cast<std::size_t>(n_rows)));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) entries[i][j] = std::move(cols[j][i]);
  std::vector<int> vars(static_cast<std::size_t>(2 * r * r + 2 * q * q));
  std::iota(vars.begin(), vars.end(), 0);
  return make_square(std::move(entries), std::move(vars));
}

PitVerdict horn_tangent_det(const SubsetTriple& t, int trials, std::uint64_t seed) {
  return det_nonzero_pit(horn_tangent_matrix(t), trials, hash_combine(seed, hash_string(to_string(t))));
}

CartanElement horn_cartan(const SubsetTriple& t) {
  CartanElement h;
  for (const auto& s : t.sets) {
    IntVec part(static_cast<std::size_t>(t.d), Integer(0));
    for (int i : s) part[static_cast<std::size_t>(i - 1)] = 1;
    h.parts.push_back(std::move(part));
  }
  return h;
}

WeightVector restrict_to_blocks(const SubsetTriple& t, const WeightVector& w) {
  WeightVector out;
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t f = 0; f < 3; ++f) {
      const auto idx = pass == 0 ? t.sets[f] : complement(t.sets[f], t.d);
      IntVec part;
      for (int i : idx) part.push_back(w.parts[f][static_cast<std::size_t>(i - 1)]);
      out.parts.push_back(std::move(part));
    }
  return out;
}

}  // namespace momentcone
