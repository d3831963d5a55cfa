#include "cli.hpp"

#include "momentcone/golden.hpp"
#include "momentcone/horncone.hpp"
#include "momentcone/oracle.hpp"
#include "momentcone/result_document.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace momentcone::cli {

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const DimensionDeficiency*>(&e)) return kDimensionDeficiency;
  if (dynamic_cast<const std::invalid_argument*>(&e)) return kInvalidInput;
  return kInternalError;
}

namespace {

std::string human(const Rational& q) { return q.get_str(); }

std::string human(const RatVec& v, std::size_t from, std::size_t len) {
  std::string s = "(";
  for (std::size_t i = 0; i < len; ++i) s += (i ? "," : "") + human(v[from + i]);
  return s + ")";
}

std::string slice(const IntVec& v, std::size_t from, std::size_t len) {
  return to_string(IntVec(v.begin() + static_cast<long>(from), v.begin() + static_cast<long>(from + len)));
}

/// Left-aligned text table; the first row is the header.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::string cell = r[i];
      if (i + 1 < r.size()) cell.resize(width[i] + 2, ' ');
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << "  " << line << "\n";
  }
}

std::string remarks(const FacetEntry& f) {
  std::string s;
  if (f.contains_origin) s += "†";
  if (f.contains_highest_weight) s += s.empty() ? "★" : ",★";
  return s.empty() ? "-" : s;
}

std::string count_cell(const StageCount& c) { return std::to_string(c.total) + " (" + std::to_string(c.reduced) + ")"; }

void print_document(std::ostream& out, const ResultDocument& doc, const ResultDocument& reps) {
  const auto [a, b, c] = doc.dims;
  out << "C(" << a << "," << b << "," << c << ")  reduction " << doc.reduction << "  cone dimension "
      << doc.cone_dimension << " of " << doc.expected_dimension << "\n\n";
  std::vector<std::vector<std::string>> stages{{"stage", "count (up to permutations)"}};
  if (doc.candidates_available) {
    stages.push_back({"E+", count_cell(doc.eplus)});
    stages.push_back({"E+ admissible", count_cell(doc.eplus_adm)});
    stages.push_back({"E", count_cell(doc.e)});
    stages.push_back({"inequalities", count_cell(doc.inequalities)});
  }
  stages.push_back({"facets", count_cell(doc.facet_count)});
  stages.push_back({"extreme rays", count_cell(doc.ray_count)});
  print_table(out, stages);

  out << "\nfacets, one row per orbit († contains the origin, ★ contains the highest weight)\n";
  std::vector<std::vector<std::string>> frows{{"#", "H_A", "H_B", "H_C", "z", "orbit", "remarks"}};
  std::size_t n = 0;
  for (const auto& f : reps.facets) {
    std::vector<std::string> row{std::to_string(++n)};
    if (f.label) {
      for (const auto& p : f.label->parts) row.push_back(to_string(p));
      row.push_back(f.label->scalars.empty() ? "-" : f.label->scalars[0].get_str());
    } else {
      row.push_back(slice(f.normal, 0, static_cast<std::size_t>(a)));
      row.push_back(slice(f.normal, static_cast<std::size_t>(a), static_cast<std::size_t>(b)));
      row.push_back(slice(f.normal, static_cast<std::size_t>(a + b), static_cast<std::size_t>(c)));
      row.push_back("-");
    }
    row.push_back(std::to_string(f.orbit_size.value_or(1)));
    row.push_back(remarks(f));
    frows.push_back(std::move(row));
  }
  print_table(out, frows);

  out << "\nextreme rays, one row per orbit, |lambda_A| = 1\n";
  std::vector<std::vector<std::string>> rrows{{"#", "V_A", "V_B", "V_C", "orbit"}};
  n = 0;
  for (const auto& r : reps.rays)
    rrows.push_back({std::to_string(++n), human(r.normalized, 0, static_cast<std::size_t>(a)),
                     human(r.normalized, static_cast<std::size_t>(a), static_cast<std::size_t>(b)),
                     human(r.normalized, static_cast<std::size_t>(a + b), static_cast<std::size_t>(c)),
                     std::to_string(r.orbit_size.value_or(1))});
  print_table(out, rrows);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open " + path + " for writing");
  f << text;
  if (!f) throw std::runtime_error("failed writing " + path);
}

struct KronArgs {
  int a = 0, b = 0, c = 0;
  std::uint64_t seed = 0;
  int trials = 2;
  bool exact = false;
  bool dedupe = false;
  std::string json;
  std::size_t verify_samples = 0;
};

RessayrePolicy policy_of(const KronArgs& k) {
  RessayrePolicy p;
  p.seed = k.seed;
  p.trials = k.trials;
  p.exact = k.exact;
  return p;
}

void add_pipeline_flags(CLI::App* cmd, KronArgs& k) {
  cmd->add_option("-a", k.a, "first local dimension")->required()->check(CLI::PositiveNumber);
  cmd->add_option("-b", k.b, "second local dimension")->required()->check(CLI::PositiveNumber);
  cmd->add_option("-c", k.c, "third local dimension")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--seed", k.seed, "seed for the randomized determinant test and sampling")->capture_default_str();
  cmd->add_option("--trials", k.trials, "random evaluations per determinant")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_flag("--exact", k.exact, "confirm zero determinants symbolically (size-capped)");
}

SamplingReport sample_report(const KroneckerCone& cone, std::size_t n, std::uint64_t seed, double tolerance) {
  const auto samples = sample_spectra(cone.a, cone.b, cone.c, n, seed);
  const SampleCheck chk = check_samples(cone.hrep.inequalities, samples, tolerance);
  return {n, seed, tolerance, chk.violations, chk.worst};
}

int cmd_kron(const KronArgs& k, std::ostream& out) {
  const RessayrePolicy policy = policy_of(k);
  KroneckerOptions opts;
  opts.policy = policy;
  const KroneckerCone cone = compute_kronecker(k.a, k.b, k.c, opts);
  ResultDocument doc = make_document(cone, policy, k.dedupe);
  int code = kOk;
  if (k.verify_samples > 0) {
    doc.sampling = sample_report(cone, k.verify_samples, k.seed, 1e-9);
    if (doc.sampling->violations > 0) code = kMismatch;
  }
  const ResultDocument reps = k.dedupe ? doc : make_document(cone, policy, true);
  print_document(out, doc, reps);
  if (doc.sampling)
    out << "\nsampling: " << doc.sampling->samples << " states, " << doc.sampling->violations
        << " violated inequalities (tolerance 1e-9)\n";
  if (!k.json.empty()) write_file(k.json, serialize(doc));
  return code;
}

struct HornArgs {
  int d = 0;
  int r = 0;
  std::string contains;
  std::string point;
  bool has_contains = false;
  bool has_point = false;
  std::uint64_t seed = 0;
  int trials = 2;
};

RatVec parse_vector(const std::string& s) {
  RatVec out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  return out;
}

HornPoint parse_point(const std::string& s, int d) {
  std::vector<RatVec> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ';')) parts.push_back(parse_vector(item));
  if (parts.size() != 3) throw std::invalid_argument("point needs three ';'-separated spectra");
  for (const auto& p : parts)
    if (static_cast<int>(p.size()) != d)
      throw std::invalid_argument("each spectrum needs " + std::to_string(d) + " entries");
  return {parts[0], parts[1], parts[2]};
}

int cmd_horn(const HornArgs& h, std::ostream& out) {
  if (h.d < 1) throw std::invalid_argument("d must be positive");
  if (h.r != 0 && (h.r < 1 || h.r >= h.d)) throw std::invalid_argument("need 1 <= r < d");
  if (h.has_contains) {
    const SubsetTriple t = parse_subset_triple(h.contains, h.d);
    if (h.r != 0 && t.r != h.r) throw std::invalid_argument("subset size differs from -r");
    const auto& set = horn_sets(h.d, t.r);
    const bool member = std::find(set.begin(), set.end(), t) != set.end();
    out << to_string(t) << (member ? " is a member of " : " is not a member of ") << "Horn(" << h.d << "," << t.r
        << ")\n";
    out << "  trace condition: " << (horn_trace(t) ? "holds" : "fails") << "\n";
    if (horn_trace(t)) {
      out << "  lowest-weight condition in the rank-" << t.r << " cone: " << (horn_condition(t) ? "holds" : "fails")
          << "\n";
      const PitVerdict v = horn_tangent_det(t, h.trials, h.seed);
      out << "  tangent determinant: "
          << (v.nonzero() ? "nonzero (certified)" : "zero with failure bound " + format_rational(v.failure_bound))
          << "\n";
    }
    return kOk;
  }
  if (h.has_point) {
    const HornPoint p = parse_point(h.point, h.d);
    const HornVerdict v = horn_membership(p);
    out << (v.member ? "inside" : "outside") << (v.member ? "" : ": " + v.reason) << "\n";
    return kOk;
  }
  if (h.d < 2) throw std::invalid_argument("Horn sets need d >= 2");
  const int lo = h.r ? h.r : 1;
  const int hi = h.r ? h.r : h.d - 1;
  for (int r = lo; r <= hi; ++r) {
    const auto& set = horn_sets(h.d, r);
    out << "Horn(" << h.d << "," << r << "): " << set.size() << " triples\n";
    if (h.r)
      for (const auto& t : set) out << "  " << to_string(t) << "\n";
  }
  return kOk;
}

struct Check {
  std::ostream& out;
  int failures = 0;
  void row(bool ok, const std::string& text) {
    out << (ok ? "[ok]       " : "[MISMATCH] ") << text << "\n";
    if (!ok) ++failures;
  }
};

std::string show(const StageCount& c) { return std::to_string(c.total) + " (" + std::to_string(c.reduced) + ")"; }

void report_diff(Check& chk, const std::string& what, const TableDiff& d) {
  chk.row(d.ok(), what + ": " + std::to_string(d.computed) + " computed orbits, " + std::to_string(d.expected) +
                      " expected");
  for (const auto& s : d.missing) chk.out << "    missing " << s << "\n";
  for (const auto& s : d.unexpected) chk.out << "    unexpected " << s << "\n";
  for (const auto& s : d.markers) chk.out << "    markers differ " << s << "\n";
}

int cmd_check(const KronArgs& k, std::ostream& out) {
  Check chk{out};
  for (const auto& g : golden_edge_counts()) {
    const EdgeSet e = extremal_edges(g.a, g.b);
    const StageCount got{e.edges.size(), e.reduced};
    const bool ok = e.tableaux == g.tableaux && e.cubicles == g.cubicles && got == g.edges;
    std::ostringstream s;
    s << "edges (" << g.a << "," << g.b << "): tableaux " << e.tableaux << ", cubicles " << e.cubicles
      << ", extremal edges " << show(got);
    if (!ok) s << "; expected " << g.tableaux << ", " << g.cubicles << ", " << show(g.edges);
    chk.row(ok, s.str());
  }
  KroneckerOptions opts;
  opts.policy = policy_of(k);
  for (const auto& g : golden_stage_counts()) {
    const KroneckerCone cone = compute_kronecker(g.a, g.b, g.c, opts);
    const std::vector<std::pair<std::string, std::pair<StageCount, StageCount>>> stages{
        {"E+", {cone.eplus, g.eplus}},
        {"E+ admissible", {cone.eplus_adm, g.eplus_adm}},
        {"E", {cone.e, g.e}},
        {"inequalities", {cone.inequalities, g.inequalities}},
        {"facets", {cone.facets_count, g.facets}},
        {"extreme rays", {cone.rays_count, g.rays}},
    };
    const std::string dims = "(" + std::to_string(g.a) + "," + std::to_string(g.b) + "," + std::to_string(g.c) + ")";
    for (const auto& [name, pair] : stages) {
      const bool ok = pair.first == pair.second;
      chk.row(ok, "C" + dims + " " + name + ": " + show(pair.first) + (ok ? "" : "; expected " + show(pair.second)));
    }
    if (g.a == 4 && g.b == 4 && g.c == 4) {
      report_diff(chk, "C" + dims + " facet list", compare_facets_444(cone));
      report_diff(chk, "C" + dims + " ray list", compare_rays_444(cone));
    }
  }
  out << (chk.failures ? std::to_string(chk.failures) + " mismatches\n" : "all rows reproduced\n");
  return chk.failures ? kMismatch : kOk;
}

struct VerifyArgs {
  KronArgs kron;
  std::size_t samples = 10000;
  double tolerance = 1e-9;
};

int cmd_verify(const VerifyArgs& v, std::ostream& out) {
  const auto& k = v.kron;
  KroneckerOptions opts;
  opts.policy = policy_of(k);
  const KroneckerCone cone = compute_kronecker(k.a, k.b, k.c, opts);
  Check chk{out};
  const SamplingReport s = sample_report(cone, v.samples, k.seed, v.tolerance);
  std::ostringstream line;
  line << "sampling: " << s.samples << " random states against " << cone.hrep.inequalities.size()
       << " facets, " << s.violations << " violations, smallest slack " << std::setprecision(3) << s.worst;
  chk.row(s.violations == 0, line.str());
  chk.row(cone.cone_dim == cone.expected_dim, "cone dimension " + std::to_string(cone.cone_dim) + " of " +
                                                  std::to_string(cone.expected_dim));
  const Representation rep = kronecker_rep(k.a, k.b, k.c);
  if (cone.candidates_available && rep.dim() <= 16) {
    std::set<CartanElement> brute, pipeline;
    for (const auto& h : brute_admissible(rep)) {
      bool nontrivial = false;
      for (const auto& p : h.parts)
        for (const auto& x : p) nontrivial = nontrivial || x != 0;
      if (nontrivial) brute.insert(unoriented_dominant(h));
    }
    for (const auto& h : cone.eplus_adm_elements) pipeline.insert(unoriented_dominant(h));
    chk.row(brute == pipeline, "admissible directions: " + std::to_string(brute.size()) + " by brute force, " +
                                   std::to_string(pipeline.size()) + " from candidates");
  }
  return chk.failures ? kMismatch : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moment cones of local unitary group actions"};
  app.require_subcommand(1);
  KronArgs kron;
  auto* kcmd = app.add_subcommand("kron", "compute the Kronecker moment cone C(a,b,c)");
  add_pipeline_flags(kcmd, kron);
  kcmd->add_flag("--dedupe", kron.dedupe, "list one facet and ray per permutation orbit in the JSON output");
  kcmd->add_option("--json", kron.json, "write the result document to this file");
  kcmd->add_option("--verify-samples", kron.verify_samples, "check this many random states against the facets");

  HornArgs horn;
  auto* hcmd = app.add_subcommand("horn", "Horn triples, triple queries and membership in the Horn cone");
  hcmd->add_option("-d", horn.d, "matrix size")->required();
  hcmd->add_option("-r", horn.r, "subset size");
  auto* contains = hcmd->add_option("--contains", horn.contains, "subset triple such as \"{1,3,5};{1,3,5};{1,3,5}\"");
  auto* point = hcmd->add_option("--point", horn.point, "spectra \"x1,x2;y1,y2;z1,z2\" with p/q entries")->excludes(contains);
  hcmd->add_option("--seed", horn.seed, "seed for the determinant test")->capture_default_str();
  hcmd->add_option("--trials", horn.trials, "random evaluations")->check(CLI::PositiveNumber)->capture_default_str();

  KronArgs check;
  auto* ccmd = app.add_subcommand("check", "recompute the tabulated counts, facets and rays");
  ccmd->add_option("--seed", check.seed)->capture_default_str();
  ccmd->add_option("--trials", check.trials)->check(CLI::PositiveNumber)->capture_default_str();
  ccmd->add_flag("--exact", check.exact);

  VerifyArgs verify;
  auto* vcmd = app.add_subcommand("verify", "validate a computed cone with the sampling and brute-force oracles");
  add_pipeline_flags(vcmd, verify.kron);
  vcmd->add_option("--samples", verify.samples, "random states")->check(CLI::PositiveNumber)->capture_default_str();
  vcmd->add_option("--tolerance", verify.tolerance)->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }
  try {
    configure_threads();
    horn.has_contains = contains->count() > 0;
    horn.has_point = point->count() > 0;
    if (*kcmd) return cmd_kron(kron, out);
    if (*hcmd) return cmd_horn(horn, out);
    if (*ccmd) return cmd_check(check, out);
    return cmd_verify(verify, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace momentcone::cli
