#include "momentcone/result_document.hpp"

#include <stdexcept>

namespace momentcone {

using nlohmann::ordered_json;

std::string policy_name(const RessayrePolicy& p) { return p.exact ? "pit+symbolic" : "pit"; }

std::string reduction_name(const DimReduction& r) {
  switch (r.mode) {
    case ReductionMode::Native: return "native";
    case ReductionMode::Pad: return "pad";
    case ReductionMode::Bipartite: return "bipartite";
  }
  return "native";
}

ResultDocument make_document(const KroneckerCone& k, const RessayrePolicy& policy, bool dedupe) {
  ResultDocument doc;
  doc.dims = {k.a, k.b, k.c};
  doc.reduction = reduction_name(k.reduction);
  doc.cone_dimension = k.cone_dim;
  doc.expected_dimension = k.expected_dim;
  doc.candidates_available = k.candidates_available;
  doc.eplus = k.eplus;
  doc.eplus_adm = k.eplus_adm;
  doc.e = k.e;
  doc.inequalities = k.inequalities;
  doc.facet_count = k.facets_count;
  doc.ray_count = k.rays_count;
  doc.deduplicated = dedupe;
  doc.provenance.seed = policy.seed;
  doc.provenance.trials = policy.trials;
  doc.provenance.exact = policy.exact;
  doc.provenance.symbolic_cap = policy.symbolic_cap;
  doc.provenance.policy = policy_name(policy);

  auto facet_entry = [](const KroneckerFacet& f) {
    return FacetEntry{f.label, f.normal, f.trivial, f.contains_highest_weight, f.contains_origin, std::nullopt};
  };
  if (!dedupe) {
    for (const auto& f : k.facets) doc.facets.push_back(facet_entry(f));
    for (const auto& r : k.rays) doc.rays.push_back({r, normalized_ray(r, k.a), std::nullopt});
    return doc;
  }
  const SymmetrySpec sym = ambient_symmetry(k.a, k.b, k.c);
  const auto keys = facet_keys(k);
  const OrbitReduction fo = dedupe_up_to_perms(keys, sym);
  std::vector<std::size_t> first(fo.representatives.size(), keys.size());
  for (std::size_t i = keys.size(); i-- > 0;) first[fo.orbit_of[i]] = i;
  for (std::size_t r = 0; r < fo.representatives.size(); ++r) {
    FacetEntry e = facet_entry(k.facets[first[r]]);
    e.orbit_size = fo.orbit_sizes[r];
    doc.facets.push_back(std::move(e));
  }
  const OrbitReduction ro = dedupe_up_to_perms(k.rays, sym);
  for (std::size_t r = 0; r < ro.representatives.size(); ++r)
    doc.rays.push_back({ro.representatives[r], normalized_ray(ro.representatives[r], k.a), ro.orbit_sizes[r]});
  return doc;
}

namespace {

ordered_json ints(const IntVec& v) {
  ordered_json j = ordered_json::array();
  for (const auto& x : v) j.push_back(to_int64(x));
  return j;
}

ordered_json rationals(const RatVec& v) {
  ordered_json j = ordered_json::array();
  for (const auto& q : v) j.push_back(format_rational(q));
  return j;
}

ordered_json count(const StageCount& s) { return {{"total", s.total}, {"reduced", s.reduced}}; }

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("result document: " + what); }

const ordered_json& field(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const ordered_json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("field '") + key + "': " + e.what());
  }
}

IntVec read_ints(const ordered_json& j) {
  if (!j.is_array()) bad("expected an integer array");
  IntVec out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) bad("expected an integer");
    out.emplace_back(static_cast<long>(x.get<std::int64_t>()));
  }
  return out;
}

RatVec read_rationals(const ordered_json& j) {
  if (!j.is_array()) bad("expected an array of rational strings");
  RatVec out;
  for (const auto& x : j) {
    if (!x.is_string()) bad("rationals must be \"p/q\" strings");
    out.push_back(parse_rational(x.get<std::string>()));
  }
  return out;
}

StageCount read_count(const ordered_json& j, const char* key) {
  const auto& c = field(j, key);
  return {get<std::size_t>(c, "total"), get<std::size_t>(c, "reduced")};
}

std::optional<std::size_t> read_orbit(const ordered_json& j) {
  if (!j.contains("orbit_size")) return std::nullopt;
  return get<std::size_t>(j, "orbit_size");
}

}  // namespace

ordered_json to_json(const ResultDocument& doc) {
  ordered_json j;
  j["dims"] = doc.dims;
  j["reduction"] = doc.reduction;
  j["cone_dimension"] = doc.cone_dimension;
  j["expected_dimension"] = doc.expected_dimension;
  j["candidates_available"] = doc.candidates_available;
  j["counts"] = {{"eplus", count(doc.eplus)},
                 {"eplus_adm", count(doc.eplus_adm)},
                 {"e", count(doc.e)},
                 {"inequalities", count(doc.inequalities)},
                 {"facets", count(doc.facet_count)},
                 {"rays", count(doc.ray_count)}};
  j["listing"] = doc.deduplicated ? "orbit_representatives" : "all";
  ordered_json facets = ordered_json::array();
  for (const auto& f : doc.facets) {
    ordered_json e;
    if (f.label) {
      ordered_json parts = ordered_json::array();
      for (const auto& p : f.label->parts) parts.push_back(ints(p));
      e["label"] = {{"parts", parts}, {"z", ints(f.label->scalars)}};
    } else {
      e["label"] = nullptr;
    }
    e["normal"] = ints(f.normal);
    e["trivial"] = f.trivial;
    e["contains_highest_weight"] = f.contains_highest_weight;
    e["contains_origin"] = f.contains_origin;
    if (f.orbit_size) e["orbit_size"] = *f.orbit_size;
    facets.push_back(std::move(e));
  }
  j["facets"] = std::move(facets);
  ordered_json rays = ordered_json::array();
  for (const auto& r : doc.rays) {
    ordered_json e;
    e["ray"] = ints(r.ray);
    e["normalized"] = rationals(r.normalized);
    if (r.orbit_size) e["orbit_size"] = *r.orbit_size;
    rays.push_back(std::move(e));
  }
  j["rays"] = std::move(rays);
  j["provenance"] = {{"seed", doc.provenance.seed},
                     {"trials", doc.provenance.trials},
                     {"exact", doc.provenance.exact},
                     {"symbolic_cap", doc.provenance.symbolic_cap},
                     {"policy", doc.provenance.policy},
                     {"tool_version", doc.provenance.tool_version}};
  if (doc.sampling) {
    const auto& s = *doc.sampling;
    j["sampling"] = {{"samples", s.samples},
                     {"seed", s.seed},
                     {"tolerance", s.tolerance},
                     {"violations", s.violations},
                     {"worst", s.worst}};
  }
  return j;
}

ResultDocument document_from_json(const ordered_json& j) {
  ResultDocument doc;
  doc.dims = get<std::array<int, 3>>(j, "dims");
  doc.reduction = get<std::string>(j, "reduction");
  doc.cone_dimension = get<std::size_t>(j, "cone_dimension");
  doc.expected_dimension = get<std::size_t>(j, "expected_dimension");
  doc.candidates_available = get<bool>(j, "candidates_available");
  const auto& c = field(j, "counts");
  doc.eplus = read_count(c, "eplus");
  doc.eplus_adm = read_count(c, "eplus_adm");
  doc.e = read_count(c, "e");
  doc.inequalities = read_count(c, "inequalities");
  doc.facet_count = read_count(c, "facets");
  doc.ray_count = read_count(c, "rays");
  const auto listing = get<std::string>(j, "listing");
  if (listing != "all" && listing != "orbit_representatives") bad("unknown listing '" + listing + "'");
  doc.deduplicated = listing == "orbit_representatives";
  for (const auto& e : field(j, "facets")) {
    FacetEntry f;
    const auto& label = field(e, "label");
    if (!label.is_null()) {
      CartanElement h;
      for (const auto& p : field(label, "parts")) h.parts.push_back(read_ints(p));
      h.scalars = read_ints(field(label, "z"));
      f.label = std::move(h);
    }
    f.normal = read_ints(field(e, "normal"));
    f.trivial = get<bool>(e, "trivial");
    f.contains_highest_weight = get<bool>(e, "contains_highest_weight");
    f.contains_origin = get<bool>(e, "contains_origin");
    f.orbit_size = read_orbit(e);
    doc.facets.push_back(std::move(f));
  }
  for (const auto& e : field(j, "rays")) {
    RayEntry r;
    r.ray = read_ints(field(e, "ray"));
    r.normalized = read_rationals(field(e, "normalized"));
    r.orbit_size = read_orbit(e);
    doc.rays.push_back(std::move(r));
  }
  const auto& p = field(j, "provenance");
  doc.provenance.seed = get<std::uint64_t>(p, "seed");
  doc.provenance.trials = get<int>(p, "trials");
  doc.provenance.exact = get<bool>(p, "exact");
  doc.provenance.symbolic_cap = get<std::size_t>(p, "symbolic_cap");
  doc.provenance.policy = get<std::string>(p, "policy");
  doc.provenance.tool_version = get<std::string>(p, "tool_version");
  if (j.contains("sampling")) {
    const auto& s = j.at("sampling");
    doc.sampling = SamplingReport{get<std::size_t>(s, "samples"), get<std::uint64_t>(s, "seed"),
                                  get<double>(s, "tolerance"), get<std::size_t>(s, "violations"),
                                  get<double>(s, "worst")};
  }
  const std::size_t want_f = doc.deduplicated ? doc.facet_count.reduced : doc.facet_count.total;
  const std::size_t want_r = doc.deduplicated ? doc.ray_count.reduced : doc.ray_count.total;
  if (doc.facets.size() != want_f) bad("facet list length differs from its count");
  if (doc.rays.size() != want_r) bad("ray list length differs from its count");
  return doc;
}

std::string serialize(const ResultDocument& doc) { return to_json(doc).dump(2) + "\n"; }

ResultDocument parse_document(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(e.what());
  }
  return document_from_json(j);
}

}  // namespace momentcone
