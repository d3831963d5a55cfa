#include "momentcone/result_document.hpp"

#include <gtest/gtest.h>

using namespace momentcone;

namespace {

ResultDocument document(int a, int b, int c, bool dedupe, std::uint64_t seed = 0) {
  KroneckerOptions opts;
  opts.policy.seed = seed;
  return make_document(compute_kronecker(a, b, c, opts), opts.policy, dedupe);
}

}  // namespace

TEST(ResultDocument, CountsMatchLists) {
  const auto all = document(3, 3, 3, false);
  EXPECT_EQ(all.facets.size(), 45u);
  EXPECT_EQ(all.rays.size(), 33u);
  EXPECT_EQ(all.facet_count, (StageCount{45, 10}));
  EXPECT_EQ(all.eplus, (StageCount{51, 17}));
  const auto reps = document(3, 3, 3, true);
  EXPECT_EQ(reps.facets.size(), 10u);
  EXPECT_EQ(reps.rays.size(), 11u);
  std::size_t facets = 0, rays = 0;
  for (const auto& f : reps.facets) facets += f.orbit_size.value();
  for (const auto& r : reps.rays) rays += r.orbit_size.value();
  EXPECT_LE(facets, 45u);
  EXPECT_LE(rays, 33u);
}

TEST(ResultDocument, RoundTrip) {
  for (bool dedupe : {false, true}) {
    auto doc = document(2, 2, 3, dedupe);
    doc.sampling = SamplingReport{100, 3, 1e-9, 0, 0.015625};
    EXPECT_EQ(parse_document(serialize(doc)), doc);
  }
  const auto bipartite = document(1, 2, 3, false);
  EXPECT_EQ(parse_document(serialize(bipartite)), bipartite);
  const auto padded = document(2, 2, 5, true);
  EXPECT_EQ(parse_document(serialize(padded)), padded);
}

TEST(ResultDocument, ByteIdenticalAcrossRuns) {
  EXPECT_EQ(serialize(document(3, 3, 3, false, 5)), serialize(document(3, 3, 3, false, 5)));
  EXPECT_EQ(serialize(document(3, 3, 3, true, 5)), serialize(document(3, 3, 3, true, 5)));
  KroneckerOptions serial;
  serial.exec = Exec::Serial;
  const auto s = make_document(compute_kronecker(2, 3, 3, serial), serial.policy, false);
  EXPECT_EQ(serialize(s), serialize(document(2, 3, 3, false)));
}

TEST(ResultDocument, Shape) {
  const auto text = serialize(document(2, 2, 2, false, 7));
  EXPECT_EQ(text.back(), '\n');
  const auto j = nlohmann::ordered_json::parse(text);
  EXPECT_EQ(j["dims"], nlohmann::ordered_json({2, 2, 2}));
  EXPECT_EQ(j["counts"]["facets"]["total"], 6);
  EXPECT_EQ(j["counts"]["rays"]["reduced"], 3);
  EXPECT_EQ(j["listing"], "all");
  EXPECT_EQ(j["provenance"]["seed"], 7);
  EXPECT_EQ(j["provenance"]["policy"], "pit");
  EXPECT_EQ(j["provenance"]["tool_version"], kToolVersion);
  for (const auto& r : j["rays"])
    for (const auto& q : r["normalized"]) {
      ASSERT_TRUE(q.is_string());
      EXPECT_NE(q.get<std::string>().find('/'), std::string::npos);
    }
  for (const auto& f : j["facets"]) {
    EXPECT_TRUE(f["normal"].is_array());
    EXPECT_FALSE(f.contains("orbit_size"));
  }
  EXPECT_FALSE(j.contains("sampling"));
}

TEST(ResultDocument, RejectsMalformedInput) {
  const std::string good = serialize(document(2, 2, 2, false));
  EXPECT_THROW(parse_document("{"), std::invalid_argument);
  EXPECT_THROW(parse_document("{}"), std::invalid_argument);
  auto j = nlohmann::ordered_json::parse(good);
  j["rays"][0]["normalized"][0] = 0.5;
  EXPECT_THROW(document_from_json(j), std::invalid_argument);
  j = nlohmann::ordered_json::parse(good);
  j["facets"].erase(0);
  EXPECT_THROW(document_from_json(j), std::invalid_argument);
  j = nlohmann::ordered_json::parse(good);
  j["listing"] = "some";
  EXPECT_THROW(document_from_json(j), std::invalid_argument);
  j = nlohmann::ordered_json::parse(good);
  j["rays"][0]["normalized"][0] = "1/0";
  EXPECT_THROW(document_from_json(j), std::invalid_argument);
}
