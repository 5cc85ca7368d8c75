#include <gtest/gtest.h>

#include <regex>

#include "aeroplane/report.hpp"
#include "aeroplane/svg.hpp"
#include "aeroplane/verify.hpp"

using namespace aeroplane;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Report, StrictTreatsFlaggedAsFailure) {
  Report r;
  r.check("a", "x", true);
  r.add("b", "x", Status::Flagged);
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.passed(true));
  r.check("c", "x", false);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.count(Status::Pass), 1u);
}

TEST(Report, JsonKeepsFieldOrder) {
  Report r;
  r.check("id", "locus", true, Json{{"z", 1}, {"a", 2}});
  EXPECT_EQ(r.claims_json().dump(),
            R"([{"id":"id","locus":"locus","status":"pass","witness":{"z":1,"a":2}}])");
}

TEST(Report, AppendWithPrefix) {
  Report inner;
  inner.check("cond-1", "x", true);
  Report outer;
  outer.append(inner, "eau/");
  EXPECT_NE(outer.find("eau/cond-1"), nullptr);
}

TEST(Report, ClaimIdsAreUnique) {
  auto r = verify_all(2);
  std::set<std::string> ids;
  for (const auto& c : r.claims()) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
  EXPECT_TRUE(r.passed());
}

TEST(Svg, LaminationDrawsEveryDistinctLeaf) {
  auto lam = pullback_lamination(minor_leaf_of(Angle::parse("3/7")), 8);
  std::string s = svg::render_lamination(lam);
  EXPECT_EQ(count_of(s, "<line"), lam.leaves().size());
  EXPECT_EQ(count_of(s, "<circle"), 1u);
  EXPECT_NE(s.find("viewBox=\"0 0 1000 1000\""), std::string::npos);
  EXPECT_NE(s.find("r=\"450.000\""), std::string::npos);
  EXPECT_EQ(s, svg::render_lamination(lam));
}

TEST(Svg, RegionChart) {
  std::string s = svg::render_regions();
  EXPECT_EQ(count_of(s, "<line"), 6u);
  for (const char* label : {">R1<", ">R2<", ">R3<", ">C<", ">L3<", ">L2<", ">L1<"}) {
    EXPECT_EQ(count_of(s, label), 1u) << label;
  }
}

TEST(Svg, BasicScenarioStripHasEightRows) {
  std::string s = svg::render_scenario(trace_scenario(basic_capture_scenario()));
  EXPECT_EQ(count_of(s, "D'("), 8u);
  EXPECT_EQ(count_of(s, "beta:endpointSwap"), 1u);
}

TEST(Svg, PointsOnCircle) {
  auto p = svg::on_circle(Rational(1, 4));
  EXPECT_NEAR(p.x, 500.0, 1e-9);
  EXPECT_NEAR(p.y, 50.0, 1e-9);
}
