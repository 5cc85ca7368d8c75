#include <gtest/gtest.h>

#include "aeroplane/eau.hpp"

using namespace aeroplane;

namespace {

const Word kE = Word::parse("L3 L2 R3");

}  // namespace

TEST(Eau, BasicSplitPassesEveryCondition) {
  const auto& b = base_words();
  auto r = check_eau_conditions(kE, b.a, b.b, b.u0, list_exchangeable_pairs(3));
  for (const char* id : {"cond-1", "cond-2", "cond-3", "cond-4", "cond-5", "cond-6", "cond-7", "cond-8", "cond-8-order"}) {
    ASSERT_NE(r.find(id), nullptr) << id;
    EXPECT_EQ(r.find(id)->status, Status::Pass) << id;
  }
}

TEST(Eau, TZeroTailFailsOnlyTheTailAlphabet) {
  const auto& b = base_words();
  auto r = check_eau_conditions(kE, b.a, b.b, b.t0, list_exchangeable_pairs(3));
  EXPECT_EQ(r.find("cond-3")->status, Status::Fail);
  EXPECT_EQ(r.count(Status::Fail), 1u);
}

TEST(Eau, LeadingBlockMustBeOddRunThenL2) {
  const auto& b = base_words();
  auto r = check_eau_conditions(Word::parse("L3 L3 L2 R3"), b.a, b.b, b.u0, list_exchangeable_pairs(3));
  EXPECT_EQ(r.find("cond-1")->status, Status::Fail);
}

TEST(Eau, PairFamiliesSatisfyNecessaryConditions) {
  auto pairs = list_exchangeable_pairs(3);
  EXPECT_EQ(pairs.size(), 6u);
  EXPECT_TRUE(check_exchangeable_pairs(pairs).passed());
  EXPECT_EQ(pairs[0].first, base_words().a);
  EXPECT_EQ(pairs[0].second, base_words().b);
}

TEST(Eau, DecompositionsReassembleAndCount) {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto level = build_level(n);
    Word word = level.v + level.u;
    auto pairs = pairs_for_length(word.size());
    auto found = find_decompositions(word, pairs);
    EXPECT_GE(found.size(), n + 1) << n;
    for (const auto& d : found) {
      EXPECT_EQ(d.e + d.a + d.u, word);
      EXPECT_EQ(pairs[d.pair_index].first, d.a);
      EXPECT_EQ(pairs[d.pair_index].second, d.b);
      EXPECT_EQ(d.e.size(), d.position);
    }
  }
}

TEST(Eau, DecompositionReportAcrossLevels) {
  auto level = build_level(4);
  EXPECT_TRUE(decomposition_report(level.v.size() + level.u.size()).passed());
}
