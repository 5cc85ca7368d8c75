#include <gtest/gtest.h>

#include <random>

#include "aeroplane/coding.hpp"
#include "oracles.hpp"

using namespace aeroplane;

TEST(Itinerary, FiveSixteenths) {
  EXPECT_EQ(itinerary(Angle::parse("5/16"), 6).str(), "L3 L2 C L1 R1 R1");
  EXPECT_EQ(itinerary(Angle::parse("5/16"), 6, true).str(), "L3 L2 UC L1 R1 R1");
}

TEST(Itinerary, ReportsBoundaryIndex) {
  try {
    itinerary(Angle::parse("3/28"), 4);
    FAIL() << "expected a boundary error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundaryAngle);
    ASSERT_TRUE(e.index().has_value());
    EXPECT_EQ(*e.index(), 1u);
  }
}

TEST(Itinerary, AgreesWithIntegerOracle) {
  std::mt19937_64 rng(11);
  const std::uint64_t dyadic = std::uint64_t{1} << 20;
  const std::uint64_t periodic = (std::uint64_t{1} << 18) - 1;
  for (int i = 0; i < 2000; ++i) {
    for (std::uint64_t den : {dyadic, periodic}) {
      std::uint64_t num = rng() % den;
      auto expected = oracle::itinerary(num, den, 24);
      if (!expected) {
        EXPECT_THROW(itinerary(Angle(BigInt(num), BigInt(den)), 24), Error);
        continue;
      }
      EXPECT_EQ(itinerary(Angle(BigInt(num), BigInt(den)), 24), *expected) << num << "/" << den;
    }
  }
}

TEST(RegionTable, TransitionsExactAndUnique) {
  auto check = verify_region_table();
  EXPECT_TRUE(check.transitions_exact);
  EXPECT_EQ(check.consistent_arrangements, 1u);
}

TEST(UpperArc, KnownValues) {
  Arc a = upper_arc(Word::parse("L3 L2 R3 L3"));
  EXPECT_EQ(to_string(a.lo), "2/7");
  EXPECT_EQ(to_string(a.hi), "33/112");
  Arc c = upper_arc(Word::parse("C"));
  EXPECT_EQ(to_string(c.lo), "3/14");
  EXPECT_EQ(to_string(c.hi), "2/7");
}

TEST(UpperArc, MatchesGridOracleUpToLengthSeven) {
  const unsigned bits = 14;
  const std::uint64_t den = std::uint64_t{1} << bits;
  for (const auto& w : oracle::restricted_words(7)) {
    Arc arc = upper_arc(w);
    for (std::uint64_t k = 1; 2 * k < den; ++k) {
      Rational t{BigInt(k), BigInt(den)};
      bool inside = arc.lo < t && t < arc.hi;
      ASSERT_EQ(inside, oracle::in_upper_trace(k, bits, w)) << w.str() << " at " << k << "/" << den;
    }
  }
}

TEST(UpperArc, RejectsOutsideRestrictedAlphabet) {
  EXPECT_THROW(upper_arc(Word::parse("L1 R2")), Error);
  EXPECT_THROW(upper_arc(Word::parse("L3 R3")), Error);
  EXPECT_THROW(upper_arc(Word::parse("C L3")), Error);
  try {
    upper_arc(Word::parse("L3 L2 L3"));
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InadmissibleWord);
  }
}

TEST(Order, AgreesWithArcs) {
  auto words = oracle::restricted_words(6);
  for (std::size_t i = 0; i < words.size(); i += 3) {
    for (std::size_t j = 0; j < words.size(); j += 5) {
      const Word& v = words[i];
      const Word& w = words[j];
      auto c = compare_words(v, w);
      if (v.starts_with(w) || w.starts_with(v)) {
        EXPECT_EQ(c.has_value(), v == w);
        continue;
      }
      ASSERT_TRUE(c.has_value());
      Arc av = upper_arc(v);
      Arc aw = upper_arc(w);
      if (*c == std::strong_ordering::less) {
        EXPECT_LE(av.hi, aw.lo) << v.str() << " vs " << w.str();
      } else {
        EXPECT_GE(av.lo, aw.hi) << v.str() << " vs " << w.str();
      }
    }
  }
}

TEST(Order, PrefixRelatedThrows) {
  try {
    word_less(Word::parse("L3 L2"), Word::parse("L3 L2 R3"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PrefixRelated);
  }
}

TEST(Order, IsAStrictTotalOrderOnPrecriticalWords) {
  std::vector<Word> ended;
  for (const auto& w : oracle::restricted_words(7)) {
    if (w.back() == Letter::C) ended.push_back(w);
  }
  std::sort(ended.begin(), ended.end(), [](const Word& a, const Word& b) { return word_less(a, b); });
  for (std::size_t i = 0; i + 1 < ended.size(); ++i) {
    EXPECT_LE(upper_arc(ended[i]).hi, upper_arc(ended[i + 1]).lo);
  }
}

TEST(WordParse, AcceptedForms) {
  EXPECT_EQ(Word::parse("L3.L2.R3.L3^5").size(), 8u);
  EXPECT_EQ(Word::parse("L3(L2R3)^2"), Word::parse("L3 L2 R3 L2 R3"));
  EXPECT_EQ(Word::parse("L3,L2,C"), Word::parse("L3 L2 C"));
  EXPECT_THROW(Word::parse("L4"), Error);
  EXPECT_THROW(Word::parse("(L3"), Error);
}

TEST(WordParse, RoundTripsRandomWords) {
  std::mt19937 rng(3);
  const std::array<Letter, 9> all = {Letter::L1, Letter::L2, Letter::L3, Letter::R1, Letter::R2,
                                     Letter::R3, Letter::C,  Letter::UC, Letter::BC};
  for (int i = 0; i < 1000; ++i) {
    std::vector<Letter> letters(rng() % 30);
    for (auto& e : letters) e = all[rng() % all.size()];
    Word w(letters);
    EXPECT_EQ(Word::parse(w.str()), w);
  }
}

TEST(Occurrences, MatchesNaiveSearch) {
  std::mt19937 rng(5);
  const std::array<Letter, 3> alphabet = {Letter::L3, Letter::L2, Letter::R3};
  for (int i = 0; i < 300; ++i) {
    std::vector<Letter> text(rng() % 60), pat(rng() % 4 + 1);
    for (auto& e : text) e = alphabet[rng() % 3];
    for (auto& e : pat) e = alphabet[rng() % 3];
    Word t(text), p(pat);
    std::vector<std::size_t> naive;
    for (std::size_t j = 0; j + p.size() <= t.size(); ++j) {
      if (std::equal(p.begin(), p.end(), t.begin() + static_cast<std::ptrdiff_t>(j))) naive.push_back(j);
    }
    EXPECT_EQ(t.occurrences(p), naive);
  }
}

TEST(Leaves, PeriodicLeafOfTheBasicCycle) {
  Leaf leaf = periodic_leaf(Word::parse("L3 L2 R3"));
  EXPECT_EQ(leaf.first, Angle::parse("2/7"));
  EXPECT_EQ(leaf.second, Angle::parse("5/7"));
}

TEST(Precritical, PreperiodAndErrors) {
  EXPECT_EQ(point_from_word(Word::parse("L3 L2 C")).preperiod(), 2u);
  EXPECT_THROW(point_from_word(Word::parse("L3 L2")), Error);
  EXPECT_THROW(point_from_word(Word::parse("L3 C L1 C")), Error);
  auto p = point_from_word(Word::parse("L3 L2 C"));
  EXPECT_TRUE(point_in_region(p, Word::parse("L3 L2 C L1 R2")));
}
