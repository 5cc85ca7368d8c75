#include <gtest/gtest.h>

#include <map>
#include <random>

#include "aeroplane/angle.hpp"

using namespace aeroplane;

TEST(Angle, ReducesIntoUnitInterval) {
  EXPECT_EQ(Angle(BigInt(17), BigInt(14)).str(), "3/14");
  EXPECT_EQ(Angle(BigInt(-1), BigInt(7)).str(), "6/7");
  EXPECT_EQ(Angle(BigInt(7), BigInt(7)).str(), "0");
  EXPECT_EQ(Angle::parse("10/14"), Angle(BigInt(5), BigInt(7)));
}

TEST(Angle, ParseRejectsGarbage) {
  for (const char* bad : {"", "1/0", "a/3", "1//2", "/3", "3/"}) {
    EXPECT_THROW(Angle::parse(bad), Error) << bad;
  }
}

TEST(Angle, StringRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    BigInt den = BigInt(rng() % 100000 + 1) * BigInt(rng() % 1000 + 1);
    Angle a(BigInt(rng()), den);
    EXPECT_EQ(Angle::parse(a.str()), a);
  }
}

TEST(Angle, DoublingAndConjugate) {
  EXPECT_EQ(double_angle(Angle(BigInt(3), BigInt(7))), Angle(BigInt(6), BigInt(7)));
  EXPECT_EQ(double_angle(Angle(BigInt(4), BigInt(7))), Angle(BigInt(1), BigInt(7)));
  EXPECT_EQ(conjugate(Angle(BigInt(2), BigInt(7))), Angle(BigInt(5), BigInt(7)));
  EXPECT_EQ(conjugate(Angle(BigInt(0), BigInt(1))), Angle(BigInt(0), BigInt(1)));
}

TEST(Angle, OrbitTypeMatchesIteration) {
  for (long den = 1; den <= 200; ++den) {
    for (long num = 0; num < den; ++num) {
      Angle theta{BigInt(num), BigInt(den)};
      std::map<Angle, std::size_t> seen;
      Angle x = theta;
      std::size_t i = 0;
      while (!seen.count(x)) {
        seen[x] = i++;
        x = double_angle(x);
      }
      OrbitType expected{seen[x], i - seen[x]};
      ASSERT_EQ(orbit_type(theta), expected) << theta.str();
    }
  }
}

TEST(Angle, ToDoubleIsClose) {
  EXPECT_NEAR(Angle(BigInt(3), BigInt(7)).to_double(), 3.0 / 7.0, 1e-15);
  BigInt big = BigInt(1) << 300;
  EXPECT_NEAR(Angle(big / 3, big).to_double(), 1.0 / 3.0, 1e-15);
}
