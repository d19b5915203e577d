#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "sinegap/special_constants.hpp"

using namespace sinegap;

TEST(SpecialConstants, ZetaPrimeMatchesHyperfactorialLimit) {
  EXPECT_NEAR(constant(ConstantName::zeta_prime_minus_one), oracle::zeta_prime_minus_one(), 1e-14);
}

TEST(SpecialConstants, RelationsHold) {
  for (const auto& r : constant_relations()) EXPECT_LT(std::abs(r.residual), 1e-12) << r.name;
}

TEST(SpecialConstants, DysonConstantValue) {
  const double zp = oracle::zeta_prime_minus_one();
  EXPECT_NEAR(constant("dyson_constant"), std::log(2.0) / 12 + 3 * zp, 1e-14);
  EXPECT_NEAR(constant("dyson_constant"), -0.43850116605469075, 1e-14);
}

TEST(SpecialConstants, BarnesGHalfAgainstGlaisher) {
  // G(1/2) = 2^{1/24} e^{1/8} pi^{-1/4} A^{-3/2}
  const double log_a = 1.0 / 12 - oracle::zeta_prime_minus_one();
  const double expected = std::log(2.0) / 24 + 0.125 - std::log(M_PI) / 4 - 1.5 * log_a;
  EXPECT_NEAR(constant(ConstantName::log_barnes_g_half), expected, 1e-13);
}

TEST(SpecialConstants, NamesRoundTrip) {
  for (ConstantName c : all_constants) EXPECT_EQ(parse_constant_name(to_string(c)), c);
  EXPECT_THROW(parse_constant_name("pi"), UsageError);
}
