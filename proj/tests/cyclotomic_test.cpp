#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "jacobi/cyclotomic.hpp"
#include "jacobi/error.hpp"
#include "support.hpp"

namespace jacobi {
namespace {

IntPoly ints(std::initializer_list<long> coeffs) {
  IntPoly p;
  for (auto c : coeffs) p.emplace_back(c);
  return p;
}

TEST(CyclotomicPolynomial, SmallConductors) {
  EXPECT_EQ(cyclotomic_polynomial(1), ints({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), ints({1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), ints({1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), ints({1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), ints({1, 0, -1, 0, 1}));
}

TEST(CyclotomicPolynomial, ProductOverDivisorsIsXmMinusOne) {
  for (unsigned m = 1; m <= 64; ++m) {
    IntPoly product = ints({1});
    for (unsigned d = 1; d <= m; ++d) {
      if (m % d == 0) product = poly_mul(product, cyclotomic_polynomial(d));
    }
    IntPoly expected(m + 1, Integer(0));
    expected[0] = -1;
    expected[m] = 1;
    ASSERT_EQ(product, expected) << "m = " << m;
    ASSERT_EQ(cyclotomic_polynomial(m).size(), euler_phi(m) + 1) << "m = " << m;
  }
}

TEST(Cyclotomic, RootPowerReduces) {
  EXPECT_TRUE(Cyclotomic::root_power(4, 0).is_one());
  const auto z2 = Cyclotomic::root_power(4, 2);
  EXPECT_EQ(z2.coefficients(), (std::vector<Rational>{-1, 0}));
  EXPECT_EQ(Cyclotomic::root_power(4, -1), Cyclotomic::root_power(4, 3));
  EXPECT_EQ(Cyclotomic::root_power(3, 1) + Cyclotomic::root_power(3, 2), testing::rational(3, -1));
}

TEST(Cyclotomic, MinimalPolynomialRelations) {
  EXPECT_TRUE((Cyclotomic::root_power(3, 1) + Cyclotomic::root_power(3, 2) + Cyclotomic::one(3)).is_zero());
  EXPECT_TRUE((Cyclotomic::root_power(5, 1) * Cyclotomic::root_power(5, 4)).is_one());
  for (unsigned m : {2u, 5u, 7u, 12u}) {
    EXPECT_TRUE((Cyclotomic::one(m).scaled(Rational(1, m)) * testing::rational(m, m)).is_one());
  }
}

TEST(Cyclotomic, RootPowersMultiply) {
  for (unsigned m = 1; m <= 24; ++m) {
    for (unsigned j = 0; j < m; ++j) {
      for (unsigned k = 0; k < m; ++k) {
        ASSERT_EQ(Cyclotomic::root_power(m, j) * Cyclotomic::root_power(m, k),
                  Cyclotomic::root_power(m, j + k))
            << m << " " << j << " " << k;
      }
    }
  }
}

TEST(Cyclotomic, RootExponentFindsUnits) {
  for (unsigned m : {1u, 2u, 6u, 8u, 15u}) {
    for (unsigned k = 0; k < m; ++k) {
      const auto e = Cyclotomic::root_power(m, k).root_exponent();
      ASSERT_TRUE(e.has_value());
      EXPECT_EQ(*e, k);
    }
    EXPECT_FALSE(testing::rational(m, 2).root_exponent().has_value());
    EXPECT_FALSE(Cyclotomic::zero(m).root_exponent().has_value());
  }
}

TEST(Cyclotomic, Embedding) {
  EXPECT_EQ(Cyclotomic::one(7).embed(), std::complex<double>(1, 0));
  EXPECT_LT(std::abs(Cyclotomic::root_power(4, 1).embed() - std::complex<double>(0, 1)), 1e-12);
  EXPECT_LT(std::abs(std::abs(Cyclotomic::root_power(6, 1).embed()) - 1.0), 1e-12);
}

TEST(Cyclotomic, EmbeddingIsRingHomomorphism) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned m = static_cast<unsigned>(rng.between(1, 16));
    const auto a = rng.cyclotomic(m);
    const auto b = rng.cyclotomic(m);
    EXPECT_LT(std::abs((a + b).embed() - (a.embed() + b.embed())), 1e-10);
    EXPECT_LT(std::abs((a * b).embed() - a.embed() * b.embed()), 1e-10);
  }
}

TEST(Cyclotomic, FieldAxiomsOnRandomElements) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned m = static_cast<unsigned>(rng.between(1, 12));
    const auto a = rng.cyclotomic(m), b = rng.cyclotomic(m), c = rng.cyclotomic(m);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Cyclotomic, GaloisActsOnRoots) {
  EXPECT_EQ(Cyclotomic::root_power(5, 1).galois(2), Cyclotomic::root_power(5, 2));
  EXPECT_EQ(Cyclotomic::root_power(8, 3).galois(-1), Cyclotomic::root_power(8, 5));
  EXPECT_THROW((void)Cyclotomic::root_power(4, 1).galois(2), DomainError);
  testing::Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = rng.cyclotomic(12), b = rng.cyclotomic(12);
    EXPECT_EQ((a * b).galois(5), a.galois(5) * b.galois(5));
  }
}

TEST(Cyclotomic, AccumulatorMatchesTermwiseSum) {
  testing::Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned m = static_cast<unsigned>(rng.between(1, 20));
    CyclotomicAccumulator acc(m);
    Cyclotomic direct = Cyclotomic::zero(m);
    for (int k = 0; k < 10; ++k) {
      const auto a = rng.cyclotomic(m), b = rng.cyclotomic(m);
      const long e = rng.between(-30, 30);
      acc.add_product(a, b, e);
      direct += (a * b).times_root(e);
      acc.add_root(e, 3);
      direct += Cyclotomic::root_power(m, e).scaled(3);
    }
    acc.scale(Rational(2, 7));
    EXPECT_EQ(acc.finish(), direct.scaled(Rational(2, 7)));
  }
}

TEST(Cyclotomic, SerializationRoundTrips) {
  const auto z = testing::rational(4, -1, 2) + Cyclotomic::root_power(4, 1).scaled(Rational(3, 4));
  EXPECT_EQ(z.serialize(), (std::vector<std::string>{"-1/2", "3/4"}));
  EXPECT_EQ(Cyclotomic::one(3).serialize(), (std::vector<std::string>{"1/1", "0"}));
  const auto strings = z.serialize();
  EXPECT_EQ(Cyclotomic::parse(4, strings), z);
  const std::vector<std::string> bare{"2", "-3"};
  EXPECT_EQ(Cyclotomic::parse(4, bare).coefficients(), (std::vector<Rational>{2, -3}));
}

TEST(Cyclotomic, ParseRejectsMalformed) {
  const std::vector<std::string> short_list{"1"};
  EXPECT_THROW(Cyclotomic::parse(4, short_list), MalformedInput);
  EXPECT_THROW(parse_rational("1/0"), MalformedInput);
  EXPECT_THROW(parse_rational("x"), MalformedInput);
  EXPECT_THROW(parse_rational(""), MalformedInput);
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
}

TEST(Cyclotomic, MixedConductorsRejected) {
  EXPECT_THROW((void)(Cyclotomic::one(3) + Cyclotomic::one(4)), DomainError);
}

}  // namespace
}  // namespace jacobi
