#include <gtest/gtest.h>

#include "test_support.hpp"

namespace hyperpres {
namespace {

using testing::P;
using testing::Q;

TEST(Rational, ParsesCanonicalizesAndPrints) {
  EXPECT_EQ(parse_rational("2/4"), Q(1, 2));
  EXPECT_EQ(parse_rational("-3"), Q(-3));
  EXPECT_EQ(parse_rational("+3/6"), Q(1, 2));
  EXPECT_EQ(parse_rational("2^-3"), Q(1, 8));
  EXPECT_EQ(to_string(Q(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Q(5)), "5/1");
  EXPECT_EQ(to_string(Q(0)), "0/1");
}

TEST(Rational, RejectsGarbage) {
  for (const char* bad : {"", "1/0", "abc", "1/-2", "1//2", "0x10", "1.5", "2^-", "-"})
    EXPECT_THROW(parse_rational(bad), InvalidArgument) << bad;
}

TEST(Rational, SimplestBetween) {
  EXPECT_EQ(simplest_between(Q(1, 3), Q(1, 2)), Q(1, 2));
  EXPECT_EQ(simplest_between(Q(3, 10), Q(4, 10)), Q(1, 3));
  EXPECT_EQ(simplest_between(Q(-4, 10), Q(-3, 10)), Q(-1, 3));
  EXPECT_EQ(simplest_between(Q(-1), Q(1)), Q(0));
  EXPECT_EQ(simplest_between(Q(7, 3), Q(7, 3)), Q(7, 3));
  EXPECT_EQ(simplest_between(Q(5, 2), Q(7, 2)), Q(3));
}

TEST(Poly, ZeroPolynomialHasMinusInfinityDegree) {
  const Poly zero;
  EXPECT_TRUE(zero.is_zero());
  EXPECT_TRUE(zero.degree().is_minus_infinity());
  EXPECT_LT(zero.degree(), Degree(0));
  EXPECT_EQ(P({0, 0, 0}), zero);
  EXPECT_EQ(P({5}).degree(), Degree(0));
}

TEST(Poly, Derivative) {
  EXPECT_EQ(P({0, -1, 0, 1}).derivative(), P({-1, 0, 3}));
  EXPECT_TRUE(P({7}).derivative().is_zero());
}

TEST(Poly, Multiply) {
  EXPECT_EQ(P({-1, 1}) * P({1, 1}), P({-1, 0, 1}));
  EXPECT_TRUE((P({1, 1}) * Poly{}).is_zero());
}

TEST(Poly, ComposeAffine) {
  // (2z + 1)^2
  EXPECT_EQ(P({0, 0, 1}).compose_affine(Q(2), Q(1)), P({1, 4, 4}));
  EXPECT_EQ(P({3}).compose_affine(Q(5), Q(-1)), P({3}));
}

TEST(Poly, DivisionWithRemainder) {
  const Poly p = P({1, 2, 3, 4});
  const Poly q = P({-1, 1});
  const auto [quot, rem] = divmod(p, q);
  EXPECT_EQ(quot * q + rem, p);
  EXPECT_EQ(rem, P({10}));
  EXPECT_THROW(divmod(p, Poly{}), InvalidArgument);
  EXPECT_EQ(divmod(q, p).remainder, q);
}

TEST(Poly, GcdIsMonic) {
  const Poly a = P({-1, 0, 1}) * P({2});   // 2(z-1)(z+1)
  const Poly b = P({-1, 1}) * P({-2, 1});  // (z-1)(z-2)
  EXPECT_EQ(gcd(a, b), P({-1, 1}));
  EXPECT_EQ(gcd(a, Poly{}), a.monic());
  EXPECT_EQ(gcd(P({3}), P({0, 1})), P({1}));
}

TEST(Poly, ScalarMultipleDetection) {
  EXPECT_TRUE(is_scalar_multiple(P({0, 0, 2}), P({0, 0, 1})));
  EXPECT_FALSE(is_scalar_multiple(P({0, 1, 2}), P({0, 0, 1})));
  EXPECT_FALSE(is_scalar_multiple(P({1}), Poly{}));
  EXPECT_TRUE(is_scalar_multiple(Poly{}, P({1})));
}

TEST(Poly, EvaluationAndSigns) {
  const Poly p = P({-4, 0, 1});
  EXPECT_EQ(p(Q(3)), Q(5));
  EXPECT_EQ(p.sign_at(Q(2)), 0);
  EXPECT_EQ(P({0, 0, 0, 1}).sign_at_neg_inf(), -1);
  EXPECT_EQ(P({0, 0, 0, -1}).sign_at_neg_inf(), 1);
  EXPECT_EQ(to_string(P({-1, 0, 3})), "3z^2 - 1");
}

TEST(Poly, RandomRingIdentities) {
  Rng rng(11);
  auto rnd = [&] {
    std::vector<Rational> c;
    const int d = static_cast<int>(rng.uniform(0, 6));
    for (int i = 0; i <= d; ++i) c.push_back(rng.ratio(-9, 9, 5));
    return Poly(std::move(c));
  };
  for (int it = 0; it < 200; ++it) {
    const Poly a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b).derivative(), a.derivative() * b + a * b.derivative());
    if (!b.is_zero()) {
      const auto [q, r] = divmod(a, b);
      EXPECT_EQ(q * b + r, a);
      EXPECT_LT(r.degree(), b.degree());
    }
  }
}

}  // namespace
}  // namespace hyperpres
