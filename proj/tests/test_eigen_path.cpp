#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

namespace hyperpres {
namespace {

using testing::P;
using testing::Q;

LinOp op(int n, std::initializer_list<Poly> images) { return LinOp(n, std::vector<Poly>(images)); }

std::vector<Rational> grid(long lo, long hi, int steps) { return uniform_grid(Q(lo), Q(hi), steps); }

TEST(PathSamples, IdentityZerosArePlusMinusT) {
  const std::vector<Rational> ts{Q(0), Q(1), Q(2)};
  const auto s = path_samples(LinOp::identity(2), P({1}), Q(0), ts, pow2_neg(30));
  ASSERT_EQ(s.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    ASSERT_TRUE(s[i].hyperbolic);
    const auto top1 = s[i].partial_sums.at(0);
    EXPECT_TRUE(top1.lo <= ts[i] && ts[i] <= top1.hi);
    EXPECT_TRUE(s[i].zeros[0].contains(-ts[i]));
    EXPECT_EQ(s[i].full_sum, 0);
  }
}

TEST(PathSamples, DerivativeOfCubic) {
  const std::vector<Rational> ts{Q(1)};
  const auto s = path_samples(LinOp::derivative(3), P({0, 1}), Q(0), ts, pow2_neg(30));
  EXPECT_EQ(s[0].image, P({-1, 0, 3}));
  EXPECT_NEAR(to_double(s[0].zeros[1].lo), 1 / std::sqrt(3.0), 1e-9);
}

TEST(PathSamples, OppositeTGiveIdenticalImages) {
  const auto g = grid(-2, 2, 9);
  const auto s = path_samples(LinOp::derivative(4), P({0, 0, 1}), Q(1, 3), g, pow2_neg(20));
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(s[i].image, s[g.size() - 1 - i].image);
  EXPECT_TRUE(full_sum_constant(s));
}

TEST(PathSamples, RejectsBadCentres) {
  const auto g = grid(-1, 1, 3);
  EXPECT_THROW(path_samples(LinOp::derivative(4), P({0, 0, 2}), Q(0), g, Q(1, 8)), InvalidArgument);
  EXPECT_THROW(path_samples(LinOp::derivative(4), P({0, 1}), Q(0), g, Q(1, 8)), InvalidArgument);
  EXPECT_THROW(path_samples(LinOp::derivative(4), P({1, 0, 1}), Q(0), g, Q(1, 8)), InvalidArgument);
  EXPECT_THROW(path_samples(LinOp::identity(1), P({1}), Q(0), g, Q(1, 8)), InvalidArgument);
}

TEST(ConvexEven, IdentityPathIsCleanAtZeroTolerance) {
  PathParams params;
  params.tolerance = 0;
  params.grid = grid(-2, 2, 17);
  const auto rep = run_path(LinOp::identity(2), P({1}), params);
  EXPECT_TRUE(rep.clean());
  EXPECT_TRUE(rep.full_sum_constant);
}

TEST(ConvexEven, GridMustBeSymmetricAndUniform) {
  const auto s = path_samples(LinOp::identity(2), P({1}), Q(0), grid(-1, 2, 4), Q(1, 8));
  EXPECT_THROW(check_convex_even(s, Q(0)), InvalidArgument);
  const std::vector<Rational> lumpy{Q(-2), Q(-1), Q(1), Q(2)};
  const auto t = path_samples(LinOp::identity(2), P({1}), Q(0), lumpy, Q(1, 8));
  EXPECT_THROW(check_convex_even(t, Q(0)), InvalidArgument);
}

// Derivative of z^2 (z^2 - t^2) is 2z(2z^2 - t^2): zeros 0, +-|t|/sqrt2, so
// the top sums are |t|/sqrt2, |t|/sqrt2 and 0.
TEST(ConvexEven, DerivativePathMatchesClosedForm) {
  PathParams params;
  params.grid = grid(-2, 2, 65);
  const auto samples = path_samples(LinOp::derivative(4), P({0, 0, 1}), Q(0), params.grid, params.width);
  for (const auto& s : samples) {
    ASSERT_TRUE(s.hyperbolic);
    ASSERT_EQ(s.partial_sums.size(), 3u);
    const double top = std::abs(to_double(s.t)) / std::sqrt(2.0);
    for (int k = 0; k < 2; ++k) {
      EXPECT_LE(to_double(s.partial_sums[static_cast<std::size_t>(k)].lo), top + 1e-9);
      EXPECT_GE(to_double(s.partial_sums[static_cast<std::size_t>(k)].hi), top - 1e-9);
    }
  }
  const auto rep = run_path(LinOp::derivative(4), P({0, 0, 1}), params);
  EXPECT_TRUE(rep.clean());
}

TEST(ConvexEven, ShiftedCentresStayClean) {
  Rng rng(6);
  for (int it = 0; it < 6; ++it) {
    PathParams params;
    params.s = rng.ratio(-3, 3, 4);
    params.grid = grid(-2, 2, 17);
    params.width = pow2_neg(30);
    const Poly r = random_hyperbolic(2, derive_seed(6, static_cast<std::uint64_t>(it)), Q(3));
    EXPECT_TRUE(run_path(LinOp::derivative(4), r, params).clean()) << it;
    EXPECT_TRUE(run_path(LinOp::identity(4), r, params).clean()) << it;
  }
}

TEST(ConvexEven, InjectedNonPreserverIsFlagged) {
  const LinOp T = op(3, {P({1}), P({0, 1}), P({1, 0, 1}), P({0, 0, 0, 1})});
  PathParams params;
  params.grid = grid(-2, 2, 17);
  const Poly r = P({-1, 1});
  const auto rep = run_path(T, r, params);
  EXPECT_FALSE(rep.clean());
  EXPECT_TRUE(rep.has_certified_violation() || !rep.anomalies.empty());
  const auto cert = detail::path_certificate(rep, r, params);
  ASSERT_TRUE(cert);
  EXPECT_TRUE(verify_certificate(T, *cert));
}

// Hand-built samples z^2 - f(t)^2 with f concave: zeros -f, f.
TEST(ConvexEven, ConcaveTopSumIsCertified) {
  std::vector<PathSample> s;
  const std::vector<Rational> ts{Q(-1), Q(0), Q(1)};
  const std::vector<Rational> f{Q(0), Q(1), Q(0)};
  for (std::size_t i = 0; i < 3; ++i) {
    PathSample ps;
    ps.t = ts[i];
    ps.image = P({0, 0, 1}) - Poly::constant(f[i] * f[i]);
    ps.hyperbolic = true;
    ps.zeros = root_vector(ps.image, pow2_neg(20));
    for (std::size_t k = 1; k <= 2; ++k) ps.partial_sums.push_back(ps.zeros.top_sum(k));
    ps.full_sum = 0;
    s.push_back(ps);
  }
  const auto rep = check_convex_even(s, pow2_neg(20));
  ASSERT_EQ(rep.convexity_violations.size(), 1u);
  EXPECT_TRUE(rep.convexity_violations[0].certified);
  EXPECT_GT(rep.convexity_violations[0].margin, 0);
  EXPECT_EQ(rep.convexity_violations[0].k, 1);
  const auto mono = check_majorization_monotone(s, default_eq_threshold());
  ASSERT_EQ(mono.monotonicity_violations.size(), 1u);
  EXPECT_EQ(mono.monotonicity_violations[0].index, 1u);
}

TEST(Monotone, IdentityPathIncreases) {
  const auto s = path_samples(LinOp::identity(2), P({1}), Q(0), grid(-2, 2, 5), Q(1, 8));
  EXPECT_TRUE(check_majorization_monotone(s, default_eq_threshold()).monotonicity_violations.empty());
  const auto d = path_samples(LinOp::derivative(3), P({0, 1}), Q(0), grid(-2, 2, 9), Q(1, 8));
  EXPECT_TRUE(check_majorization_monotone(d, default_eq_threshold()).monotonicity_violations.empty());
}

}  // namespace
}  // namespace hyperpres
