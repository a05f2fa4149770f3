#include <gtest/gtest.h>

#include "test_support.hpp"

namespace hyperpres {
namespace {

using testing::P;
using testing::Q;

LinOp op(int n, std::initializer_list<Poly> images) { return LinOp(n, std::vector<Poly>(images)); }

/// Bivariate product sum a_ij z^i w^j built by hand.
Symbol bivariate(std::initializer_list<std::initializer_list<long>> rows) {
  Symbol F(rows.size(), rows.begin()->size());
  std::size_t j = 0;
  for (const auto& r : rows) {
    std::size_t l = 0;
    for (long c : r) F.at(j, l++) = c;
    ++j;
  }
  return F;
}

TEST(LinOp, Construction) {
  EXPECT_THROW(LinOp(0, {P({1})}), InvalidArgument);
  EXPECT_THROW(LinOp(2, {P({1}), P({0, 1})}), InvalidArgument);
  EXPECT_EQ(LinOp::derivative(2), op(2, {Poly{}, P({1}), P({0, 2})}));
}

TEST(LinOp, ApplyExamples) {
  EXPECT_EQ(apply(LinOp::identity(2), P({-1, 0, 1})), P({-1, 0, 1}));
  EXPECT_EQ(apply(LinOp::derivative(3), P({0, -1, 0, 1})), P({-1, 0, 3}));
  EXPECT_EQ(apply(op(2, {Poly{}, P({1}), P({0, 2})}), P({7, 5, 3})), P({5, 6}));
  EXPECT_THROW(apply(LinOp::identity(1), P({0, 0, 1})), InvalidArgument);
  EXPECT_EQ(apply(LinOp::affine_substitution(2, Q(2), Q(1)), P({0, 0, 1})), P({1, 4, 4}));
}

TEST(Symbol, IdentityIsBinomialPower) {
  // z + w
  EXPECT_EQ(symbol(LinOp::identity(1)), bivariate({{0, 1}, {1, 0}}));
  // z^2 + 2zw + w^2
  EXPECT_EQ(symbol(LinOp::identity(2)), bivariate({{0, 0, 1}, {0, 2, 0}, {1, 0, 0}}));
  // (z - w)^2
  EXPECT_EQ(symbol(LinOp::identity(2), true), bivariate({{0, 0, 1}, {0, -2, 0}, {1, 0, 0}}));
}

TEST(Symbol, LineRestriction) {
  const Symbol F = bivariate({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}});  // z^2 + w^2
  EXPECT_EQ(F.restrict_to_line(Q(1), Q(1), Q(0), Q(0)), P({0, 0, 2}));
  EXPECT_EQ(F.restrict_to_line(Q(1), Q(2), Q(0), Q(1)), P({1, 4, 5}));
}

TEST(Symbol, LinearInTheOperator) {
  Rng rng(4);
  auto random_op = [&](int n) {
    std::vector<Poly> im;
    for (int k = 0; k <= n; ++k) {
      std::vector<Rational> c;
      const int d = static_cast<int>(rng.uniform(-1, n + 1));
      for (int j = 0; j <= d; ++j) c.push_back(rng.ratio(-9, 9, 4));
      im.emplace_back(std::move(c));
    }
    return LinOp(n, std::move(im));
  };
  for (int it = 0; it < 100; ++it) {
    const int n = static_cast<int>(rng.uniform(1, 5));
    const LinOp a = random_op(n), b = random_op(n);
    for (bool reflect : {false, true}) {
      const Symbol sa = symbol(a, reflect), sb = symbol(b, reflect), ss = symbol(a + b, reflect);
      for (std::size_t j = 0; j < ss.z_size(); ++j)
        for (std::size_t l = 0; l < ss.w_size(); ++l) {
          auto get = [&](const Symbol& s) { return j < s.z_size() ? s.at(j, l) : Rational(0); };
          EXPECT_EQ(get(ss), get(sa) + get(sb));
        }
    }
    const Rational c = rng.ratio(-5, 5, 3);
    const Rational x = rng.ratio(-5, 5, 3);
    // F_{cT}(x, w) = c F_T(x, w) on the line z = x, w = 1 + t.
    EXPECT_EQ(symbol(c * a).restrict_to_line(Q(0), Q(1), x, Q(1)),
              symbol(a).restrict_to_line(Q(0), Q(1), x, Q(1)) * c);
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank_of_image(LinOp::derivative(2)), 2);
  EXPECT_TRUE(is_degenerate(LinOp::derivative(2)));
  EXPECT_EQ(rank_of_image(LinOp::identity(2)), 3);
  EXPECT_FALSE(is_degenerate(LinOp::identity(2)));
  EXPECT_EQ(rank_of_image(LinOp::zero(3)), 0);
  EXPECT_TRUE(is_degenerate(LinOp::zero(3)));
  EXPECT_EQ(rank_of_image(op(2, {P({1, 1}), P({2, 2}), P({0, 0, 1})})), 2);
}

TEST(DegreeProfile, Examples) {
  const auto id = degree_profile(LinOp::identity(3));
  EXPECT_TRUE(id.pass);
  EXPECT_EQ(id.profile.K, 0);
  EXPECT_EQ(id.profile.L, 3);
  EXPECT_EQ(id.profile.M, 3);
  EXPECT_EQ(id.profile.N, 3);
  const auto bad = degree_profile(op(3, {P({1}), P({0, 1}), P({0, 0, 0, 1}), P({0, 0, 1})}));
  EXPECT_FALSE(bad.pass);
  const auto zero = degree_profile(LinOp::zero(2));
  EXPECT_FALSE(zero.pass);
  EXPECT_EQ(zero.failed_clause, "support");
  EXPECT_TRUE(zero.profile.empty_support());
}

TEST(DegreeProfile, Clauses) {
  // Hole inside the support.
  EXPECT_EQ(degree_profile(op(2, {P({1}), Poly{}, P({0, 0, 1})})).failed_clause, "support");
  // Degrees 2, 2, 2: plateau from 0 to 2 but N = n requires L = n too.
  EXPECT_EQ(degree_profile(op(2, {P({0, 0, 1}), P({1, 0, 1}), P({0, 1, 1})})).failed_clause, "top_degree");
  // Degrees 1, 2, 1 with n = 2: peak at L = M = 1, so the top image drops.
  EXPECT_EQ(degree_profile(op(2, {P({0, 1}), P({0, 0, 1}), P({1, 1})})).failed_clause, "top_degree");
  // Degrees 0, 1, 3, 2: the rise skips a degree.
  EXPECT_EQ(degree_profile(op(3, {P({1}), P({0, 1}), P({0, 0, 0, 1}), P({0, 0, 1})})).failed_clause,
            "plateau");
  // Derivative: T(1) = 0, so K = 1; degrees then rise by one up to k = n.
  const auto d = degree_profile(LinOp::derivative(3));
  EXPECT_TRUE(d.pass);
  EXPECT_EQ(d.profile.K, 1);
  EXPECT_EQ(d.profile.L, 3);
  // Shifted operator z p(z): degrees k + 1, L = M = N = n.
  std::vector<Poly> shift;
  for (int k = 0; k <= 3; ++k) shift.push_back(Poly::monomial(Q(1), k + 1));
  EXPECT_TRUE(degree_profile(LinOp(3, shift)).pass);
}

TEST(Gamma, Examples) {
  const auto id = gamma_sequence(LinOp::identity(2));
  EXPECT_TRUE(id.pass);
  EXPECT_EQ(id.seq.r, 0);
  EXPECT_EQ(id.seq.gamma, testing::vec({1, 1, 1}));
  const auto d = gamma_sequence(LinOp::derivative(3));
  EXPECT_TRUE(d.pass);
  EXPECT_EQ(d.seq.r, -1);
  EXPECT_EQ(d.seq.gamma, testing::vec({0, 1, 2, 3}));
  const auto gap = gamma_sequence(op(2, {P({1}), P({1}), P({0, 0, 1})}));
  EXPECT_FALSE(gap.pass);
  EXPECT_EQ(gap.seq.gamma, testing::vec({1, 0, 1}));
  EXPECT_EQ(gap.failed_clause, "gamma_support");
  EXPECT_THROW(gamma_sequence(LinOp::zero(2)), WrongBranch);
}

TEST(Gamma, SignPatterns) {
  // gamma = (1, -1, 1) alternates; (1, -1, -1) is neither.
  EXPECT_TRUE(gamma_sequence(op(2, {P({1}), P({0, -1}), P({0, 0, 1})})).pass);
  const auto bad = gamma_sequence(op(2, {P({1}), P({0, -1}), P({0, 0, -1})}));
  EXPECT_FALSE(bad.pass);
  EXPECT_EQ(bad.failed_clause, "gamma_sign");
}

}  // namespace
}  // namespace hyperpres
