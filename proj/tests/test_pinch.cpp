#include <gtest/gtest.h>

#include "test_support.hpp"

namespace hyperpres {
namespace {

using testing::P;
using testing::Q;
using testing::vec;

TEST(ApplyMove, Examples) {
  EXPECT_EQ(apply_move(vec({-3, 3}), PinchMove{1, 2, Q(1)}), vec({-2, 2}));
  EXPECT_EQ(apply_move(vec({-3, 3}), PinchMove{1, 2, Q(3)}), vec({0, 0}));
  EXPECT_EQ(apply_move(vec({0, 1, 5}), PinchMove{2, 3, Q(2)}), vec({0, 3, 3}));
}

TEST(ApplyMove, WidePairResorts) {
  // Moving positions 1 and 3 of (0, 1, 4) by 3/2 passes the middle zero.
  EXPECT_EQ(apply_move(vec({0, 1, 4}), PinchMove{1, 3, Q(3, 2)}),
            (RootList{Q(1), Q(3, 2), Q(5, 2)}));
}

TEST(ApplyMove, RejectsBadMoves) {
  EXPECT_THROW(apply_move(vec({-3, 3}), PinchMove{1, 2, Q(4)}), InvalidMove);
  EXPECT_THROW(apply_move(vec({-3, 3}), PinchMove{1, 2, Q(-1)}), InvalidMove);
  EXPECT_THROW(apply_move(vec({-3, 3}), PinchMove{2, 3, Q(0)}), InvalidMove);
  EXPECT_THROW(apply_move(vec({-3, 3}), PinchMove{0, 1, Q(0)}), InvalidMove);
  EXPECT_THROW(apply_move(vec({3, -3}), PinchMove{1, 2, Q(0)}), InvalidArgument);
}

TEST(IsPinch, Examples) {
  const auto m = is_pinch(vec({-2, 2}), vec({-3, 3}));
  ASSERT_TRUE(m);
  EXPECT_EQ(*m, (PinchMove{1, 2, Q(1)}));
  const auto id = is_pinch(vec({1, 4}), vec({1, 4}));
  ASSERT_TRUE(id);
  EXPECT_EQ(id->amount, 0);
  EXPECT_FALSE(is_pinch(vec({0, 1}), vec({-3, 3})));
  EXPECT_FALSE(is_pinch(vec({-1, 1}), vec({-2, 3})));
  EXPECT_FALSE(is_pinch(vec({0}), vec({0})));
}

TEST(IsPinch, OuterPairOfThree) {
  // (0, 0, 0) arises from (-1, 0, 1) by moving the outer pair together.
  const auto m = is_pinch(vec({0, 0, 0}), vec({-1, 0, 1}));
  ASSERT_TRUE(m);
  EXPECT_EQ(*m, (PinchMove{1, 3, Q(1)}));
  EXPECT_EQ(apply_move(vec({-1, 0, 1}), *m), vec({0, 0, 0}));
  // Three coordinates moving cannot be one pinch.
  EXPECT_FALSE(is_pinch(vec({0, 0, 0}), vec({-2, 1, 1})));
}

TEST(Decompose, Examples) {
  const auto a = decompose(vec({0, 0}), vec({-1, 1}));
  ASSERT_EQ(a.moves.size(), 1u);
  EXPECT_EQ(a.moves[0], (PinchMove{1, 2, Q(1)}));
  const auto b = decompose(vec({-1, 0, 1}), vec({-2, 0, 2}));
  EXPECT_EQ(b.end(), vec({-1, 0, 1}));
  EXPECT_LE(b.moves.size(), 2u);
  EXPECT_TRUE(decompose(vec({1, 2}), vec({1, 2})).moves.empty());
  EXPECT_THROW(decompose(vec({-2, 2}), vec({-1, 1})), PreconditionViolation);
}

void expect_sound_chain(const RootList& x, const RootList& y) {
  const auto chain = decompose(x, y);
  const auto traj = chain.trajectory();
  ASSERT_EQ(traj.front(), y);
  ASSERT_EQ(traj.back(), x);
  EXPECT_LE(chain.moves.size(), x.size() - 1);
  Rational sum_y(0);
  for (const auto& v : y) sum_y += v;
  for (std::size_t l = 0; l + 1 < traj.size(); ++l) {
    EXPECT_GT(chain.moves[l].amount, 0);
    const auto m = is_pinch(traj[l + 1], traj[l]);
    ASSERT_TRUE(m) << "step " << l;
    EXPECT_EQ(apply_move(traj[l], *m), traj[l + 1]);
    EXPECT_EQ(vec_majorizes(traj[l + 1], traj[l]).relation, Relation::Majorized);
    Rational s(0);
    for (const auto& v : traj[l + 1]) s += v;
    EXPECT_EQ(s, sum_y);
  }
}

TEST(Decompose, SoundOnRandomMajorizingPairs) {
  Rng rng(31);
  for (int it = 0; it < 1000; ++it) {
    const int n = static_cast<int>(rng.uniform(1, 8));
    RootList x, y;
    if (n >= 2 && it % 2 == 0) {
      random_pinch_pair(n, derive_seed(31, static_cast<std::uint64_t>(it)), Q(7), &x, &y);
    } else {
      // Averaging blocks of y gives a vector majorized by y.
      y = testing::random_sorted(rng, n, 60, 6);
      x = y;
      const int a = static_cast<int>(rng.uniform(0, n - 1));
      const int b = static_cast<int>(rng.uniform(a, n - 1));
      Rational mean(0);
      for (int i = a; i <= b; ++i) mean += y[static_cast<std::size_t>(i)];
      mean /= (b - a + 1);
      for (int i = a; i <= b; ++i) x[static_cast<std::size_t>(i)] = mean;
    }
    ASSERT_EQ(vec_majorizes(x, y).relation, Relation::Majorized);
    expect_sound_chain(x, y);
  }
}

TEST(RandomPinchPair, Examples) {
  const auto [p2, q2] = random_pinch_pair(2, 123, Q(10));
  EXPECT_EQ(majorizes(p2, q2).relation, Relation::Majorized);
  const auto [p5, q5] = random_pinch_pair(5, 7, Q(10));
  EXPECT_EQ(p5.deg(), 5);
  EXPECT_EQ(majorizes(p5, q5).relation, Relation::Majorized);
  const auto [p0, q0] = random_pinch_pair(2, 1, Q(0));
  EXPECT_EQ(p0, P({0, 0, 1}));
  EXPECT_EQ(q0, P({0, 0, 1}));
  EXPECT_THROW(random_pinch_pair(1, 1, Q(1)), InvalidArgument);
}

TEST(RandomPinchPair, DeterministicAndMajorized) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 6);
    const auto a = random_pinch_pair(n, seed, Q(10));
    EXPECT_EQ(a, random_pinch_pair(n, seed, Q(10)));
    EXPECT_TRUE(a.first.leading() == 1 && a.second.leading() == 1);
    EXPECT_EQ(majorizes(a.first, a.second).relation, Relation::Majorized);
  }
}

}  // namespace
}  // namespace hyperpres
