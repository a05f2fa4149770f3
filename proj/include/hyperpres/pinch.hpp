#ifndef HYPERPRES_PINCH_HPP
#define HYPERPRES_PINCH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperpres/errors.hpp"
#include "hyperpres/order.hpp"
#include "hyperpres/poly.hpp"
#include "hyperpres/random.hpp"
#include "hyperpres/rational.hpp"

namespace hyperpres {

using RootList = std::vector<Rational>;

/// Pushes the zeros at 1-based positions `index` < `partner` of a sorted
/// vector y towards each other by `amount`, 0 <= amount <= (y_partner -
/// y_index) / 2. The result is re-sorted. With partner = index + 1 the
/// vector stays sorted in place; for a wider pair the two moved zeros may
/// pass intermediate ones, which is still one pinch on the multiset of zeros
/// (p = r((z+s)^2 - t^2) with r the product of the untouched factors).
struct PinchMove {
  int index = 1;
  int partner = 2;
  Rational amount;

  bool is_adjacent() const { return partner == index + 1; }
  friend bool operator==(const PinchMove&, const PinchMove&) = default;
};

struct PinchChain {
  RootList start;
  std::vector<PinchMove> moves;

  /// start, then the vector after each move.
  std::vector<RootList> trajectory() const;
  RootList end() const { return trajectory().back(); }
};

inline RootList apply_move(std::span<const Rational> y, const PinchMove& m) {
  const int n = static_cast<int>(y.size());
  if (!is_weakly_increasing(y)) throw InvalidArgument("apply_move: vector must be sorted");
  if (m.index < 1 || m.partner <= m.index || m.partner > n)
    throw InvalidMove("apply_move: positions (" + std::to_string(m.index) + ", " +
                      std::to_string(m.partner) + ") out of range for n = " + std::to_string(n));
  const auto i = static_cast<std::size_t>(m.index - 1);
  const auto j = static_cast<std::size_t>(m.partner - 1);
  const Rational half_gap = (y[j] - y[i]) / 2;
  if (m.amount < 0 || m.amount > half_gap)
    throw InvalidMove("apply_move: amount " + to_string(m.amount) + " outside [0, " +
                      to_string(half_gap) + "]");
  RootList x(y.begin(), y.end());
  x[i] += m.amount;
  x[j] -= m.amount;
  std::sort(x.begin(), x.end());
  return x;
}

inline std::vector<RootList> PinchChain::trajectory() const {
  std::vector<RootList> out{start};
  for (const auto& m : moves) out.push_back(apply_move(out.back(), m));
  return out;
}

/// The move taking y to x, if x is a single pinch of y. Identical vectors
/// give the trivial move (1, 2, 0).
inline std::optional<PinchMove> is_pinch(std::span<const Rational> x, std::span<const Rational> y) {
  if (x.size() != y.size()) throw InvalidArgument("is_pinch: length mismatch");
  if (!is_weakly_increasing(x) || !is_weakly_increasing(y))
    throw InvalidArgument("is_pinch: vectors must be sorted");
  const std::size_t n = x.size();
  if (n < 2) return std::nullopt;
  // Multiset differences: zeros of y that vanished and zeros of x that appeared.
  RootList removed, added;
  std::set_difference(y.begin(), y.end(), x.begin(), x.end(), std::back_inserter(removed));
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(added));
  if (removed.empty() && added.empty()) return PinchMove{1, 2, Rational(0)};
  if (removed.size() != 2 || added.size() != 2) return std::nullopt;
  const Rational t = added[0] - removed[0];
  if (t <= 0 || removed[1] - t != added[1] || added[0] > added[1]) return std::nullopt;
  const auto first = std::lower_bound(y.begin(), y.end(), removed[0]) - y.begin();
  const auto last = std::upper_bound(y.begin(), y.end(), removed[1]) - y.begin() - 1;
  return PinchMove{static_cast<int>(first) + 1, static_cast<int>(last) + 1, t};
}

/// Chain of pinches from y down to x, for x < y. Each step moves the lowest
/// still-unmatched excess of y onto the highest deficit above it (a Robin Hood
/// transfer that keeps the vector sorted), fixing at least one coordinate;
/// the chain has at most n - 1 moves and never a zero amount.
inline PinchChain decompose(std::span<const Rational> x, std::span<const Rational> y) {
  const auto verdict = vec_majorizes(x, y);
  if (verdict.relation != Relation::Majorized)
    throw PreconditionViolation(
        "decompose: x is not majorized by y (" + std::string(to_string(verdict.reason)) +
        " at index " + std::to_string(verdict.failing_index.value_or(-1)) + ", margin " +
        to_string(verdict.margin) + ")");
  const int n = static_cast<int>(x.size());
  PinchChain chain{RootList(y.begin(), y.end()), {}};
  RootList cur(y.begin(), y.end());
  while (!std::equal(cur.begin(), cur.end(), x.begin())) {
    // Ascending positions: hi = smallest index with cur > x (a surplus above),
    // lo = largest index below it with cur < x. Everything strictly between
    // already agrees with x.
    int hi = -1;
    for (int i = 0; i < n; ++i)
      if (cur[static_cast<std::size_t>(i)] > x[static_cast<std::size_t>(i)]) {
        hi = i;
        break;
      }
    int lo = -1;
    for (int i = hi - 1; i >= 0; --i)
      if (cur[static_cast<std::size_t>(i)] < x[static_cast<std::size_t>(i)]) {
        lo = i;
        break;
      }
    if (hi < 0 || lo < 0)
      throw PreconditionViolation("decompose: internal inconsistency, no transfer pair found");
    const auto ulo = static_cast<std::size_t>(lo), uhi = static_cast<std::size_t>(hi);
    const Rational amount = std::min(Rational(cur[uhi] - x[uhi]), Rational(x[ulo] - cur[ulo]));
    PinchMove m{lo + 1, hi + 1, amount};
    cur = apply_move(cur, m);
    chain.moves.push_back(m);
  }
  return chain;
}

/// Random monic hyperbolic pair (p, q), p < q, of degree n with rational zeros
/// in [-bound, bound]; p is q after one to three random pinches.
inline std::pair<Poly, Poly> random_pinch_pair(int n, std::uint64_t seed, const Rational& bound,
                                               RootList* p_roots = nullptr,
                                               RootList* q_roots = nullptr) {
  if (n < 2) throw InvalidArgument("random_pinch_pair: need n >= 2");
  Rng rng(seed);
  RootList y(static_cast<std::size_t>(n));
  for (auto& v : y) v = rng.in_range(bound, 64);
  std::sort(y.begin(), y.end());
  RootList x = y;
  const int pinches = static_cast<int>(rng.uniform(1, 3));
  for (int s = 0; s < pinches; ++s) {
    const int i = static_cast<int>(rng.uniform(1, n - 1));
    const int j = static_cast<int>(rng.uniform(i + 1, n));
    const Rational half_gap = (x[static_cast<std::size_t>(j - 1)] - x[static_cast<std::size_t>(i - 1)]) / 2;
    if (half_gap == 0) continue;
    const Rational t = half_gap * make_rational(static_cast<long>(rng.uniform(1, 16)), 16);
    x = apply_move(x, PinchMove{i, j, t});
  }
  if (p_roots) *p_roots = x;
  if (q_roots) *q_roots = y;
  return {Poly::from_roots(x), Poly::from_roots(y)};
}

/// Random monic hyperbolic polynomial of degree n, zeros in [-bound, bound];
/// zeros are drawn from a coarse grid so repeated zeros occur.
inline Poly random_hyperbolic(int n, std::uint64_t seed, const Rational& bound) {
  Rng rng(seed);
  const std::int64_t grid = rng.uniform(0, 1) == 0 ? 4 : 64;
  RootList r(static_cast<std::size_t>(std::max(n, 0)));
  for (auto& v : r) v = rng.in_range(bound, grid);
  return Poly::from_roots(r);
}

}  // namespace hyperpres

#endif  // HYPERPRES_PINCH_HPP
