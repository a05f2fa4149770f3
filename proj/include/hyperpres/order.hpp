#ifndef HYPERPRES_ORDER_HPP
#define HYPERPRES_ORDER_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperpres/errors.hpp"
#include "hyperpres/poly.hpp"
#include "hyperpres/rational.hpp"
#include "hyperpres/real_roots.hpp"

namespace hyperpres {

/// Closed rational interval, used for sums of root enclosures.
struct RationalInterval {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

/// Weakly increasing enclosures of all zeros of a hyperbolic polynomial,
/// repeated according to multiplicity.
class RootVector {
 public:
  RootVector() = default;

  const std::vector<IsolatingInterval>& entries() const { return entries_; }
  const Rational& leading_coeff() const { return leading_; }
  int degree() const { return degree_; }
  std::size_t size() const { return entries_.size(); }
  const IsolatingInterval& operator[](std::size_t i) const { return entries_[i]; }

  /// Largest enclosure width.
  Rational max_width() const {
    Rational w(0);
    for (const auto& e : entries_) w = std::max(w, e.width());
    return w;
  }

  /// Enclosure of the sum of the k largest zeros, 1 <= k <= size().
  RationalInterval top_sum(std::size_t k) const {
    RationalInterval s{Rational(0), Rational(0)};
    for (std::size_t i = entries_.size() - k; i < entries_.size(); ++i) {
      s.lo += entries_[i].lo;
      s.hi += entries_[i].hi;
    }
    return s;
  }

  /// Same zeros, every enclosure narrowed to width <= width.
  RootVector refined(const Rational& width) const {
    RootVector r = *this;
    for (std::size_t i = 0; i < r.entries_.size(); ++i) {
      if (i > 0 && entries_[i] == entries_[i - 1]) {
        r.entries_[i] = r.entries_[i - 1];
        continue;
      }
      r.entries_[i] = refine_interval(radical_, r.entries_[i], width);
    }
    return r;
  }

  /// Midpoints of the enclosures.
  std::vector<Rational> midpoints() const {
    std::vector<Rational> m;
    m.reserve(entries_.size());
    for (const auto& e : entries_) m.push_back((e.lo + e.hi) / 2);
    return m;
  }

  friend RootVector root_vector(const Poly& p, const Rational& width);

 private:
  std::vector<IsolatingInterval> entries_;
  Rational leading_;
  int degree_ = 0;
  Poly radical_;
};

/// Z(p): zeros of a hyperbolic p with multiplicity, weakly increasing.
inline RootVector root_vector(const Poly& p, const Rational& width) {
  if (p.is_zero()) throw PreconditionViolation("root_vector: zero polynomial is not hyperbolic");
  const auto sqf = squarefree_decomposition(p);
  const Poly rad = sqf.radical();
  const int distinct = count_distinct_real_roots(p);
  if (distinct != (rad.is_constant() ? 0 : rad.deg()))
    throw PreconditionViolation("root_vector: " + to_string(p) + " is not hyperbolic (" +
                                std::to_string(distinct) + " distinct real roots, squarefree degree " +
                                std::to_string(rad.is_constant() ? 0 : rad.deg()) + ")");
  RootVector v;
  v.leading_ = p.leading();
  v.degree_ = p.deg();
  v.radical_ = rad;
  for (const auto& iv : isolate_roots(p, width))
    for (int m = 0; m < iv.multiplicity; ++m) v.entries_.push_back(iv);
  return v;
}

// ---------------------------------------------------------------------------
// Majorization
// ---------------------------------------------------------------------------

enum class Relation { Majorized, NotMajorized, Indistinguishable };

enum class MajorizationReason {
  None,
  DegreeMismatch,
  LeadingCoefficientMismatch,
  TotalSumMismatch,
  PartialSumExceeds,
};

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::Majorized: return "Majorized";
    case Relation::NotMajorized: return "NotMajorized";
    case Relation::Indistinguishable: return "Indistinguishable";
  }
  return "?";
}

inline const char* to_string(MajorizationReason r) {
  switch (r) {
    case MajorizationReason::None: return "none";
    case MajorizationReason::DegreeMismatch: return "degree_mismatch";
    case MajorizationReason::LeadingCoefficientMismatch: return "leading_coefficient_mismatch";
    case MajorizationReason::TotalSumMismatch: return "total_sum_mismatch";
    case MajorizationReason::PartialSumExceeds: return "partial_sum_exceeds";
  }
  return "?";
}

/// Outcome of an x < y test.
///
/// failing_index k refers to the partial sum of the k+1 largest entries
/// (0 <= k <= n-2); k = n-1 denotes the total sum. For NotMajorized the margin
/// is a certified positive lower bound on the violation. For Majorized it is
/// the smallest certified slack over all partial sums.
struct MajorizationVerdict {
  Relation relation = Relation::Majorized;
  MajorizationReason reason = MajorizationReason::None;
  std::optional<int> failing_index;
  Rational margin;
  int threshold_resolved = 0;  // comparisons settled only by eq_threshold

  bool refutes() const { return relation == Relation::NotMajorized; }
};

inline bool is_weakly_increasing(std::span<const Rational> v) {
  return std::is_sorted(v.begin(), v.end());
}

/// Exact test of x < y (y majorizes x) on weakly increasing rational vectors.
inline MajorizationVerdict vec_majorizes(std::span<const Rational> x, std::span<const Rational> y) {
  if (x.size() != y.size()) throw InvalidArgument("vec_majorizes: length mismatch");
  if (x.empty()) throw InvalidArgument("vec_majorizes: empty vectors");
  if (!is_weakly_increasing(x) || !is_weakly_increasing(y))
    throw InvalidArgument("vec_majorizes: vectors must be weakly increasing");
  const std::size_t n = x.size();
  MajorizationVerdict v;
  Rational sx(0), sy(0);
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  if (sx != sy) {
    v.relation = Relation::NotMajorized;
    v.reason = MajorizationReason::TotalSumMismatch;
    v.failing_index = static_cast<int>(n) - 1;
    v.margin = abs(sx - sy);
    return v;
  }
  Rational tx(0), ty(0);
  bool first = true;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    tx += x[n - 1 - k];
    ty += y[n - 1 - k];
    const Rational slack = ty - tx;
    if (slack < 0) {
      v.relation = Relation::NotMajorized;
      v.reason = MajorizationReason::PartialSumExceeds;
      v.failing_index = static_cast<int>(k);
      v.margin = -slack;
      return v;
    }
    if (first || slack < v.margin) v.margin = slack;
    first = false;
  }
  return v;
}

/// Default equality threshold for enclosure comparisons: 2^-64.
inline Rational default_eq_threshold() { return pow2_neg(64); }

/// p < q on hyperbolic polynomials of one degree: same leading coefficient
/// and Z(p) < Z(q). The total root sum is compared exactly via -a_{n-1}/a_n;
/// partial sums via enclosures refined until each comparison is certified or
/// its enclosure is narrower than eq_threshold, in which case it counts as an
/// equality and the verdict becomes Indistinguishable.
inline MajorizationVerdict majorizes(const Poly& p, const Poly& q,
                                     const Rational& eq_threshold = default_eq_threshold()) {
  if (!is_hyperbolic(p) || !is_hyperbolic(q))
    throw PreconditionViolation("majorizes: both polynomials must be hyperbolic");
  if (eq_threshold <= 0) throw InvalidArgument("majorizes: eq_threshold must be positive");
  MajorizationVerdict v;
  if (p.degree() != q.degree()) {
    v.relation = Relation::NotMajorized;
    v.reason = MajorizationReason::DegreeMismatch;
    v.margin = abs(Rational(p.deg() - q.deg()));
    return v;
  }
  if (p.leading() != q.leading()) {
    v.relation = Relation::NotMajorized;
    v.reason = MajorizationReason::LeadingCoefficientMismatch;
    v.margin = abs(p.leading() - q.leading());
    return v;
  }
  const int n = p.deg();
  if (n == 0 || p == q) return v;
  const Rational sum_p = -p.coeff(n - 1) / p.leading();
  const Rational sum_q = -q.coeff(n - 1) / q.leading();
  if (sum_p != sum_q) {
    v.relation = Relation::NotMajorized;
    v.reason = MajorizationReason::TotalSumMismatch;
    v.failing_index = n - 1;
    v.margin = abs(sum_p - sum_q);
    return v;
  }
  Rational width(1, 16);
  RootVector zp = root_vector(p, width);
  RootVector zq = root_vector(q, width);
  bool first = true;
  for (int k = 0; k + 1 < n; ++k) {
    const auto top = static_cast<std::size_t>(k + 1);
    while (true) {
      const auto sp = zp.top_sum(top);
      const auto sq = zq.top_sum(top);
      const RationalInterval diff{sq.lo - sp.hi, sq.hi - sp.lo};  // S_k(q) - S_k(p)
      if (diff.lo >= 0) {
        if (first || diff.lo < v.margin) v.margin = diff.lo;
        first = false;
        break;
      }
      if (diff.hi < 0) {
        v.relation = Relation::NotMajorized;
        v.reason = MajorizationReason::PartialSumExceeds;
        v.failing_index = k;
        v.margin = -diff.hi;
        return v;
      }
      if (diff.width() <= eq_threshold) {
        ++v.threshold_resolved;
        v.margin = 0;
        first = false;
        break;
      }
      width /= 4;
      zp = zp.refined(width);
      zq = zq.refined(width);
    }
  }
  if (v.threshold_resolved > 0) v.relation = Relation::Indistinguishable;
  return v;
}

/// a_n (z + a_{n-1} / (n a_n))^n: the least element below p among hyperbolic
/// polynomials sharing p's top two coefficients.
inline Poly center_polynomial(const Poly& p) {
  if (p.is_zero() || p.is_constant())
    throw InvalidArgument("center_polynomial: need degree >= 1");
  const int n = p.deg();
  const Rational shift = p.coeff(n - 1) / (Rational(n) * p.leading());
  return pow(Poly({shift, Rational(1)}), n) * p.leading();
}

// ---------------------------------------------------------------------------
// Interlacing
// ---------------------------------------------------------------------------

/// Weak interlacing of the zeros of two hyperbolic polynomials, decided by
/// the Hermite-Kakeya-Obreschkoff criterion: degrees differ by at most one
/// and the Wronskian f'g - fg' does not change sign. A constant operand has
/// no zeros; it interlaces with anything of degree <= 1.
inline bool interlaces(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) throw InvalidArgument("interlaces: zero polynomial");
  const int df = f.deg(), dg = g.deg();
  if (df - dg > 1 || dg - df > 1) return false;
  if (df == 0 || dg == 0) return true;
  const Poly w = f.derivative() * g - f * g.derivative();
  return is_sign_constant(w) != SignPattern::ChangesSign;
}

}  // namespace hyperpres

#endif  // HYPERPRES_ORDER_HPP
