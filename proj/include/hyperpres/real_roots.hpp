#ifndef HYPERPRES_REAL_ROOTS_HPP
#define HYPERPRES_REAL_ROOTS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperpres/errors.hpp"
#include "hyperpres/poly.hpp"
#include "hyperpres/rational.hpp"

namespace hyperpres {

// ---------------------------------------------------------------------------
// Squarefree decomposition
// ---------------------------------------------------------------------------

struct SquarefreeFactor {
  Poly factor;  // monic, squarefree, nonconstant
  int multiplicity;
};

/// p = content * prod factor_i ^ multiplicity_i, factors pairwise coprime,
/// listed by increasing multiplicity.
struct SquarefreeDecomposition {
  Rational content;
  std::vector<SquarefreeFactor> factors;

  /// Product of the distinct factors (monic). Constant 1 when p is constant.
  Poly radical() const {
    Poly r = Poly::constant(Rational(1));
    for (const auto& f : factors) r = r * f.factor;
    return r;
  }
  /// Product of the factors with odd multiplicity.
  Poly odd_part() const {
    Poly r = Poly::constant(Rational(1));
    for (const auto& f : factors)
      if (f.multiplicity % 2 == 1) r = r * f.factor;
    return r;
  }
  Poly expand() const {
    Poly r = Poly::constant(content);
    for (const auto& f : factors) r = r * pow(f.factor, f.multiplicity);
    return r;
  }
};

/// Yun's algorithm over Q.
inline SquarefreeDecomposition squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw InvalidArgument("squarefree_decomposition of the zero polynomial");
  SquarefreeDecomposition out{p.leading(), {}};
  if (p.is_constant()) return out;
  const Poly f = p.monic();
  const Poly df = f.derivative();
  const Poly a0 = gcd(f, df);
  Poly b = exact_quotient(f, a0);
  Poly c = exact_quotient(df, a0);
  Poly d = c - b.derivative();
  int i = 1;
  while (!b.is_constant()) {
    const Poly a = gcd(b, d);
    if (!a.is_constant()) out.factors.push_back({a, i});
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

/// Monic squarefree part of a nonzero polynomial.
inline Poly radical(const Poly& p) {
  if (p.is_zero()) throw InvalidArgument("radical of the zero polynomial");
  if (p.is_constant()) return Poly::constant(Rational(1));
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

// ---------------------------------------------------------------------------
// Sturm sequences
// ---------------------------------------------------------------------------

/// Rational or +-infinity, used as an endpoint of counting intervals.
class ExtendedRational {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtendedRational(const Rational& v) : kind_(Kind::Finite), value_(v) {}  // NOLINT
  static ExtendedRational neg_inf() { return ExtendedRational(Kind::NegInf); }
  static ExtendedRational pos_inf() { return ExtendedRational(Kind::PosInf); }

  Kind kind() const { return kind_; }
  const Rational& value() const { return value_; }

  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_) ||
                                   (a.kind_ == Kind::Finite && b.kind_ == Kind::PosInf);
    return a.kind_ == Kind::Finite && a.value_ < b.value_;
  }

 private:
  explicit ExtendedRational(Kind k) : kind_(k) {}
  Kind kind_;
  Rational value_;
};

/// Signed remainder chain of (p, p'). Every member is rescaled by a positive
/// constant, which leaves sign variations unchanged.
class SturmSequence {
 public:
  explicit SturmSequence(const Poly& squarefree) {
    if (squarefree.is_zero()) throw InvalidArgument("Sturm sequence of the zero polynomial");
    chain_.push_back(normalized(squarefree));
    if (squarefree.is_constant()) {
      integral_.push_back(integral_coeffs(chain_.back().coeffs()));
      return;
    }
    chain_.push_back(normalized(squarefree.derivative()));
    while (!chain_.back().is_constant()) {
      Poly r = divmod(chain_[chain_.size() - 2], chain_.back()).remainder;
      if (r.is_zero()) break;
      chain_.push_back(normalized(-r));
    }
    if (!chain_.back().is_constant())
      throw PreconditionViolation("sturm_count: input is not squarefree (gcd with derivative is " +
                                  to_string(chain_.back()) + "); pass the radical");
    for (const auto& q : chain_) integral_.push_back(integral_coeffs(q.coeffs()));
  }

  int variations(const ExtendedRational& x) const {
    int count = 0;
    int last = 0;
    for (std::size_t i = 0; i < chain_.size(); ++i) {
      int s = 0;
      switch (x.kind()) {
        case ExtendedRational::Kind::NegInf: s = chain_[i].sign_at_neg_inf(); break;
        case ExtendedRational::Kind::PosInf: s = chain_[i].sign_at_pos_inf(); break;
        case ExtendedRational::Kind::Finite: s = sign_of_integral(integral_[i], x.value()); break;
      }
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Distinct real roots in (a, b].
  int count(const ExtendedRational& a, const ExtendedRational& b) const {
    return variations(a) - variations(b);
  }

  const std::vector<Poly>& chain() const { return chain_; }

 private:
  static Poly normalized(const Poly& p) { return p * (Rational(1) / abs(p.leading())); }

  std::vector<Poly> chain_;
  std::vector<std::vector<mpz_class>> integral_;
};

/// Number of distinct real roots of a squarefree p in (a, b].
inline int sturm_count(const Poly& p, const ExtendedRational& a, const ExtendedRational& b) {
  if (!(a < b)) throw InvalidArgument("sturm_count: need a < b");
  return SturmSequence(p).count(a, b);
}

/// Only real zeros. Nonzero constants qualify; the zero polynomial does not.
inline bool is_hyperbolic(const Poly& p) {
  if (p.is_zero()) return false;
  if (p.is_constant()) return true;
  const Poly r = radical(p);
  return SturmSequence(r).count(ExtendedRational::neg_inf(), ExtendedRational::pos_inf()) ==
         r.deg();
}

/// Number of distinct real zeros of a nonzero polynomial.
inline int count_distinct_real_roots(const Poly& p) {
  if (p.is_constant()) return 0;
  return SturmSequence(radical(p)).count(ExtendedRational::neg_inf(), ExtendedRational::pos_inf());
}

/// 1 + max |a_i / a_n|: every zero lies strictly inside (-B, B).
inline Rational cauchy_bound(const Poly& p) {
  Rational m(0);
  const Rational lead = abs(p.leading());
  for (int k = 0; k < p.deg(); ++k) m = std::max(m, Rational(abs(p.coeff(k)) / lead));
  return m + 1;
}

// ---------------------------------------------------------------------------
// Root isolation
// ---------------------------------------------------------------------------

/// Closed enclosure [lo, hi] of one real root. Either lo == hi (the root is
/// known exactly) or the root lies strictly inside and the squarefree part
/// has opposite nonzero signs at the endpoints.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  Rational width() const { return hi - lo; }
  bool is_exact() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

namespace detail {

// One bisection step on an open isolating interval of the squarefree sf.
// Rational roots are picked up by probing the simplest rational inside.
inline IsolatingInterval bisect_once(const Poly& sf, IsolatingInterval iv) {
  const Rational probe = simplest_between(iv.lo, iv.hi);
  if (probe != iv.lo && probe != iv.hi && sf.sign_at(probe) == 0) {
    iv.lo = iv.hi = probe;
    return iv;
  }
  const Rational mid = (iv.lo + iv.hi) / 2;
  const int sm = sf.sign_at(mid);
  if (sm == 0) {
    iv.lo = iv.hi = mid;
  } else if (sm == sf.sign_at(iv.lo)) {
    iv.lo = mid;
  } else {
    iv.hi = mid;
  }
  return iv;
}

}  // namespace detail

/// Shrinks an isolating interval of a root of the squarefree polynomial sf
/// until its width is at most `width`. Returns a new value.
inline IsolatingInterval refine_interval(const Poly& sf, IsolatingInterval iv,
                                         const Rational& width) {
  while (!iv.is_exact() && iv.width() > width) iv = detail::bisect_once(sf, iv);
  return iv;
}

namespace detail {

inline void isolate_open(const Poly& sf, const SturmSequence& sturm, const Rational& lo,
                         const Rational& hi, int count, std::vector<IsolatingInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi, 1});
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (sf.sign_at(mid) == 0) {
    // Exact root at the midpoint: isolate it in a root-free punctured neighbourhood.
    Rational delta = (hi - lo) / 4;
    while (true) {
      const Rational a = mid - delta, b = mid + delta;
      if (sf.sign_at(a) != 0 && sf.sign_at(b) != 0 && sturm.count(a, b) == 1) break;
      delta /= 2;
    }
    const Rational a = mid - delta, b = mid + delta;
    isolate_open(sf, sturm, lo, a, sturm.count(lo, a), out);
    out.push_back({mid, mid, 1});
    isolate_open(sf, sturm, b, hi, sturm.count(b, hi), out);
    return;
  }
  const int left = sturm.count(lo, mid);
  isolate_open(sf, sturm, lo, mid, left, out);
  isolate_open(sf, sturm, mid, hi, count - left, out);
}

}  // namespace detail

/// Enclosures of the real roots of the squarefree polynomial sf, ascending,
/// pairwise disjoint as closed intervals, each of width <= width.
inline std::vector<IsolatingInterval> isolate_squarefree(const Poly& sf, const Rational& width) {
  std::vector<IsolatingInterval> out;
  if (sf.is_constant()) return out;
  const SturmSequence sturm(sf);
  const Rational bound = cauchy_bound(sf);
  const Rational lo = -bound;
  detail::isolate_open(sf, sturm, lo, bound, sturm.count(lo, bound), out);
  for (auto& iv : out) iv = refine_interval(sf, iv, width);
  // Neighbours produced by the same split share an endpoint; pull them apart.
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    while (out[i].hi >= out[i + 1].lo) {
      if (!out[i].is_exact()) out[i] = detail::bisect_once(sf, out[i]);
      if (!out[i + 1].is_exact()) out[i + 1] = detail::bisect_once(sf, out[i + 1]);
    }
  }
  return out;
}

/// Real roots of p with multiplicities from the squarefree decomposition.
inline std::vector<IsolatingInterval> isolate_roots(const Poly& p, const Rational& width) {
  if (p.is_zero()) throw InvalidArgument("isolate_roots of the zero polynomial");
  if (width <= 0) throw InvalidArgument("isolate_roots: width must be positive");
  const auto sqf = squarefree_decomposition(p);
  const Poly rad = sqf.radical();
  auto out = isolate_squarefree(rad, width);
  for (auto& iv : out) {
    for (const auto& f : sqf.factors) {
      const bool owns = iv.is_exact() ? f.factor.sign_at(iv.lo) == 0
                                      : f.factor.sign_at(iv.lo) != f.factor.sign_at(iv.hi);
      if (owns) {
        iv.multiplicity = f.multiplicity;
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sign constancy
// ---------------------------------------------------------------------------

enum class SignPattern { Nonnegative, Nonpositive, ChangesSign, Zero };

inline const char* to_string(SignPattern s) {
  switch (s) {
    case SignPattern::Nonnegative: return "Nonnegative";
    case SignPattern::Nonpositive: return "Nonpositive";
    case SignPattern::ChangesSign: return "ChangesSign";
    case SignPattern::Zero: return "Zero";
  }
  return "?";
}

/// Exact sign behaviour of h on the real line. h changes sign exactly at the
/// real zeros of odd multiplicity.
inline SignPattern is_sign_constant(const Poly& h) {
  if (h.is_zero()) return SignPattern::Zero;
  const auto sqf = squarefree_decomposition(h);
  const Poly odd = sqf.odd_part();
  if (!odd.is_constant() &&
      SturmSequence(odd).count(ExtendedRational::neg_inf(), ExtendedRational::pos_inf()) > 0)
    return SignPattern::ChangesSign;
  return sqf.content > 0 ? SignPattern::Nonnegative : SignPattern::Nonpositive;
}

}  // namespace hyperpres

#endif  // HYPERPRES_REAL_ROOTS_HPP
