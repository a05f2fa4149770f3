#ifndef HYPERPRES_TESTS_TEST_SUPPORT_HPP
#define HYPERPRES_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "hyperpres/hyperpres.hpp"

namespace hyperpres::testing {

inline Rational Q(long num, long den = 1) { return make_rational(num, static_cast<unsigned long>(den)); }

/// Polynomial from ascending integer coefficients.
inline Poly P(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long a : coeffs) c.emplace_back(a);
  return Poly(std::move(c));
}

inline Poly from_roots(std::initializer_list<Rational> roots) {
  std::vector<Rational> r(roots);
  return Poly::from_roots(r);
}

inline std::vector<Rational> vec(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// Sorted random rationals k/den with |k/den| <= bound_num/den.
inline std::vector<Rational> random_sorted(Rng& rng, int n, long bound_num, long den) {
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i) v.push_back(Q(static_cast<long>(rng.uniform(-bound_num, bound_num)), den));
  std::sort(v.begin(), v.end());
  return v;
}

/// Sign of p(x) through a double-precision filter: Horner in doubles with a
/// forward error bound, falling back to exact evaluation when the value is
/// too close to zero for the bound to decide.
class FilteredSign {
 public:
  explicit FilteredSign(const Poly& p) : p_(p) {
    for (const auto& a : p.coeffs()) {
      c_.push_back(a.get_d());
      abs_.push_back(std::abs(a.get_d()));
    }
  }

  /// Sign at num / 2^k; num must fit a double exactly (|num| < 2^53).
  int at_dyadic(long num, int k) const {
    const double xd = std::ldexp(static_cast<double>(num), -k);
    double v = 0, m = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
      v = v * xd + c_[i];
      m = m * std::abs(xd) + abs_[i];
    }
    const double err = 4.0 * static_cast<double>(c_.size() + 2) * 0x1p-52 * m + 0x1p-1000;
    if (v > err) return 1;
    if (v < -err) return -1;
    return p_.sign_at(make_rational(num, 1UL << k));
  }

 private:
  Poly p_;
  std::vector<double> c_, abs_;
};

/// Weak interlacing by definition: x1 <= y1 <= x2 <= ... or y1 <= x1 <= y2 <= ...
/// on exact sorted zero lists.
inline bool chain_interlaces(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  auto alternate = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (!(a.size() == b.size() || a.size() == b.size() + 1)) return false;
    std::vector<Rational> merged;
    for (std::size_t i = 0; i < a.size(); ++i) {
      merged.push_back(a[i]);
      if (i < b.size()) merged.push_back(b[i]);
    }
    return std::is_sorted(merged.begin(), merged.end());
  };
  return alternate(x, y) || alternate(y, x);
}

}  // namespace hyperpres::testing

#endif  // HYPERPRES_TESTS_TEST_SUPPORT_HPP
