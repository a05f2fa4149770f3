#ifndef HYPERPRES_POLY_HPP
#define HYPERPRES_POLY_HPP

#include <algorithm>
#include <climits>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyperpres/errors.hpp"
#include "hyperpres/rational.hpp"

namespace hyperpres {

/// Polynomial degree with a "minus infinity" value for the zero polynomial,
/// ordered below every integer degree.
class Degree {
 public:
  constexpr explicit Degree(int d) : value_(d) {}
  static constexpr Degree minus_infinity() { return Degree(INT_MIN); }

  constexpr bool is_minus_infinity() const { return value_ == INT_MIN; }
  constexpr int value() const { return value_; }

  constexpr auto operator<=>(const Degree&) const = default;
  constexpr bool operator==(const Degree&) const = default;
  constexpr auto operator<=>(int d) const { return value_ <=> d; }
  constexpr bool operator==(int d) const { return value_ == d; }

  std::string str() const { return is_minus_infinity() ? "-inf" : std::to_string(value_); }

 private:
  int value_;
};

inline std::ostream& operator<<(std::ostream& os, const Degree& d) { return os << d.str(); }

/// Positive integer multiple of the coefficient list (ascending).
inline std::vector<mpz_class> integral_coeffs(std::span<const Rational> c) {
  mpz_class l = 1;
  for (const auto& a : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(c.size());
  for (const auto& a : c) out.push_back(a.get_num() * (l / a.get_den()));
  return out;
}

/// Sign of den^d * p(num/den) for integer coefficients, homogeneous Horner.
inline int sign_of_integral(const std::vector<mpz_class>& c, const Rational& x) {
  if (c.empty()) return 0;
  const mpz_class& a = x.get_num();
  const mpz_class& b = x.get_den();
  mpz_class acc = c.back(), bp = 1;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc *= a;
    bp *= b;
    acc += c[k] * bp;
  }
  return sgn(acc);
}

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// degree order. Empty coefficient vector is the zero polynomial; otherwise the
/// leading entry is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const Rational& a) { return Poly(std::vector<Rational>{a}); }
  static Poly monomial(const Rational& a, int k) {
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
    c.back() = a;
    return Poly(std::move(c));
  }
  /// z
  static Poly identity() { return monomial(Rational(1), 1); }
  /// z - root
  static Poly linear_factor(const Rational& root) { return Poly({-root, Rational(1)}); }
  /// Monic polynomial with the given zeros (with repetition).
  static Poly from_roots(std::span<const Rational> roots) {
    Poly p = constant(Rational(1));
    for (const auto& r : roots) p = p * linear_factor(r);
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Degree degree() const {
    return c_.empty() ? Degree::minus_infinity() : Degree(static_cast<int>(c_.size()) - 1);
  }
  /// Degree as int; only for nonzero polynomials.
  int deg() const { return static_cast<int>(c_.size()) - 1; }

  std::span<const Rational> coeffs() const { return c_; }
  Rational coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return Rational(0);
    return c_[static_cast<std::size_t>(k)];
  }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }
  int sign_at(const Rational& x) const { return sign_of_integral(integral_coeffs(c_), x); }
  int sign_at_pos_inf() const { return sgn(leading()); }
  int sign_at_neg_inf() const {
    if (is_zero()) return 0;
    return deg() % 2 == 0 ? sgn(leading()) : -sgn(leading());
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
    return Poly(std::move(d));
  }

  /// p(a z + b)
  Poly compose_affine(const Rational& a, const Rational& b) const {
    const Poly inner({b, a});
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
  }

  Poly monic() const {
    if (is_zero()) throw InvalidArgument("monic() of the zero polynomial");
    return *this * (Rational(1) / leading());
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }

  friend Poly operator+(const Poly& p, const Poly& q) {
    std::vector<Rational> c(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k < p.c_.size()) c[k] += p.c_[k];
      if (k < q.c_.size()) c[k] += q.c_[k];
    }
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Rational> c(p.c_.size() + q.c_.size() - 1);
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
      if (p.c_[i] == 0) continue;
      for (std::size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& p, const Rational& a) {
    if (a == 0) return {};
    Poly r = p;
    for (auto& x : r.c_) x *= a;
    return r;
  }
  friend Poly operator*(const Rational& a, const Poly& p) { return p * a; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division over Q: p = quotient * q + remainder, deg remainder < deg q.
inline DivMod divmod(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (p.degree() < q.degree()) return {Poly{}, p};
  std::vector<Rational> rem(p.coeffs().begin(), p.coeffs().end());
  const int dq = q.deg();
  const Rational inv_lead = Rational(1) / q.leading();
  std::vector<Rational> quot(static_cast<std::size_t>(p.deg() - dq) + 1);
  for (int k = p.deg() - dq; k >= 0; --k) {
    const Rational f = rem[static_cast<std::size_t>(k + dq)] * inv_lead;
    quot[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dq; ++j) rem[static_cast<std::size_t>(k + j)] -= f * q.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(dq));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

/// Exact quotient; throws when q does not divide p.
inline Poly exact_quotient(const Poly& p, const Poly& q) {
  auto [quot, rem] = divmod(p, q);
  if (!rem.is_zero()) throw InvalidArgument("exact_quotient: nonzero remainder");
  return quot;
}

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.is_zero() ? Poly{} : r.monic();
  }
  return a.is_zero() ? a : a.monic();
}

inline Poly pow(const Poly& p, int e) {
  Poly result = Poly::constant(Rational(1));
  Poly base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

/// True when p = c * q for some rational c (c may be zero only if p is zero).
inline bool is_scalar_multiple(const Poly& p, const Poly& q) {
  if (p.is_zero()) return true;
  if (q.is_zero() || p.degree() != q.degree()) return false;
  const Rational c = p.leading() / q.leading();
  return p == q * c;
}

inline std::string to_string(const Poly& p, const char* var = "z") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.deg(); k >= 0; --k) {
    const Rational a = p.coeff(k);
    if (a == 0) continue;
    const Rational mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace hyperpres

#endif  // HYPERPRES_POLY_HPP
