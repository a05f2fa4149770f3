#ifndef HYPERPRES_RATIONAL_HPP
#define HYPERPRES_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "hyperpres/errors.hpp"

namespace hyperpres {

/// Exact rational in lowest terms with positive denominator (GMP mpq).
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

inline Rational abs_value(const Rational& q) { return abs(q); }

/// num/den in lowest terms; den > 0. GMP arithmetic assumes canonical operands.
inline Rational make_rational(long num, unsigned long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// 2^-k, the usual shape of widths and thresholds.
inline Rational pow2_neg(unsigned k) {
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
  return Rational(Integer(1), den);
}

/// Canonical "num/den" text; integers keep the "/1".
inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "a/b", "a" and "2^-k". Rejects zero denominators and garbage.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidArgument("empty rational");
  if (s.rfind("2^-", 0) == 0) {
    const std::string e = s.substr(3);
    if (e.empty() || e.size() > 5 ||
        e.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidArgument("bad exponent in '" + s + "'");
    return pow2_neg(static_cast<unsigned>(std::stoul(e)));
  }
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto is_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    return t.find_first_not_of("0123456789", i) == std::string::npos;
  };
  if (!is_int(num, true) || !is_int(den, false))
    throw InvalidArgument("malformed rational '" + s + "'");
  Integer n(num[0] == '+' ? num.substr(1) : num, 10);
  Integer d(den, 10);
  if (d == 0) throw InvalidArgument("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Rational with the smallest denominator in the closed interval [lo, hi].
inline Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_between(hi, lo);
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_between(-hi, -lo);
  const Integer fl = floor_of(lo);
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  const Rational frac_lo = lo - fl;
  const Rational frac_hi = hi - fl;
  return Rational(fl) + Rational(1) / simplest_between(Rational(1) / frac_hi,
                                                       Rational(1) / frac_lo);
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace hyperpres

#endif  // HYPERPRES_RATIONAL_HPP
