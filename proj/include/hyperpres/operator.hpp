#ifndef HYPERPRES_OPERATOR_HPP
#define HYPERPRES_OPERATOR_HPP

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

/// Linear operator T: R_n[z] -> R[z] given by the images of the monomials,
/// images[k] = T(z^k).
class LinOp {
 public:
  LinOp(int n, std::vector<Poly> images) : n_(n), images_(std::move(images)) {
    if (n_ < 1) throw InvalidArgument("LinOp: need n >= 1");
    if (images_.size() != static_cast<std::size_t>(n_) + 1)
      throw InvalidArgument("LinOp: expected " + std::to_string(n_ + 1) + " images, got " +
                            std::to_string(images_.size()));
  }

  static LinOp identity(int n) {
    std::vector<Poly> im;
    for (int k = 0; k <= n; ++k) im.push_back(Poly::monomial(Rational(1), k));
    return {n, std::move(im)};
  }
  static LinOp derivative(int n) {
    std::vector<Poly> im;
    for (int k = 0; k <= n; ++k) im.push_back(Poly::monomial(Rational(1), k).derivative());
    return {n, std::move(im)};
  }
  /// p |-> p(a z + b)
  static LinOp affine_substitution(int n, const Rational& a, const Rational& b) {
    std::vector<Poly> im;
    for (int k = 0; k <= n; ++k) im.push_back(Poly::monomial(Rational(1), k).compose_affine(a, b));
    return {n, std::move(im)};
  }
  static LinOp zero(int n) { return {n, std::vector<Poly>(static_cast<std::size_t>(n) + 1)}; }

  int n() const { return n_; }
  const std::vector<Poly>& images() const { return images_; }
  const Poly& image(int k) const { return images_.at(static_cast<std::size_t>(k)); }
  Degree degree_of_image(int k) const { return image(k).degree(); }

  /// Largest degree among the images (-inf for the zero operator).
  Degree max_image_degree() const {
    Degree d = Degree::minus_infinity();
    for (const auto& p : images_) d = std::max(d, p.degree());
    return d;
  }

  friend LinOp operator+(const LinOp& a, const LinOp& b) {
    if (a.n_ != b.n_) throw InvalidArgument("LinOp sum: mismatched n");
    std::vector<Poly> im;
    for (std::size_t k = 0; k < a.images_.size(); ++k) im.push_back(a.images_[k] + b.images_[k]);
    return {a.n_, std::move(im)};
  }
  friend LinOp operator*(const Rational& c, const LinOp& a) {
    std::vector<Poly> im;
    for (const auto& p : a.images_) im.push_back(p * c);
    return {a.n_, std::move(im)};
  }
  friend bool operator==(const LinOp&, const LinOp&) = default;

 private:
  int n_;
  std::vector<Poly> images_;
};

/// T(p) = sum a_k T(z^k).
inline Poly apply(const LinOp& T, const Poly& p) {
  if (p.degree() > T.n())
    throw InvalidArgument("apply: degree " + p.degree().str() + " exceeds n = " +
                          std::to_string(T.n()));
  Poly out;
  for (int k = 0; k <= std::min(T.n(), p.deg()); ++k)
    if (p.coeff(k) != 0) out = out + T.image(k) * p.coeff(k);
  return out;
}

// ---------------------------------------------------------------------------
// Symbol
// ---------------------------------------------------------------------------

/// Bivariate polynomial sum_{j,l} c(j,l) z^j w^l as a dense coefficient
/// matrix (rows: power of z, columns: power of w).
class Symbol {
 public:
  Symbol() = default;
  Symbol(std::size_t z_degree_plus_one, std::size_t w_degree_plus_one)
      : rows_(z_degree_plus_one, std::vector<Rational>(w_degree_plus_one)) {}

  std::size_t z_size() const { return rows_.size(); }
  std::size_t w_size() const { return rows_.empty() ? 0 : rows_.front().size(); }
  const Rational& at(std::size_t j, std::size_t l) const { return rows_[j][l]; }
  Rational& at(std::size_t j, std::size_t l) { return rows_[j][l]; }

  bool is_zero() const {
    for (const auto& r : rows_)
      for (const auto& c : r)
        if (c != 0) return false;
    return true;
  }

  /// Coefficient of w^l as a polynomial in z.
  Poly w_coefficient(std::size_t l) const {
    std::vector<Rational> c;
    for (const auto& r : rows_) c.push_back(l < r.size() ? r[l] : Rational(0));
    return Poly(std::move(c));
  }

  /// t |-> F(a t + c, b t + d)
  Poly restrict_to_line(const Rational& a, const Rational& b, const Rational& c,
                        const Rational& d) const {
    const Poly zl({c, a});
    const Poly wl({d, b});
    std::vector<Poly> wpow{Poly::constant(Rational(1))};
    for (std::size_t l = 1; l < w_size(); ++l) wpow.push_back(wpow.back() * wl);
    Poly out;
    // Horner in z over the w-polynomials of each row.
    for (std::size_t jj = rows_.size(); jj-- > 0;) {
      Poly row;
      for (std::size_t l = 0; l < w_size(); ++l)
        if (rows_[jj][l] != 0) row = row + wpow[l] * rows_[jj][l];
      out = out * zl + row;
    }
    return out;
  }

  friend bool operator==(const Symbol& a, const Symbol& b) {
    const std::size_t zs = std::max(a.z_size(), b.z_size());
    const std::size_t ws = std::max(a.w_size(), b.w_size());
    auto get = [](const Symbol& s, std::size_t j, std::size_t l) {
      return j < s.z_size() && l < s.w_size() ? s.at(j, l) : Rational(0);
    };
    for (std::size_t j = 0; j < zs; ++j)
      for (std::size_t l = 0; l < ws; ++l)
        if (get(a, j, l) != get(b, j, l)) return false;
    return true;
  }

 private:
  std::vector<std::vector<Rational>> rows_;
};

inline Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// F_T(z, w) = sum_k C(n,k) T(z^k) w^(n-k); with reflect, F_T(z, -w).
inline Symbol symbol(const LinOp& T, bool reflect = false) {
  const int n = T.n();
  const Degree dmax = T.max_image_degree();
  const std::size_t zs = dmax.is_minus_infinity() ? 1 : static_cast<std::size_t>(dmax.value()) + 1;
  Symbol F(zs, static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const int l = n - k;
    Rational scale(binomial(n, k));
    if (reflect && l % 2 == 1) scale = -scale;
    const Poly& im = T.image(k);
    for (int j = 0; j <= im.deg(); ++j)
      F.at(static_cast<std::size_t>(j), static_cast<std::size_t>(l)) = im.coeff(j) * scale;
  }
  return F;
}

// ---------------------------------------------------------------------------
// Rank and degeneracy
// ---------------------------------------------------------------------------

/// Rank of the (n+1) x (1 + max deg) coefficient matrix of the images,
/// i.e. dim T(R_n[z]).
inline int rank_of_image(const LinOp& T) {
  const Degree dmax = T.max_image_degree();
  if (dmax.is_minus_infinity()) return 0;
  const auto cols = static_cast<std::size_t>(dmax.value()) + 1;
  std::vector<std::vector<Rational>> m;
  for (const auto& p : T.images()) {
    std::vector<Rational> row(cols);
    for (int j = 0; j <= p.deg(); ++j) row[static_cast<std::size_t>(j)] = p.coeff(j);
    m.push_back(std::move(row));
  }
  int rank = 0;
  for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < m.size(); ++col) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    const auto& prow = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / prow[col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * prow[c];
    }
    ++rank;
  }
  return rank;
}

/// dim T(R_n[z]) <= 2
inline bool is_degenerate(const LinOp& T) { return rank_of_image(T) <= 2; }

// ---------------------------------------------------------------------------
// Degree profile and gamma sequence
// ---------------------------------------------------------------------------

/// Degrees of the images and the indices K <= L <= M <= N describing their
/// shape: zero outside [K, N], rising by one up to L, a plateau whose maximum
/// is attained at L and M, falling by one from M to N.
struct DegreeProfile {
  std::vector<Degree> degs;
  std::optional<int> K, L, M, N;  // absent when every image vanishes

  bool empty_support() const { return !K.has_value(); }
};

struct ProfileCheck {
  DegreeProfile profile;
  bool pass = false;
  std::string failed_clause;  // empty on pass
  std::string detail;
};

inline ProfileCheck degree_profile(const LinOp& T) {
  const int n = T.n();
  ProfileCheck out;
  auto& prof = out.profile;
  for (int k = 0; k <= n; ++k) prof.degs.push_back(T.degree_of_image(k));
  auto deg = [&](int k) { return prof.degs[static_cast<std::size_t>(k)]; };
  auto fail = [&](std::string clause, std::string detail) {
    out.pass = false;
    out.failed_clause = std::move(clause);
    out.detail = std::move(detail);
    return out;
  };

  int K = -1, N = -1;
  for (int k = 0; k <= n; ++k)
    if (!deg(k).is_minus_infinity()) {
      if (K < 0) K = k;
      N = k;
    }
  if (K < 0) return fail("support", "every image T(z^k) vanishes");
  prof.K = K;
  prof.N = N;
  for (int k = K; k <= N; ++k)
    if (deg(k).is_minus_infinity())
      return fail("support", "T(z^" + std::to_string(k) + ") = 0 inside the support [" +
                                 std::to_string(K) + ", " + std::to_string(N) + "]");
  int L = K;
  while (L < N && deg(L + 1).value() == deg(L).value() + 1) ++L;
  int M = N;
  while (M > L && deg(M - 1).value() == deg(M).value() + 1) --M;
  prof.L = L;
  prof.M = M;
  if (deg(L) != deg(M))
    return fail("plateau", "deg T(z^" + std::to_string(L) + ") = " + deg(L).str() +
                               " differs from deg T(z^" + std::to_string(M) + ") = " + deg(M).str());
  for (int k = L; k <= M; ++k)
    if (deg(k) > deg(L))
      return fail("plateau", "deg T(z^" + std::to_string(k) + ") = " + deg(k).str() +
                                 " exceeds the plateau degree " + deg(L).str());
  if (!(L == n && M == n && N == n))
    return fail("top_degree", "need L = M = N = n = " + std::to_string(n) + ", got L = " +
                                  std::to_string(L) + ", M = " + std::to_string(M) +
                                  ", N = " + std::to_string(N));
  out.pass = true;
  return out;
}

/// gamma_k = coefficient of z^(r+k) in T(z^k), r = deg T(z^K) - K.
struct GammaSeq {
  int r = 0;
  std::vector<Rational> gamma;
};

struct GammaCheck {
  GammaSeq seq;
  bool pass = false;
  std::string failed_clause;
  std::string detail;
};

inline GammaCheck gamma_sequence(const LinOp& T) {
  int K = -1;
  for (int k = 0; k <= T.n(); ++k)
    if (!T.image(k).is_zero()) {
      K = k;
      break;
    }
  if (K < 0) throw WrongBranch("gamma_sequence: K undefined, every image vanishes");
  GammaCheck out;
  out.seq.r = T.image(K).deg() - K;
  for (int k = 0; k <= T.n(); ++k) out.seq.gamma.push_back(T.image(k).coeff(out.seq.r + k));

  const auto& g = out.seq.gamma;
  int first = -1, last = -1;
  for (int k = 0; k < static_cast<int>(g.size()); ++k)
    if (g[static_cast<std::size_t>(k)] != 0) {
      if (first < 0) first = k;
      last = k;
    }
  if (first < 0) {
    out.failed_clause = "gamma_support";
    out.detail = "all gamma_k vanish";
    return out;
  }
  for (int k = first; k <= last; ++k)
    if (g[static_cast<std::size_t>(k)] == 0) {
      out.failed_clause = "gamma_support";
      out.detail = "gamma_" + std::to_string(k) + " = 0 inside the support [" +
                   std::to_string(first) + ", " + std::to_string(last) + "]";
      return out;
    }
  bool constant = true, alternating = true;
  for (int k = first; k < last; ++k) {
    const int s0 = sgn(g[static_cast<std::size_t>(k)]);
    const int s1 = sgn(g[static_cast<std::size_t>(k + 1)]);
    if (s0 != s1) constant = false;
    if (s0 == s1) alternating = false;
  }
  if (!constant && !alternating) {
    out.failed_clause = "gamma_sign";
    out.detail = "gamma signs are neither constant nor alternating";
    return out;
  }
  out.pass = true;
  return out;
}

}  // namespace hyperpres

#endif  // HYPERPRES_OPERATOR_HPP
