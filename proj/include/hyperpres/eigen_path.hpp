#ifndef HYPERPRES_EIGEN_PATH_HPP
#define HYPERPRES_EIGEN_PATH_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperpres/errors.hpp"
#include "hyperpres/operator.hpp"
#include "hyperpres/order.hpp"
#include "hyperpres/poly.hpp"
#include "hyperpres/rational.hpp"
#include "hyperpres/real_roots.hpp"

namespace hyperpres {

// Zeros of T(r(z)((z+s)^2 - t^2)) along t. For a nondegenerate T with
// T(H_n) in H_m the sum of the k largest zeros is convex and even in t, and
// the images increase in the majorization order as |t| grows.

struct PathSample {
  Rational t;
  Poly image;
  bool hyperbolic = false;
  RootVector zeros;                            // empty unless hyperbolic
  std::vector<RationalInterval> partial_sums;  // [k-1] = sum of the k largest zeros
  Rational full_sum;                           // -a_{m-1}/a_m, exact

  int degree() const { return image.is_zero() ? -1 : image.deg(); }
};

/// p_t = r(z)((z+s)^2 - t^2)
inline Poly path_polynomial(const Poly& r, const Rational& s, const Rational& t) {
  return r * (pow(Poly({s, Rational(1)}), 2) - Poly::constant(t * t));
}

inline std::vector<PathSample> path_samples(const LinOp& T, const Poly& r, const Rational& s,
                                            std::span<const Rational> t_grid,
                                            const Rational& width) {
  const int n = T.n();
  if (n < 2) throw InvalidArgument("path_samples: need n >= 2");
  if (r.is_zero() || r.leading() != 1) throw InvalidArgument("path_samples: r must be monic");
  if (r.deg() != n - 2)
    throw InvalidArgument("path_samples: deg r = " + std::to_string(r.deg()) + ", need " +
                          std::to_string(n - 2));
  if (!is_hyperbolic(r)) throw InvalidArgument("path_samples: r must be hyperbolic");
  std::vector<PathSample> out;
  out.reserve(t_grid.size());
  for (const auto& t : t_grid) {
    PathSample ps;
    ps.t = t;
    ps.image = apply(T, path_polynomial(r, s, t));
    ps.hyperbolic = is_hyperbolic(ps.image);
    if (!ps.image.is_zero() && ps.image.deg() >= 1)
      ps.full_sum = -ps.image.coeff(ps.image.deg() - 1) / ps.image.leading();
    if (ps.hyperbolic) {
      ps.zeros = root_vector(ps.image, width);
      for (std::size_t k = 1; k <= ps.zeros.size(); ++k) ps.partial_sums.push_back(ps.zeros.top_sum(k));
    }
    out.push_back(std::move(ps));
  }
  return out;
}

/// Uniform grid of `steps` points from lo to hi inclusive.
inline std::vector<Rational> uniform_grid(const Rational& lo, const Rational& hi, int steps) {
  if (steps < 2) throw InvalidArgument("uniform_grid: need at least two points");
  std::vector<Rational> g;
  const Rational h = (hi - lo) / (steps - 1);
  for (int i = 0; i < steps; ++i) g.push_back(lo + h * i);
  return g;
}

enum class PathCheck { Convexity, Evenness, Monotonicity };

inline const char* to_string(PathCheck c) {
  switch (c) {
    case PathCheck::Convexity: return "convexity";
    case PathCheck::Evenness: return "evenness";
    case PathCheck::Monotonicity: return "monotonicity";
  }
  return "?";
}

/// A failed discrete check. `index` is the grid position (the midpoint for
/// convexity, the smaller |t| for monotonicity). `margin` is the amount by
/// which the certified bound misses the tolerance; `certified` means the
/// violation survives the enclosure widths.
struct PathViolation {
  PathCheck check;
  int k;  // number of top zeros summed; for monotonicity the failing index + 1
  std::size_t index;
  Rational margin;
  bool certified = false;
};

struct PathAnomaly {
  std::size_t index;
  Rational t;
  std::string reason;
};

struct PathReport {
  std::vector<Rational> grid;
  std::vector<PathViolation> convexity_violations;
  std::vector<PathViolation> evenness_violations;
  std::vector<PathViolation> monotonicity_violations;
  std::vector<PathAnomaly> anomalies;
  Rational tolerance;
  bool full_sum_constant = true;

  bool clean() const {
    return convexity_violations.empty() && evenness_violations.empty() &&
           monotonicity_violations.empty() && anomalies.empty() && full_sum_constant;
  }
  bool has_certified_violation() const {
    auto cert = [](const std::vector<PathViolation>& v) {
      return std::any_of(v.begin(), v.end(), [](const auto& x) { return x.certified; });
    };
    return cert(convexity_violations) || cert(evenness_violations) || cert(monotonicity_violations);
  }
};

namespace detail {

inline void note_anomalies(std::span<const PathSample> samples, PathReport& rep) {
  int common = -2;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (!s.hyperbolic) {
      rep.anomalies.push_back({i, s.t, "image " + to_string(s.image) + " is not hyperbolic"});
      continue;
    }
    if (common == -2) common = s.degree();
    if (s.degree() != common)
      rep.anomalies.push_back({i, s.t, "image degree " + std::to_string(s.degree()) +
                                           " differs from " + std::to_string(common)});
  }
}

inline bool usable(const PathSample& a, const PathSample& b) {
  return a.hyperbolic && b.hyperbolic && a.partial_sums.size() == b.partial_sums.size();
}

}  // namespace detail

/// Exact constancy of the total zero sum along the path.
inline bool full_sum_constant(std::span<const PathSample> samples) {
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (samples[i].full_sum != samples[0].full_sum ||
        samples[i].degree() != samples[0].degree())
      return false;
  return true;
}

inline PathReport check_convex_even(std::span<const PathSample> samples, const Rational& tolerance) {
  const std::size_t N = samples.size();
  if (N < 3) throw InvalidArgument("check_convex_even: need at least three grid points");
  const Rational h = samples[1].t - samples[0].t;
  if (h <= 0) throw InvalidArgument("check_convex_even: grid must be increasing");
  for (std::size_t i = 0; i < N; ++i) {
    if (samples[i].t != -samples[N - 1 - i].t)
      throw InvalidArgument("check_convex_even: grid is not symmetric about 0");
    if (i > 0 && samples[i].t - samples[i - 1].t != h)
      throw InvalidArgument("check_convex_even: grid is not uniformly spaced");
  }
  PathReport rep;
  rep.tolerance = tolerance;
  for (const auto& s : samples) rep.grid.push_back(s.t);
  detail::note_anomalies(samples, rep);
  rep.full_sum_constant = full_sum_constant(samples);

  for (std::size_t j = 1; j + 1 < N; ++j) {
    const auto& a = samples[j - 1];
    const auto& b = samples[j];
    const auto& c = samples[j + 1];
    if (!detail::usable(a, b) || !detail::usable(b, c)) continue;
    for (std::size_t k = 0; k < b.partial_sums.size(); ++k) {
      const auto& A = a.partial_sums[k];
      const auto& B = b.partial_sums[k];
      const auto& C = c.partial_sums[k];
      const Rational lower = A.lo + C.lo - 2 * B.hi;
      const Rational upper = A.hi + C.hi - 2 * B.lo;
      if (lower >= -tolerance) continue;
      const Rational margin = -upper - tolerance;
      rep.convexity_violations.push_back(
          {PathCheck::Convexity, static_cast<int>(k) + 1, j, margin, margin > 0});
    }
  }
  for (std::size_t j = 0; j < N / 2; ++j) {
    const auto& a = samples[j];
    const auto& b = samples[N - 1 - j];
    if (a.image == b.image) continue;  // p_t = p_{-t}, so this is the expected case
    if (!detail::usable(a, b)) continue;
    for (std::size_t k = 0; k < a.partial_sums.size(); ++k) {
      const auto& A = a.partial_sums[k];
      const auto& B = b.partial_sums[k];
      const Rational worst = std::max(Rational(A.hi - B.lo), Rational(B.hi - A.lo));
      if (worst <= tolerance) continue;
      const Rational best = std::max({Rational(A.lo - B.hi), Rational(B.lo - A.hi), Rational(0)});
      const Rational margin = best - tolerance;
      rep.evenness_violations.push_back(
          {PathCheck::Evenness, static_cast<int>(k) + 1, j, margin, margin > 0});
    }
  }
  return rep;
}

inline PathReport check_majorization_monotone(std::span<const PathSample> samples,
                                              const Rational& eq_threshold) {
  PathReport rep;
  for (const auto& s : samples) rep.grid.push_back(s.t);
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < samples.size(); ++i)
    if (samples[i].t >= 0) idx.push_back(i);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return samples[a].t < samples[b].t; });
  for (std::size_t u = 0; u + 1 < idx.size(); ++u) {
    const auto& a = samples[idx[u]];
    const auto& b = samples[idx[u + 1]];
    if (!a.hyperbolic || !b.hyperbolic) continue;
    const auto v = majorizes(a.image, b.image, eq_threshold);
    if (v.relation != Relation::NotMajorized) continue;
    rep.monotonicity_violations.push_back(
        {PathCheck::Monotonicity, v.failing_index.value_or(-1) + 1, idx[u], v.margin, true});
  }
  return rep;
}

struct PathParams {
  Rational s{0};
  std::vector<Rational> grid = uniform_grid(Rational(-2), Rational(2), 33);
  Rational width = pow2_neg(40);
  Rational tolerance = pow2_neg(20);
  Rational eq_threshold = default_eq_threshold();
};

/// Samples the path and runs every check into one report.
inline PathReport run_path(const LinOp& T, const Poly& r, const PathParams& params) {
  const auto samples = path_samples(T, r, params.s, params.grid, params.width);
  PathReport rep = check_convex_even(samples, params.tolerance);
  rep.monotonicity_violations = check_majorization_monotone(samples, params.eq_threshold).monotonicity_violations;
  return rep;
}

}  // namespace hyperpres

#endif  // HYPERPRES_EIGEN_PATH_HPP
