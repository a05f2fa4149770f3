#ifndef HYPERPRES_CLASSIFY_HPP
#define HYPERPRES_CLASSIFY_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hyperpres/eigen_path.hpp"
#include "hyperpres/errors.hpp"
#include "hyperpres/operator.hpp"
#include "hyperpres/order.hpp"
#include "hyperpres/pinch.hpp"
#include "hyperpres/poly.hpp"
#include "hyperpres/random.hpp"
#include "hyperpres/rational.hpp"
#include "hyperpres/real_roots.hpp"

namespace hyperpres {

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

/// A failed structural clause (degenerate-branch clause, degree dominance,
/// degree profile, gamma sequence). Re-checkable by recomputing the clause.
struct ClauseCertificate {
  std::string clause;
  std::string detail;
};

/// t |-> F(a t + c, b t + d) with a, b > 0 is nonzero and has a non-real zero,
/// so F (or F(z,-w) when reflected) is not stable.
struct LineCertificate {
  bool reflected = false;
  Rational a, b, c, d;
  Poly restriction;
};

/// Both F_T(z,w) and F_T(z,-w) fail to be stable.
struct SymbolCertificate {
  LineCertificate plain;
  LineCertificate reflected;
};

/// A pair p < q whose images violate T(p) < T(q).
struct BehaviorCertificate {
  enum class Kind { ImageNotHyperbolic, DegreeMismatch, LeadingCoefficientMismatch, NotMajorized };
  Kind kind;
  Poly p, q, Tp, Tq;
  std::uint64_t sample_index = 0;
  std::uint64_t sample_seed = 0;
  std::optional<int> failing_index;
  Rational margin;
};

/// A hyperbolic p of degree n whose image is not hyperbolic, or whose image
/// degree differs from that of an earlier sample `reference`.
struct ImageCertificate {
  Poly p, Tp;
  std::optional<Poly> reference;
  std::uint64_t sample_index = 0;
  std::string reason;
};

/// A certified violation of convexity/evenness/monotonicity along a pinch path,
/// or a non-hyperbolic image on it.
struct PathCertificate {
  Poly r;
  Rational s;
  std::vector<Rational> t_values;  // the grid points involved
  std::string check;               // convexity | evenness | monotonicity | image_not_hyperbolic
  int k = 0;
  Rational margin;
  Rational width;
  Rational tolerance;
};

using Certificate = std::variant<ClauseCertificate, SymbolCertificate, BehaviorCertificate,
                                 ImageCertificate, PathCertificate>;

inline const char* to_string(BehaviorCertificate::Kind k) {
  switch (k) {
    case BehaviorCertificate::Kind::ImageNotHyperbolic: return "image_not_hyperbolic";
    case BehaviorCertificate::Kind::DegreeMismatch: return "degree_mismatch";
    case BehaviorCertificate::Kind::LeadingCoefficientMismatch: return "leading_coefficient_mismatch";
    case BehaviorCertificate::Kind::NotMajorized: return "not_majorized";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Stability falsifier
// ---------------------------------------------------------------------------

template <class Cert>
struct FalsifyResult {
  std::optional<Cert> certificate;
  int tried = 0;
};

/// Lines tried before any random draw: seven directions (a, b), asymmetric
/// ones first, against offsets (c, d) in [-2, 2]^2 ordered by |c| + |d|.
inline std::vector<std::array<Rational, 4>> stability_sweep() {
  static const int dirs[][2] = {{1, 2}, {2, 1}, {1, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}};
  static const int vals[] = {0, 1, -1, 2, -2};
  std::vector<std::pair<int, int>> offsets;
  for (int c : vals)
    for (int d : vals) offsets.emplace_back(c, d);
  std::stable_sort(offsets.begin(), offsets.end(), [](const auto& x, const auto& y) {
    return std::abs(x.first) + std::abs(x.second) < std::abs(y.first) + std::abs(y.second);
  });
  std::vector<std::array<Rational, 4>> lines;
  for (const auto& [c, d] : offsets)
    for (const auto& dir : dirs)
      lines.push_back({Rational(dir[0]), Rational(dir[1]), Rational(c), Rational(d)});
  return lines;
}

inline std::optional<LineCertificate> test_line(const Symbol& F, const Rational& a, const Rational& b,
                                                const Rational& c, const Rational& d) {
  Poly g = F.restrict_to_line(a, b, c, d);
  if (g.is_zero() || is_hyperbolic(g)) return std::nullopt;
  return LineCertificate{false, a, b, c, d, std::move(g)};
}

/// Semi-decision for real stability of F: searches for a line t |-> (a t + c,
/// b t + d), a, b > 0, on which F restricts to a nonzero polynomial with a
/// non-real zero. The fixed sweep always runs; `samples` random lines follow,
/// with a, b ratios of integers in [1, 1000] and c, d ratios u/v with u in
/// [-1000, 1000], v in [1, 1000].
inline FalsifyResult<LineCertificate> falsify_stability(const Symbol& F, int samples,
                                                        std::uint64_t seed) {
  if (samples < 1) throw InvalidArgument("falsify_stability: need samples >= 1");
  FalsifyResult<LineCertificate> res;
  for (const auto& l : stability_sweep()) {
    ++res.tried;
    if (auto cert = test_line(F, l[0], l[1], l[2], l[3])) {
      res.certificate = std::move(cert);
      return res;
    }
  }
  for (int i = 0; i < samples; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const Rational a = rng.ratio(1, 1000, 1000);
    const Rational b = rng.ratio(1, 1000, 1000);
    const Rational c = rng.ratio(-1000, 1000, 1000);
    const Rational d = rng.ratio(-1000, 1000, 1000);
    ++res.tried;
    if (auto cert = test_line(F, a, b, c, d)) {
      res.certificate = std::move(cert);
      return res;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Behavioural falsifiers
// ---------------------------------------------------------------------------

struct PreservationResult {
  std::optional<BehaviorCertificate> certificate;
  int tried = 0;
  int indistinguishable = 0;
};

namespace detail {

inline std::optional<BehaviorCertificate> check_pair(const LinOp& T, const Poly& p, const Poly& q,
                                                     const Rational& eq_threshold,
                                                     int* indistinguishable = nullptr) {
  using Kind = BehaviorCertificate::Kind;
  BehaviorCertificate c{Kind::ImageNotHyperbolic, p, q, apply(T, p), apply(T, q), 0, 0, std::nullopt, Rational(0)};
  if (!is_hyperbolic(c.Tq) || !is_hyperbolic(c.Tp)) return c;
  if (c.Tp.degree() != c.Tq.degree()) {
    c.kind = Kind::DegreeMismatch;
    return c;
  }
  if (c.Tp.leading() != c.Tq.leading()) {
    c.kind = Kind::LeadingCoefficientMismatch;
    c.margin = abs(c.Tp.leading() - c.Tq.leading());
    return c;
  }
  const auto v = majorizes(c.Tp, c.Tq, eq_threshold);
  if (v.relation == Relation::Indistinguishable && indistinguishable) ++*indistinguishable;
  if (v.relation != Relation::NotMajorized) return std::nullopt;
  c.kind = Kind::NotMajorized;
  c.failing_index = v.failing_index;
  c.margin = v.margin;
  return c;
}

}  // namespace detail

/// Draws pinch pairs p < q (zeros in [-bound, bound]) and looks for an exact
/// violation of T(p) < T(q). For n = 1 the only pairs are p = q, so the draw
/// is a single linear polynomial. Indistinguishable outcomes never refute.
inline PreservationResult falsify_preservation(const LinOp& T, int samples, std::uint64_t seed,
                                               const Rational& eq_threshold,
                                               const Rational& bound = Rational(10)) {
  if (samples < 1) throw InvalidArgument("falsify_preservation: need samples >= 1");
  PreservationResult res;
  for (int i = 0; i < samples; ++i) {
    const std::uint64_t si = derive_seed(seed, static_cast<std::uint64_t>(i));
    Poly p, q;
    if (T.n() >= 2) {
      std::tie(p, q) = random_pinch_pair(T.n(), si, bound);
    } else {
      Rng rng(si);
      p = q = Poly::linear_factor(rng.in_range(bound, 64));
    }
    ++res.tried;
    if (auto cert = detail::check_pair(T, p, q, eq_threshold, &res.indistinguishable)) {
      cert->sample_index = static_cast<std::uint64_t>(i);
      cert->sample_seed = si;
      res.certificate = std::move(cert);
      return res;
    }
  }
  return res;
}

/// Checks T(H_n) in H_m on random hyperbolic inputs of degree n; m is the
/// image degree of the first sample.
inline FalsifyResult<ImageCertificate> falsify_image_hyperbolicity(const LinOp& T, int samples,
                                                                   std::uint64_t seed,
                                                                   const Rational& bound = Rational(10)) {
  FalsifyResult<ImageCertificate> res;
  std::optional<Poly> reference;
  std::optional<Poly> reference_image;
  for (int i = 0; i < samples; ++i) {
    const std::uint64_t si = derive_seed(seed, static_cast<std::uint64_t>(i));
    const Poly p = random_hyperbolic(T.n(), si, bound);
    const Poly Tp = apply(T, p);
    ++res.tried;
    if (!is_hyperbolic(Tp)) {
      res.certificate = ImageCertificate{p, Tp, std::nullopt, static_cast<std::uint64_t>(i),
                                         "image_not_hyperbolic"};
      return res;
    }
    if (!reference) {
      reference = p;
      reference_image = Tp;
    } else if (Tp.degree() != reference_image->degree()) {
      res.certificate = ImageCertificate{p, Tp, reference, static_cast<std::uint64_t>(i),
                                         "image_degree_differs"};
      return res;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

enum class Verdict { CertifiedPreserver, CertifiedNonPreserver, RefutedNonPreserver, NotRefuted };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedPreserver: return "CertifiedPreserver";
    case Verdict::CertifiedNonPreserver: return "CertifiedNonPreserver";
    case Verdict::RefutedNonPreserver: return "RefutedNonPreserver";
    case Verdict::NotRefuted: return "NotRefuted";
  }
  return "?";
}

enum class FilterStatus { Passed, Failed, NotRefuted, Skipped };

inline const char* to_string(FilterStatus s) {
  switch (s) {
    case FilterStatus::Passed: return "passed";
    case FilterStatus::Failed: return "failed";
    case FilterStatus::NotRefuted: return "not_refuted";
    case FilterStatus::Skipped: return "skipped";
  }
  return "?";
}

struct FilterRecord {
  std::string name;
  FilterStatus status = FilterStatus::Skipped;
  std::string detail;
  int samples = 0;
  std::uint64_t seed = 0;
};

struct Evidence {
  std::uint64_t seed = 0;
  int samples = 0;
  int rank = 0;
  bool degenerate = false;
  int indistinguishable = 0;
  std::vector<FilterRecord> filters;
  std::vector<std::string> notes;
};

struct ClassificationReport {
  Verdict verdict = Verdict::NotRefuted;
  std::optional<Certificate> certificate;
  Evidence evidence;
};

struct SamplingBudget {
  int samples = 500;
  std::uint64_t seed = 0;
  Rational eq_threshold = default_eq_threshold();
  Rational root_bound{10};
  int path_checks = 2;
  int path_steps = 9;
};

/// Decides a degenerate operator exactly. It preserves majorization iff
/// T(z^k) = 0 for k <= n-2, T(z^n) is nonzero and hyperbolic, and T(z^(n-1))
/// is zero or hyperbolic, not a constant multiple of T(z^n), and interlacing
/// with it.
inline ClassificationReport classify_degenerate(const LinOp& T) {
  const int rank = rank_of_image(T);
  if (rank > 2) throw WrongBranch("classify_degenerate: operator has rank " + std::to_string(rank));
  const int n = T.n();
  ClassificationReport rep;
  rep.evidence.rank = rank;
  rep.evidence.degenerate = true;
  auto& ledger = rep.evidence.filters;
  auto fail = [&](std::string clause, std::string detail) {
    ledger.push_back({clause, FilterStatus::Failed, detail});
    rep.verdict = Verdict::CertifiedNonPreserver;
    rep.certificate = ClauseCertificate{std::move(clause), std::move(detail)};
    return rep;
  };

  for (int k = 0; k <= n - 2; ++k)
    if (!T.image(k).is_zero())
      return fail("lower_images_vanish",
                  "T(z^" + std::to_string(k) + ") = " + to_string(T.image(k)) + " is not zero");
  ledger.push_back({"lower_images_vanish", FilterStatus::Passed, ""});

  const Poly& top = T.image(n);
  if (top.is_zero()) return fail("top_image_hyperbolic", "T(z^n) is identically zero");
  if (!is_hyperbolic(top))
    return fail("top_image_hyperbolic", "T(z^n) = " + to_string(top) + " is not hyperbolic");
  ledger.push_back({"top_image_hyperbolic", FilterStatus::Passed, ""});

  const Poly& next = T.image(n - 1);
  if (next.is_zero()) {
    ledger.push_back({"next_image", FilterStatus::Passed, "T(z^(n-1)) = 0"});
  } else {
    if (!is_hyperbolic(next))
      return fail("next_image_hyperbolic", "T(z^(n-1)) = " + to_string(next) + " is not hyperbolic");
    if (is_scalar_multiple(next, top))
      return fail("next_image_not_multiple",
                  "T(z^(n-1)) = " + to_string(next) + " is a constant multiple of T(z^n)");
    if (!interlaces(next, top))
      return fail("next_image_interlaces", "zeros of T(z^(n-1)) and T(z^n) do not interlace");
    std::string detail;
    if (next.is_constant() || top.is_constant()) {
      detail = "vacuous: one of T(z^(n-1)), T(z^n) has no zeros";
      rep.evidence.notes.push_back("interlacing with a constant treated as vacuous");
    }
    ledger.push_back({"next_image", FilterStatus::Passed, detail});
  }
  rep.verdict = Verdict::CertifiedPreserver;
  return rep;
}

namespace detail {

constexpr std::uint64_t kStabilityTag = 1, kBehaviorTag = 2, kImageTag = 3, kPathTag = 4;

inline std::optional<PathCertificate> path_certificate(const PathReport& rep, const Poly& r,
                                                       const PathParams& params) {
  PathCertificate c{r, params.s, {}, "", 0, Rational(0), params.width, params.tolerance};
  if (!rep.anomalies.empty()) {
    c.check = "image_not_hyperbolic";
    c.t_values = {rep.anomalies.front().t};
    return c;
  }
  for (const auto* list : {&rep.convexity_violations, &rep.evenness_violations,
                           &rep.monotonicity_violations}) {
    for (const auto& v : *list) {
      if (!v.certified) continue;
      c.check = to_string(v.check);
      c.k = v.k;
      c.margin = v.margin;
      const auto N = rep.grid.size();
      switch (v.check) {
        case PathCheck::Convexity:
          c.t_values = {rep.grid[v.index - 1], rep.grid[v.index], rep.grid[v.index + 1]};
          break;
        case PathCheck::Evenness:
          c.t_values = {rep.grid[v.index], rep.grid[N - 1 - v.index]};
          break;
        case PathCheck::Monotonicity: {
          // next nonnegative grid point after index
          Rational t1 = rep.grid[v.index], t2 = t1;
          for (const auto& t : rep.grid)
            if (t > t1 && (t2 == t1 || t < t2)) t2 = t;
          c.t_values = {t1, t2};
          break;
        }
      }
      return c;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Full classification. Degenerate operators are decided exactly; for the
/// rest, exact necessary conditions run first, then sampling falsifiers. The
/// first failing filter decides; later ones are recorded as skipped.
inline ClassificationReport classify(const LinOp& T, const SamplingBudget& budget = {}) {
  if (is_degenerate(T)) {
    auto rep = classify_degenerate(T);
    rep.evidence.seed = budget.seed;
    rep.evidence.samples = budget.samples;
    return rep;
  }
  const int n = T.n();
  ClassificationReport rep;
  rep.evidence.seed = budget.seed;
  rep.evidence.samples = budget.samples;
  rep.evidence.rank = rank_of_image(T);
  auto& ledger = rep.evidence.filters;
  static const char* const kNames[] = {"top_degree_dominates", "degree_profile",  "gamma_sequence",
                                       "symbol_stability",     "behavioral_majorization",
                                       "image_hyperbolicity",  "zero_path"};
  auto refute = [&](std::size_t filter, std::string detail, Certificate cert, int samples = 0,
                    std::uint64_t seed = 0) {
    ledger.push_back({kNames[filter], FilterStatus::Failed, std::move(detail), samples, seed});
    for (std::size_t f = filter + 1; f < std::size(kNames); ++f)
      ledger.push_back({kNames[f], FilterStatus::Skipped, ""});
    rep.verdict = Verdict::RefutedNonPreserver;
    rep.certificate = std::move(cert);
    return rep;
  };

  // deg T(z^n) > deg T(z^k) for all k < n
  for (int k = 0; k < n; ++k)
    if (T.degree_of_image(k) >= T.degree_of_image(n)) {
      std::string d = "deg T(z^" + std::to_string(k) + ") = " + T.degree_of_image(k).str() +
                      " >= deg T(z^n) = " + T.degree_of_image(n).str();
      return refute(0, d, ClauseCertificate{kNames[0], d});
    }
  ledger.push_back({kNames[0], FilterStatus::Passed, ""});

  const auto prof = degree_profile(T);
  if (!prof.pass)
    return refute(1, prof.failed_clause + ": " + prof.detail,
                  ClauseCertificate{"degree_profile." + prof.failed_clause, prof.detail});
  ledger.push_back({kNames[1], FilterStatus::Passed, ""});

  const auto gam = gamma_sequence(T);
  if (!gam.pass)
    return refute(2, gam.failed_clause + ": " + gam.detail,
                  ClauseCertificate{"gamma_sequence." + gam.failed_clause, gam.detail});
  ledger.push_back({kNames[2], FilterStatus::Passed, ""});

  {
    const std::uint64_t seed = derive_seed(budget.seed, detail::kStabilityTag);
    const auto plain = falsify_stability(symbol(T, false), budget.samples, seed);
    const auto refl = falsify_stability(symbol(T, true), budget.samples, derive_seed(seed, 1));
    const int tried = plain.tried + refl.tried;
    if (plain.certificate && refl.certificate) {
      SymbolCertificate cert{*plain.certificate, *refl.certificate};
      cert.reflected.reflected = true;
      return refute(3, "neither F_T(z,w) nor F_T(z,-w) is stable", cert, tried, seed);
    }
    ledger.push_back({kNames[3], FilterStatus::NotRefuted,
                      plain.certificate ? "F_T(z,w) refuted; F_T(z,-w) not refuted"
                      : refl.certificate ? "F_T(z,-w) refuted; F_T(z,w) not refuted"
                                         : "no line restriction refuted either symbol",
                      tried, seed});
  }

  {
    const std::uint64_t seed = derive_seed(budget.seed, detail::kBehaviorTag);
    const auto res =
        falsify_preservation(T, budget.samples, seed, budget.eq_threshold, budget.root_bound);
    rep.evidence.indistinguishable = res.indistinguishable;
    if (res.certificate)
      return refute(4, to_string(res.certificate->kind), *res.certificate, res.tried, seed);
    ledger.push_back({kNames[4], FilterStatus::NotRefuted,
                      std::to_string(res.indistinguishable) + " indistinguishable", res.tried, seed});
  }

  {
    const std::uint64_t seed = derive_seed(budget.seed, detail::kImageTag);
    const auto res = falsify_image_hyperbolicity(T, budget.samples, seed, budget.root_bound);
    if (res.certificate) return refute(5, res.certificate->reason, *res.certificate, res.tried, seed);
    ledger.push_back({kNames[5], FilterStatus::NotRefuted, "", res.tried, seed});
  }

  {
    const std::uint64_t seed = derive_seed(budget.seed, detail::kPathTag);
    if (n < 2 || budget.path_checks < 1) {
      ledger.push_back({kNames[6], FilterStatus::Skipped, n < 2 ? "n < 2" : "disabled"});
    } else {
      for (int i = 0; i < budget.path_checks; ++i) {
        const std::uint64_t si = derive_seed(seed, static_cast<std::uint64_t>(i));
        Rng rng(si);
        PathParams params;
        params.s = rng.in_range(Rational(2), 8);
        params.grid = uniform_grid(Rational(-2), Rational(2), std::max(3, budget.path_steps | 1));
        params.width = pow2_neg(30);
        params.eq_threshold = budget.eq_threshold;
        const Poly r = random_hyperbolic(n - 2, derive_seed(si, 1), budget.root_bound);
        const auto prep = run_path(T, r, params);
        if (auto cert = detail::path_certificate(prep, r, params))
          return refute(6, cert->check, *cert, i + 1, seed);
      }
      ledger.push_back({kNames[6], FilterStatus::NotRefuted, "", budget.path_checks, seed});
    }
  }
  rep.verdict = Verdict::NotRefuted;
  return rep;
}

// ---------------------------------------------------------------------------
// Certificate re-verification
// ---------------------------------------------------------------------------

namespace detail {

inline bool verify_clause(const LinOp& T, const ClauseCertificate& c) {
  const int n = T.n();
  const std::string& cl = c.clause;
  if (cl == "lower_images_vanish") {
    for (int k = 0; k <= n - 2; ++k)
      if (!T.image(k).is_zero()) return true;
    return false;
  }
  if (cl == "top_image_hyperbolic") return !is_hyperbolic(T.image(n));
  if (cl == "next_image_hyperbolic") {
    const Poly& p = T.image(n - 1);
    return !p.is_zero() && !is_hyperbolic(p);
  }
  if (cl == "next_image_not_multiple") {
    const Poly& p = T.image(n - 1);
    return !p.is_zero() && is_scalar_multiple(p, T.image(n));
  }
  if (cl == "next_image_interlaces") {
    const Poly &p = T.image(n - 1), &q = T.image(n);
    return !p.is_zero() && is_hyperbolic(p) && is_hyperbolic(q) && !interlaces(p, q);
  }
  if (cl == "top_degree_dominates") {
    for (int k = 0; k < n; ++k)
      if (T.degree_of_image(k) >= T.degree_of_image(n)) return true;
    return false;
  }
  if (cl.rfind("degree_profile.", 0) == 0) {
    const auto prof = degree_profile(T);
    return !prof.pass && "degree_profile." + prof.failed_clause == cl;
  }
  if (cl.rfind("gamma_sequence.", 0) == 0) {
    const auto g = gamma_sequence(T);
    return !g.pass && "gamma_sequence." + g.failed_clause == cl;
  }
  return false;
}

inline bool verify_line(const LinOp& T, const LineCertificate& c) {
  if (c.a <= 0 || c.b <= 0) return false;
  const Poly g = symbol(T, c.reflected).restrict_to_line(c.a, c.b, c.c, c.d);
  return g == c.restriction && !g.is_zero() && !is_hyperbolic(g);
}

inline bool verify_behavior(const LinOp& T, const BehaviorCertificate& c, const Rational& eq) {
  using Kind = BehaviorCertificate::Kind;
  if (!is_hyperbolic(c.p) || !is_hyperbolic(c.q) || c.p.degree() != c.q.degree() ||
      c.p.deg() != T.n())
    return false;
  if (majorizes(c.p, c.q, eq).relation == Relation::NotMajorized) return false;
  if (apply(T, c.p) != c.Tp || apply(T, c.q) != c.Tq) return false;
  switch (c.kind) {
    case Kind::ImageNotHyperbolic: return !is_hyperbolic(c.Tp) || !is_hyperbolic(c.Tq);
    case Kind::DegreeMismatch: return c.Tp.degree() != c.Tq.degree();
    case Kind::LeadingCoefficientMismatch: return c.Tp.leading() != c.Tq.leading();
    case Kind::NotMajorized:
      return is_hyperbolic(c.Tp) && is_hyperbolic(c.Tq) &&
             majorizes(c.Tp, c.Tq, eq).relation == Relation::NotMajorized;
  }
  return false;
}

inline bool verify_image(const LinOp& T, const ImageCertificate& c) {
  if (!is_hyperbolic(c.p) || c.p.deg() != T.n() || apply(T, c.p) != c.Tp) return false;
  if (c.reason == "image_not_hyperbolic") return !is_hyperbolic(c.Tp);
  if (c.reason == "image_degree_differs" && c.reference) {
    const Poly& ref = *c.reference;
    return is_hyperbolic(ref) && ref.deg() == T.n() && apply(T, ref).degree() != c.Tp.degree();
  }
  return false;
}

inline bool verify_path(const LinOp& T, const PathCertificate& c, const Rational& eq) {
  if (c.check == "image_not_hyperbolic") {
    if (c.t_values.size() != 1) return false;
    const Poly p = path_polynomial(c.r, c.s, c.t_values[0]);
    return is_hyperbolic(p) && p.deg() == T.n() && !is_hyperbolic(apply(T, p));
  }
  const auto samples = path_samples(T, c.r, c.s, c.t_values, c.width);
  for (const auto& s : samples)
    if (!s.hyperbolic) return false;
  const auto sum = [&](std::size_t i) { return samples[i].partial_sums.at(static_cast<std::size_t>(c.k - 1)); };
  if (c.check == "convexity" && samples.size() == 3 &&
      c.t_values[1] - c.t_values[0] == c.t_values[2] - c.t_values[1]) {
    const Rational upper = sum(0).hi + sum(2).hi - 2 * sum(1).lo;
    return upper < -c.tolerance;
  }
  if (c.check == "evenness" && samples.size() == 2 && c.t_values[0] == -c.t_values[1]) {
    const Rational best = std::max(Rational(sum(0).lo - sum(1).hi), Rational(sum(1).lo - sum(0).hi));
    return best > c.tolerance;
  }
  if (c.check == "monotonicity" && samples.size() == 2 && 0 <= c.t_values[0] &&
      c.t_values[0] <= c.t_values[1])
    return majorizes(samples[0].image, samples[1].image, eq).relation == Relation::NotMajorized;
  return false;
}

}  // namespace detail

/// Independent re-check of a stored certificate against the operator.
inline bool verify_certificate(const LinOp& T, const Certificate& cert,
                               const Rational& eq_threshold = default_eq_threshold()) {
  return std::visit(
      [&](const auto& c) -> bool {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, ClauseCertificate>) return detail::verify_clause(T, c);
        else if constexpr (std::is_same_v<C, SymbolCertificate>)
          return !c.plain.reflected && c.reflected.reflected && detail::verify_line(T, c.plain) &&
                 detail::verify_line(T, c.reflected);
        else if constexpr (std::is_same_v<C, BehaviorCertificate>)
          return detail::verify_behavior(T, c, eq_threshold);
        else if constexpr (std::is_same_v<C, ImageCertificate>) return detail::verify_image(T, c);
        else return detail::verify_path(T, c, eq_threshold);
      },
      cert);
}

}  // namespace hyperpres

#endif  // HYPERPRES_CLASSIFY_HPP
