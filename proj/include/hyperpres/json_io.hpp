#ifndef HYPERPRES_JSON_IO_HPP
#define HYPERPRES_JSON_IO_HPP

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperpres/classify.hpp"
#include "hyperpres/eigen_path.hpp"
#include "hyperpres/operator.hpp"
#include "hyperpres/order.hpp"
#include "hyperpres/pinch.hpp"
#include "hyperpres/poly.hpp"
#include "hyperpres/rational.hpp"
#include "hyperpres/real_roots.hpp"

namespace hyperpres::io {

using Json = nlohmann::json;

/// Input document that does not match its schema.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Json rational_doc(const Rational& q) { return to_string(q); }

inline Rational parse_rational_doc(const Json& j, const std::string& where) {
  if (!j.is_string()) throw MalformedInput(where + ": rational must be a \"num/den\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InvalidArgument& e) {
    throw MalformedInput(where + ": " + e.what());
  }
}

// PolyDoc: {"coeffs": ["num/den", ...]} in ascending degree.
inline Json poly_doc(const Poly& p) {
  Json c = Json::array();
  for (const auto& a : p.coeffs()) c.push_back(rational_doc(a));
  return Json{{"coeffs", c}};
}

inline Poly parse_poly_doc(const Json& j, const std::string& where = "poly") {
  if (!j.is_object() || !j.contains("coeffs"))
    throw MalformedInput(where + ": expected an object with \"coeffs\"");
  const Json& c = j.at("coeffs");
  if (!c.is_array()) throw MalformedInput(where + ".coeffs: expected an array");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < c.size(); ++i)
    coeffs.push_back(parse_rational_doc(c[i], where + ".coeffs[" + std::to_string(i) + "]"));
  return Poly(std::move(coeffs));
}

// OperatorDoc: {"n": int, "images": [PolyDoc, ...]} with n + 1 images.
inline Json operator_doc(const LinOp& T) {
  Json im = Json::array();
  for (const auto& p : T.images()) im.push_back(poly_doc(p));
  return Json{{"n", T.n()}, {"images", im}};
}

inline LinOp parse_operator_doc(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("images"))
    throw MalformedInput("operator: expected an object with \"n\" and \"images\"");
  if (!j.at("n").is_number_integer()) throw MalformedInput("operator.n: expected an integer");
  const auto n = j.at("n").get<std::int64_t>();
  if (n < 1 || n > 4096) throw MalformedInput("operator.n: out of range");
  const Json& im = j.at("images");
  if (!im.is_array() || im.size() != static_cast<std::size_t>(n) + 1)
    throw MalformedInput("operator.images: expected an array of n + 1 = " + std::to_string(n + 1) +
                         " polynomials");
  std::vector<Poly> images;
  for (std::size_t k = 0; k < im.size(); ++k)
    images.push_back(parse_poly_doc(im[k], "operator.images[" + std::to_string(k) + "]"));
  return LinOp(static_cast<int>(n), std::move(images));
}

inline Json interval_doc(const IsolatingInterval& iv) {
  return Json{{"lo", rational_doc(iv.lo)}, {"hi", rational_doc(iv.hi)},
              {"multiplicity", iv.multiplicity}, {"approx", to_double((iv.lo + iv.hi) / 2)}};
}

inline Json interval_doc(const RationalInterval& iv) {
  return Json{{"lo", rational_doc(iv.lo)}, {"hi", rational_doc(iv.hi)}};
}

inline Json verdict_doc(const MajorizationVerdict& v) {
  Json j{{"relation", to_string(v.relation)},
         {"reason", to_string(v.reason)},
         {"margin", rational_doc(v.margin)},
         {"threshold_resolved", v.threshold_resolved}};
  j["failing_index"] = v.failing_index ? Json(*v.failing_index) : Json(nullptr);
  return j;
}

inline Json move_doc(const PinchMove& m) {
  return Json{{"index", m.index}, {"partner", m.partner}, {"amount", rational_doc(m.amount)}};
}

inline Json roots_doc(const RootList& r) {
  Json a = Json::array();
  for (const auto& x : r) a.push_back(rational_doc(x));
  return a;
}

inline Json symbol_doc(const Symbol& F) {
  Json by_w = Json::array();
  for (std::size_t l = 0; l < F.w_size(); ++l) by_w.push_back(poly_doc(F.w_coefficient(l)));
  Json matrix = Json::array();
  for (std::size_t j = 0; j < F.z_size(); ++j) {
    Json row = Json::array();
    for (std::size_t l = 0; l < F.w_size(); ++l) row.push_back(rational_doc(F.at(j, l)));
    matrix.push_back(row);
  }
  return Json{{"w_coefficients", by_w}, {"matrix", matrix}};
}

inline Json line_doc(const LineCertificate& c) {
  return Json{{"reflected", c.reflected}, {"a", rational_doc(c.a)}, {"b", rational_doc(c.b)},
              {"c", rational_doc(c.c)},       {"d", rational_doc(c.d)},
              {"restriction", poly_doc(c.restriction)}};
}

inline Json certificate_doc(const Certificate& cert) {
  return std::visit(
      [](const auto& c) -> Json {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, ClauseCertificate>) {
          return Json{{"type", "clause"}, {"clause", c.clause}, {"detail", c.detail}};
        } else if constexpr (std::is_same_v<C, SymbolCertificate>) {
          return Json{{"type", "symbol_not_stable"},
                      {"plain", line_doc(c.plain)},
                      {"reflected", line_doc(c.reflected)}};
        } else if constexpr (std::is_same_v<C, BehaviorCertificate>) {
          Json j{{"type", "behavior"},
                 {"kind", to_string(c.kind)},
                 {"p", poly_doc(c.p)},
                 {"q", poly_doc(c.q)},
                 {"Tp", poly_doc(c.Tp)},
                 {"Tq", poly_doc(c.Tq)},
                 {"sample_index", c.sample_index},
                 {"sample_seed", c.sample_seed},
                 {"margin", rational_doc(c.margin)}};
          j["failing_index"] = c.failing_index ? Json(*c.failing_index) : Json(nullptr);
          return j;
        } else if constexpr (std::is_same_v<C, ImageCertificate>) {
          Json j{{"type", "image"},
                 {"reason", c.reason},
                 {"p", poly_doc(c.p)},
                 {"Tp", poly_doc(c.Tp)},
                 {"sample_index", c.sample_index}};
          j["reference"] = c.reference ? poly_doc(*c.reference) : Json(nullptr);
          return j;
        } else {
          Json ts = Json::array();
          for (const auto& t : c.t_values) ts.push_back(rational_doc(t));
          return Json{{"type", "zero_path"},     {"check", c.check},
                      {"r", poly_doc(c.r)},      {"s", rational_doc(c.s)},
                      {"t_values", ts},          {"k", c.k},
                      {"margin", rational_doc(c.margin)}, {"width", rational_doc(c.width)},
                      {"tolerance", rational_doc(c.tolerance)}};
        }
      },
      cert);
}

inline Json evidence_doc(const Evidence& e) {
  Json filters = Json::array();
  for (const auto& f : e.filters)
    filters.push_back(Json{{"name", f.name},
                           {"status", to_string(f.status)},
                           {"detail", f.detail},
                           {"samples", f.samples},
                           {"seed", f.seed}});
  return Json{{"seed", e.seed},           {"samples", e.samples},
              {"rank", e.rank},           {"degenerate", e.degenerate},
              {"indistinguishable", e.indistinguishable},
              {"filters", filters},       {"notes", e.notes}};
}

inline Json path_violation_doc(const PathViolation& v, const PathReport& rep) {
  return Json{{"k", v.k},
              {"index", v.index},
              {"t", rational_doc(rep.grid.at(v.index))},
              {"margin", rational_doc(v.margin)},
              {"certified", v.certified}};
}

inline Json path_report_doc(const PathReport& rep) {
  auto list = [&](const std::vector<PathViolation>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(path_violation_doc(v, rep));
    return a;
  };
  Json anomalies = Json::array();
  for (const auto& a : rep.anomalies)
    anomalies.push_back(Json{{"index", a.index}, {"t", rational_doc(a.t)}, {"reason", a.reason}});
  Json grid = Json::array();
  for (const auto& t : rep.grid) grid.push_back(rational_doc(t));
  return Json{{"grid", grid},
              {"tolerance", rational_doc(rep.tolerance)},
              {"full_sum_constant", rep.full_sum_constant},
              {"convexity_violations", list(rep.convexity_violations)},
              {"evenness_violations", list(rep.evenness_violations)},
              {"monotonicity_violations", list(rep.monotonicity_violations)},
              {"anomalies", anomalies}};
}

/// FNV-1a 64-bit digest, hex.
inline std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hyperpres::io

#endif  // HYPERPRES_JSON_IO_HPP
