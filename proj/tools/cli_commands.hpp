#ifndef HYPERPRES_TOOLS_CLI_COMMANDS_HPP
#define HYPERPRES_TOOLS_CLI_COMMANDS_HPP

// Subcommand bodies for the hyperpres executable. Each takes already-parsed
// JSON documents and options and returns the report document; exceptions
// propagate to main(), which maps them onto exit codes.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "hyperpres/hyperpres.hpp"

namespace hyperpres::cli {

using io::Json;

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kUsage = 1, kMalformed = 2 };

struct CommonOptions {
  bool deterministic = false;
};

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io::MalformedInput("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::exception& e) {
    throw io::MalformedInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

/// Wraps a command result into the common report envelope.
inline Json envelope(const std::string& command, const Json& inputs, Json body,
                     const CommonOptions& opts) {
  body["tool"] = "hyperpres";
  body["version"] = kToolVersion;
  body["command"] = command;
  body["input_digest"] = io::digest(inputs.dump());
  if (!opts.deterministic) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    body["timestamp"] = buf;
  }
  return body;
}

inline Json cmd_check_hyperbolic(const Json& poly, const Rational& width, const CommonOptions& opts) {
  const Poly p = io::parse_poly_doc(poly);
  Json body;
  const bool hyp = is_hyperbolic(p);
  body["verdict"] = hyp ? "Hyperbolic" : "NotHyperbolic";
  body["degree"] = p.degree().str();
  if (p.is_zero()) {
    body["reason"] = "zero polynomial";
  } else if (hyp) {
    Json roots = Json::array();
    for (const auto& iv : isolate_roots(p, width)) roots.push_back(io::interval_doc(iv));
    body["roots"] = roots;
    body["width"] = io::rational_doc(width);
  } else {
    const int distinct = count_distinct_real_roots(p);
    const Poly rad = radical(p);
    body["reason"] = "squarefree part of degree " + std::to_string(rad.is_constant() ? 0 : rad.deg()) +
                     " has " + std::to_string(distinct) + " real roots";
  }
  return envelope("check-hyperbolic", Json{{"p", poly}}, body, opts);
}

/// Malformed-for-this-command: valid JSON whose polynomial is outside H_n.
inline void require_hyperbolic(const Poly& p, const std::string& name) {
  if (!is_hyperbolic(p))
    throw io::MalformedInput(name + " = " + to_string(p) + " is not hyperbolic");
}

inline Json cmd_majorize(const Json& pj, const Json& qj, const Rational& eq, const CommonOptions& opts) {
  const Poly p = io::parse_poly_doc(pj, "p"), q = io::parse_poly_doc(qj, "q");
  require_hyperbolic(p, "p");
  require_hyperbolic(q, "q");
  const auto v = majorizes(p, q, eq);
  Json body{{"verdict", to_string(v.relation)}, {"evidence", io::verdict_doc(v)}};
  body["eq_threshold"] = io::rational_doc(eq);
  return envelope("majorize", Json{{"p", pj}, {"q", qj}}, body, opts);
}

/// Zero vector of a hyperbolic polynomial as rationals: exact when every zero
/// was pinned down exactly, otherwise enclosure midpoints shifted so their sum
/// is exactly -a_{n-1}/a_n.
inline std::pair<RootList, bool> rational_zero_vector(const Poly& p) {
  const auto z = root_vector(p, pow2_neg(60));
  RootList v = z.midpoints();
  bool exact = true;
  for (const auto& e : z.entries()) exact = exact && e.is_exact();
  if (!exact && p.deg() >= 1) {
    Rational s(0);
    for (const auto& x : v) s += x;
    const Rational target = -p.coeff(p.deg() - 1) / p.leading();
    const Rational shift = (target - s) / p.deg();
    for (auto& x : v) x += shift;
  }
  return {v, exact};
}

inline Json cmd_pinch_chain(const Json& pj, const Json& qj, const CommonOptions& opts) {
  const Poly p = io::parse_poly_doc(pj, "p"), q = io::parse_poly_doc(qj, "q");
  require_hyperbolic(p, "p");
  require_hyperbolic(q, "q");
  Json body;
  const auto v = majorizes(p, q);
  if (v.relation == Relation::NotMajorized || p.deg() < 2) {
    body["verdict"] = "NoChain";
    body["reason"] = p.deg() < 2 ? "pinches need degree >= 2" : "p is not majorized by q";
    body["majorization"] = io::verdict_doc(v);
    return envelope("pinch-chain", Json{{"p", pj}, {"q", qj}}, body, opts);
  }
  const auto [x, x_exact] = rational_zero_vector(p);
  const auto [y, y_exact] = rational_zero_vector(q);
  body["exact"] = x_exact && y_exact;
  body["x"] = io::roots_doc(x);
  body["y"] = io::roots_doc(y);
  if (vec_majorizes(x, y).relation != Relation::Majorized) {
    body["verdict"] = "NoChain";
    body["reason"] = "approximate zero vectors do not witness the majorization";
    return envelope("pinch-chain", Json{{"p", pj}, {"q", qj}}, body, opts);
  }
  const auto chain = decompose(x, y);
  Json moves = Json::array();
  for (const auto& m : chain.moves) moves.push_back(io::move_doc(m));
  Json traj = Json::array();
  for (const auto& t : chain.trajectory()) traj.push_back(io::roots_doc(t));
  body["verdict"] = "Chain";
  body["moves"] = moves;
  body["trajectory"] = traj;
  return envelope("pinch-chain", Json{{"p", pj}, {"q", qj}}, body, opts);
}

inline Json cmd_interlace(const Json& fj, const Json& gj, const CommonOptions& opts) {
  const Poly f = io::parse_poly_doc(fj, "f"), g = io::parse_poly_doc(gj, "g");
  if (f.is_zero() || g.is_zero()) throw io::MalformedInput("interlace: zero polynomial");
  require_hyperbolic(f, "f");
  require_hyperbolic(g, "g");
  Json body;
  body["verdict"] = interlaces(f, g) ? "Interlacing" : "NotInterlacing";
  body["vacuous"] = f.is_constant() || g.is_constant();
  const Poly w = f.derivative() * g - f * g.derivative();
  body["wronskian"] = io::poly_doc(w);
  body["wronskian_sign"] = to_string(is_sign_constant(w));
  return envelope("interlace", Json{{"f", fj}, {"g", gj}}, body, opts);
}

inline Json cmd_symbol(const Json& tj, bool reflect, const CommonOptions& opts) {
  const LinOp T = io::parse_operator_doc(tj);
  Json body = io::symbol_doc(symbol(T, reflect));
  body["reflect"] = reflect;
  return envelope("symbol", Json{{"operator", tj}, {"reflect", reflect}}, body, opts);
}

inline std::uint64_t fresh_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

inline Json cmd_classify(const Json& tj, const SamplingBudget& budget, const CommonOptions& opts) {
  const LinOp T = io::parse_operator_doc(tj);
  const auto rep = classify(T, budget);
  Json body{{"verdict", to_string(rep.verdict)}, {"evidence", io::evidence_doc(rep.evidence)}};
  body["certificate"] = rep.certificate ? io::certificate_doc(*rep.certificate) : Json(nullptr);
  if (rep.certificate) body["certificate_verified"] = verify_certificate(T, *rep.certificate, budget.eq_threshold);
  body["eq_threshold"] = io::rational_doc(budget.eq_threshold);
  return envelope("classify", Json{{"operator", tj}}, body, opts);
}

struct EigenpathOptions {
  Rational s{0};
  Rational t_min{-2};
  Rational t_max{2};
  int t_steps = 33;
  Rational width = pow2_neg(40);
  Rational tolerance = pow2_neg(20);
  Rational eq_threshold = default_eq_threshold();
};

inline Json cmd_eigenpath(const Json& tj, const Json& rj, const EigenpathOptions& o,
                          const CommonOptions& opts) {
  const LinOp T = io::parse_operator_doc(tj);
  const Poly r = io::parse_poly_doc(rj, "r");
  PathParams params;
  params.s = o.s;
  params.grid = uniform_grid(o.t_min, o.t_max, o.t_steps);
  params.width = o.width;
  params.tolerance = o.tolerance;
  params.eq_threshold = o.eq_threshold;
  PathReport rep;
  try {
    rep = run_path(T, r, params);
  } catch (const InvalidArgument& e) {
    throw io::MalformedInput(std::string("eigenpath: ") + e.what());
  }
  Json body = io::path_report_doc(rep);
  body["verdict"] = rep.clean() ? "NoViolations" : (rep.has_certified_violation() || !rep.anomalies.empty())
                                                      ? "CertifiedViolations"
                                                      : "UncertifiedViolations";
  body["s"] = io::rational_doc(o.s);
  body["width"] = io::rational_doc(o.width);
  return envelope("eigenpath", Json{{"operator", tj}, {"r", rj}, {"s", io::rational_doc(o.s)}}, body, opts);
}

}  // namespace hyperpres::cli

#endif  // HYPERPRES_TOOLS_CLI_COMMANDS_HPP
