// hyperpres: command-line front end. Reports go to stdout as JSON, human
// diagnostics to stderr. Exit codes: 0 verdict computed, 1 usage error,
// 2 malformed input.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli_commands.hpp"

namespace {

using hyperpres::Rational;
namespace cli = hyperpres::cli;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rational_flag(const std::string& text, const char* flag) {
  try {
    return hyperpres::parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

Rational positive_flag(const std::string& text, const char* flag) {
  Rational q = rational_flag(text, flag);
  if (q <= 0) throw UsageError(std::string(flag) + " must be positive");
  return q;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for hyperbolic polynomials and majorization preservers"};
  app.require_subcommand(1);
  cli::CommonOptions common;
  app.add_flag("--deterministic", common.deterministic, "Omit the timestamp from reports");

  std::string width = "2^-30", eq = "2^-64";

  std::string file_p, file_q, file_t, file_r;

  auto* hyp = app.add_subcommand("check-hyperbolic", "Decide real-rootedness and isolate zeros");
  hyp->add_option("poly", file_p, "PolyDoc file")->required();
  hyp->add_option("--width", width, "Enclosure width (num/den or 2^-k)");
  hyp->add_flag("--deterministic", common.deterministic);

  auto* maj = app.add_subcommand("majorize", "Test p < q in the majorization order");
  maj->add_option("p", file_p)->required();
  maj->add_option("q", file_q)->required();
  maj->add_option("--eq-threshold", eq, "Equality threshold for partial-sum enclosures");
  maj->add_flag("--deterministic", common.deterministic);

  auto* pin = app.add_subcommand("pinch-chain", "Decompose p < q into pinches");
  pin->add_option("p", file_p)->required();
  pin->add_option("q", file_q)->required();
  pin->add_flag("--deterministic", common.deterministic);

  auto* itl = app.add_subcommand("interlace", "Test interlacing of zeros");
  itl->add_option("f", file_p)->required();
  itl->add_option("g", file_q)->required();
  itl->add_flag("--deterministic", common.deterministic);

  bool reflect = false;
  auto* sym = app.add_subcommand("symbol", "Print the symbol F_T(z, w)");
  sym->add_option("operator", file_t)->required();
  sym->add_flag("--reflect", reflect, "Substitute w -> -w");
  sym->add_flag("--deterministic", common.deterministic);

  int samples = 500;
  std::optional<std::uint64_t> seed;
  int path_checks = 2;
  auto* cls = app.add_subcommand("classify", "Classify an operator as majorization preserver");
  cls->add_option("operator", file_t)->required();
  cls->add_option("--samples", samples, "Samples per falsifier")->check(CLI::PositiveNumber);
  cls->add_option("--seed", seed, "Master seed (generated and reported when absent)");
  cls->add_option("--eq-threshold", eq);
  cls->add_option("--path-checks", path_checks, "Random zero paths to test")->check(CLI::NonNegativeNumber);
  cls->add_flag("--deterministic", common.deterministic);

  std::string s = "0", t_min = "-2", t_max = "2", tolerance = "2^-20";
  int t_steps = 33;
  std::string path_width = "2^-40";
  auto* eig = app.add_subcommand("eigenpath", "Check convexity along a pinch path");
  eig->add_option("operator", file_t)->required();
  eig->add_option("r", file_r, "Monic hyperbolic r of degree n-2")->required();
  eig->add_option("--s", s);
  eig->add_option("--t-min", t_min);
  eig->add_option("--t-max", t_max);
  eig->add_option("--t-steps", t_steps)->check(CLI::Range(3, 100000));
  eig->add_option("--width", path_width);
  eig->add_option("--tolerance", tolerance);
  eig->add_option("--eq-threshold", eq);
  eig->add_flag("--deterministic", common.deterministic);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  try {
    cli::Json out;
    if (*hyp) {
      out = cli::cmd_check_hyperbolic(cli::read_json_file(file_p), positive_flag(width, "--width"), common);
    } else if (*maj) {
      out = cli::cmd_majorize(cli::read_json_file(file_p), cli::read_json_file(file_q),
                              positive_flag(eq, "--eq-threshold"), common);
    } else if (*pin) {
      out = cli::cmd_pinch_chain(cli::read_json_file(file_p), cli::read_json_file(file_q), common);
    } else if (*itl) {
      out = cli::cmd_interlace(cli::read_json_file(file_p), cli::read_json_file(file_q), common);
    } else if (*sym) {
      out = cli::cmd_symbol(cli::read_json_file(file_t), reflect, common);
    } else if (*cls) {
      hyperpres::SamplingBudget budget;
      budget.samples = samples;
      budget.seed = seed ? *seed : cli::fresh_seed();
      budget.eq_threshold = positive_flag(eq, "--eq-threshold");
      budget.path_checks = path_checks;
      if (!seed) std::cerr << "hyperpres: no --seed given, using " << budget.seed << "\n";
      out = cli::cmd_classify(cli::read_json_file(file_t), budget, common);
    } else if (*eig) {
      cli::EigenpathOptions o;
      o.s = rational_flag(s, "--s");
      o.t_min = rational_flag(t_min, "--t-min");
      o.t_max = rational_flag(t_max, "--t-max");
      if (!(o.t_min < o.t_max)) throw UsageError("--t-min must be below --t-max");
      o.t_steps = t_steps;
      o.width = positive_flag(path_width, "--width");
      o.tolerance = rational_flag(tolerance, "--tolerance");
      o.eq_threshold = positive_flag(eq, "--eq-threshold");
      out = cli::cmd_eigenpath(cli::read_json_file(file_t), cli::read_json_file(file_r), o, common);
    }
    std::cout << out.dump(2) << "\n";
    return cli::kOk;
  } catch (const UsageError& e) {
    std::cerr << "hyperpres: " << e.what() << "\n";
    return cli::kUsage;
  } catch (const hyperpres::io::MalformedInput& e) {
    std::cerr << "hyperpres: malformed input: " << e.what() << "\n";
    return cli::kMalformed;
  } catch (const hyperpres::InvalidArgument& e) {
    std::cerr << "hyperpres: malformed input: " << e.what() << "\n";
    return cli::kMalformed;
  } catch (const hyperpres::PreconditionViolation& e) {
    std::cerr << "hyperpres: malformed input: " << e.what() << "\n";
    return cli::kMalformed;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "hyperpres: malformed input: " << e.what() << "\n";
    return cli::kMalformed;
  }
}
