/* Command-line front end: evaluate homology, loop a space, recover
 * homotopy ranks, check hyperbolicity, and verify scenarios.
 *
 * Exit codes: 0 success / VERIFIED, 1 MISMATCH, 2 NOT_APPLICABLE or a
 * rule-engine refusal, 3 malformed input. */

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "loopq/json_render.hpp"
#include "loopq/loopq.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_not_applicable = 2;
constexpr int exit_input_error = 3;

int verdict_exit(loopq::Verdict v) {
  switch (v) {
    case loopq::Verdict::verified: return exit_ok;
    case loopq::Verdict::mismatch: return exit_mismatch;
    case loopq::Verdict::not_applicable: return exit_not_applicable;
  }
  return exit_input_error;
}

std::string comma_list(const loopq::GradedSeries& s) {
  std::string out;
  for (const std::string& c : loopq::coefficient_strings(s)) {
    if (!out.empty()) out += ", ";
    out += c;
  }
  return out;
}

nlohmann::json error_report_json(const std::string& name, const std::string& reason) {
  return {{"name", name},
          {"verdict", "INPUT_ERROR"},
          {"reason", reason},
          {"hypotheses", nlohmann::json::array()},
          {"x_prime", ""},
          {"x", ""},
          {"path_a", {{"series", nlohmann::json::array()},
                      {"trace", nlohmann::json::array()}}},
          {"path_b", {{"series", nlohmann::json::array()},
                      {"trace", nlohmann::json::array()}}},
          {"ranks", nlohmann::json::array()},
          {"homology", nlohmann::json::array()},
          {"warnings", nlohmann::json::array()},
          {"max_degree", 0}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "loopq: exact Hilbert series of loop space homology over Q, rational "
      "homotopy ranks, and machine checks of loop(M) = loop(X # L) for "
      "pullback fibrations over connected sums"};
  app.require_subcommand(1);

  int max_degree = 32;
  std::string format = "text";
  std::string expression;
  std::string subject;
  std::vector<std::string> files;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--max-degree", max_degree,
                    "truncation bound N; series carry degrees 0..N")
        ->check(CLI::Range(1, 512))
        ->capture_default_str();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  CLI::App* eval = app.add_subcommand(
      "eval", "reduced rational homology of a space expression");
  eval->add_option("expression", expression, "space expression, quoted")
      ->required();
  add_common(eval);

  CLI::App* loops = app.add_subcommand(
      "loops", "Hilbert series of H_*(Omega Z; Q) with the rule trace");
  loops->add_option("expression", expression, "space expression, quoted")
      ->required();
  add_common(loops);

  CLI::App* ranks_cmd = app.add_subcommand(
      "ranks", "ranks of the rational homotopy groups pi_k (x) Q");
  ranks_cmd->add_option("expression", expression, "space expression, quoted")
      ->required();
  add_common(ranks_cmd);

  CLI::App* verify = app.add_subcommand(
      "verify", "check loop(M) = loop(X # L) on scenario files");
  verify->add_option("files", files, "scenario files")->required();
  add_common(verify);

  CLI::App* hyper = app.add_subcommand(
      "hyperbolicity", "rational ellipticity/hyperbolicity diagnostics");
  hyper->add_option("subject", subject, "space expression or scenario file")
      ->required();
  add_common(hyper);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_input_error;
  }

  const bool json_out = format == "json";

  /* verify handles errors per file so one bad scenario cannot hide the
   * others; it exits with the worst code across all files. */
  if (verify->parsed()) {
    const bool explicit_bound = verify->count("--max-degree") > 0;
    int worst = exit_ok;
    nlohmann::json jreports = nlohmann::json::array();
    std::string text_out;
    for (const std::string& file : files) {
      try {
        const loopq::FibrationScenario sc = loopq::load_scenario(file);
        const int n = explicit_bound ? max_degree
                                     : sc.max_degree.value_or(max_degree);
        const loopq::VerificationReport rep = loopq::verify_main_theorem(sc, n);
        worst = std::max(worst, verdict_exit(rep.verdict));
        if (json_out)
          jreports.push_back(loopq::report_json(rep));
        else
          text_out += loopq::to_text(rep) + "\n";
      } catch (const loopq::error& e) {
        worst = std::max(worst, exit_input_error);
        if (json_out)
          jreports.push_back(error_report_json(file, e.what()));
        else
          text_out += "scenario " + file + ": error: " + e.what() + "\n\n";
      }
    }
    if (json_out)
      std::cout << jreports.dump(2) << "\n";
    else
      std::cout << text_out;
    return worst;
  }

  try {
    if (eval->parsed()) {
      const loopq::SpaceRef sp = loopq::parse_space(expression);
      const loopq::GradedSeries red = loopq::reduced_homology(*sp, max_degree);
      if (json_out) {
        std::cout << loopq::eval_json(loopq::to_text(*sp), max_degree, red)
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "expression: " << loopq::to_text(*sp) << "\n"
                  << "reduced homology: " << loopq::to_text(red) << "\n"
                  << "coefficients: " << comma_list(red) << "\n";
      }
      return exit_ok;
    }

    if (loops->parsed()) {
      const loopq::SpaceRef sp = loopq::parse_space(expression);
      const loopq::LoopResult r = loopq::loop_series(*sp, max_degree);
      if (json_out) {
        std::cout << loopq::loops_json(loopq::to_text(*sp), max_degree, r)
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "expression: " << loopq::to_text(*sp) << "\n"
                  << "loop homology series: "
                  << loopq::detail::reciprocal_form(r.denominator) << "\n"
                  << "coefficients: " << comma_list(r.series) << "\n"
                  << "trace:\n";
        for (const loopq::TraceStep& s : r.trace.steps)
          std::cout << "  [" << loopq::rule_name(s.rule) << "] " << s.subject
                    << ": " << s.form << "\n";
      }
      return exit_ok;
    }

    if (ranks_cmd->parsed()) {
      const loopq::SpaceRef sp = loopq::parse_space(expression);
      const loopq::LoopResult r = loopq::loop_series(*sp, max_degree);
      const loopq::RankTable ranks = loopq::pbw_invert(r.series);
      if (json_out) {
        std::cout << loopq::ranks_command_json(loopq::to_text(*sp), max_degree,
                                               ranks)
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "expression: " << loopq::to_text(*sp) << "\n"
                  << loopq::rank_table_text(ranks);
      }
      return exit_ok;
    }

    if (hyper->parsed()) {
      loopq::HyperbolicityReport rep;
      if (std::filesystem::exists(subject)) {
        const loopq::FibrationScenario sc = loopq::load_scenario(subject);
        const bool explicit_bound = hyper->count("--max-degree") > 0;
        const int n = explicit_bound ? max_degree
                                     : sc.max_degree.value_or(max_degree);
        rep = loopq::hyperbolicity_report(sc, n);
      } else {
        const loopq::SpaceRef sp = loopq::parse_space(subject);
        rep = loopq::hyperbolicity_report(*sp, max_degree);
      }
      if (json_out)
        std::cout << loopq::hyperbolicity_json(rep).dump(2) << "\n";
      else
        std::cout << loopq::to_text(rep);
      return exit_ok;
    }
  } catch (const loopq::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const loopq::semantic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const loopq::rule_error& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return exit_not_applicable;
  } catch (const loopq::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_not_applicable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  }

  return exit_input_error;
}
