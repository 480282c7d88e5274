//  Copyright 2026 The irislogic Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef IRISLOGIC_CLI_HPP_
#define IRISLOGIC_CLI_HPP_

// Command dispatch for the `irislogic` tool. Exit codes: 0 success,
// 1 verification or protocol failure, 2 usage or parse error. Failures print
// one machine-readable line `error reason=<token> detail=<text>` on stderr.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irislogic/algebra_checks.hpp"
#include "irislogic/bands.hpp"
#include "irislogic/calibration.hpp"
#include "irislogic/decision.hpp"
#include "irislogic/enrollment.hpp"
#include "irislogic/io.hpp"
#include "irislogic/octal_algebra.hpp"

namespace irislogic {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

namespace cli_detail {

struct Failure {
  int code;
  std::string reason;
  std::string detail;
};

inline void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file(path, text);
  }
}

inline void require_distinct(const std::string& input, const std::string& output) {
  if (input.empty() || output.empty() || output == "-") return;
  namespace fs = std::filesystem;
  std::error_code ec;
  const bool same = fs::exists(output, ec) && fs::exists(input, ec)
                        ? fs::equivalent(input, output, ec)
                        : fs::weakly_canonical(input, ec) == fs::weakly_canonical(output, ec);
  if (same) {
    throw Failure{kExitUsage, "usage", "output path '" + output +
                                           "' is the same as input '" + input + "'"};
  }
}

inline Operation parse_operation(const std::string& op) {
  if (op == "product" || op == "P") return Operation::kProduct;
  if (op == "sum" || op == "S") return Operation::kSum;
  throw Failure{kExitUsage, "usage", "--op must be product or sum"};
}

inline ScoreBands load_bands(const std::string& path) {
  if (path.empty()) return kReferenceBands;
  return bands_from_json(parse_json(read_file(path)));
}

inline LabeledScores load_scores(const std::string& path) {
  std::istringstream in(read_file(path));
  return read_scores_csv(in);
}

inline std::string comfort_text(const ComfortReport& r) {
  std::string out;
  out += "genuine_discomfort=" + format_decimal(r.genuine_discomfort) + "\n";
  out += "imposter_discomfort=" + format_decimal(r.imposter_discomfort) + "\n";
  out += "total_discomfort=" + format_decimal(r.total_discomfort) + "\n";
  out += "true_accept_safety=" + format_decimal(r.true_accept_safety) + "\n";
  out += "false_reject_safety=" + format_decimal(r.false_reject_safety) + "\n";
  return out;
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  using cli_detail::Failure;

  CLI::App app{"8-valent fuzzy decision algebra, calibration and enrollment tool",
               "irislogic"};
  app.require_subcommand(1);

  // algebra
  auto* algebra = app.add_subcommand("algebra", "emit or verify the Z8 algebra");
  algebra->require_subcommand(1);
  std::string algebra_op = "product";
  std::string algebra_out;
  auto* alg_table = algebra->add_subcommand("table", "8x8 table CSV with entropy column");
  alg_table->add_option("--op", algebra_op, "product or sum");
  alg_table->add_option("--out", algebra_out, "output file (default stdout)");
  auto* alg_verify = algebra->add_subcommand("verify", "run all exhaustive checks");
  auto* alg_entropy = algebra->add_subcommand("entropy", "both entropy columns as CSV");
  alg_entropy->add_option("--out", algebra_out, "output file (default stdout)");
  auto* alg_chains = algebra->add_subcommand("chains", "maximal chains, one per line");
  alg_chains->add_option("--out", algebra_out, "output file (default stdout)");

  // calibrate / curves
  std::string scores_path;
  std::string out_path;
  double target = 1e-10;
  double grid_step = 1e-4;
  double confidence = 0.95;
  auto* calibrate = app.add_subcommand("calibrate", "derive f-EER bands from scores");
  calibrate->add_option("--scores", scores_path, "labeled scores CSV")->required();
  calibrate->add_option("--target", target, "target FAR/FRR rate");
  calibrate->add_option("--grid-step", grid_step, "threshold grid step");
  calibrate->add_option("--confidence", confidence, "binomial bound level");
  calibrate->add_option("--out", out_path, "bands JSON output")->required();
  auto* curves = app.add_subcommand("curves", "FAR/FRR/POFA/POFR curves CSV");
  curves->add_option("--scores", scores_path, "labeled scores CSV")->required();
  curves->add_option("--grid-step", grid_step, "threshold grid step");
  curves->add_option("--confidence", confidence, "binomial bound level");
  curves->add_option("--out", out_path, "curves CSV output (default stdout)");

  // simulate
  PopulationParams pop;
  std::string templates_path;
  auto* simulate = app.add_subcommand("simulate", "synthetic population pair scores");
  simulate->add_option("--identities", pop.identities, "number of identities");
  simulate->add_option("--samples-per", pop.samples_per_identity, "samples per identity");
  simulate->add_option("--bits", pop.bit_length, "template length in bits");
  simulate->add_option("--flip", pop.flip_probability, "per-bit flip probability");
  simulate->add_option("--seed", pop.seed, "random seed");
  simulate->add_option("--out", out_path, "scores CSV output (default stdout)");
  simulate->add_option("--out-templates", templates_path, "templates JSON output");

  // decide
  std::string bands_path;
  std::string claim_text = "positive";
  std::string identity;
  double score = 0.0;
  auto* decide_cmd = app.add_subcommand("decide", "adjudicate one claim");
  decide_cmd->add_option("--bands", bands_path, "bands JSON (default 0.3725/0.55)");
  decide_cmd->add_option("--claim", claim_text, "positive or negative")->required();
  decide_cmd->add_option("--score", score, "similarity score in [0,1]")->required();
  decide_cmd->add_option("--identity", identity, "claimed identity label");

  // enroll
  std::string gallery_path;
  std::string candidate_path;
  auto* enroll_cmd = app.add_subcommand("enroll", "one-to-all enrollment of a template");
  enroll_cmd->add_option("--bands", bands_path, "bands JSON for a new gallery");
  enroll_cmd->add_option("--gallery", gallery_path, "gallery JSON")->required();
  enroll_cmd->add_option("--candidate", candidate_path, "candidate template JSON")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error reason=usage detail=" << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (algebra->parsed()) {
      if (alg_table->parsed()) {
        cli_detail::emit(out, algebra_out, table_csv(cli_detail::parse_operation(algebra_op)));
      } else if (alg_entropy->parsed()) {
        cli_detail::emit(out, algebra_out, entropy_csv());
      } else if (alg_chains->parsed()) {
        cli_detail::emit(out, algebra_out, chains_text(maximal_chains()));
      } else if (alg_verify->parsed()) {
        bool all_ok = true;
        for (const CheckResult& r : run_algebra_checks()) {
          out << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.passed << "/"
              << r.total << "\n";
          all_ok = all_ok && r.ok();
        }
        if (!all_ok) {
          throw Failure{kExitFailure, "verification_failed", "algebra checks failed"};
        }
      }
    } else if (calibrate->parsed()) {
      cli_detail::require_distinct(scores_path, out_path);
      if (!(target > 0.0 && target < 1.0)) {
        throw Failure{kExitUsage, "usage", "--target must be in (0,1)"};
      }
      const LabeledScores samples = cli_detail::load_scores(scores_path);
      const RateCurves c = empirical_curves(samples, grid_step, confidence);
      const ScoreBands bands = derive_bands(c, target);
      write_file(out_path, dump(bands_to_json(bands)));
      out << "n=" << format_decimal(bands.n) << "\n";
      out << "p=" << format_decimal(bands.p) << "\n";
      out << "target_rate=" << format_decimal(bands.target_rate) << "\n";
      out << cli_detail::comfort_text(comfort_report(c, bands));
    } else if (curves->parsed()) {
      cli_detail::require_distinct(scores_path, out_path);
      const LabeledScores samples = cli_detail::load_scores(scores_path);
      cli_detail::emit(out, out_path,
                       curves_csv(empirical_curves(samples, grid_step, confidence)));
    } else if (simulate->parsed()) {
      cli_detail::require_distinct(out_path, templates_path);
      const std::vector<Template> population = generate_population(pop);
      cli_detail::emit(out, out_path, scores_csv(all_pairs(population)));
      if (!templates_path.empty()) {
        write_file(templates_path, dump(templates_to_json(population)));
      }
    } else if (decide_cmd->parsed()) {
      const ScoreBands bands = cli_detail::load_bands(bands_path);
      const DecisionRecord rec =
          decide(Claim{parse_polarity(claim_text), identity}, score, bands);
      out << to_record_line(rec) << "\n";
    } else if (enroll_cmd->parsed()) {
      cli_detail::require_distinct(candidate_path, gallery_path);
      cli_detail::require_distinct(bands_path, gallery_path);
      const Template candidate = template_from_json(parse_json(read_file(candidate_path)));
      std::optional<Gallery> gallery;
      if (std::filesystem::exists(gallery_path)) {
        gallery = gallery_from_json(parse_json(read_file(gallery_path)));
        if (!bands_path.empty() && !(cli_detail::load_bands(bands_path) == gallery->bands())) {
          throw Failure{kExitUsage, "usage",
                        "--bands differs from the bands stored in the gallery"};
        }
      } else {
        gallery.emplace(cli_detail::load_bands(bands_path));
      }
      const EnrollOutcome outcome = enroll(*gallery, candidate);
      if (!outcome.enrolled()) {
        std::string ids;
        for (const auto& id : outcome.conflicting_ids) ids += (ids.empty() ? "" : ",") + id;
        out << "status=rejected template_id=" << candidate.template_id
            << " conflicts=" << ids << "\n";
        throw Failure{kExitFailure, "unenrollable",
                      "candidate forms an undecidable pair with " + ids};
      }
      write_file(gallery_path, dump(gallery_to_json(*gallery)));
      out << "status=enrolled template_id=" << candidate.template_id
          << " gallery_size=" << gallery->size() << "\n";
    }
  } catch (const Failure& f) {
    err << "error reason=" << f.reason << " detail=" << f.detail << "\n";
    return f.code;
  } catch (const TargetUnachievable& e) {
    err << "error reason=target_unachievable detail=" << e.what() << "\n";
    return kExitFailure;
  } catch (const ParseError& e) {
    err << "error reason=parse_error detail=" << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error reason=usage detail=" << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error reason=usage detail=" << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error reason=io detail=" << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace irislogic

#endif  // IRISLOGIC_CLI_HPP_
