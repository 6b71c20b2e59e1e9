#include "ddsim/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>

#include "ddsim/errors.hpp"
#include "ddsim/io.hpp"

namespace ddsim::cli {

namespace {

using nlohmann::json;

struct Config {
  std::string input;
  std::string format;
  std::optional<double> tol;
  std::string out;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("--input", cfg.input, "Matrix file (JSON or CSV)")->required();
  sub->add_option("--format", cfg.format, "Input format, defaults to the file extension")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--tol", cfg.tol, "Decision tolerance")->check(CLI::NonNegativeNumber);
  sub->add_option("--out", cfg.out, "Output file");
  sub->add_option("--seed", cfg.seed, "Seed for randomized searches");
}

RealMatrix load(const Config& cfg) {
  std::optional<io::MatrixFormat> format;
  if (cfg.format == "json") format = io::MatrixFormat::Json;
  if (cfg.format == "csv") format = io::MatrixFormat::Csv;
  return io::read_matrix_file(cfg.input, format);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << content;
  if (!f) throw ParseError("failed writing '" + path + "'");
}

void emit(const json& doc, const Config& cfg, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  out << text;
  if (!cfg.out.empty()) write_file(cfg.out, text);
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Impossible: return kNotAchievable;
    case Verdict::OutOfScopeSingular: return kSingular;
    default: return kOk;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real similarity to diagonally dominant matrices", "ddsim"};
  app.require_subcommand(1);

  Config cfg;
  long trials = 0;
  std::string target = "strict", mode = "real", axis = "row", which;

  auto* classify_cmd = app.add_subcommand("classify", "Decide which dominance is reachable");
  add_common(classify_cmd, cfg);
  classify_cmd->add_option("--trials", trials, "Random similarity trials run on Impossible verdicts")
      ->check(CLI::NonNegativeNumber);

  auto* transform_cmd = app.add_subcommand("transform", "Build a dominance certificate");
  add_common(transform_cmd, cfg);
  transform_cmd->add_option("--target", target)->check(CLI::IsMember({"strict", "nonstrict"}));
  transform_cmd->add_option("--mode", mode)->check(CLI::IsMember({"real", "complex"}));

  auto* gershgorin_cmd = app.add_subcommand("gershgorin", "Render Gershgorin discs as SVG");
  add_common(gershgorin_cmd, cfg);
  gershgorin_cmd->add_option("--axis", axis)->check(CLI::IsMember({"row", "column"}));

  auto* special_cmd = app.add_subcommand("special", "Z/Metzler/M/H tests and diagonal scalings");
  add_common(special_cmd, cfg);
  special_cmd->add_option("which", which, "tests | m-scale | h-scale")
      ->required()
      ->check(CLI::IsMember({"tests", "m-scale", "h-scale"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  try {
    const RealMatrix a = load(cfg);

    if (classify_cmd->parsed()) {
      const auto result = classify(a, cfg.tol.value_or(kDefaultClassifyTol));
      json doc = io::to_json(result);
      if (trials > 0 && result.verdict == Verdict::Impossible) {
        doc["search"] = io::to_json(random_similarity_search(a, trials, cfg.seed, false));
      }
      emit(doc, cfg, out);
      return verdict_exit(result.verdict);
    }

    if (transform_cmd->parsed()) {
      const double tol = cfg.tol.value_or(kDefaultClassifyTol);
      if (mode == "complex") {
        if (target != "strict") throw PreconditionViolated("complex mode only builds strict targets");
        emit(io::to_json(build_complex_dd_transform(a, tol)), cfg, out);
      } else {
        const Target t = target == "strict" ? Target::Strict : Target::NonStrict;
        emit(io::to_json(build_real_dd_transform(a, t, tol)), cfg, out);
      }
      return kOk;
    }

    if (gershgorin_cmd->parsed()) {
      const Axis ax = axis == "row" ? Axis::Row : Axis::Column;
      const std::string svg = io::render_gershgorin_svg(a, ax);
      if (cfg.out.empty()) {
        out << svg;
      } else {
        write_file(cfg.out, svg);
        out << json{{"svg", cfg.out}, {"discs", io::to_json(gershgorin_discs(a, ax))}}.dump(2)
            << "\n";
      }
      return kOk;
    }

    const double tol = cfg.tol.value_or(kDefaultHurwitzTol);
    if (which == "tests") {
      emit(json{{"z", is_z_matrix(a)},
                {"metzler", is_metzler(a)},
                {"m_matrix", is_m_matrix(a, tol)},
                {"h_matrix", is_h_matrix(a, tol)},
                {"hurwitz", is_hurwitz(a, tol)}},
           cfg, out);
    } else if (which == "m-scale") {
      emit(io::to_json(metzler_hurwitz_scaling(a, tol)), cfg, out);
    } else {
      emit(io::to_json(h_matrix_scaling(a, tol)), cfg, out);
    }
    return kOk;
  } catch (const ParseError& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidMatrix& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    const bool refused = dynamic_cast<const NotAchievable*>(&e) != nullptr ||
                         dynamic_cast<const PreconditionViolated*>(&e) != nullptr;
    const bool singular = dynamic_cast<const SingularInput*>(&e) != nullptr;
    if (refused || singular) {
      out << json{{"error", e.kind()}, {"message", e.what()}}.dump(2) << "\n";
      return refused ? kNotAchievable : kSingular;
    }
    return kNumericalError;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return kNumericalError;
  }
}

}  // namespace ddsim::cli
