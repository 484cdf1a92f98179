// hopfcert: build Hopf algebras and emit representation-theoretic certificates.
//
// Exit codes: 0 pass, 1 a check failed, 2 malformed input, 3 a standing assumption is violated.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopfcert/error.hpp"
#include "hopfcert/io.hpp"
#include "hopfcert/verifier.hpp"

using namespace hopfcert;

namespace {

std::optional<Field> parse_field(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto comma = text.find(',');
  try {
    const std::uint64_t p = std::stoull(text.substr(0, comma));
    const std::uint64_t k = comma == std::string::npos ? 1 : std::stoull(text.substr(comma + 1));
    return Field::create(p, k);
  } catch (const std::logic_error&) {
    throw InvalidInput("--field expects p or p,k");
  }
}

Subspace load_subalgebra(const Hopf& h, const std::string& path) {
  const json j = io::read_json_file(path);
  return io::subspace_from_json(h, j.is_object() && j.contains("subalgebra") ? j.at("subalgebra") : j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificates for Frobenius-type questions on finite-dimensional Hopf algebras"};
  app.require_subcommand(1);

  VerifyOptions opt;
  std::string field_spec, out_path, format = "json";
  bool timing = false;
  app.add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
  app.add_option("--threads", opt.threads, "worker threads")->capture_default_str();
  app.add_option("--field", field_spec, "override a recipe's field: p or p,k");
  app.add_option("--out", out_path, "write the report (or the built object) here");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_flag("--timing", timing, "include wall time in the report");
  app.add_flag("--oracle", opt.oracle, "cross-check chops by exhaustive search where feasible");

  std::string hopf_path, aux_path;
  std::vector<std::string> module_paths;

  auto* build = app.add_subcommand("build", "build a Hopf algebra or algebra from a recipe");
  build->add_option("recipe", hopf_path, "recipe JSON")->required();
  auto* check = app.add_subcommand("check-hopf", "check every algebra and Hopf axiom of a file");
  check->add_option("hopf", hopf_path, "Hopf algebra JSON")->required();
  auto* series = app.add_subcommand("series-check", "certify a normal series with commutative factors");
  series->add_option("hopf", hopf_path, "Hopf algebra JSON or recipe")->required();
  series->add_option("series", aux_path, "series JSON {\"chain\": [...]}")->required();
  auto* frob = app.add_subcommand("frobenius-check", "check that simple dimensions divide dim H");
  frob->add_option("hopf", hopf_path, "Hopf algebra JSON or recipe")->required();
  frob->add_option("series", aux_path, "series JSON {\"chain\": [...]}")->required();
  auto* cliff = app.add_subcommand("clifford-report", "factors of modules induced from a normal Hopf subalgebra");
  cliff->add_option("hopf", hopf_path, "Hopf algebra JSON or recipe")->required();
  cliff->add_option("subalgebra", aux_path, "Hopf subalgebra JSON")->required();
  auto* lies = app.add_subcommand("lies-over", "annihilators of simple modules over a Hopf subalgebra");
  lies->add_option("hopf", hopf_path, "Hopf algebra JSON or recipe")->required();
  lies->add_option("subalgebra", aux_path, "Hopf subalgebra JSON")->required();
  lies->add_option("--module", module_paths, "simple H-module JSON (repeatable)");

  for (auto* sub : {build, check, series, frob, cliff, lies}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    const std::optional<Field> field = parse_field(field_spec);
    Report report;
    if (build->parsed()) {
      report = cmd_build(io::read_json_file(hopf_path), opt, field);
    } else if (check->parsed()) {
      report = cmd_check_hopf(io::read_json_file(hopf_path), opt);
    } else {
      const HopfPtr h = load_hopf(io::read_json_file(hopf_path), field);
      if (series->parsed()) {
        report = cmd_series_check(h, io::series_from_json(*h, io::read_json_file(aux_path)), opt);
      } else if (frob->parsed()) {
        report = cmd_frobenius_check(h, io::series_from_json(*h, io::read_json_file(aux_path)), opt);
      } else if (cliff->parsed()) {
        report = cmd_clifford_report(h, load_subalgebra(*h, aux_path), opt);
      } else {
        std::vector<Module> modules;
        for (const auto& p : module_paths) modules.push_back(io::module_from_json(h->algebra_ptr(), io::read_json_file(p)));
        report = cmd_lies_over(h, load_subalgebra(*h, aux_path), modules, opt);
      }
    }
    if (timing) report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    json artifact = std::move(report.artifact);
    report.artifact = nullptr;
    const std::string text = format == "json" ? report.to_json().dump(2) + "\n" : report.to_text();
    if (build->parsed() && !out_path.empty() && !artifact.is_null()) {
      io::write_text_file(out_path, artifact.dump(2) + "\n");
      std::cout << text;
    } else if (build->parsed() && !artifact.is_null()) {
      std::cout << artifact.dump(2) << "\n";
      std::cerr << text;
    } else if (!out_path.empty()) {
      io::write_text_file(out_path, text);
    } else {
      std::cout << text;
    }
    return report.exit_code();
  } catch (const InvalidInput& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const AssumptionViolated& e) {
    std::cerr << "assumption violated: " << e.what() << "\n";
    return 3;
  } catch (const NotNormal& e) {
    std::cerr << "assumption violated: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
}
