// ecoalg: command-line front end. Every report is JSON on stdout (or --out);
// errors print {"error": {kind, message, stage}} and exit 1.
#include "ecoalg/formats.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int emit(const ecoalg::Report& r, const std::optional<std::string>& out) {
  const std::string text = ecoalg::dump(r);
  if (!out) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(*out, std::ios::binary);
  file << text;
  if (!file) {
    std::cerr << "cannot write " << *out << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact E-infinity coalgebra toolkit for simplicial sets"};
  app.require_subcommand(1);
  ecoalg::RunConfig cfg;
  std::string out;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "check a .sset file (or a .coalg fixture) and list every violation"},
      {"homology", "integral homology with representatives"},
      {"coalgebra", "chain-level operators m2_0 .. m2_K and m3_1"},
      {"transfer", "transfer the structure onto homology along an SDR"},
      {"cobar", "word-length graded ranks of H0 of the truncated cobar complex"},
      {"invariant", "dual Sq class and dual triple Massey class"},
      {"compare", "compare two structures (or two SDRs of one input)"},
      {"selfcheck", "operad d^2, ladders, transfer relations and cobar D^2 on bundled fixtures"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (name != "selfcheck")
      sub->add_option("inputs", cfg.inputs, "file path or bundled fixture name")->required();
    sub->add_option("--max-cup", cfg.max_cup, "highest cup-k coproduct")->capture_default_str();
    sub->add_option("--max-len", cfg.max_len, "cobar word length cut N")->capture_default_str();
    sub->add_option("--out", out, "write the report here instead of stdout");
    sub->add_option("--seed", cfg.seed, "seed for the SDR choice")->capture_default_str();
    sub->add_flag("-v,--verbose", cfg.verbosity, "print the pipeline stages to stderr");
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    ecoalg::RunConfig bad;
    bad.command = cfg.command;
    std::cout << ecoalg::dump(ecoalg::error_report(bad, "arguments", "UsageError", e.what()));
    return 2;
  }
  if (!out.empty()) cfg.out = out;

  try {
    if (cfg.verbosity > 0) std::cerr << "ecoalg " << cfg.command << "\n";
    const ecoalg::Report r = ecoalg::run(cfg);
    if (emit(r, cfg.out) != 0) return 1;
    return r.at("ok").get<bool>() ? 0 : 3;
  } catch (const ecoalg::PipelineError& e) {
    emit(ecoalg::error_report(cfg, e.stage(), e.kind(), e.what()), cfg.out);
    return 1;
  } catch (const ecoalg::Error& e) {
    emit(ecoalg::error_report(cfg, "unknown", e.kind(), e.what()), cfg.out);
    return 1;
  } catch (const std::exception& e) {
    emit(ecoalg::error_report(cfg, "unknown", "InternalError", e.what()), cfg.out);
    return 1;
  }
}
