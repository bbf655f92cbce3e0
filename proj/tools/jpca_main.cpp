// Command-line front end: fperiod, fdense, fprobperiod, analyze, list-maps.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "jpca/report.hpp"

namespace {

struct Cli {
  jpca::RunConfig config;
  std::string k_text;
  std::string output;

  std::ostream* open(std::ofstream& file) {
    if (output.empty()) return &std::cout;
    file.open(output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + output + "'");
    return &file;
  }
};

void add_common(CLI::App* cmd, Cli& cli, bool needs_k) {
  cmd->add_option("--map", cli.config.maps, "map name or rule spec (repeatable)")
      ->required();
  auto* k = cmd->add_option("--k", cli.k_text, "shift periods: lo..hi or comma list");
  if (needs_k) k->required();
  cmd->add_option("--memory-budget", cli.config.memory_budget,
                  "bytes of working memory allowed per analysis");
  cmd->add_option("-o,--output", cli.output, "write to a file instead of standard output");
  cmd->add_flag("--parity", cli.config.parity,
                "display real cells as the reference tables do");
  cmd->add_option("--format",
                  [&cli](const std::vector<std::string>& v) {
                    if (v[0] == "csv") cli.config.format = jpca::OutputFormat::csv;
                    else if (v[0] == "markdown") cli.config.format = jpca::OutputFormat::markdown;
                    else return false;
                    return true;
                  },
                  "csv (default) or markdown");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"surjective one-dimensional cellular automata: exact and sampled analysis of jointly periodic points"};
  app.require_subcommand(1);

  Cli cli;

  auto* fperiod = app.add_subcommand("fperiod", "exact periodic-point statistics per k");
  add_common(fperiod, cli, true);
  fperiod->add_flag("--spectrum", cli.config.spectrum, "emit cycle spectra (p, mu_orb, mu_per, mu_ev)");
  fperiod->add_flag("--least", cli.config.least, "emit least-shift-period counts and their roots");

  auto* fdense = app.add_subcommand("fdense", "denseness of jointly periodic points");
  add_common(fdense, cli, true);
  fdense->add_option("--m", cli.config.m, "word length tested for occurrence")->required();

  auto* fprob = app.add_subcommand("fprobperiod", "sampled periods and preperiods");
  add_common(fprob, cli, true);
  fprob->add_option("--samples", cli.config.samples, "sample count per k");
  fprob->add_option("--seed", cli.config.seed, "PRNG seed");
  fprob->add_option("--max-steps", cli.config.max_steps, "per-sample iteration budget");

  auto* analyze = app.add_subcommand("analyze", "structural properties of maps");
  add_common(analyze, cli, false);

  auto* list = app.add_subcommand("list-maps", "print the bundled map catalogue");
  std::string list_output;
  list->add_option("-o,--output", list_output, "write to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    std::ofstream file;
    int errors = 0;
    if (list->parsed()) {
      cli.output = list_output;
      errors = jpca::run_list_maps(*cli.open(file));
    } else {
      if (!cli.k_text.empty()) cli.config.ks = jpca::parse_k_range(cli.k_text);
      std::ostream* out = cli.open(file);
      std::ofstream sidecar;
      if (fdense->parsed() && !cli.output.empty()) {
        sidecar.open(cli.output + ".missing", std::ios::binary);
        if (!sidecar) throw std::runtime_error("cannot open missing-pattern sidecar");
      }
      if (fperiod->parsed()) errors = jpca::run_fperiod(cli.config, *out);
      else if (fdense->parsed())
        errors = jpca::run_fdense(cli.config, *out, sidecar.is_open() ? &sidecar : nullptr);
      else if (fprob->parsed()) errors = jpca::run_fprobperiod(cli.config, *out);
      else if (analyze->parsed()) errors = jpca::run_analyze(cli.config, *out);
    }
    return errors == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
