#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "linkgap/errors.hpp"
#include "linkgap/io.hpp"

namespace {

void add_shared_options(CLI::App* cmd, linkgap::AnalysisConfig& config) {
  cmd->add_option("-c,--complex", config.complex_path, "complex JSON file")->required();
  cmd->add_option("-g,--group", config.group_path, "group JSON file (default: trivial group)");
  cmd->add_option("-r,--rep", config.rep_path,
                  "representation JSON file (default: trivial 1-dim)");
  cmd->add_option("--p", config.p, "integrability exponent")->check(CLI::Range(1.0, 64.0));
  cmd->add_option("--seed", config.seed, "random seed");
  cmd->add_option("--samples", config.samples, "sample count for randomized checks")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", config.format, "output format: human, json, csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));
  cmd->add_option("--cap", config.cap, "group closure cap");
  cmd->add_option("--tol-rank", config.tol_rank, "relative singular value threshold");
  cmd->add_option("--tol-eig", config.tol_eig, "zero eigenvalue threshold");
  cmd->add_flag("--no-timestamp{false}", config.timestamp, "omit the timestamp field");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted simplicial complexes: link spectral gaps, twisted cochain identities, "
               "and cohomology vanishing"};
  app.require_subcommand(1);

  linkgap::AnalysisConfig config;
  config.apply_env_overrides();

  CLI::App* analyze = app.add_subcommand("analyze", "full pipeline with the vanishing criterion");
  CLI::App* check = app.add_subcommand("check-identities", "run the identity battery");
  CLI::App* spectrum = app.add_subcommand("spectrum", "per-link spectral gaps only");
  CLI::App* cohomology = app.add_subcommand("cohomology", "cochain ranks and H^1 only");
  for (CLI::App* cmd : {analyze, check, spectrum, cohomology}) add_shared_options(cmd, config);

  CLI11_PARSE(app, argc, argv);

  try {
    linkgap::RunReport report;
    if (analyze->parsed()) report = linkgap::run_analyze(config);
    if (check->parsed()) report = linkgap::run_check_identities(config);
    if (spectrum->parsed()) report = linkgap::run_spectrum(config);
    if (cohomology->parsed()) report = linkgap::run_cohomology(config);

    std::cout << linkgap::render(report);
    return static_cast<int>(report.status);
  } catch (const linkgap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
