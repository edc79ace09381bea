#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "oddrobin/error.hpp"
#include "oddrobin/report.hpp"

namespace {

using oddrobin::Command;
using oddrobin::Format;
using oddrobin::RunConfig;

int write_output(const RunConfig& config, const std::string& text) {
  if (!config.out_path) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(*config.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "oddrobin: cannot open " << *config.out_path << " for writing\n";
    return oddrobin::kUsageExitCode;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  CLI::App app{"Certified checks of the odd-integer analogue of Robin's inequality", "oddrobin"};
  app.set_version_flag("--version", ODDROBIN_VERSION);
  app.fallthrough();
  app.require_subcommand(1);

  int precision = static_cast<int>(config.precision);
  app.add_option("--precision", precision, "Starting working precision in bits")
      ->check(CLI::IsMember({64, 128, 256, 512}));
  bool no_ladder = false;
  app.add_flag("--no-ladder", no_ladder, "Do not escalate precision on undecided comparisons");
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", config.out_path, "Write the report to this file instead of stdout");
  app.add_flag("--parallel", config.parallel, "Use all hardware threads for scans and sweeps");
  app.add_option("--sieve-limit", config.sieve_limit, "Largest integer covered by the prime sieve");
  app.add_option("--debug-constant-c", config.debug_constant,
                 "UNSOUND: replace the constant C by this decimal (negative testing only)");

  auto* verify = app.add_subcommand("verify", "Run verification pipelines");
  verify->require_subcommand(1);
  auto* verify_all = verify->add_subcommand("all", "Run every stage and the coverage audit");
  verify_all->add_option("--sweep-to", config.sweep_to, "Last primorial index of the sweep");

  auto* scan = app.add_subcommand("scan", "Check every odd n in a range");
  scan->add_option("--from", config.scan_from, "First n");
  scan->add_option("--to", config.scan_to, "Last n");

  auto* ca = app.add_subcommand("ca", "Odd colossally abundant numbers");
  ca->require_subcommand(1);
  auto* ca_list = ca->add_subcommand("list", "List the first odd CA numbers with their epsilon windows");
  ca_list->add_option("--count", config.ca_count, "How many to list");

  auto* sweep = app.add_subcommand("primorial-sweep", "Check odd primorials N'_k over an index range");
  sweep->add_option("--from", config.sweep_from, "First index k");
  sweep->add_option("--to", config.sweep_to, "Last index k (default: first prime >= 20000)");

  auto* lemma = app.add_subcommand("lemma", "Check one auxiliary inequality at a prime");
  lemma->add_option("--name", config.lemma, "Which inequality")->check(CLI::IsMember({"2.2", "2.4", "thm3.1"}));
  lemma->add_option("--prime", config.lemma_prime, "Prime at which to evaluate (default: first prime >= 20000)");

  auto* constants = app.add_subcommand("constants", "Print the certified constants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : oddrobin::kUsageExitCode;
  }

  config.precision = precision;
  config.ladder = !no_ladder;
  config.format = formats.at(format);
  if (verify_all->parsed()) {
    config.command = Command::VerifyAll;
  } else if (scan->parsed()) {
    config.command = Command::Scan;
  } else if (ca_list->parsed()) {
    config.command = Command::CaList;
  } else if (sweep->parsed()) {
    config.command = Command::PrimorialSweep;
  } else if (lemma->parsed()) {
    config.command = Command::Lemma;
  } else if (constants->parsed()) {
    config.command = Command::Constants;
  }

  if (config.debug_constant) {
    std::cerr << "oddrobin: WARNING: --debug-constant-c makes every result UNSOUND\n";
  }

  try {
    const oddrobin::PipelineReport report = oddrobin::run(config);
    const int io = write_output(config, oddrobin::render(report, config.format));
    return io != 0 ? io : oddrobin::exit_code(report.overall);
  } catch (const oddrobin::UsageError& e) {
    std::cerr << "oddrobin: " << e.what() << "\n";
    return oddrobin::kUsageExitCode;
  } catch (const oddrobin::StructuralError& e) {
    std::cerr << "oddrobin: structural error: " << e.what() << "\n";
    return 1;
  } catch (const oddrobin::DomainError& e) {
    std::cerr << "oddrobin: " << e.what() << "\n";
    return oddrobin::kUsageExitCode;
  } catch (const std::exception& e) {
    std::cerr << "oddrobin: internal error: " << e.what() << "\n";
    return 3;
  }
}
