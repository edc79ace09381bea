#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "oddrobin/realbounds.hpp"
#include "oddrobin/verdict.hpp"

namespace oddrobin {

enum class Command { VerifyAll, Scan, CaList, PrimorialSweep, Lemma, Constants };
enum class Format { Json, Csv, Text };

std::string_view to_string(Command c);
std::string_view to_string(Format f);

struct RunConfig {
  Command command = Command::VerifyAll;
  Precision precision = kDefaultPrecision;
  bool ladder = true;
  std::uint64_t sieve_limit = 100000;
  std::uint64_t scan_from = 3;
  std::uint64_t scan_to = 45045;
  std::size_t sweep_from = 54;
  /// Defaults to the index of the first prime >= 20000.
  std::optional<std::size_t> sweep_to;
  std::size_t ca_count = 20;
  std::string lemma = "thm3.1";
  /// Prime at which `lemma` is evaluated; defaults to the first prime >= 20000.
  std::optional<std::uint64_t> lemma_prime;
  Format format = Format::Json;
  std::optional<std::string> out_path;
  bool parallel = false;
  /// Replaces C by this decimal. Unsound; negative testing only.
  std::optional<std::string> debug_constant;
};

/// Throws UsageError for a config no command can run with.
void validate(const RunConfig& config);

struct PipelineReport {
  std::string version;
  RunConfig config;
  std::vector<Report> stages;
  std::vector<CertifiedConstant> constants;
  Outcome overall = Outcome::Holds;
};

/// Scan, corollary cases 3/2/1, primorial sweep to the bridge prime, the
/// large-prime chain, lemma spot checks, constants and the coverage audit.
PipelineReport cmd_verify_all(const RunConfig& config);
PipelineReport cmd_constants(const RunConfig& config);
PipelineReport cmd_scan(const RunConfig& config);
PipelineReport cmd_ca_list(const RunConfig& config);
PipelineReport cmd_primorial_sweep(const RunConfig& config);
PipelineReport cmd_lemma(const RunConfig& config);

/// Dispatches on config.command.
PipelineReport run(const RunConfig& config);

/// 0 Holds, 1 Fails, 2 Undecided.
int exit_code(Outcome overall);
inline constexpr int kUsageExitCode = 64;

nlohmann::json to_json(const PipelineReport& report);
std::string to_csv(const PipelineReport& report);
std::string to_text(const PipelineReport& report);
std::string render(const PipelineReport& report, Format format);

}  // namespace oddrobin
