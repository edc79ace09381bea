#include <doctest.h>

#include <algorithm>

#include "oddrobin/error.hpp"
#include "oddrobin/report.hpp"

using namespace oddrobin;

namespace {

RunConfig config_for(Command c) {
  RunConfig cfg;
  cfg.command = c;
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  RunConfig c;
  CHECK_NOTHROW(validate(c));
  c.precision = 100;
  CHECK_THROWS_AS(validate(c), UsageError);
  c = RunConfig{};
  c.scan_from = 2;
  CHECK_THROWS_AS(validate(c), UsageError);
  c = RunConfig{};
  c.scan_to = c.sieve_limit + 1;
  CHECK_THROWS_AS(validate(c), UsageError);
  c = RunConfig{};
  c.lemma = "9.9";
  CHECK_THROWS_AS(validate(c), UsageError);
  c = RunConfig{};
  c.debug_constant = "zero";
  CHECK_THROWS_AS(validate(c), UsageError);
  c = RunConfig{};
  c.sieve_limit = 10000;
  c.scan_to = 9999;
  CHECK_THROWS_AS(cmd_verify_all(c), UsageError);
}

TEST_CASE("constants command") {
  const PipelineReport r = cmd_constants(config_for(Command::Constants));
  CHECK(r.overall == Outcome::Holds);
  REQUIRE(r.constants.size() == 6);
  const auto c = std::find_if(r.constants.begin(), r.constants.end(), [](const auto& k) { return k.name == "C"; });
  REQUIRE(c != r.constants.end());
  CHECK(c->enclosure.midpoint_fixed(4) == "0.7398");
}

TEST_CASE("renderers agree on verdict count") {
  RunConfig cfg = config_for(Command::Scan);
  cfg.scan_to = 999;
  const PipelineReport r = cmd_scan(cfg);
  const nlohmann::json j = to_json(r);
  CHECK(j["overall"] == "holds");
  CHECK(j["config"]["scan"]["to"] == 999);
  std::size_t verdicts = 0;
  for (const auto& s : j["stages"]) {
    verdicts += s["verdicts"].size();
  }
  const std::string csv = to_csv(r);
  CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == verdicts + 1);
  CHECK(to_text(r).find("overall: holds") != std::string::npos);
  CHECK_FALSE(j.contains("warning"));
}

TEST_CASE("rendering is deterministic") {
  RunConfig cfg = config_for(Command::Scan);
  cfg.scan_to = 2001;
  const std::string a = render(cmd_scan(cfg), Format::Json);
  cfg.parallel = true;
  std::string b = render(cmd_scan(cfg), Format::Json);
  const auto pos = b.find("\"parallel\": true");
  REQUIRE(pos != std::string::npos);
  b.replace(pos, 16, "\"parallel\": false");
  CHECK(a == b);
}

TEST_CASE("other commands") {
  RunConfig ca = config_for(Command::CaList);
  ca.ca_count = 10;
  const PipelineReport list = cmd_ca_list(ca);
  REQUIRE(list.stages.size() == 1);
  CHECK(list.stages[0].verdicts.size() == 10);
  CHECK(list.overall == Outcome::Holds);

  RunConfig lemma = config_for(Command::Lemma);
  CHECK(cmd_lemma(lemma).stages[0].verdicts.size() == 4);
  lemma.lemma = "2.4";
  lemma.lemma_prime = 19997;
  CHECK_THROWS_AS(cmd_lemma(lemma), UsageError);
  lemma.lemma = "2.2";
  lemma.lemma_prime = 10007;
  CHECK(cmd_lemma(lemma).overall == Outcome::Holds);
  lemma.lemma_prime = 10008;
  CHECK_THROWS_AS(cmd_lemma(lemma), UsageError);

  RunConfig sweep = config_for(Command::PrimorialSweep);
  sweep.sweep_from = 3;
  sweep.sweep_to = 60;
  CHECK(cmd_primorial_sweep(sweep).overall == Outcome::Fails);
}

TEST_CASE("exit codes") {
  CHECK(exit_code(Outcome::Holds) == 0);
  CHECK(exit_code(Outcome::HoldsWithEquality) == 0);
  CHECK(exit_code(Outcome::Fails) == 1);
  CHECK(exit_code(Outcome::Undecided) == 2);
  CHECK(kUsageExitCode == 64);
}

TEST_CASE("debug runs are flagged") {
  RunConfig cfg = config_for(Command::Scan);
  cfg.scan_to = 999;
  cfg.debug_constant = "0.6";
  const nlohmann::json j = to_json(cmd_scan(cfg));
  CHECK(j.contains("warning"));
  CHECK(j["overall"] == "fails");
}
