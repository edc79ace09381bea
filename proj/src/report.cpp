#include "oddrobin/report.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "oddrobin/ca.hpp"
#include "oddrobin/error.hpp"
#include "oddrobin/primes.hpp"
#include "oddrobin/robin.hpp"
#include "oddrobin/scan.hpp"

#ifndef ODDROBIN_VERSION
#define ODDROBIN_VERSION "0.0.0"
#endif

namespace oddrobin {

using nlohmann::json;

std::string_view to_string(Command c) {
  switch (c) {
    case Command::VerifyAll:
      return "verify all";
    case Command::Scan:
      return "scan";
    case Command::CaList:
      return "ca list";
    case Command::PrimorialSweep:
      return "primorial-sweep";
    case Command::Lemma:
      return "lemma";
    case Command::Constants:
      return "constants";
  }
  return "verify all";
}

std::string_view to_string(Format f) {
  switch (f) {
    case Format::Json:
      return "json";
    case Format::Csv:
      return "csv";
    case Format::Text:
      return "text";
  }
  return "json";
}

void validate(const RunConfig& c) {
  constexpr Precision allowed[] = {64, 128, 256, 512};
  if (std::find(std::begin(allowed), std::end(allowed), c.precision) == std::end(allowed)) {
    throw UsageError(fmt::format("--precision must be one of 64, 128, 256, 512 (got {})", c.precision));
  }
  if (c.sieve_limit < 3) {
    throw UsageError("--sieve-limit must be >= 3");
  }
  if (c.scan_from < 3 || c.scan_from > c.scan_to) {
    throw UsageError(fmt::format("scan bounds need 3 <= from <= to (got [{}, {}])", c.scan_from, c.scan_to));
  }
  if (c.scan_to > c.sieve_limit) {
    throw UsageError(fmt::format("scan upper bound {} beyond sieve limit {}", c.scan_to, c.sieve_limit));
  }
  if (c.sweep_from < 2 || (c.sweep_to && *c.sweep_to < c.sweep_from)) {
    throw UsageError("sweep bounds need 2 <= from <= to");
  }
  if (c.ca_count < 1 || c.ca_count > 100000) {
    throw UsageError("--count must lie in [1, 100000]");
  }
  if (c.lemma != "2.2" && c.lemma != "2.4" && c.lemma != "thm3.1") {
    throw UsageError("--name must be one of 2.2, 2.4, thm3.1 (got " + c.lemma + ")");
  }
  if (c.debug_constant) {
    Interval::from_decimal(*c.debug_constant, kMinPrecision);
  }
}

namespace {

struct Session {
  RunConfig config;
  PrimeTable table;
  BoundContext ctx;
  unsigned threads;
  std::size_t bridge;

  explicit Session(const RunConfig& c)
      : config(c),
        table(sieve_up_to(c.sieve_limit)),
        ctx(PrecisionLadder(c.precision, c.ladder), c.debug_constant),
        threads(c.parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u),
        bridge(0) {
    if (table.limit() >= kBridgeBound) {
      bridge = bridge_index(table);
    }
  }

  std::size_t require_bridge() const {
    if (bridge == 0) {
      throw UsageError(fmt::format("sieve limit must exceed {} to reach the bridge prime", kBridgeBound));
    }
    return bridge;
  }

  PipelineReport envelope() const {
    PipelineReport r;
    r.version = ODDROBIN_VERSION;
    r.config = config;
    return r;
  }
};

void finish(PipelineReport& r) {
  r.overall = Outcome::Holds;
  for (const auto& s : r.stages) {
    r.overall = combine(r.overall, s.overall());
  }
}

std::vector<CertifiedConstant> constants_table(const Session& s) {
  const Precision prec = s.ctx.ladder().start();
  std::vector<CertifiedConstant> out;
  out.push_back({"gamma", euler_gamma(prec), "MPFR const_euler, directed rounding"});
  out.push_back({"e^gamma/2", s.ctx.coefficient(prec), "exp(gamma)/2"});
  if (s.ctx.constant_is_defining()) {
    out.push_back(main_constant_C(prec));
  } else {
    out.push_back({"C", s.ctx.constant(prec), "debug substitute (unsound)"});
  }
  out.push_back(robin_constant(prec));
  out.push_back(lemma24_constant(prec));
  out.push_back({"lemma24_inner_factor", lemma24_inner_factor(prec), "1/(1 - (1 + log 2)/(8 log 20000))"});
  return out;
}

Report constants_stage(const Session& s) {
  const BoundContext& ctx = s.ctx;
  Report r;
  r.name = "constants";
  r.verdicts.push_back(check_increasing_premise(ctx));
  const ExactRatio robin_printed(mpz_class(6482), mpz_class(10000));
  r.verdicts.push_back(certify_le("0.6482 (Robin, even n) < C", ctx.ladder(), [&](Precision prec) {
    return std::pair{Snapshot::of(robin_printed, prec), Snapshot::of(ctx.constant(prec))};
  }));
  const ExactRatio tolerance(mpz_class(1), mpz_class(1000));
  r.verdicts.push_back(certify_le("|7/3 - (e^gamma loglog 12 + 0.6482/loglog 12)| <= 10^-3 (Robin, n = 12)",
                                  ctx.ladder(), [&](Precision prec) {
                                    const Interval t = loglog_of_integer(12, prec);
                                    const Interval bound =
                                        rhs_bound(t, exp(euler_gamma(prec)), robin_printed.enclose(prec));
                                    const Interval gap = abs(Interval::from_ratio(mpq_class(7, 3), prec) - bound);
                                    return std::pair{Snapshot::of(gap), Snapshot::of(tolerance, prec)};
                                  }));
  r.summary = fmt::format("C = {} (4 decimals), e^gamma/2 = {}: {}", ctx.constant(ctx.ladder().start()).midpoint_fixed(4),
                          ctx.coefficient(ctx.ladder().start()).midpoint_fixed(4), to_string(r.overall()));
  return r;
}

Report lemma_spot_checks(const Session& s) {
  Report r;
  r.name = "lemma_spot_checks";
  const std::size_t k22 = s.table.first_index_at_least(10000);
  r.verdicts.push_back(check_lemma22(k22, s.table, s.ctx));
  r.verdicts.push_back(check_lemma22(s.require_bridge(), s.table, s.ctx));
  r.verdicts.push_back(check_lemma24(s.table.prime(s.require_bridge()), s.table, s.ctx));
  r.summary = to_string(r.overall()).data();
  return r;
}

Report ca_list_stage(const std::vector<OddCaNumber>& seq) {
  Report r;
  r.name = "ca_list";
  for (const auto& n : seq) {
    Verdict v;
    v.subject = fmt::format("N_{} = {} = {}: eps window non-empty", n.ordinal, n.factorization.to_string(),
                            value(n.factorization).get_str());
    v.lhs = Snapshot::of(n.left_at.eps);
    v.rhs = Snapshot::of(n.entered_at ? n.entered_at->eps : Interval::at_least(n.left_at.eps));
    if (!n.entered_at) {
      // N = 3 has no upper window end.
      v.outcome = Outcome::Holds;
    } else {
      v.outcome = decide(v.lhs, v.rhs);
    }
    v.precision_used = n.left_at.eps.precision();
    r.verdicts.push_back(std::move(v));
  }
  r.summary = fmt::format("{} odd colossally abundant numbers", seq.size());
  return r;
}

}  // namespace

PipelineReport cmd_verify_all(const RunConfig& config) {
  validate(config);
  const Session s(config);
  const std::size_t bridge = s.require_bridge();
  const std::size_t sweep_to = config.sweep_to.value_or(bridge);
  PipelineReport r = s.envelope();

  r.constants = constants_table(s);
  r.stages.push_back(constants_stage(s));

  const ScanReport scan = brute_force_scan(config.scan_from, config.scan_to, s.table, s.ctx, s.threads);
  r.stages.push_back(to_report(scan));

  const auto sequence = generate_odd_ca(kCorollaryCaCount, s.table, s.ctx.ladder());
  bool corollaries_hold[4] = {false, false, false, false};
  for (int id : {3, 2, 1}) {
    r.stages.push_back(corollary_sweep(id, sequence, s.table, s.ctx));
    corollaries_hold[id] = r.stages.back().overall() == Outcome::Holds;
  }

  const PrimorialSweep sweep = primorial_sweep(config.sweep_from, sweep_to, s.table, s.ctx, s.threads);
  r.stages.push_back(sweep.report);

  r.stages.push_back(check_theorem31_chain(bridge, s.table, s.ctx));
  const bool chain_holds = r.stages.back().overall() == Outcome::Holds;

  r.stages.push_back(lemma_spot_checks(s));

  std::vector<CoverageRange> ranges = standard_coverage(s.table, std::max(sweep_to, kPrimorialThresholdIndex), config.scan_to);
  for (auto& range : ranges) {
    if (range.name == "scan") {
      range.lo = static_cast<unsigned long>(config.scan_from);
      range.certified = scan.outcome() == Outcome::Holds;
    } else if (range.name == "corollary_case_1") {
      range.certified = corollaries_hold[1];
    } else if (range.name == "corollary_case_2") {
      range.certified = corollaries_hold[2];
    } else if (range.name == "corollary_case_3") {
      range.certified = corollaries_hold[3];
    } else if (range.name == "primorial_sweep") {
      range.certified = sweep.threshold_range_holds && sweep_to >= kPrimorialThresholdIndex;
    } else if (range.name == "theorem31") {
      range.certified = chain_holds;
    }
  }
  const CoverageResult audit = coverage_audit(ranges);
  Report coverage;
  coverage.name = "coverage_audit";
  coverage.verdicts.push_back(audit.verdict);
  std::string listed;
  for (const auto& range : ranges) {
    listed += fmt::format("{}{}{}", listed.empty() ? "" : "; ", range.name, range.certified ? "" : " (not certified)");
  }
  coverage.summary = listed;
  r.stages.push_back(std::move(coverage));

  finish(r);
  return r;
}

PipelineReport cmd_constants(const RunConfig& config) {
  validate(config);
  const Session s(config);
  PipelineReport r = s.envelope();
  r.constants = constants_table(s);
  r.stages.push_back(constants_stage(s));
  finish(r);
  return r;
}

PipelineReport cmd_scan(const RunConfig& config) {
  validate(config);
  const Session s(config);
  PipelineReport r = s.envelope();
  r.stages.push_back(to_report(brute_force_scan(config.scan_from, config.scan_to, s.table, s.ctx, s.threads)));
  finish(r);
  return r;
}

PipelineReport cmd_ca_list(const RunConfig& config) {
  validate(config);
  const Session s(config);
  PipelineReport r = s.envelope();
  r.stages.push_back(ca_list_stage(generate_odd_ca(config.ca_count, s.table, s.ctx.ladder())));
  finish(r);
  return r;
}

PipelineReport cmd_primorial_sweep(const RunConfig& config) {
  validate(config);
  const Session s(config);
  const std::size_t to = config.sweep_to ? *config.sweep_to : s.require_bridge();
  PipelineReport r = s.envelope();
  r.stages.push_back(primorial_sweep(config.sweep_from, to, s.table, s.ctx, s.threads).report);
  finish(r);
  return r;
}

PipelineReport cmd_lemma(const RunConfig& config) {
  validate(config);
  const Session s(config);
  const std::uint64_t p = config.lemma_prime.value_or(s.table.prime(s.require_bridge()));
  if (p > s.table.limit() || !s.table.is_prime(p)) {
    throw UsageError(fmt::format("--prime {} is not a prime within the sieve", p));
  }
  PipelineReport r = s.envelope();
  if (config.lemma == "thm3.1") {
    r.stages.push_back(check_theorem31_chain(s.table.index_of(p), s.table, s.ctx));
  } else {
    Report one;
    one.name = "lemma_" + config.lemma;
    one.verdicts.push_back(config.lemma == "2.2" ? check_lemma22(s.table.index_of(p), s.table, s.ctx)
                                                 : check_lemma24(p, s.table, s.ctx));
    one.summary = to_string(one.overall()).data();
    r.stages.push_back(std::move(one));
  }
  finish(r);
  return r;
}

PipelineReport run(const RunConfig& config) {
  switch (config.command) {
    case Command::VerifyAll:
      return cmd_verify_all(config);
    case Command::Scan:
      return cmd_scan(config);
    case Command::CaList:
      return cmd_ca_list(config);
    case Command::PrimorialSweep:
      return cmd_primorial_sweep(config);
    case Command::Lemma:
      return cmd_lemma(config);
    case Command::Constants:
      return cmd_constants(config);
  }
  throw UsageError("unknown command");
}

int exit_code(Outcome overall) {
  switch (overall) {
    case Outcome::Holds:
    case Outcome::HoldsWithEquality:
      return 0;
    case Outcome::Fails:
      return 1;
    case Outcome::Undecided:
      return 2;
  }
  return 2;
}

// ---- serialization ---------------------------------------------------------

namespace {

// Rationals longer than this (primorial ratios run to thousands of digits)
// are reported through their enclosure only.
constexpr std::size_t kMaxExactChars = 200;

struct Endpoints {
  std::string exact;  // empty when absent or too long
  std::string lo;
  std::string hi;
  int digits = 0;
};

Endpoints endpoints(const Snapshot& s) {
  Endpoints e;
  e.digits = decimal_digits_for(s.enclosure.precision());
  e.lo = s.enclosure.lo_string(e.digits);
  e.hi = s.enclosure.hi_string(e.digits);
  if (s.exact) {
    const std::size_t size = mpz_sizeinbase(s.exact->value().get_num_mpz_t(), 10) +
                             mpz_sizeinbase(s.exact->value().get_den_mpz_t(), 10);
    if (size <= kMaxExactChars) {
      e.exact = s.exact->to_string();
    }
  }
  return e;
}

json snapshot_json(const Snapshot& s) {
  const Endpoints e = endpoints(s);
  return json{{"exact", e.exact.empty() ? json(nullptr) : json(e.exact)},
              {"lo", e.lo},
              {"hi", e.hi},
              {"digits", e.digits}};
}

json config_json(const RunConfig& c) {
  auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
  return json{{"command", std::string(to_string(c.command))},
              {"precision", c.precision},
              {"ladder", c.ladder},
              {"sieve_limit", c.sieve_limit},
              {"scan", {{"from", c.scan_from}, {"to", c.scan_to}}},
              {"sweep", {{"from", c.sweep_from}, {"to", opt(c.sweep_to)}}},
              {"ca_count", c.ca_count},
              {"lemma", c.lemma},
              {"lemma_prime", opt(c.lemma_prime)},
              {"format", std::string(to_string(c.format))},
              {"out", opt(c.out_path)},
              {"parallel", c.parallel},
              {"debug_constant", opt(c.debug_constant)}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') {
      out += '"';
    }
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

json to_json(const PipelineReport& report) {
  json stages = json::array();
  for (const auto& stage : report.stages) {
    json verdicts = json::array();
    for (const auto& v : stage.verdicts) {
      verdicts.push_back(json{{"subject", v.subject},
                              {"outcome", std::string(to_string(v.outcome))},
                              {"precision_used", v.precision_used},
                              {"lhs", snapshot_json(v.lhs)},
                              {"rhs", snapshot_json(v.rhs)}});
    }
    stages.push_back(json{{"name", stage.name},
                          {"outcome", std::string(to_string(stage.overall()))},
                          {"summary", stage.summary},
                          {"verdicts", std::move(verdicts)}});
  }
  json constants = json::array();
  for (const auto& c : report.constants) {
    const int digits = decimal_digits_for(c.enclosure.precision());
    constants.push_back(json{{"name", c.name},
                             {"lo", c.enclosure.lo_string(digits)},
                             {"hi", c.enclosure.hi_string(digits)},
                             {"digits", digits},
                             {"rounded_4", c.enclosure.midpoint_fixed(4)},
                             {"derivation", c.derivation}});
  }
  json out{{"version", report.version},
           {"config", config_json(report.config)},
           {"stages", std::move(stages)},
           {"constants", std::move(constants)},
           {"overall", std::string(to_string(report.overall))}};
  if (report.config.debug_constant) {
    out["warning"] = "UNSOUND: C replaced by debug constant " + *report.config.debug_constant;
  }
  return out;
}

std::string to_csv(const PipelineReport& report) {
  std::ostringstream os;
  os << "stage,subject,outcome,precision_used,digits,lhs_exact,lhs_lo,lhs_hi,rhs_exact,rhs_lo,rhs_hi\n";
  for (const auto& stage : report.stages) {
    for (const auto& v : stage.verdicts) {
      const Endpoints l = endpoints(v.lhs);
      const Endpoints r = endpoints(v.rhs);
      os << csv_field(stage.name) << ',' << csv_field(v.subject) << ',' << to_string(v.outcome) << ','
         << v.precision_used << ',' << std::max(l.digits, r.digits) << ',' << csv_field(l.exact) << ',' << l.lo
         << ',' << l.hi << ',' << csv_field(r.exact) << ',' << r.lo << ',' << r.hi << '\n';
    }
  }
  return os.str();
}

std::string to_text(const PipelineReport& report) {
  std::ostringstream os;
  os << "oddrobin " << report.version << ": " << to_string(report.config.command) << " (precision "
     << report.config.precision << (report.config.ladder ? ", ladder to 512" : ", no ladder") << ")\n";
  if (report.config.debug_constant) {
    os << "WARNING: UNSOUND RUN, C replaced by " << *report.config.debug_constant << "\n";
  }
  for (const auto& c : report.constants) {
    const int digits = decimal_digits_for(c.enclosure.precision());
    os << fmt::format("  {:<22} {}  in [{}, {}]\n", c.name, c.enclosure.midpoint_fixed(10), c.enclosure.lo_string(digits),
                      c.enclosure.hi_string(digits));
  }
  for (const auto& stage : report.stages) {
    os << fmt::format("[{}] {}: {}\n", to_string(stage.overall()), stage.name, stage.summary);
    std::size_t shown = 0;
    for (const auto& v : stage.verdicts) {
      if (is_holding(v.outcome) && stage.verdicts.size() > 12) {
        continue;
      }
      if (++shown > 20) {
        os << "    ...\n";
        break;
      }
      os << fmt::format("    {:<20} {}\n", to_string(v.outcome), v.subject);
    }
  }
  os << "overall: " << to_string(report.overall) << "\n";
  return os.str();
}

std::string render(const PipelineReport& report, Format format) {
  switch (format) {
    case Format::Json:
      return to_json(report).dump(2) + "\n";
    case Format::Csv:
      return to_csv(report);
    case Format::Text:
      return to_text(report);
  }
  return to_json(report).dump(2) + "\n";
}

}  // namespace oddrobin
