#include <doctest.h>

#include <cmath>

#include "oddrobin/arith.hpp"
#include "oddrobin/error.hpp"
#include "oddrobin/scan.hpp"

using namespace oddrobin;

namespace {

const PrimeTable& table() {
  static const PrimeTable t = sieve_up_to(kDefaultSieveLimit);
  return t;
}

const BoundContext& ctx() {
  static const BoundContext c;
  return c;
}

constexpr double kA = 0.8905362089950989926;
constexpr double kC = 0.7398002037224360226;

double divisor_sum(std::uint64_t n) {
  double s = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) {
      s += static_cast<double>(d);
    }
  }
  return s;
}

double slack_double(std::uint64_t n) {
  const double t = std::log(std::log(static_cast<double>(n)));
  return kA * t + kC / t - divisor_sum(n) / static_cast<double>(n);
}

}  // namespace

TEST_CASE("full scan") {
  const ScanReport r = brute_force_scan(3, 45045, table(), ctx());
  CHECK(r.checked == 22522);
  CHECK(r.violations.empty());
  CHECK(r.undecided.empty());
  CHECK(r.equality_values() == std::vector<std::uint64_t>{315});
  CHECK(r.outcome() == Outcome::Holds);
  REQUIRE(r.min_slack.has_value());
  CHECK(r.min_slack->n == 45);
  CHECK(std::abs(r.min_slack->slack.lo_double() - slack_double(45)) < 1e-12);
}

TEST_CASE("sub-ranges") {
  const ScanReport below = brute_force_scan(3, 313, table(), ctx());
  CHECK(below.checked == 156);
  CHECK(below.equality_values().empty());
  CHECK(below.outcome() == Outcome::Holds);
  const ScanReport only = brute_force_scan(315, 315, table(), ctx());
  CHECK(only.checked == 1);
  CHECK(only.equality_values() == std::vector<std::uint64_t>{315});
  CHECK_THROWS_AS(min_slack(only), UsageError);
  const ScanReport even_start = brute_force_scan(4, 10, table(), ctx());
  CHECK(even_start.checked == 3);
}

TEST_CASE("small range against a hand oracle") {
  const ScanReport r = brute_force_scan(3, 13, table(), ctx());
  std::uint64_t best = 0;
  double best_slack = 1e9;
  for (std::uint64_t n = 3; n <= 13; n += 2) {
    const double s = slack_double(n);
    CHECK(s > 0);
    if (s < best_slack) {
      best_slack = s;
      best = n;
    }
  }
  const SlackPoint p = min_slack(r);
  CHECK(p.n == best);
  CHECK(p.slack.lo_double() <= best_slack + 1e-12);
  CHECK(p.slack.hi_double() >= best_slack - 1e-12);
}

TEST_CASE("double-precision sandwich on the scan range") {
  for (std::uint64_t n = 3; n <= 3001; n += 2) {
    const Verdict v = check_main_inequality(n, table(), ctx());
    const double lhs = divisor_sum(n) / static_cast<double>(n);
    CHECK(v.lhs.enclosure.lo_double() <= lhs * (1 + 1e-15));
    CHECK(v.lhs.enclosure.hi_double() >= lhs * (1 - 1e-15));
    const double t = std::log(std::log(static_cast<double>(n)));
    const double rhs = kA * t + kC / t;
    CHECK(std::abs(v.rhs.enclosure.lo_double() - rhs) < 1e-12);
  }
}

TEST_CASE("partition invariance and determinism") {
  const ScanReport seq = brute_force_scan(3, 9001, table(), ctx(), 1);
  const ScanReport par = brute_force_scan(3, 9001, table(), ctx(), 6);
  const ScanReport merged = merge(brute_force_scan(3, 4001, table(), ctx()), brute_force_scan(4003, 9001, table(), ctx()));
  const ScanReport swapped = merge(brute_force_scan(4003, 9001, table(), ctx()), brute_force_scan(3, 4001, table(), ctx()));
  for (const ScanReport* r : {&par, &merged, &swapped}) {
    CHECK(r->lo == seq.lo);
    CHECK(r->hi == seq.hi);
    CHECK(r->checked == seq.checked);
    CHECK(r->equality_values() == seq.equality_values());
    REQUIRE(r->min_slack.has_value());
    CHECK(r->min_slack->n == seq.min_slack->n);
    CHECK(r->min_slack->slack.lo_string(40) == seq.min_slack->slack.lo_string(40));
  }
  const Report a = to_report(seq);
  const Report b = to_report(par);
  CHECK(a.summary == b.summary);
  CHECK(a.verdicts.size() == b.verdicts.size());
}

TEST_CASE("scan argument errors") {
  CHECK_THROWS_AS(brute_force_scan(1, 9, table(), ctx()), UsageError);
  CHECK_THROWS_AS(brute_force_scan(11, 9, table(), ctx()), UsageError);
  CHECK_THROWS_AS(brute_force_scan(3, kDefaultSieveLimit + 1, table(), ctx()), UsageError);
}

TEST_CASE("debug constant produces violations") {
  const BoundContext weak(PrecisionLadder{}, std::string("0.6"));
  const ScanReport r = brute_force_scan(3, 4001, table(), weak);
  CHECK(r.outcome() == Outcome::Fails);
  CHECK_FALSE(r.violations.empty());
  CHECK(r.equality_values().empty());
}
