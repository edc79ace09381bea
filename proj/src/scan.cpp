#include "oddrobin/scan.hpp"

#include <algorithm>
#include <future>
#include <string>

#include <fmt/format.h>

#include "oddrobin/error.hpp"

namespace oddrobin {

namespace {

bool slack_less(const SlackPoint& a, const SlackPoint& b) {
  const int c = mpfr_cmp(a.slack.lo(), b.slack.lo());
  return c < 0 || (c == 0 && a.n < b.n);
}

void merge_hits(std::vector<ScanHit>& into, const std::vector<ScanHit>& from) {
  into.insert(into.end(), from.begin(), from.end());
  std::sort(into.begin(), into.end(), [](const ScanHit& x, const ScanHit& y) { return x.n < y.n; });
}

ScanReport scan_range(std::uint64_t lo, std::uint64_t hi, const PrimeTable& table, const BoundContext& ctx) {
  ScanReport r;
  r.lo = lo;
  r.hi = hi;
  for (std::uint64_t n = lo | 1; n <= hi; n += 2) {
    Verdict v = check_main_inequality(n, table, ctx);
    ++r.checked;
    switch (v.outcome) {
      case Outcome::Holds: {
        SlackPoint s{n, v.rhs.enclosure - v.lhs.enclosure, std::move(v)};
        if (!r.min_slack || slack_less(s, *r.min_slack)) {
          r.min_slack = std::move(s);
        }
        break;
      }
      case Outcome::HoldsWithEquality:
        r.equality_cases.push_back({n, std::move(v)});
        break;
      case Outcome::Fails:
        r.violations.push_back({n, std::move(v)});
        break;
      case Outcome::Undecided:
        r.undecided.push_back({n, std::move(v)});
        break;
    }
  }
  return r;
}

}  // namespace

Outcome ScanReport::outcome() const {
  if (!violations.empty()) {
    return Outcome::Fails;
  }
  return undecided.empty() ? Outcome::Holds : Outcome::Undecided;
}

std::vector<std::uint64_t> ScanReport::equality_values() const {
  std::vector<std::uint64_t> out;
  for (const auto& h : equality_cases) {
    out.push_back(h.n);
  }
  return out;
}

ScanReport merge(const ScanReport& a, const ScanReport& b) {
  ScanReport r;
  r.lo = std::min(a.lo, b.lo);
  r.hi = std::max(a.hi, b.hi);
  r.checked = a.checked + b.checked;
  r.violations = a.violations;
  merge_hits(r.violations, b.violations);
  r.undecided = a.undecided;
  merge_hits(r.undecided, b.undecided);
  r.equality_cases = a.equality_cases;
  merge_hits(r.equality_cases, b.equality_cases);
  r.min_slack = a.min_slack;
  if (b.min_slack && (!r.min_slack || slack_less(*b.min_slack, *r.min_slack))) {
    r.min_slack = b.min_slack;
  }
  r.wall_time = a.wall_time + b.wall_time;
  return r;
}

ScanReport brute_force_scan(std::uint64_t lo, std::uint64_t hi, const PrimeTable& table, const BoundContext& ctx,
                            unsigned threads) {
  if (lo < 3 || lo > hi) {
    throw UsageError(fmt::format("scan needs 3 <= lo <= hi, got [{}, {}]", lo, hi));
  }
  if (hi > table.limit()) {
    throw UsageError(fmt::format("scan upper bound {} beyond sieve limit {}", hi, table.limit()));
  }
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t first = lo | 1;
  const std::uint64_t odd_count = hi >= first ? (hi - first) / 2 + 1 : 0;
  const std::uint64_t parts = std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(odd_count, 1));

  ScanReport out;
  if (parts == 1) {
    out = scan_range(lo, hi, table, ctx);
  } else {
    std::vector<std::future<ScanReport>> jobs;
    for (std::uint64_t i = 0; i < parts; ++i) {
      const std::uint64_t a = first + 2 * (odd_count * i / parts);
      const std::uint64_t b = first + 2 * (odd_count * (i + 1) / parts) - 2;
      jobs.push_back(std::async(std::launch::async, scan_range, a, b, std::cref(table), std::cref(ctx)));
    }
    out = jobs.front().get();
    for (std::size_t i = 1; i < jobs.size(); ++i) {
      out = merge(out, jobs[i].get());
    }
    out.lo = lo;
    out.hi = hi;
  }
  out.wall_time = std::chrono::steady_clock::now() - start;
  return out;
}

SlackPoint min_slack(const ScanReport& report) {
  if (!report.min_slack) {
    throw UsageError(fmt::format("no non-equality points in [{}, {}]", report.lo, report.hi));
  }
  return *report.min_slack;
}

Report to_report(const ScanReport& scan) {
  Report r;
  r.name = "scan";
  for (const auto* group : {&scan.equality_cases, &scan.violations, &scan.undecided}) {
    for (const auto& h : *group) {
      r.verdicts.push_back(h.verdict);
    }
  }
  if (scan.min_slack) {
    Verdict v = scan.min_slack->verdict;
    v.subject = "minimum slack: " + v.subject;
    r.verdicts.push_back(std::move(v));
  }
  std::string eq;
  for (auto n : scan.equality_values()) {
    eq += (eq.empty() ? "" : ", ") + std::to_string(n);
  }
  r.summary = fmt::format("odd n in [{}, {}]: {} checked, {} violations, {} undecided, equality at [{}]{}", scan.lo,
                          scan.hi, scan.checked, scan.violations.size(), scan.undecided.size(), eq,
                          scan.min_slack ? fmt::format(", minimum slack at n = {} (>= {})", scan.min_slack->n,
                                                       scan.min_slack->slack.lo_string(8))
                                         : std::string{});
  return r;
}

}  // namespace oddrobin
