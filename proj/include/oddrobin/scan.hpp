#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "oddrobin/primes.hpp"
#include "oddrobin/robin.hpp"
#include "oddrobin/verdict.hpp"

namespace oddrobin {

struct ScanHit {
  std::uint64_t n = 0;
  Verdict verdict;
};

struct SlackPoint {
  std::uint64_t n = 0;
  Interval slack;  // rhs - lhs
  Verdict verdict;
};

/// Result of checking every odd n in [lo, hi].
struct ScanReport {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t checked = 0;
  std::vector<ScanHit> violations;
  std::vector<ScanHit> undecided;
  std::vector<ScanHit> equality_cases;
  /// Smallest certified slack over the non-equality points.
  std::optional<SlackPoint> min_slack;
  std::chrono::duration<double> wall_time{};

  Outcome outcome() const;
  std::vector<std::uint64_t> equality_values() const;
};

/// Certified main-inequality check for every odd n in [lo, hi] using the
/// sieve for factorizations. Requires 3 <= lo <= hi <= table.limit().
/// `threads` > 1 partitions the range; the merged report is identical.
ScanReport brute_force_scan(std::uint64_t lo, std::uint64_t hi, const PrimeTable& table, const BoundContext& ctx,
                            unsigned threads = 1);

/// Merge of reports over disjoint ranges. Associative and commutative on
/// everything but wall_time (which adds).
ScanReport merge(const ScanReport& a, const ScanReport& b);

/// The minimizing n and its slack. UsageError if the report has no
/// non-equality points.
SlackPoint min_slack(const ScanReport& report);

/// The scan as a Report: noteworthy verdicts only (equality cases,
/// violations, undecided points and the minimum-slack point).
Report to_report(const ScanReport& scan);

}  // namespace oddrobin
