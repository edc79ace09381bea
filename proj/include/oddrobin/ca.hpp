#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddrobin/arith.hpp"
#include "oddrobin/primes.hpp"
#include "oddrobin/robin.hpp"
#include "oddrobin/verdict.hpp"

namespace oddrobin {

/// Threshold at which raising p's exponent from a-1 to a becomes profitable:
/// eps = log((p^{a+1} - 1)/(p^a - 1)) / log p - 1.
struct CriticalEpsilon {
  std::uint64_t p = 0;
  unsigned a = 0;
  Interval eps;
};

CriticalEpsilon critical_epsilon(std::uint64_t p, unsigned a, Precision prec);

/// One odd colossally abundant number. It maximizes sigma(n)/n^{1+eps} over
/// odd n >= 3 for eps strictly between `left_at` (the step to the next CA
/// number) and `entered_at` (the step that produced it; none for N = 3).
struct OddCaNumber {
  Factorization factorization;
  std::size_t ordinal = 0;
  std::optional<CriticalEpsilon> entered_at;
  CriticalEpsilon left_at;

  /// Certified sub-window [left_at.hi, entered_at.lo] (hi = +inf for N = 3).
  Interval eps_window() const;
};

/// The first `count` odd CA numbers, each obtained from the previous by the
/// prime power with the largest critical epsilon. Epsilons that cannot be
/// separated at the top of the ladder raise StructuralError.
std::vector<OddCaNumber> generate_odd_ca(std::size_t count, const PrimeTable& table,
                                         const PrecisionLadder& ladder = PrecisionLadder{});

/// Split check over the closed range [N, N_next]:
///   part 1 at N and at N_next: alpha sigma(M)/M <= A log log M
///   part 2 at N_next: beta sigma(N_next)/N_next <= B / log log N_next
///   part 3: all of the above and alpha + beta <= 1
/// Evaluated at the precision of A. UsageError unless N_next follows N in
/// the sequence, alpha, beta >= 0 and alpha + beta <= 1.
Report verify_split(const OddCaNumber& n, const OddCaNumber& n_next, const ExactRatio& alpha,
                    const ExactRatio& beta, const Interval& coeff, const Interval& constant);

struct CorollaryCase {
  int id = 0;
  ExactRatio alpha;
  ExactRatio beta;
  Factorization lower;
  Factorization upper;
};

/// Cases 1-3 with their (alpha, beta) and range endpoints.
CorollaryCase corollary_case(int id, const PrimeTable& table);

/// verify_split over every consecutive pair of the generated sequence lying
/// inside the case's closed range, retrying undecided pairs up the ladder.
/// StructuralError if an endpoint is missing from `sequence`.
Report corollary_sweep(int id, const std::vector<OddCaNumber>& sequence, const PrimeTable& table,
                       const BoundContext& ctx);

/// Number of CA terms needed to reach one past case 1's upper endpoint.
inline constexpr std::size_t kCorollaryCaCount = 80;

/// A closed range of odd integers [lo, hi] (hi empty = unbounded) that some
/// stage claims to cover; only certified ranges count.
struct CoverageRange {
  std::string name;
  mpz_class lo;
  std::optional<mpz_class> hi;
  bool certified = true;
};

struct CoverageGap {
  mpz_class lo;
  std::optional<mpz_class> hi;
};

struct CoverageResult {
  Verdict verdict;
  std::optional<CoverageGap> gap;
};

/// Checks that the certified ranges cover every odd n >= 3, reporting the
/// first uncovered odd interval on failure.
CoverageResult coverage_audit(const std::vector<CoverageRange>& ranges);

/// Scan [3, 45045], corollary cases 3, 2, 1, primorial sweep
/// [N'_54, N'_{k_max + 1}) and the large-prime theorem from N'_bridge on.
std::vector<CoverageRange> standard_coverage(const PrimeTable& table, std::size_t sweep_k_max,
                                             std::uint64_t scan_hi = 45045);

}  // namespace oddrobin
