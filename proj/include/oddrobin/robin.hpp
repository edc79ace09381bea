#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "oddrobin/arith.hpp"
#include "oddrobin/primes.hpp"
#include "oddrobin/verdict.hpp"

namespace oddrobin {

/// First index of the primorial range claimed by the sweep lemma (p_54 = 251).
inline constexpr std::size_t kPrimorialThresholdIndex = 54;

/// The constants of the bound A log log n + B / log log n, precomputed at
/// every ladder precision. A = e^gamma/2 and B = C unless a debug substitute
/// for C is supplied; with a substitute, n = 315 loses its definitional
/// equality and is compared like any other n.
class BoundContext {
 public:
  explicit BoundContext(PrecisionLadder ladder = PrecisionLadder{},
                        std::optional<std::string> debug_constant = std::nullopt);

  const PrecisionLadder& ladder() const { return ladder_; }
  const Interval& coefficient(Precision prec) const;
  const Interval& constant(Precision prec) const;
  bool constant_is_defining() const { return !debug_constant_; }
  const std::optional<std::string>& debug_constant() const { return debug_constant_; }

 private:
  PrecisionLadder ladder_;
  std::optional<std::string> debug_constant_;
  std::map<Precision, Interval> coefficient_;
  std::map<Precision, Interval> constant_;
};

/// sigma(n)/n <= A log log n + C / log log n for odd n >= 3.
/// n = 315 is HoldsWithEquality when C is the defining constant.
/// Throws UsageError for even n, DomainError for n < 3.
Verdict check_main_inequality(const Factorization& f, const BoundContext& ctx);
Verdict check_main_inequality(std::uint64_t n, const PrimeTable& table, const BoundContext& ctx);

/// N'_k/phi(N'_k) <= A log log N'_k + C / log log N'_k, with the left side
/// exact and log N'_k enclosed as a log-sum.
Verdict check_primorial(std::size_t k, const PrimeTable& table, const BoundContext& ctx);

struct PrimorialSweep {
  Report report;
  std::size_t k_min = 0;
  std::size_t k_max = 0;
  /// Smallest k such that every k' in [k, k_max] holds.
  std::optional<std::size_t> holds_from;
  /// Every k in [max(54, k_min), k_max] holds.
  bool threshold_range_holds = false;
};

/// check_primorial for every k in [k_min, k_max], accumulating the exact
/// ratio and the log-sum incrementally. `threads` > 1 splits the k-range;
/// the result is identical to the sequential run.
PrimorialSweep primorial_sweep(std::size_t k_min, std::size_t k_max, const PrimeTable& table,
                               const BoundContext& ctx, unsigned threads = 1);

/// log log N'_k > log p_k - K / log p_k with K = 0.216265... Requires
/// p_k >= 20000 and p_k prime within the table.
Verdict check_lemma24(std::uint64_t p, const PrimeTable& table, const BoundContext& ctx);

/// prod_{i=2..k} p_i/(p_i - 1) <= A log x (1 + 0.2/log^2 x) at x = p_k.
/// Requires p_k >= 10^4.
Verdict check_lemma22(std::size_t k, const PrimeTable& table, const BoundContext& ctx);

/// The four links of the large-prime argument at index k (p_k >= 20000):
///   (a) log p - K/log p < log log N'_k
///   (b) A log p (1 + 0.2/log^2 p) <= A (log p - K/log p) + C/log p
///   (c) N'_k/phi(N'_k) <= A log p (1 + 0.2/log^2 p)
///   (d) N'_k/phi(N'_k) <= A log log N'_k + C/log log N'_k
Report check_theorem31_chain(std::size_t k, const PrimeTable& table, const BoundContext& ctx);

/// sqrt(C/A) < 1: t -> A t + C/t is increasing on t >= 1.
Verdict check_increasing_premise(const BoundContext& ctx);

}  // namespace oddrobin
