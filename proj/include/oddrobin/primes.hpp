#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "oddrobin/factorization.hpp"
#include "oddrobin/interval.hpp"

namespace oddrobin {

/// Lower bound on p_k in the large-prime lemmas; the sweep must reach the
/// first prime at or above it.
inline constexpr std::uint32_t kBridgeBound = 20000;
inline constexpr std::uint32_t kDefaultSieveLimit = 100000;

/// Primes up to `limit` with a smallest-prime-factor map. Immutable after
/// construction.
class PrimeTable {
 public:
  std::uint32_t limit() const { return limit_; }
  std::span<const std::uint32_t> primes() const { return primes_; }

  /// Least prime dividing m, for 2 <= m <= limit.
  std::uint32_t spf(std::uint64_t m) const;
  bool is_prime(std::uint64_t n) const;

  /// p_k, 1-based (p_1 = 2).
  std::uint32_t prime(std::size_t k) const;
  /// k with p_k = p.
  std::size_t index_of(std::uint64_t p) const;
  /// pi(x) for x <= limit.
  std::size_t count_up_to(std::uint64_t x) const;
  /// Smallest k with p_k >= x.
  std::size_t first_index_at_least(std::uint64_t x) const;

 private:
  friend PrimeTable sieve_up_to(std::uint64_t limit);

  std::uint32_t limit_ = 0;
  std::vector<std::uint32_t> primes_;
  std::vector<std::uint32_t> spf_;
};

/// Linear sieve. Throws UsageError for limit < 3.
PrimeTable sieve_up_to(std::uint64_t limit);

/// Index of the first prime >= kBridgeBound (20011 is p_2263).
std::size_t bridge_index(const PrimeTable& table);

struct PrimorialSpec {
  std::size_t k = 0;
  bool includes_two = false;
  Factorization factorization;
};

/// N'_k = p_2 p_3 ... p_k. Requires k >= 2.
PrimorialSpec odd_primorial(std::size_t k, const PrimeTable& table);
/// N_k = p_1 ... p_k = 2 N'_k.
PrimorialSpec primorial(std::size_t k, const PrimeTable& table);

/// Enclosure of log p for a prime (or any integer >= 1).
Interval log_enclosure(std::uint64_t n, Precision prec);

/// Enclosure of sum_{i=2..k} log p_i (= log N'_k), or sum_{i=1..k} when
/// include_two is set (= theta(p_k) = log N_k). Each term is enclosed
/// separately and the sum is accumulated with outward rounding.
Interval log_theta_sum(std::size_t k, const PrimeTable& table, Precision prec,
                       bool include_two = false);

}  // namespace oddrobin
