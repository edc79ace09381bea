#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oddrobin {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime decomposition of a positive integer: strictly increasing primes,
/// each with exponent >= 1. The empty factorization is 1.
class Factorization {
 public:
  Factorization() = default;
  /// Validates ordering, exponents and primality; throws UsageError.
  explicit Factorization(std::vector<PrimePower> pairs);

  /// Parses "3^2*5*7" (also accepts '.' or '·' as separators, "1" for empty).
  static Factorization parse(std::string_view text);

  std::span<const PrimePower> pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }
  bool is_odd() const { return pairs_.empty() || pairs_.front().prime != 2; }
  unsigned exponent_of(std::uint64_t p) const;
  std::uint64_t largest_prime() const { return pairs_.empty() ? 1 : pairs_.back().prime; }

  /// *this * p.
  Factorization times_prime(std::uint64_t p) const;
  /// If *this == smaller * p for a single prime p, returns p.
  std::optional<std::uint64_t> quotient_prime(const Factorization& smaller) const;

  /// "3^2*5*7"; "1" when empty.
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  struct Trusted {};
  Factorization(std::vector<PrimePower> pairs, Trusted) : pairs_(std::move(pairs)) {}

  std::vector<PrimePower> pairs_;

  friend Factorization multiply(const Factorization& a, const Factorization& b);
};

Factorization multiply(const Factorization& a, const Factorization& b);
bool coprime(const Factorization& a, const Factorization& b);

/// Deterministic trial-division primality, for the small primes that appear
/// in factorizations.
bool is_small_prime(std::uint64_t n);

}  // namespace oddrobin
