#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "oddrobin/factorization.hpp"
#include "oddrobin/interval.hpp"
#include "oddrobin/primes.hpp"

namespace oddrobin {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Comparisons are exact.
class ExactRatio {
 public:
  ExactRatio() : q_(1) {}
  ExactRatio(const mpz_class& numerator, const mpz_class& denominator);
  explicit ExactRatio(const mpq_class& q);
  /// Parses "a/b" or "a".
  static ExactRatio parse(const std::string& text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& value() const { return q_; }

  Interval enclose(Precision prec) const { return Interval::from_ratio(q_, prec); }
  /// "208/105", or "7" for integers.
  std::string to_string() const { return q_.get_str(); }

  friend ExactRatio operator*(const ExactRatio& a, const ExactRatio& b);
  friend ExactRatio operator+(const ExactRatio& a, const ExactRatio& b);
  friend bool operator==(const ExactRatio& a, const ExactRatio& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

/// Sieve-based factorization of 2 <= n <= table.limit().
Factorization factorize(std::uint64_t n, const PrimeTable& table);

/// sigma(n)/n = prod (p^{a+1} - 1) / (p^a (p - 1)).
ExactRatio sigma_over_n(const Factorization& f);

/// n/phi(n) = prod p/(p - 1); exponents are irrelevant.
ExactRatio n_over_phi(const Factorization& f);

/// prod p^a.
mpz_class value(const Factorization& f);

}  // namespace oddrobin
