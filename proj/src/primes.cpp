#include "oddrobin/primes.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "oddrobin/error.hpp"

namespace oddrobin {

PrimeTable sieve_up_to(std::uint64_t limit) {
  if (limit < 3) {
    throw UsageError("sieve limit must be >= 3, got " + std::to_string(limit));
  }
  if (limit > std::numeric_limits<std::uint32_t>::max() / 2) {
    throw UsageError("sieve limit too large: " + std::to_string(limit));
  }
  PrimeTable t;
  t.limit_ = static_cast<std::uint32_t>(limit);
  t.spf_.assign(limit + 1, 0);
  for (std::uint32_t i = 2; i <= t.limit_; ++i) {
    if (t.spf_[i] == 0) {
      t.spf_[i] = i;
      t.primes_.push_back(i);
    }
    for (std::uint32_t p : t.primes_) {
      const std::uint64_t m = static_cast<std::uint64_t>(p) * i;
      if (p > t.spf_[i] || m > limit) {
        break;
      }
      t.spf_[m] = p;
    }
  }
  return t;
}

std::uint32_t PrimeTable::spf(std::uint64_t m) const {
  if (m < 2 || m > limit_) {
    throw UsageError(std::to_string(m) + " outside sieve range [2, " + std::to_string(limit_) + "]");
  }
  return spf_[m];
}

bool PrimeTable::is_prime(std::uint64_t n) const {
  if (n > limit_) {
    throw UsageError(std::to_string(n) + " beyond sieve limit " + std::to_string(limit_));
  }
  return n >= 2 && spf_[n] == n;
}

std::uint32_t PrimeTable::prime(std::size_t k) const {
  if (k == 0 || k > primes_.size()) {
    throw UsageError("prime index " + std::to_string(k) + " outside table (pi(limit) = " +
                     std::to_string(primes_.size()) + ")");
  }
  return primes_[k - 1];
}

std::size_t PrimeTable::index_of(std::uint64_t p) const {
  if (!is_prime(p)) {
    throw UsageError(std::to_string(p) + " is not a prime");
  }
  return count_up_to(p);
}

std::size_t PrimeTable::count_up_to(std::uint64_t x) const {
  if (x > limit_) {
    throw UsageError(std::to_string(x) + " beyond sieve limit " + std::to_string(limit_));
  }
  return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

std::size_t PrimeTable::first_index_at_least(std::uint64_t x) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), x);
  if (it == primes_.end()) {
    throw UsageError("no prime >= " + std::to_string(x) + " below sieve limit " + std::to_string(limit_));
  }
  return static_cast<std::size_t>(it - primes_.begin()) + 1;
}

std::size_t bridge_index(const PrimeTable& table) {
  return table.first_index_at_least(kBridgeBound);
}

PrimorialSpec odd_primorial(std::size_t k, const PrimeTable& table) {
  if (k < 2) {
    throw UsageError("odd primorial needs k >= 2 (N'_1 is the empty product)");
  }
  table.prime(k);  // range check
  std::vector<PrimePower> pairs;
  pairs.reserve(k - 1);
  for (std::size_t i = 2; i <= k; ++i) {
    pairs.push_back({table.prime(i), 1});
  }
  return {k, false, Factorization(std::move(pairs))};
}

PrimorialSpec primorial(std::size_t k, const PrimeTable& table) {
  if (k < 1) {
    throw UsageError("primorial needs k >= 1");
  }
  PrimorialSpec spec{k, true, Factorization{}};
  if (k >= 2) {
    spec.factorization = odd_primorial(k, table).factorization;
  }
  spec.factorization = spec.factorization.times_prime(2);
  return spec;
}

Interval log_enclosure(std::uint64_t n, Precision prec) {
  if (n == 0) {
    throw DomainError("log of zero");
  }
  return log(Interval::from_integer(mpz_class(static_cast<unsigned long>(n)), prec));
}

Interval log_theta_sum(std::size_t k, const PrimeTable& table, Precision prec, bool include_two) {
  if (prec < kMinPrecision) {
    throw UsageError("precision must be >= 64 bits");
  }
  if (k < (include_two ? 1u : 2u)) {
    throw UsageError("log_theta_sum: k too small");
  }
  table.prime(k);
  mpfr_t lo, hi, term;
  mpfr_inits2(prec, lo, hi, term, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(lo, 1);
  mpfr_set_zero(hi, 1);
  for (std::size_t i = include_two ? 1 : 2; i <= k; ++i) {
    const unsigned long p = table.prime(i);
    mpfr_set_ui(term, p, MPFR_RNDN);  // exact: p < 2^32 <= 2^prec
    mpfr_log(term, term, MPFR_RNDD);
    mpfr_add(lo, lo, term, MPFR_RNDD);
    mpfr_set_ui(term, p, MPFR_RNDN);
    mpfr_log(term, term, MPFR_RNDU);
    mpfr_add(hi, hi, term, MPFR_RNDU);
  }
  Interval sum = Interval::from_endpoints(lo, hi, prec);
  mpfr_clears(lo, hi, term, static_cast<mpfr_ptr>(nullptr));
  return sum;
}

}  // namespace oddrobin
