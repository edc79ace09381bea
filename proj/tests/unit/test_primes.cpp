#include <doctest.h>

#include <mpfr.h>

#include "oddrobin/arith.hpp"
#include "oddrobin/error.hpp"
#include "oddrobin/primes.hpp"

using namespace oddrobin;

namespace {

const PrimeTable& table() {
  static const PrimeTable t = sieve_up_to(kDefaultSieveLimit);
  return t;
}

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("prime counts") {
  CHECK(sieve_up_to(10000).count_up_to(10000) == 1229);
  CHECK(table().count_up_to(20000) == 2262);
  CHECK(table().count_up_to(251) == 54);
  CHECK(table().prime(1) == 2);
  CHECK(table().prime(54) == 251);
  CHECK(table().prime(2262) == 19997);
  CHECK(table().prime(2263) == 20011);
  CHECK(table().index_of(20011) == 2263);
  CHECK(table().first_index_at_least(10000) == 1230);
  CHECK(bridge_index(table()) == 2263);
}

TEST_CASE("sieve agrees with trial division") {
  const PrimeTable small = sieve_up_to(5000);
  for (std::uint64_t n = 0; n <= 5000; ++n) {
    CHECK(small.is_prime(n) == trial_division_prime(n));
  }
  for (std::uint64_t m = 2; m <= 5000; ++m) {
    const std::uint64_t p = small.spf(m);
    CHECK(m % p == 0);
    CHECK(trial_division_prime(p));
    for (std::uint64_t q = 2; q < p; ++q) {
      CHECK(m % q != 0);
    }
  }
  CHECK(table().spf(45045) == 3);
  CHECK_THROWS_AS(sieve_up_to(2), UsageError);
}

TEST_CASE("primorials") {
  CHECK(value(odd_primorial(3, table()).factorization) == 15);
  CHECK(value(primorial(3, table()).factorization) == 30);
  CHECK(value(odd_primorial(2, table()).factorization) == 3);
  CHECK_FALSE(odd_primorial(4, table()).includes_two);
  CHECK(primorial(4, table()).includes_two);
  CHECK(odd_primorial(54, table()).factorization.largest_prime() == 251);
  CHECK(odd_primorial(54, table()).factorization.size() == 53);
  CHECK_THROWS_AS(odd_primorial(1, table()), UsageError);
}

TEST_CASE("theta sums enclose the exact logarithm") {
  mpfr_t ref;
  mpfr_init2(ref, 4096);
  for (std::size_t k : {2u, 3u, 10u, 54u, 200u, 700u}) {
    for (bool two : {false, true}) {
      const PrimorialSpec spec = two ? primorial(k, table()) : odd_primorial(k, table());
      const mpz_class v = value(spec.factorization);
      mpfr_set_z(ref, v.get_mpz_t(), MPFR_RNDN);
      mpfr_log(ref, ref, MPFR_RNDN);
      const Interval sum = log_theta_sum(k, table(), 64, two);
      CHECK(mpfr_lessequal_p(sum.lo(), ref));
      CHECK(mpfr_lessequal_p(ref, sum.hi()));
    }
  }
  mpfr_clear(ref);
}

TEST_CASE("theta sums refine with precision") {
  const Interval coarse = log_theta_sum(2263, table(), 64);
  const Interval fine = log_theta_sum(2263, table(), 256);
  CHECK(fine.width() < coarse.width());
  CHECK(overlaps(coarse, fine));
  CHECK_THROWS_AS(log_theta_sum(10, table(), 32), UsageError);
}

TEST_CASE("log enclosure") {
  CHECK(log_enclosure(1, 64).contains(mpq_class(0)));
  const Interval l = log_enclosure(20011, 128);
  CHECK(l.lo_double() > 9.90);
  CHECK(l.hi_double() < 9.91);
}
