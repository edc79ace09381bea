#include <doctest.h>

#include <numeric>

#include "oddrobin/arith.hpp"
#include "oddrobin/error.hpp"
#include "oddrobin/factorization.hpp"

using namespace oddrobin;

namespace {

const PrimeTable& table() {
  static const PrimeTable t = sieve_up_to(kDefaultSieveLimit);
  return t;
}

Factorization factor(std::uint64_t n) { return n == 1 ? Factorization() : factorize(n, table()); }

mpq_class divisor_sum_ratio(std::uint64_t n) {
  mpz_class sum = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      sum += d;
      if (d != n / d) {
        sum += n / d;
      }
    }
  }
  mpq_class q(sum, mpz_class(static_cast<unsigned long>(n)));
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("factorization parsing and printing") {
  const Factorization f = Factorization::parse("3^2*5*7");
  CHECK(f.to_string() == "3^2*5*7");
  CHECK(value(f) == 315);
  CHECK(f.exponent_of(3) == 2);
  CHECK(f.exponent_of(11) == 0);
  CHECK(f.is_odd());
  CHECK(Factorization::parse("1").empty());
  CHECK(Factorization::parse("3^2.5") == Factorization::parse("3^2*5"));
  CHECK_THROWS(Factorization::parse("4"));
  CHECK_THROWS(Factorization::parse("5*3"));
  CHECK_THROWS(Factorization::parse("3^0"));
  CHECK(f.times_prime(11).to_string() == "3^2*5*7*11");
  CHECK(f.times_prime(3).to_string() == "3^3*5*7");
  CHECK(f.times_prime(3).quotient_prime(f) == std::optional<std::uint64_t>(3));
  CHECK_FALSE(f.quotient_prime(f).has_value());
}

TEST_CASE("factorize") {
  CHECK(factorize(315, table()).to_string() == "3^2*5*7");
  CHECK(factorize(45045, table()).to_string() == "3^2*5*7*11*13");
  CHECK(factorize(9, table()).to_string() == "3^2");
  CHECK_THROWS_AS(factorize(1, table()), UsageError);
  CHECK_THROWS_AS(factorize(0, table()), UsageError);
  CHECK_THROWS_AS(factorize(kDefaultSieveLimit + 1, table()), UsageError);
}

TEST_CASE("sigma and phi examples") {
  CHECK(sigma_over_n(factorize(315, table())) == ExactRatio(208, 105));
  CHECK(sigma_over_n(factorize(12, table())) == ExactRatio(7, 3));
  CHECK(n_over_phi(factorize(105, table())) == ExactRatio(35, 16));
  CHECK(n_over_phi(factorize(15, table())) == ExactRatio(15, 8));
  CHECK(sigma_over_n(Factorization()) == ExactRatio());
}

TEST_CASE("Washington-Yang integer") {
  const Factorization wy = Factorization::parse(
      "3^4*5^3*7^2*11*13*17*19*23*29*31*37*41*43*47*53*59*61*67");
  CHECK(value(wy).get_str() == "18565284664427130919514350125");
}

TEST_CASE("sigma agrees with the divisor-sum oracle for n <= 10^5") {
  std::uint64_t agree = 0;
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    agree += sigma_over_n(factor(n)).value() == divisor_sum_ratio(n);
  }
  CHECK(agree == 100000);
}

TEST_CASE("n/phi(n) depends only on the prime support") {
  const ExactRatio base = n_over_phi(Factorization::parse("3*5*7"));
  CHECK(n_over_phi(Factorization::parse("3^4*5*7^2")) == base);
  CHECK(n_over_phi(Factorization::parse("3*5^9*7")) == base);
}

TEST_CASE("sigma(n)/n < n/phi(n) for n > 1") {
  for (std::uint64_t n = 2; n <= 20000; ++n) {
    const Factorization f = factorize(n, table());
    CHECK(sigma_over_n(f) < n_over_phi(f));
  }
}

TEST_CASE("sigma is multiplicative") {
  for (std::uint64_t a = 1; a <= 100; ++a) {
    for (std::uint64_t b = 1; b <= 100; ++b) {
      if (std::gcd(a, b) != 1) {
        continue;
      }
      const Factorization fa = factor(a);
      const Factorization fb = factor(b);
      CHECK(coprime(fa, fb));
      CHECK(sigma_over_n(multiply(fa, fb)) == sigma_over_n(fa) * sigma_over_n(fb));
      CHECK(multiply(fa, fb) == factor(a * b));
    }
  }
}

TEST_CASE("exact ratios") {
  const ExactRatio r = ExactRatio::parse("416/210");
  CHECK(r == ExactRatio(208, 105));
  CHECK(r.to_string() == "208/105");
  CHECK(ExactRatio(1, 2) + ExactRatio(1, 3) == ExactRatio(5, 6));
  CHECK(ExactRatio(1, 2) < ExactRatio(2, 3));
  CHECK(r.enclose(128).contains(mpq_class(208, 105)));
  CHECK_THROWS_AS(ExactRatio(1, 0), DomainError);
}
