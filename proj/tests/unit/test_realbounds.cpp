#include <doctest.h>

#include <mpfr.h>

#include <cmath>

#include "oddrobin/error.hpp"
#include "oddrobin/realbounds.hpp"
#include "support.hpp"

using namespace oddrobin;
using oddrobin::test::within;

namespace {

// Brent-McMillan: gamma = U/V - log n + O(e^{-4n}), with
// U = sum (n^k/k!)^2 H_k and V = sum (n^k/k!)^2.
void brent_mcmillan_gamma(mpfr_t out, unsigned n, mpfr_prec_t prec) {
  mpfr_t term, harmonic, u, v, tmp;
  mpfr_inits2(prec, term, harmonic, u, v, tmp, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(term, 1, MPFR_RNDN);
  mpfr_set_ui(harmonic, 0, MPFR_RNDN);
  mpfr_set_ui(u, 0, MPFR_RNDN);
  mpfr_set_ui(v, 1, MPFR_RNDN);
  for (unsigned k = 1; k < 8 * n; ++k) {
    mpfr_mul_ui(term, term, n, MPFR_RNDN);
    mpfr_div_ui(term, term, k, MPFR_RNDN);
    mpfr_set_ui(tmp, 1, MPFR_RNDN);
    mpfr_div_ui(tmp, tmp, k, MPFR_RNDN);
    mpfr_add(harmonic, harmonic, tmp, MPFR_RNDN);
    mpfr_sqr(tmp, term, MPFR_RNDN);
    mpfr_add(v, v, tmp, MPFR_RNDN);
    mpfr_mul(tmp, tmp, harmonic, MPFR_RNDN);
    mpfr_add(u, u, tmp, MPFR_RNDN);
  }
  mpfr_div(out, u, v, MPFR_RNDN);
  mpfr_set_ui(tmp, n, MPFR_RNDN);
  mpfr_log(tmp, tmp, MPFR_RNDN);
  mpfr_sub(out, out, tmp, MPFR_RNDN);
  mpfr_clears(term, harmonic, u, v, tmp, static_cast<mpfr_ptr>(nullptr));
}

}  // namespace

TEST_CASE("gamma matches the 50-digit reference") {
  CHECK(within(euler_gamma(128), std::string(kEulerGammaReference), "1e-38"));
  CHECK(within(euler_gamma(512), std::string(kEulerGammaReference), "1e-50"));
}

TEST_CASE("gamma matches an independent Brent-McMillan evaluation") {
  mpfr_t ref, err, lo, hi;
  mpfr_inits2(2048, ref, err, lo, hi, static_cast<mpfr_ptr>(nullptr));
  brent_mcmillan_gamma(ref, 120, 2048);
  mpfr_set_ui_2exp(err, 1, -600, MPFR_RNDN);
  mpfr_sub(lo, ref, err, MPFR_RNDD);
  mpfr_add(hi, ref, err, MPFR_RNDU);
  const Interval oracle = Interval::from_endpoints(lo, hi, 2048);
  for (Precision prec : {64, 128, 256, 512}) {
    CHECK(overlaps(euler_gamma(prec), oracle));
  }
  mpfr_clears(ref, err, lo, hi, static_cast<mpfr_ptr>(nullptr));
}

TEST_CASE("gamma enclosures are tight and nested") {
  Interval previous = euler_gamma(64);
  for (Precision prec : {64, 128, 256, 512}) {
    const Interval g = euler_gamma(prec);
    CHECK(g.width() <= std::ldexp(1.0, 8 - static_cast<int>(prec)));
    CHECK(previous.contains(g));
    previous = g;
  }
}

TEST_CASE("frozen log-log values") {
  CHECK(within(loglog_of_integer(315, 128), "1.74964717019674834471530105426832238257", "1e-36"));
  CHECK(within(loglog_of_integer(3, 128), "0.0940478276166990161743343320844939927853", "1e-37"));
  CHECK(within(loglog_of_integer(12, 128), "0.910235093365325950852437368058782435310", "1e-36"));
  CHECK(within(loglog_of_integer(Factorization::parse("3^2*5*7*11*13"), 128),
               "2.37168357068578268581477818811007501617", "1e-36"));
  CHECK_THROWS_AS(loglog_of_integer(2, 128), DomainError);
  CHECK_THROWS_AS(loglog_from_logsum(Interval::from_integer(1, 64)), DomainError);
}

TEST_CASE("constants") {
  const CertifiedConstant c = main_constant_C(128);
  CHECK(within(c.enclosure, "0.7398002037224360226017886462167127879036", "1e-37"));
  CHECK(c.enclosure.width() <= 1e-10);
  CHECK(Interval::from_decimal_bounds("0.7397", "0.7401", 128).contains(c.enclosure));
  CHECK(within(exp_gamma_half(128), "0.890536208995098992618252051553589774585", "1e-37"));
  CHECK(within(robin_constant(128).enclosure, "0.648213649421799762720094256435329018993", "1e-36"));
  CHECK(within(lemma24_constant(128).enclosure, "0.21626511114882925496552968412095118812", "1e-36"));
  CHECK(within(lemma24_inner_factor(128), "1.02183726793228988785123351742685400813", "1e-35"));
  CHECK(within(lemma24_constant(128, std::nullopt).enclosure, "0.211643397569993163677154015182272071009", "1e-37"));
}

TEST_CASE("rhs bound") {
  const Interval one = Interval::from_integer(1, 64);
  CHECK(rhs_bound(one, one, one).contains(mpq_class(2)));
  const Interval t = Interval::from_integer(2, 64);
  CHECK(rhs_bound(t, Interval::from_integer(3, 64), Interval::from_integer(4, 64)).contains(mpq_class(8)));
  CHECK_THROWS_AS(rhs_bound(Interval::from_integer(0, 64), one, one), DomainError);
  CHECK_THROWS_AS(require_precision(32), UsageError);
  CHECK_NOTHROW(require_precision(64));
}
