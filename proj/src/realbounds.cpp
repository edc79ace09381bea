#include "oddrobin/realbounds.hpp"

#include <mpfr.h>

#include "oddrobin/arith.hpp"
#include "oddrobin/error.hpp"
#include "oddrobin/primes.hpp"

namespace oddrobin {

void require_precision(Precision prec) {
  if (prec < kMinPrecision) {
    throw UsageError("precision must be >= 64 bits, got " + std::to_string(prec));
  }
}

Interval euler_gamma(Precision prec) {
  require_precision(prec);
  mpfr_t lo;
  mpfr_t hi;
  mpfr_init2(lo, prec);
  mpfr_init2(hi, prec);
  mpfr_const_euler(lo, MPFR_RNDD);
  mpfr_const_euler(hi, MPFR_RNDU);
  Interval r = Interval::from_endpoints(lo, hi, prec);
  mpfr_clear(lo);
  mpfr_clear(hi);
  return r;
}

Interval exp_gamma_half(Precision prec) {
  return exp(euler_gamma(prec)) / Interval::from_integer(2, prec);
}

Interval log_of(const Factorization& f, Precision prec) {
  require_precision(prec);
  Interval sum(prec);
  for (const auto& [p, a] : f.pairs()) {
    sum = sum + Interval::from_integer(static_cast<std::int64_t>(a), prec) * log_enclosure(p, prec);
  }
  return sum;
}

Interval loglog_of_integer(std::uint64_t n, Precision prec) {
  require_precision(prec);
  if (n <= 2) {
    throw DomainError("log log n needs n >= 3, got " + std::to_string(n));
  }
  return log(log_enclosure(n, prec));
}

Interval loglog_of_integer(const Factorization& f, Precision prec) {
  require_precision(prec);
  if (value(f) <= 2) {
    throw DomainError("log log n needs n >= 3, got " + f.to_string());
  }
  return log(log_of(f, prec));
}

Interval loglog_from_logsum(const Interval& log_n) {
  if (mpfr_cmp_ui(log_n.lo(), 1) <= 0) {
    throw DomainError("loglog_from_logsum needs log N > 1");
  }
  return log(log_n);
}

CertifiedConstant main_constant_C(Precision prec) {
  require_precision(prec);
  const Factorization n315({{3, 2}, {5, 1}, {7, 1}});
  const Interval ratio = sigma_over_n(n315).enclose(prec);  // 208/105
  const Interval t = loglog_of_integer(n315, prec);
  return {"C", (ratio - exp_gamma_half(prec) * t) * t,
          "(sigma(315)/315 - (e^gamma/2) log log 315) * log log 315, sigma(315)/315 = 208/105"};
}

CertifiedConstant robin_constant(Precision prec) {
  require_precision(prec);
  const Interval ratio = Interval::from_ratio(mpq_class(7, 3), prec);
  const Interval t = loglog_of_integer(12, prec);
  return {"robin_12", (ratio - exp(euler_gamma(prec)) * t) * t,
          "(sigma(12)/12 - e^gamma log log 12) * log log 12, sigma(12)/12 = 7/3"};
}

Interval lemma24_inner_factor(Precision prec, std::uint64_t bound) {
  require_precision(prec);
  const Interval one = Interval::from_integer(1, prec);
  const Interval one_plus_log2 = one + log_enclosure(2, prec);
  const Interval denom = Interval::from_integer(8, prec) * log_enclosure(bound, prec);
  return one / (one - one_plus_log2 / denom);
}

CertifiedConstant lemma24_constant(Precision prec, std::optional<std::uint64_t> bound) {
  require_precision(prec);
  const Interval eighth = Interval::from_ratio(mpq_class(1, 8), prec);
  const Interval one_plus_log2 = Interval::from_integer(1, prec) + log_enclosure(2, prec);
  if (!bound) {
    return {"lemma24_limit", eighth * one_plus_log2, "0.125 (1 + log 2)"};
  }
  return {"lemma24", eighth * one_plus_log2 * lemma24_inner_factor(prec, *bound),
          "0.125 (1 + log 2) / (1 - (1 + log 2)/(8 log " + std::to_string(*bound) + "))"};
}

Interval rhs_bound(const Interval& t, const Interval& coeff, const Interval& constant) {
  if (mpfr_sgn(t.lo()) <= 0) {
    throw DomainError("rhs_bound needs t > 0");
  }
  return coeff * t + constant / t;
}

}  // namespace oddrobin
