#include "oddrobin/interval.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "oddrobin/error.hpp"

namespace oddrobin {

namespace {

// Scoped mpfr_t temporary.
class Scratch {
 public:
  explicit Scratch(Precision prec) { mpfr_init2(v_, prec); }
  ~Scratch() { mpfr_clear(v_); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

std::string format_endpoint(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
  char* raw = nullptr;
  int rc = 0;
  if (rnd == MPFR_RNDD) {
    rc = mpfr_asprintf(&raw, "%.*RDe", digits - 1, x);
  } else if (rnd == MPFR_RNDU) {
    rc = mpfr_asprintf(&raw, "%.*RUe", digits - 1, x);
  } else {
    rc = mpfr_asprintf(&raw, "%.*RNe", digits - 1, x);
  }
  if (rc < 0) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

void require_bounded(const Interval& a, const char* op) {
  if (!a.is_bounded()) {
    throw DomainError(std::string(op) + " on an unbounded interval");
  }
}

Precision joint_precision(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Interval::Interval(Precision prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval Interval::from_integer(const mpz_class& n, Precision prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, n.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, n.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_integer(std::int64_t n, Precision prec) {
  Interval r(prec);
  mpfr_set_sj(r.lo_, n, MPFR_RNDD);
  mpfr_set_sj(r.hi_, n, MPFR_RNDU);
  return r;
}

Interval Interval::from_ratio(const mpq_class& q, Precision prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_decimal(std::string_view text, Precision prec) {
  return from_decimal_bounds(text, text, prec);
}

Interval Interval::from_decimal_bounds(std::string_view lo, std::string_view hi,
                                       Precision prec) {
  Interval r(prec);
  const std::string lo_s(lo);
  const std::string hi_s(hi);
  if (mpfr_set_str(r.lo_, lo_s.c_str(), 10, MPFR_RNDD) != 0 ||
      mpfr_set_str(r.hi_, hi_s.c_str(), 10, MPFR_RNDU) != 0) {
    throw UsageError("not a decimal literal: " + lo_s + " / " + hi_s);
  }
  if (mpfr_greater_p(r.lo_, r.hi_)) {
    throw UsageError("interval bounds out of order: " + lo_s + " > " + hi_s);
  }
  return r;
}

Interval Interval::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, Precision prec) {
  if (mpfr_nan_p(lo) || mpfr_nan_p(hi) || mpfr_greater_p(lo, hi)) {
    throw DomainError("invalid interval endpoints");
  }
  Interval r(prec);
  mpfr_set(r.lo_, lo, MPFR_RNDD);
  mpfr_set(r.hi_, hi, MPFR_RNDU);
  return r;
}

Interval Interval::at_least(const Interval& lo) {
  Interval r(lo.precision());
  mpfr_set(r.lo_, lo.lo_, MPFR_RNDD);
  mpfr_set_inf(r.hi_, 1);
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(joint_precision(a, b));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
  mpfr_init2(lo_, MPFR_PREC_MIN);
  mpfr_init2(hi_, MPFR_PREC_MIN);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.precision());
    mpfr_set_prec(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

double Interval::width() const {
  if (!is_bounded()) {
    return INFINITY;
  }
  Scratch w(precision());
  mpfr_sub(w.get(), hi_, lo_, MPFR_RNDU);
  return mpfr_get_d(w.get(), MPFR_RNDU);
}

Interval Interval::midpoint() const {
  require_bounded(*this, "midpoint");
  Interval r(precision());
  Scratch m(precision() + 1);
  mpfr_add(m.get(), lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  mpfr_set(r.lo_, m.get(), MPFR_RNDN);
  mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
  return r;
}

Interval Interval::with_precision(Precision prec) const {
  Interval r(prec);
  mpfr_set(r.lo_, lo_, MPFR_RNDD);
  mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

bool Interval::contains(const mpq_class& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& inner) const {
  return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_greaterequal_p(hi_, inner.hi_);
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

std::string Interval::lo_string(int digits) const {
  return format_endpoint(lo_, digits, MPFR_RNDD);
}

std::string Interval::hi_string(int digits) const {
  return format_endpoint(hi_, digits, MPFR_RNDU);
}

std::string Interval::midpoint_fixed(int decimals) const {
  const Interval mid = midpoint();
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*RNf", decimals, mid.lo_) < 0) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

Interval operator+(const Interval& a, const Interval& b) {
  require_bounded(a, "addition");
  require_bounded(b, "addition");
  Interval r(joint_precision(a, b));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  require_bounded(a, "subtraction");
  require_bounded(b, "subtraction");
  Interval r(joint_precision(a, b));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a) {
  require_bounded(a, "negation");
  Interval r(a.precision());
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  require_bounded(a, "multiplication");
  require_bounded(b, "multiplication");
  const Precision prec = joint_precision(a, b);
  Interval r(prec);
  mpfr_srcptr xs[2] = {a.lo_, a.hi_};
  mpfr_srcptr ys[2] = {b.lo_, b.hi_};
  Scratch down(prec);
  Scratch up(prec);
  bool first = true;
  for (mpfr_srcptr x : xs) {
    for (mpfr_srcptr y : ys) {
      mpfr_mul(down.get(), x, y, MPFR_RNDD);
      mpfr_mul(up.get(), x, y, MPFR_RNDU);
      if (first || mpfr_less_p(down.get(), r.lo_)) {
        mpfr_set(r.lo_, down.get(), MPFR_RNDD);
      }
      if (first || mpfr_greater_p(up.get(), r.hi_)) {
        mpfr_set(r.hi_, up.get(), MPFR_RNDU);
      }
      first = false;
    }
  }
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  require_bounded(a, "division");
  require_bounded(b, "division");
  if (b.contains_zero()) {
    throw DomainError("division by an interval containing zero");
  }
  const Precision prec = joint_precision(a, b);
  Interval r(prec);
  mpfr_srcptr xs[2] = {a.lo_, a.hi_};
  mpfr_srcptr ys[2] = {b.lo_, b.hi_};
  Scratch down(prec);
  Scratch up(prec);
  bool first = true;
  for (mpfr_srcptr x : xs) {
    for (mpfr_srcptr y : ys) {
      mpfr_div(down.get(), x, y, MPFR_RNDD);
      mpfr_div(up.get(), x, y, MPFR_RNDU);
      if (first || mpfr_less_p(down.get(), r.lo_)) {
        mpfr_set(r.lo_, down.get(), MPFR_RNDD);
      }
      if (first || mpfr_greater_p(up.get(), r.hi_)) {
        mpfr_set(r.hi_, up.get(), MPFR_RNDU);
      }
      first = false;
    }
  }
  return r;
}

Interval log(const Interval& a) {
  require_bounded(a, "log");
  if (mpfr_sgn(a.lo_) <= 0) {
    throw DomainError("log of an interval not strictly positive");
  }
  Interval r(a.precision());
  mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval exp(const Interval& a) {
  require_bounded(a, "exp");
  Interval r(a.precision());
  mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval sqrt(const Interval& a) {
  require_bounded(a, "sqrt");
  if (mpfr_sgn(a.lo_) < 0) {
    throw DomainError("sqrt of an interval with negative members");
  }
  Interval r(a.precision());
  mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval abs(const Interval& a) {
  require_bounded(a, "abs");
  if (mpfr_sgn(a.lo_) >= 0) {
    return a;
  }
  if (mpfr_sgn(a.hi_) <= 0) {
    return -a;
  }
  Interval r(a.precision());
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

bool certainly_less(const Interval& a, const Interval& b) {
  return mpfr_less_p(a.hi(), b.lo()) != 0;
}

bool certainly_greater(const Interval& a, const Interval& b) {
  return mpfr_greater_p(a.lo(), b.hi()) != 0;
}

bool overlaps(const Interval& a, const Interval& b) {
  return !certainly_less(a, b) && !certainly_greater(a, b);
}

int decimal_digits_for(Precision prec) {
  return static_cast<int>(std::ceil(static_cast<double>(prec) * 0.30102999566398120)) + 1;
}

}  // namespace oddrobin
