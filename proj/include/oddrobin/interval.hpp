#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace oddrobin {

using Precision = mpfr_prec_t;

inline constexpr Precision kMinPrecision = 64;
inline constexpr Precision kDefaultPrecision = 128;
inline constexpr Precision kMaxPrecision = 512;

/// Closed enclosure [lo, hi] of a real number with MPFR endpoints.
///
/// Every operation rounds the lower endpoint toward -inf and the upper
/// endpoint toward +inf, so for any reals x in a and y in b the exact value
/// of x op y lies in the result. The result precision of a binary operation
/// is the larger of the operand precisions. The upper endpoint may be +inf
/// (used for half-open windows); arithmetic on such intervals is rejected.
class Interval {
 public:
  /// The thin interval [0, 0].
  explicit Interval(Precision prec = kDefaultPrecision);

  static Interval from_integer(const mpz_class& n, Precision prec);
  static Interval from_integer(std::int64_t n, Precision prec);
  static Interval from_ratio(const mpq_class& q, Precision prec);
  /// Parses a decimal literal, rounding lo down and hi up.
  static Interval from_decimal(std::string_view text, Precision prec);
  /// [lo, hi] from two endpoints given as decimal literals.
  static Interval from_decimal_bounds(std::string_view lo, std::string_view hi,
                                      Precision prec);
  /// [lo, hi] from raw MPFR endpoints, rounded outward to `prec`.
  static Interval from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, Precision prec);
  /// [lo.lo, +inf].
  static Interval at_least(const Interval& lo);
  /// Smallest interval containing both.
  static Interval hull(const Interval& a, const Interval& b);

  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  Precision precision() const { return mpfr_get_prec(lo_); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  bool is_bounded() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }
  bool is_thin() const { return mpfr_equal_p(lo_, hi_) != 0; }

  /// Upper bound on hi - lo as a double.
  double width() const;
  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  /// Round-to-nearest midpoint as a thin interval (not an enclosure of
  /// anything, just a representative point).
  Interval midpoint() const;

  /// Same enclosure re-rounded outward at another precision.
  Interval with_precision(Precision prec) const;

  bool contains(const mpq_class& q) const;
  bool contains(const Interval& inner) const;
  bool contains_zero() const;

  /// lo rounded down / hi rounded up to `digits` significant decimal digits,
  /// in scientific notation. Infinite endpoints print as "inf"/"-inf".
  std::string lo_string(int digits) const;
  std::string hi_string(int digits) const;
  /// Midpoint rounded to nearest with a fixed number of decimals.
  std::string midpoint_fixed(int decimals) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);

  friend Interval log(const Interval& a);
  friend Interval exp(const Interval& a);
  friend Interval sqrt(const Interval& a);
  friend Interval abs(const Interval& a);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

/// a.hi < b.lo: every member of a is strictly below every member of b.
bool certainly_less(const Interval& a, const Interval& b);
/// a.lo > b.hi.
bool certainly_greater(const Interval& a, const Interval& b);
bool overlaps(const Interval& a, const Interval& b);

/// Number of significant decimal digits that faithfully show `prec` bits.
int decimal_digits_for(Precision prec);

}  // namespace oddrobin
