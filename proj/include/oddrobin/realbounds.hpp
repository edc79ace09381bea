#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "oddrobin/factorization.hpp"
#include "oddrobin/interval.hpp"

namespace oddrobin {

/// Euler-Mascheroni constant to 50 decimals. Used as an audit reference for
/// the MPFR-computed enclosure, not as the enclosure itself.
inline constexpr std::string_view kEulerGammaReference =
    "0.57721566490153286060651209008240243104215933593992";

struct CertifiedConstant {
  std::string name;
  Interval enclosure;
  std::string derivation;
};

/// gamma, correctly rounded down/up at `prec` bits (width <= 2^-prec).
Interval euler_gamma(Precision prec);
/// e^gamma / 2, the odd-case Robin coefficient.
Interval exp_gamma_half(Precision prec);

/// log n computed as sum a * log p; never expands the integer.
Interval log_of(const Factorization& f, Precision prec);

/// log log n for n >= 3. Throws DomainError for n <= 2.
Interval loglog_of_integer(std::uint64_t n, Precision prec);
Interval loglog_of_integer(const Factorization& f, Precision prec);

/// log of an enclosure of log N. Requires logN.lo > 1.
Interval loglog_from_logsum(const Interval& log_n);

/// C = (sigma(315)/315 - (e^gamma/2) log log 315) * log log 315.
CertifiedConstant main_constant_C(Precision prec);

/// Robin's even-case constant, defined by equality at n = 12:
/// (7/3 - e^gamma log log 12) * log log 12 = 0.6482...
CertifiedConstant robin_constant(Precision prec);

/// (1 - (1 + log 2)/(8 log bound))^{-1}; 1.02183726... at bound = 20000.
Interval lemma24_inner_factor(Precision prec, std::uint64_t bound = 20000);

/// 0.125 (1 + log 2) times the inner factor at `bound`; with no bound (the
/// log bound -> infinity limit) the factor is 1 and the value 0.2116...
CertifiedConstant lemma24_constant(Precision prec, std::optional<std::uint64_t> bound = 20000);

/// A t + B / t. Throws DomainError unless t.lo > 0.
Interval rhs_bound(const Interval& t, const Interval& coeff, const Interval& constant);

/// Requires precision >= 64; throws UsageError otherwise.
void require_precision(Precision prec);

}  // namespace oddrobin
