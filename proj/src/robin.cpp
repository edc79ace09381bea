#include "oddrobin/robin.hpp"

#include <algorithm>
#include <future>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "oddrobin/error.hpp"
#include "oddrobin/realbounds.hpp"

namespace oddrobin {

namespace {

const Factorization& equality_point() {
  static const Factorization f({{3, 2}, {5, 1}, {7, 1}});
  return f;
}

Interval bound_at(const Interval& loglog, const BoundContext& ctx, Precision prec) {
  return rhs_bound(loglog, ctx.coefficient(prec), ctx.constant(prec));
}

// Shared body of the main check; `small` carries n itself when it fits in
// 64 bits so log n can be enclosed in one step.
Verdict main_inequality(const Factorization& f, std::optional<std::uint64_t> small,
                        const BoundContext& ctx) {
  if (!f.is_odd()) {
    throw UsageError("main inequality is stated for odd n; got " + f.to_string());
  }
  if (!small && value(f) < 3) {
    throw DomainError("main inequality needs n >= 3; got " + f.to_string());
  }
  if (small && *small < 3) {
    throw DomainError("main inequality needs n >= 3; got " + std::to_string(*small));
  }
  const ExactRatio lhs = sigma_over_n(f);
  const std::string subject = fmt::format("sigma(n)/n <= A loglog n + C/loglog n, n = {}{}",
                                          small ? std::to_string(*small) + " = " : std::string{},
                                          f.to_string());
  auto sides = [&](Precision prec) {
    const Interval t = small ? loglog_of_integer(*small, prec) : loglog_of_integer(f, prec);
    return std::pair{Snapshot::of(lhs, prec), Snapshot::of(bound_at(t, ctx, prec))};
  };
  if (ctx.constant_is_defining() && f == equality_point()) {
    // C is built from n = 315, so the two sides coincide. Report the
    // enclosures and only flag a failure if they actually separate.
    const Precision prec = ctx.ladder().start();
    auto [l, r] = sides(prec);
    Verdict v{subject, Outcome::HoldsWithEquality, std::move(l), std::move(r), prec};
    if (!overlaps(v.lhs.enclosure, v.rhs.enclosure)) {
      v.outcome = decide(v.lhs, v.rhs);
    }
    return v;
  }
  return certify_le(subject, ctx.ladder(), sides);
}

std::string primorial_subject(std::size_t k, std::uint32_t pk) {
  return fmt::format("N'_k/phi(N'_k) <= A loglog N'_k + C/loglog N'_k, k = {} (p_k = {})", k, pk);
}

// Incremental sweep over [a, b] at the starting precision; any undecided k is
// redone through the full ladder.
std::vector<Verdict> sweep_chunk(std::size_t a, std::size_t b, const PrimeTable& table,
                                 const BoundContext& ctx) {
  std::vector<Verdict> out;
  out.reserve(b - a + 1);
  const Precision prec = ctx.ladder().start();
  ExactRatio ratio = n_over_phi(odd_primorial(a, table).factorization);
  Interval logsum = log_theta_sum(a, table, prec);
  for (std::size_t k = a; k <= b; ++k) {
    const std::uint32_t p = table.prime(k);
    if (k > a) {
      ratio = ratio * ExactRatio(mpz_class(p), mpz_class(p - 1));
      logsum = logsum + log_enclosure(p, prec);
    }
    Snapshot lhs = Snapshot::of(ratio, prec);
    Snapshot rhs = Snapshot::of(bound_at(loglog_from_logsum(logsum), ctx, prec));
    const Outcome o = decide(lhs, rhs);
    if (o == Outcome::Undecided && ctx.ladder().escalates()) {
      out.push_back(check_primorial(k, table, ctx));
    } else {
      out.push_back(Verdict{primorial_subject(k, p), o, std::move(lhs), std::move(rhs), prec});
    }
  }
  return out;
}

}  // namespace

BoundContext::BoundContext(PrecisionLadder ladder, std::optional<std::string> debug_constant)
    : ladder_(std::move(ladder)), debug_constant_(std::move(debug_constant)) {
  for (Precision prec : ladder_.steps()) {
    coefficient_.emplace(prec, exp_gamma_half(prec));
    constant_.emplace(prec, debug_constant_ ? Interval::from_decimal(*debug_constant_, prec)
                                            : main_constant_C(prec).enclosure);
  }
}

const Interval& BoundContext::coefficient(Precision prec) const {
  auto it = coefficient_.find(prec);
  if (it == coefficient_.end()) {
    throw UsageError("precision " + std::to_string(prec) + " not on the ladder");
  }
  return it->second;
}

const Interval& BoundContext::constant(Precision prec) const {
  auto it = constant_.find(prec);
  if (it == constant_.end()) {
    throw UsageError("precision " + std::to_string(prec) + " not on the ladder");
  }
  return it->second;
}

Verdict check_main_inequality(const Factorization& f, const BoundContext& ctx) {
  return main_inequality(f, std::nullopt, ctx);
}

Verdict check_main_inequality(std::uint64_t n, const PrimeTable& table, const BoundContext& ctx) {
  if (n % 2 == 0) {
    throw UsageError("main inequality is stated for odd n; got " + std::to_string(n));
  }
  if (n < 3) {
    throw DomainError("main inequality needs n >= 3; got " + std::to_string(n));
  }
  return main_inequality(factorize(n, table), n, ctx);
}

Verdict check_primorial(std::size_t k, const PrimeTable& table, const BoundContext& ctx) {
  const PrimorialSpec spec = odd_primorial(k, table);
  const ExactRatio lhs = n_over_phi(spec.factorization);
  return certify_le(primorial_subject(k, table.prime(k)), ctx.ladder(), [&](Precision prec) {
    const Interval t = loglog_from_logsum(log_theta_sum(k, table, prec));
    return std::pair{Snapshot::of(lhs, prec), Snapshot::of(bound_at(t, ctx, prec))};
  });
}

PrimorialSweep primorial_sweep(std::size_t k_min, std::size_t k_max, const PrimeTable& table,
                               const BoundContext& ctx, unsigned threads) {
  if (k_min < 2 || k_min > k_max) {
    throw UsageError(fmt::format("primorial sweep needs 2 <= k_min <= k_max, got [{}, {}]", k_min, k_max));
  }
  table.prime(k_max);

  PrimorialSweep sweep;
  sweep.k_min = k_min;
  sweep.k_max = k_max;
  sweep.report.name = "primorial_sweep";

  const std::size_t count = k_max - k_min + 1;
  const std::size_t parts = std::clamp<std::size_t>(threads, 1, count);
  if (parts == 1) {
    sweep.report.verdicts = sweep_chunk(k_min, k_max, table, ctx);
  } else {
    std::vector<std::future<std::vector<Verdict>>> jobs;
    for (std::size_t i = 0; i < parts; ++i) {
      const std::size_t a = k_min + count * i / parts;
      const std::size_t b = k_min + count * (i + 1) / parts - 1;
      jobs.push_back(std::async(std::launch::async, sweep_chunk, a, b, std::cref(table), std::cref(ctx)));
    }
    for (auto& job : jobs) {
      auto part = job.get();
      std::move(part.begin(), part.end(), std::back_inserter(sweep.report.verdicts));
    }
  }

  const auto& vs = sweep.report.verdicts;
  std::size_t first_holding = k_max + 1;
  for (std::size_t i = vs.size(); i-- > 0;) {
    if (!is_holding(vs[i].outcome)) {
      break;
    }
    first_holding = k_min + i;
  }
  if (first_holding <= k_max) {
    sweep.holds_from = first_holding;
  }
  const std::size_t threshold = std::max(k_min, kPrimorialThresholdIndex);
  sweep.threshold_range_holds = threshold <= k_max && sweep.holds_from && *sweep.holds_from <= threshold;

  const auto holding = std::count_if(vs.begin(), vs.end(), [](const Verdict& v) { return is_holding(v.outcome); });
  sweep.report.summary = fmt::format(
      "k in [{}, {}]: {} of {} hold; holds for every k >= {}; range [{}, {}] holds: {}", k_min, k_max, holding,
      vs.size(), sweep.holds_from ? std::to_string(*sweep.holds_from) : std::string("none"), threshold, k_max,
      sweep.threshold_range_holds ? "yes" : "no");
  return sweep;
}

Verdict check_lemma24(std::uint64_t p, const PrimeTable& table, const BoundContext& ctx) {
  if (p < kBridgeBound) {
    throw UsageError(fmt::format("log-log lower bound needs p_k >= {}, got {}", kBridgeBound, p));
  }
  if (p > table.limit() || !table.is_prime(p)) {
    throw UsageError(fmt::format("{} is not a prime within the sieve", p));
  }
  const std::size_t k = table.index_of(p);
  return certify_le(fmt::format("log p_k - K/log p_k < loglog N'_k, p_k = {} (k = {})", p, k), ctx.ladder(),
                    [&](Precision prec) {
                      const Interval lp = log_enclosure(p, prec);
                      const Interval lhs = lp - lemma24_constant(prec).enclosure / lp;
                      const Interval rhs = loglog_from_logsum(log_theta_sum(k, table, prec));
                      return std::pair{Snapshot::of(lhs), Snapshot::of(rhs)};
                    });
}

namespace {

// A log x (1 + 0.2/log^2 x).
Interval mertens_bound(std::uint64_t x, const BoundContext& ctx, Precision prec) {
  const Interval lx = log_enclosure(x, prec);
  const Interval fifth = Interval::from_ratio(mpq_class(1, 5), prec);
  return ctx.coefficient(prec) * lx * (Interval::from_integer(1, prec) + fifth / (lx * lx));
}

}  // namespace

Verdict check_lemma22(std::size_t k, const PrimeTable& table, const BoundContext& ctx) {
  const std::uint32_t p = table.prime(k);
  if (p < 10000) {
    throw UsageError(fmt::format("Mertens-type bound needs x = p_k >= 10^4, got {}", p));
  }
  const ExactRatio lhs = n_over_phi(odd_primorial(k, table).factorization);
  return certify_le(fmt::format("prod_{{i=2..k}} p_i/(p_i-1) <= A log x (1 + 0.2/log^2 x), x = p_k = {} (k = {})", p, k),
                    ctx.ladder(), [&](Precision prec) {
                      return std::pair{Snapshot::of(lhs, prec), Snapshot::of(mertens_bound(p, ctx, prec))};
                    });
}

Report check_theorem31_chain(std::size_t k, const PrimeTable& table, const BoundContext& ctx) {
  const std::uint32_t p = table.prime(k);
  if (p < kBridgeBound) {
    throw UsageError(fmt::format("large-prime chain needs p_k >= {}, got {}", kBridgeBound, p));
  }
  const ExactRatio ratio = n_over_phi(odd_primorial(k, table).factorization);

  Report report;
  report.name = "theorem31_chain";
  report.verdicts.push_back(check_lemma24(p, table, ctx));
  report.verdicts.push_back(certify_le(
      fmt::format("A log p (1 + 0.2/log^2 p) <= A (log p - K/log p) + C/log p, p = {}", p), ctx.ladder(),
      [&](Precision prec) {
        const Interval lp = log_enclosure(p, prec);
        const Interval shifted = lp - lemma24_constant(prec).enclosure / lp;
        const Interval rhs = ctx.coefficient(prec) * shifted + ctx.constant(prec) / lp;
        return std::pair{Snapshot::of(mertens_bound(p, ctx, prec)), Snapshot::of(rhs)};
      }));
  report.verdicts.push_back(check_lemma22(k, table, ctx));
  report.verdicts.push_back(certify_le(
      fmt::format("N'_k/phi(N'_k) <= A loglog N'_k + C/loglog N'_k, k = {} (p_k = {})", k, p), ctx.ladder(),
      [&](Precision prec) {
        const Interval t = loglog_from_logsum(log_theta_sum(k, table, prec));
        return std::pair{Snapshot::of(ratio, prec), Snapshot::of(bound_at(t, ctx, prec))};
      }));
  report.summary = fmt::format("chain at k = {} (p_k = {}): {}", k, p, to_string(report.overall()));
  return report;
}

Verdict check_increasing_premise(const BoundContext& ctx) {
  return certify_le("sqrt(C/A) < 1 (A t + C/t increasing for t >= 1)", ctx.ladder(), [&](Precision prec) {
    const Interval turn = sqrt(ctx.constant(prec) / ctx.coefficient(prec));
    return std::pair{Snapshot::of(turn), Snapshot::of(ExactRatio(mpz_class(1), mpz_class(1)), prec)};
  });
}

}  // namespace oddrobin
