#include "oddrobin/ca.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>

#include <fmt/format.h>

#include "oddrobin/error.hpp"
#include "oddrobin/realbounds.hpp"

namespace oddrobin {

CriticalEpsilon critical_epsilon(std::uint64_t p, unsigned a, Precision prec) {
  if (p == 2) {
    throw UsageError("critical_epsilon: odd CA numbers never use p = 2");
  }
  if (p < 3 || !is_small_prime(p)) {
    throw UsageError("critical_epsilon: " + std::to_string(p) + " is not an odd prime");
  }
  if (a == 0) {
    throw UsageError("critical_epsilon: exponent must be >= 1");
  }
  require_precision(prec);
  mpz_class pa;
  mpz_ui_pow_ui(pa.get_mpz_t(), p, a);
  const mpq_class ratio(pa * p - 1, pa - 1);  // (p^{a+1} - 1)/(p^a - 1)
  const Interval eps = log(Interval::from_ratio(ratio, prec)) / log_enclosure(p, prec) -
                       Interval::from_integer(1, prec);
  return {p, a, eps};
}

Interval OddCaNumber::eps_window() const {
  if (!entered_at) {
    return Interval::at_least(Interval::from_endpoints(left_at.eps.hi(), left_at.eps.hi(), left_at.eps.precision()));
  }
  if (!certainly_less(left_at.eps, entered_at->eps)) {
    throw StructuralError("CA window is empty for " + factorization.to_string());
  }
  return Interval::from_endpoints(left_at.eps.hi(), entered_at->eps.lo(),
                                  std::max(left_at.eps.precision(), entered_at->eps.precision()));
}

namespace {

// Index of the candidate whose epsilon is certainly the largest, if the
// enclosures separate it from all others.
std::optional<std::size_t> certified_max(const std::vector<CriticalEpsilon>& cands) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < cands.size(); ++i) {
    if (mpfr_greater_p(cands[i].eps.hi(), cands[best].eps.hi())) {
      best = i;
    }
  }
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (i != best && !certainly_greater(cands[best].eps, cands[i].eps)) {
      return std::nullopt;
    }
  }
  return best;
}

}  // namespace

std::vector<OddCaNumber> generate_odd_ca(std::size_t count, const PrimeTable& table,
                                         const PrecisionLadder& ladder) {
  if (count == 0) {
    throw UsageError("generate_odd_ca: count must be >= 1");
  }
  Factorization current;
  std::size_t next_new = 2;  // table index of the smallest unused odd prime
  std::vector<CriticalEpsilon> chosen;
  chosen.reserve(count + 1);
  std::vector<Factorization> numbers;

  // count + 1 steps: the last one only closes the final number's window.
  for (std::size_t step = 0; step <= count; ++step) {
    std::optional<std::size_t> pick;
    std::vector<CriticalEpsilon> cands;
    for (Precision prec : ladder.steps()) {
      cands.clear();
      for (const auto& [p, a] : current.pairs()) {
        cands.push_back(critical_epsilon(p, a + 1, prec));
      }
      cands.push_back(critical_epsilon(table.prime(next_new), 1, prec));
      pick = certified_max(cands);
      if (pick) {
        break;
      }
    }
    if (!pick) {
      throw StructuralError(fmt::format("cannot order critical epsilons after {} at {} bits",
                                        current.to_string(), ladder.top()));
    }
    const CriticalEpsilon& c = cands[*pick];
    if (c.a == 1 && c.p == table.prime(next_new)) {
      ++next_new;
    }
    chosen.push_back(c);
    if (step < count) {
      current = current.times_prime(c.p);
      numbers.push_back(current);
    }
  }

  std::vector<OddCaNumber> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    OddCaNumber n;
    n.factorization = numbers[i];
    n.ordinal = i;
    if (i > 0) {
      n.entered_at = chosen[i];
    }
    n.left_at = chosen[i + 1];
    out.push_back(std::move(n));
  }
  return out;
}

Report verify_split(const OddCaNumber& n, const OddCaNumber& n_next, const ExactRatio& alpha,
                    const ExactRatio& beta, const Interval& coeff, const Interval& constant) {
  if (n_next.ordinal != n.ordinal + 1 || !n_next.factorization.quotient_prime(n.factorization)) {
    throw UsageError("verify_split needs consecutive CA numbers, got " + n.factorization.to_string() + " and " +
                     n_next.factorization.to_string());
  }
  const ExactRatio zero(mpz_class(0), mpz_class(1));
  const ExactRatio one(mpz_class(1), mpz_class(1));
  if (alpha < zero || beta < zero) {
    throw UsageError("verify_split needs alpha, beta >= 0");
  }
  const ExactRatio total = alpha + beta;
  if (total > one) {
    throw UsageError("verify_split needs alpha + beta <= 1, got " + total.to_string());
  }
  const Precision prec = coeff.precision();

  Report r;
  r.name = "split";
  for (const OddCaNumber* m : {&n, &n_next}) {
    const Factorization& f = m->factorization;
    Snapshot lhs = Snapshot::of(alpha * sigma_over_n(f), prec);
    Snapshot rhs = Snapshot::of(coeff * loglog_of_integer(f, prec));
    const Outcome o = decide(lhs, rhs);
    r.verdicts.push_back({fmt::format("part 1: {} sigma(N)/N <= A loglog N, N = {}", alpha.to_string(), f.to_string()),
                          o, std::move(lhs), std::move(rhs), prec});
  }
  {
    const Factorization& f = n_next.factorization;
    Snapshot lhs = Snapshot::of(beta * sigma_over_n(f), prec);
    Snapshot rhs = Snapshot::of(constant / loglog_of_integer(f, prec));
    const Outcome o = decide(lhs, rhs);
    r.verdicts.push_back({fmt::format("part 2: {} sigma(N')/N' <= B/loglog N', N' = {}", beta.to_string(), f.to_string()),
                          o, std::move(lhs), std::move(rhs), prec});
  }
  Outcome conclusion = decide(Snapshot::of(total, prec), Snapshot::of(one, prec));
  for (const auto& v : r.verdicts) {
    conclusion = combine(conclusion, v.outcome);
  }
  r.verdicts.push_back({fmt::format("part 3: sigma(n)/n <= A loglog n + B/loglog n on [{}, {}]", n.factorization.to_string(),
                                    n_next.factorization.to_string()),
                        conclusion, Snapshot::of(total, prec), Snapshot::of(one, prec), prec});
  r.summary = to_string(r.overall());
  return r;
}

namespace {

// 3^e1 * 5^e2 * ... * last, exponents beyond the listed ones equal to 1.
Factorization staircase(std::initializer_list<unsigned> leading, std::uint32_t last, const PrimeTable& table) {
  std::vector<PrimePower> pairs;
  auto it = leading.begin();
  for (std::uint32_t p : table.primes()) {
    if (p == 2) {
      continue;
    }
    if (p > last) {
      break;
    }
    unsigned e = 1;
    if (it != leading.end()) {
      e = *it++;
    }
    pairs.push_back({p, e});
  }
  return Factorization(std::move(pairs));
}

ExactRatio ratio(long num, long den) { return ExactRatio(mpz_class(num), mpz_class(den)); }

}  // namespace

CorollaryCase corollary_case(int id, const PrimeTable& table) {
  switch (id) {
    case 1:
      return {1, ratio(39, 40), ratio(1, 40), staircase({3, 2}, 31, table),
              staircase({6, 4, 3, 2, 2, 2, 2}, 251, table)};
    case 2:
      return {2, ratio(19, 20), ratio(1, 20), staircase({3, 2}, 17, table), staircase({4, 3, 2}, 59, table)};
    case 3:
      return {3, ratio(19, 21), ratio(2, 21), staircase({2}, 13, table), staircase({3, 2}, 17, table)};
    default:
      throw UsageError("corollary case must be 1, 2 or 3, got " + std::to_string(id));
  }
}

Report corollary_sweep(int id, const std::vector<OddCaNumber>& sequence, const PrimeTable& table,
                       const BoundContext& ctx) {
  const CorollaryCase cc = corollary_case(id, table);
  auto find = [&](const Factorization& f) {
    auto it = std::find_if(sequence.begin(), sequence.end(),
                           [&](const OddCaNumber& n) { return n.factorization == f; });
    if (it == sequence.end()) {
      throw StructuralError(fmt::format("corollary case {}: endpoint {} not in the generated CA sequence", id,
                                        f.to_string()));
    }
    return static_cast<std::size_t>(it - sequence.begin());
  };
  const std::size_t lo = find(cc.lower);
  const std::size_t hi = find(cc.upper);
  if (hi <= lo) {
    throw StructuralError(fmt::format("corollary case {}: endpoints out of order", id));
  }

  Report report;
  report.name = fmt::format("corollary_case_{}", id);
  for (std::size_t i = lo; i < hi; ++i) {
    Report pair;
    for (Precision prec : ctx.ladder().steps()) {
      pair = verify_split(sequence[i], sequence[i + 1], cc.alpha, cc.beta, ctx.coefficient(prec), ctx.constant(prec));
      if (pair.overall() != Outcome::Undecided) {
        break;
      }
    }
    std::move(pair.verdicts.begin(), pair.verdicts.end(), std::back_inserter(report.verdicts));
  }
  report.summary = fmt::format("alpha = {}, beta = {}, {} consecutive pairs from {} to {}: {}", cc.alpha.to_string(),
                               cc.beta.to_string(), hi - lo, cc.lower.to_string(), cc.upper.to_string(),
                               to_string(report.overall()));
  return report;
}

CoverageResult coverage_audit(const std::vector<CoverageRange>& ranges) {
  std::vector<const CoverageRange*> live;
  for (const auto& r : ranges) {
    if (r.certified) {
      live.push_back(&r);
    }
  }
  std::sort(live.begin(), live.end(), [](const CoverageRange* a, const CoverageRange* b) { return a->lo < b->lo; });

  // Every odd n <= covered is covered; start just below 3.
  mpz_class covered = 1;
  bool unbounded = false;
  std::optional<CoverageGap> gap;
  for (const CoverageRange* r : live) {
    const mpz_class next_odd = covered + 2;
    if (r->lo > next_odd) {
      const mpz_class last_uncovered = (r->lo % 2 == 0) ? mpz_class(r->lo - 1) : mpz_class(r->lo - 2);
      gap = CoverageGap{next_odd, last_uncovered};
      break;
    }
    if (!r->hi) {
      unbounded = true;
      break;
    }
    if (*r->hi > covered) {
      covered = (*r->hi % 2 == 0) ? mpz_class(*r->hi - 1) : *r->hi;
    }
  }
  if (!gap && !unbounded) {
    gap = CoverageGap{covered + 2, std::nullopt};
  }

  CoverageResult result;
  const Precision prec = kDefaultPrecision;
  const ExactRatio zero(mpz_class(0), mpz_class(1));
  result.verdict.precision_used = prec;
  result.verdict.rhs = Snapshot::of(zero, prec);
  if (gap) {
    result.verdict.subject = fmt::format("certified ranges cover every odd n >= 3; uncovered: [{}, {}]",
                                         gap->lo.get_str(), gap->hi ? gap->hi->get_str() : std::string("inf"));
    result.verdict.outcome = Outcome::Fails;
    result.verdict.lhs = Snapshot::of(ExactRatio(mpz_class(1), mpz_class(1)), prec);
  } else {
    result.verdict.subject = fmt::format("certified ranges cover every odd n >= 3 ({} ranges)", live.size());
    result.verdict.outcome = Outcome::Holds;
    result.verdict.lhs = Snapshot::of(zero, prec);
  }
  result.gap = gap;
  return result;
}

std::vector<CoverageRange> standard_coverage(const PrimeTable& table, std::size_t sweep_k_max,
                                             std::uint64_t scan_hi) {
  if (sweep_k_max < kPrimorialThresholdIndex) {
    throw UsageError("standard coverage needs the primorial sweep to reach k = 54");
  }
  std::vector<CoverageRange> out;
  out.push_back({"scan", 3, mpz_class(static_cast<unsigned long>(scan_hi)), true});
  for (int id : {3, 2, 1}) {
    const CorollaryCase cc = corollary_case(id, table);
    out.push_back({fmt::format("corollary_case_{}", id), value(cc.lower), value(cc.upper), true});
  }
  out.push_back({"primorial_sweep", value(odd_primorial(kPrimorialThresholdIndex, table).factorization),
                 mpz_class(value(odd_primorial(sweep_k_max + 1, table).factorization) - 1), true});
  out.push_back({"theorem31", value(odd_primorial(bridge_index(table), table).factorization), std::nullopt, true});
  return out;
}

}  // namespace oddrobin
