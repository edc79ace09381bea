#include "oddrobin/verdict.hpp"

#include "oddrobin/error.hpp"

namespace oddrobin {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds:
      return "holds";
    case Outcome::HoldsWithEquality:
      return "holds_with_equality";
    case Outcome::Fails:
      return "fails";
    case Outcome::Undecided:
      return "undecided";
  }
  return "undecided";
}

bool is_holding(Outcome o) { return o == Outcome::Holds || o == Outcome::HoldsWithEquality; }

Outcome combine(Outcome a, Outcome b) {
  if (a == Outcome::Fails || b == Outcome::Fails) {
    return Outcome::Fails;
  }
  if (a == Outcome::Undecided || b == Outcome::Undecided) {
    return Outcome::Undecided;
  }
  return Outcome::Holds;
}

PrecisionLadder::PrecisionLadder(Precision start, bool escalate) {
  if (start < kMinPrecision || start > kMaxPrecision) {
    throw UsageError("precision must lie in [64, 512] bits");
  }
  steps_.push_back(start);
  while (escalate && steps_.back() < kMaxPrecision) {
    steps_.push_back(std::min<Precision>(steps_.back() * 2, kMaxPrecision));
  }
}

Outcome decide(const Snapshot& lhs, const Snapshot& rhs) {
  if (lhs.exact && rhs.exact) {
    const auto c = *lhs.exact <=> *rhs.exact;
    if (c < 0) {
      return Outcome::Holds;
    }
    return c == 0 ? Outcome::HoldsWithEquality : Outcome::Fails;
  }
  if (certainly_less(lhs.enclosure, rhs.enclosure)) {
    return Outcome::Holds;
  }
  if (certainly_greater(lhs.enclosure, rhs.enclosure)) {
    return Outcome::Fails;
  }
  return Outcome::Undecided;
}

Verdict certify_le(std::string subject, const PrecisionLadder& ladder, const SidesAt& sides) {
  Verdict v;
  v.subject = std::move(subject);
  for (Precision prec : ladder.steps()) {
    auto [lhs, rhs] = sides(prec);
    v.outcome = decide(lhs, rhs);
    v.lhs = std::move(lhs);
    v.rhs = std::move(rhs);
    v.precision_used = prec;
    if (v.outcome != Outcome::Undecided) {
      break;
    }
  }
  return v;
}

Outcome Report::overall() const {
  Outcome o = Outcome::Holds;
  for (const auto& v : verdicts) {
    o = combine(o, v.outcome);
  }
  return o;
}

}  // namespace oddrobin
