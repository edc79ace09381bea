#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oddrobin/arith.hpp"
#include "oddrobin/interval.hpp"

namespace oddrobin {

enum class Outcome { Holds, HoldsWithEquality, Fails, Undecided };

std::string_view to_string(Outcome o);
bool is_holding(Outcome o);
/// Fails dominates Undecided, which dominates Holds. Equality counts as Holds.
Outcome combine(Outcome a, Outcome b);

/// One side of a compared inequality: an enclosure, plus the exact value
/// when that side is rational.
struct Snapshot {
  Interval enclosure;
  std::optional<ExactRatio> exact;

  static Snapshot of(const ExactRatio& q, Precision prec) { return {q.enclose(prec), q}; }
  static Snapshot of(Interval i) { return {std::move(i), std::nullopt}; }
};

/// Certified outcome of "lhs <= rhs" for a named subject.
struct Verdict {
  std::string subject;
  Outcome outcome = Outcome::Undecided;
  Snapshot lhs;
  Snapshot rhs;
  Precision precision_used = 0;
};

/// Successive working precisions tried before a comparison is declared
/// Undecided: start, 2*start, ... up to 512 bits (or just start).
class PrecisionLadder {
 public:
  explicit PrecisionLadder(Precision start = kDefaultPrecision, bool escalate = true);
  std::span<const Precision> steps() const { return steps_; }
  Precision start() const { return steps_.front(); }
  Precision top() const { return steps_.back(); }
  bool escalates() const { return steps_.size() > 1; }

 private:
  std::vector<Precision> steps_;
};

using SidesAt = std::function<std::pair<Snapshot, Snapshot>(Precision)>;

/// Evaluates both sides at each ladder precision until they separate.
/// Holds iff lhs.hi < rhs.lo (or exact lhs <= rhs when both sides are
/// rational; exact equality yields HoldsWithEquality). Fails iff
/// lhs.lo > rhs.hi. Undecided after the top of the ladder.
Verdict certify_le(std::string subject, const PrecisionLadder& ladder, const SidesAt& sides);

/// Single-precision decision on already-evaluated sides.
Outcome decide(const Snapshot& lhs, const Snapshot& rhs);

struct Report {
  std::string name;
  std::vector<Verdict> verdicts;
  std::string summary;

  Outcome overall() const;
};

}  // namespace oddrobin
