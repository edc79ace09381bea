#pragma once

#include <string>

#include "oddrobin/interval.hpp"

namespace oddrobin::test {

// True when x lies inside [value - tol, value + tol].
inline bool within(const Interval& x, const std::string& value, const std::string& tol) {
  const Interval v = Interval::from_decimal(value, kMaxPrecision);
  const Interval t = Interval::from_decimal(tol, kMaxPrecision);
  return Interval::hull(v - t, v + t).contains(x);
}

}  // namespace oddrobin::test
