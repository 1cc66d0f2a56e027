#pragma once

#include <string>

#include "mvf/exact/rational.hpp"

namespace mvf {

// Valuation value: a rational or +infinity (the valuation of 0).
struct ExtValue {
  bool infinite = false;
  Rat value;

  static ExtValue inf() { return {true, Rat(0)}; }
  static ExtValue of(const Rat& v) { return {false, v}; }

  std::string to_string() const { return infinite ? "inf" : mvf::to_string(value); }
};

inline bool operator==(const ExtValue& a, const ExtValue& b) {
  return a.infinite == b.infinite && (a.infinite || a.value == b.value);
}
inline bool operator<(const ExtValue& a, const ExtValue& b) {
  if (a.infinite) return false;
  if (b.infinite) return true;
  return a.value < b.value;
}
inline bool operator>(const ExtValue& a, const ExtValue& b) { return b < a; }
inline bool operator>=(const ExtValue& a, const ExtValue& b) { return !(a < b); }
inline bool operator<=(const ExtValue& a, const ExtValue& b) { return !(b < a); }

}  // namespace mvf
