#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include "pdg/error.hpp"

namespace pdg {

/// A real number or +infinity. Used for the exponents p and q, where
/// infinity selects the max/sup form rather than a power sum.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr ExtendedReal(double value) : value_(value) {}  // NOLINT(implicit)

  static constexpr ExtendedReal infinity() {
    ExtendedReal r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  /// Finite value; throws for infinity so sentinel doubles never leak out.
  double value() const {
    if (infinite_) throw Error(ErrorKind::ParameterDomain, "exponent is infinite");
    return value_;
  }

  /// 1/x with 1/inf = 0.
  constexpr double reciprocal() const { return infinite_ ? 0.0 : 1.0 / value_; }

  friend constexpr bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend constexpr bool operator<=(const ExtendedReal& a, const ExtendedReal& b) {
    return a < b || a == b;
  }
  friend constexpr bool operator>(const ExtendedReal& a, const ExtendedReal& b) { return b < a; }
  friend constexpr bool operator>=(const ExtendedReal& a, const ExtendedReal& b) { return b <= a; }

  std::string to_string() const {
    if (infinite_) return "inf";
    std::string s = std::to_string(value_);
    // trim trailing zeros from std::to_string's fixed notation
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  }

  /// Accepts decimal literals and "inf" (also "infinity", case-sensitive lower).
  static ExtendedReal parse(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "Inf") return infinity();
    std::string buf(text);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(buf, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "expected a number or \"inf\", got \"" + buf + "\"");
    }
    if (used != buf.size() || !std::isfinite(v)) {
      throw Error(ErrorKind::Parse, "expected a number or \"inf\", got \"" + buf + "\"");
    }
    return ExtendedReal(v);
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

inline constexpr ExtendedReal kInfinity = ExtendedReal::infinity();

}  // namespace pdg
