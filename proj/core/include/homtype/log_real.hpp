#ifndef HOMTYPE_LOG_REAL_HPP
#define HOMTYPE_LOG_REAL_HPP

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "homtype/errors.hpp"

namespace homtype {

/// Signed real number stored as (sign, ln|value|). Magnitudes like 2^(2^60)
/// that overflow any binary float stay exactly representable; products,
/// quotients and powers are exact log-space arithmetic, sums go through
/// log-sum-exp. ln|value| of zero is -inf with sign 0.
class LogReal {
public:
  constexpr LogReal() : lg_(-std::numeric_limits<double>::infinity()), sign_(0) {}

  static LogReal from_value(double v) {
    if (v == 0.0) return LogReal();
    if (std::isnan(v)) throw Error("LogReal: NaN input");
    return LogReal(std::log(std::abs(v)), v > 0 ? +1 : -1);
  }

  /// Build from ln|value| and sign.
  static LogReal from_ln(double ln_mag, int sign = +1) {
    if (sign == 0 || ln_mag == -std::numeric_limits<double>::infinity())
      return LogReal();
    return LogReal(ln_mag, sign > 0 ? +1 : -1);
  }

  static LogReal from_log2(double log2_mag, int sign = +1) {
    return from_ln(log2_mag * ln2(), sign);
  }

  static LogReal from_log10(double log10_mag, int sign = +1) {
    return from_ln(log10_mag * std::log(10.0), sign);
  }

  static LogReal infinity() {
    return LogReal(std::numeric_limits<double>::infinity(), +1);
  }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_positive_infinity() const {
    return sign_ > 0 && lg_ == std::numeric_limits<double>::infinity();
  }

  /// ln of |value|; -inf for zero.
  double ln_abs() const { return lg_; }
  double log2_abs() const { return lg_ / ln2(); }

  /// Nearest double; silently under/overflows to 0 or +-inf.
  double value() const {
    if (sign_ == 0) return 0.0;
    return sign_ * std::exp(lg_);
  }

  /// Like value(), but reports magnitude loss instead of saturating.
  double value_checked() const {
    if (sign_ == 0) return 0.0;
    if (lg_ > kMaxFiniteLn)
      throw OverflowError("magnitude 2^" + std::to_string(log2_abs()) +
                          " exceeds double range");
    return sign_ * std::exp(lg_);
  }

  LogReal operator-() const { return LogReal(lg_, -sign_); }

  friend LogReal abs(const LogReal& a) {
    return a.sign_ == 0 ? LogReal() : LogReal(a.lg_, +1);
  }

  friend LogReal operator*(const LogReal& a, const LogReal& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return LogReal();
    return LogReal(a.lg_ + b.lg_, a.sign_ * b.sign_);
  }

  friend LogReal operator/(const LogReal& a, const LogReal& b) {
    if (b.sign_ == 0) throw Error("LogReal: division by zero");
    if (a.sign_ == 0) return LogReal();
    return LogReal(a.lg_ - b.lg_, a.sign_ * b.sign_);
  }

  friend LogReal operator+(const LogReal& a, const LogReal& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    if (a.sign_ == b.sign_)
      return LogReal(log_add(a.lg_, b.lg_), a.sign_);
    if (a.lg_ == b.lg_) return LogReal();
    return a.lg_ > b.lg_ ? LogReal(log_sub(a.lg_, b.lg_), a.sign_)
                         : LogReal(log_sub(b.lg_, a.lg_), b.sign_);
  }

  friend LogReal operator-(const LogReal& a, const LogReal& b) { return a + (-b); }

  LogReal& operator+=(const LogReal& b) { return *this = *this + b; }
  LogReal& operator*=(const LogReal& b) { return *this = *this * b; }

  /// a^e for a >= 0 (0^e = 0 for e > 0).
  friend LogReal pow(const LogReal& a, double e) {
    if (a.sign_ < 0) throw Error("LogReal: pow of negative base");
    if (a.sign_ == 0) {
      if (e <= 0.0) throw Error("LogReal: 0 raised to nonpositive power");
      return LogReal();
    }
    return LogReal(a.lg_ * e, +1);
  }

  friend bool operator==(const LogReal& a, const LogReal& b) {
    return a.sign_ == b.sign_ && (a.sign_ == 0 || a.lg_ == b.lg_);
  }

  friend std::strong_ordering operator<=>(const LogReal& a, const LogReal& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    if (a.sign_ == 0) return std::strong_ordering::equal;
    auto mag = strong_order_double(a.lg_, b.lg_);
    return a.sign_ > 0 ? mag : invert(mag);
  }

  friend const LogReal& max(const LogReal& a, const LogReal& b) { return a < b ? b : a; }
  friend const LogReal& min(const LogReal& a, const LogReal& b) { return b < a ? b : a; }

  /// "1.5", "-2.25e+11", or "2^(1.1806e+03)" once past double range.
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const LogReal& a) {
    return os << a.str();
  }

  static constexpr double ln2() { return 0.6931471805599453; }

private:
  LogReal(double lg, int sign) : lg_(lg), sign_(static_cast<std::int8_t>(sign)) {}

  static constexpr double kMaxFiniteLn = 709.0;

  static double log_add(double x, double y) {
    if (x == std::numeric_limits<double>::infinity() ||
        y == std::numeric_limits<double>::infinity())
      return std::numeric_limits<double>::infinity();
    double m = x > y ? x : y;
    return m + std::log1p(std::exp(-std::abs(x - y)));
  }

  // requires x > y
  static double log_sub(double x, double y) {
    if (x == std::numeric_limits<double>::infinity()) return x;
    return x + std::log(-std::expm1(y - x));
  }

  static std::strong_ordering strong_order_double(double x, double y) {
    if (x < y) return std::strong_ordering::less;
    if (x > y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  static std::strong_ordering invert(std::strong_ordering o) {
    if (o == std::strong_ordering::less) return std::strong_ordering::greater;
    if (o == std::strong_ordering::greater) return std::strong_ordering::less;
    return o;
  }

  double lg_;
  std::int8_t sign_;
};

} // namespace homtype

#endif
