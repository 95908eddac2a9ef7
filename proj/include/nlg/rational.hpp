#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "nlg/errors.hpp"

namespace nlg {

// Exact rational over int64 with __int128 intermediates. Game probabilities
// and classical values in this codebase have tiny denominators, so overflow
// means a bug; we detect it and throw rather than silently wrap.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  // Accepts "p/q" or a bare integer "p".
  static Rational parse(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(parse_int(text));
      return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad rational literal '" + text + "'");
    }
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(ErrorCode::DomainError, "rational division by zero");
    return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

 private:
  using i128 = __int128;

  static std::int64_t parse_int(const std::string& s) {
    std::size_t pos = 0;
    std::int64_t v = std::stoll(s, &pos);
    if (pos != s.size()) fail(ErrorCode::ParseError, "bad integer literal '" + s + "'");
    return v;
  }

  static Rational from128(i128 n, i128 d) {
    if (d == 0) fail(ErrorCode::DomainError, "zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    constexpr i128 lim = INT64_MAX;
    if (n > lim || n < -lim || d > lim)
      fail(ErrorCode::Overflow, "rational arithmetic overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  void normalize() { *this = from128(num_, den_); }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace nlg
