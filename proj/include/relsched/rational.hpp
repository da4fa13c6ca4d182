#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace relsched {

/// Exact rational number used for edge weights and tentative distances.
///
/// All correctness arguments in this library are exact-comparison
/// arguments, so weights are never floating point. Values stay normalized
/// (reduced fraction, positive denominator). Intermediate products run
/// through 128-bit integers; narrowing back to 64 bits throws on overflow,
/// which cannot happen at the desk-scale instances this library targets.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(long long value) : num_(value) {}
  Rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    norm_assign(static_cast<__int128>(num), static_cast<__int128>(den));
  }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Parses an integer ("-3") or a decimal ("1.25", ".5") exactly.
  static Rational parse(std::string_view text) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      neg = text[i] == '-';
      ++i;
    }
    __int128 num = 0;
    __int128 den = 1;
    bool any_digit = false;
    for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
      num = num * 10 + (text[i] - '0');
      any_digit = true;
    }
    if (i < text.size() && text[i] == '.') {
      ++i;
      for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
        num = num * 10 + (text[i] - '0');
        den *= 10;
        any_digit = true;
      }
    }
    if (!any_digit || i != text.size())
      throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    return make(neg ? -num : num, den);
  }

  /// "3" for integers, "p/q" otherwise. Exact, unambiguous.
  std::string to_string() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

private:
  using i128 = __int128;

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational make(i128 num, i128 den) {
    Rational r;
    r.norm_assign(num, den);
    return r;
  }

  void norm_assign(i128 num, i128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) {
      num_ = 0;
      den_ = 1;
      return;
    }
    const i128 g = gcd128(num, den);
    num /= g;
    den /= g;
    constexpr i128 lo = static_cast<i128>(INT64_MIN);
    constexpr i128 hi = static_cast<i128>(INT64_MAX);
    if (num < lo || num > hi || den > hi)
      throw std::overflow_error("Rational: value exceeds 64-bit range");
    num_ = static_cast<long long>(num);
    den_ = static_cast<long long>(den);
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace relsched
