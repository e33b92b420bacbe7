#ifndef PFUNC_RATIONAL_HPP
#define PFUNC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace pfunc {

using Integer = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational. Always held in lowest terms with a
/// positive denominator; every operation is exact, there is no rounding
/// anywhere. Decimal output exists for display only and never feeds back
/// into a comparison.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : value_(n) {}
  Rational(long long n) : value_(n) {}
  Rational(unsigned long long n) : value_(n) {}
  Rational(const Integer& n) : value_(n) {}
  Rational(const Integer& num, const Integer& den);

  /// Accepts "n" or "p/q" (q > 0), optionally with a leading '-' on p.
  static Rational parse(std::string_view text);

  Integer numerator() const {
    return boost::multiprecision::numerator(value_);
  }
  Integer denominator() const {
    return boost::multiprecision::denominator(value_);
  }
  bool is_integer() const {
    return boost::multiprecision::denominator(value_) == 1;
  }
  bool is_zero() const { return value_.is_zero(); }
  int sign() const { return value_.sign(); }

  /// "p/q" in lowest terms, or "n" when the denominator is 1.
  std::string str() const;

  /// Display-only decimal approximation, 12 significant digits.
  std::string decimal(int significant_digits = 12) const;

  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Rational operator-(Rational lhs, const Rational& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend Rational operator*(Rational lhs, const Rational& rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend Rational operator/(Rational lhs, const Rational& rhs) {
    lhs /= rhs;
    return lhs;
  }
  friend Rational operator-(const Rational& x) {
    Rational r;
    r.value_ = -x.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    // Cross-multiplication, valid because denominators are always kept
    // positive. The backend's own comparison walks a continued fraction
    // with an integer division per step and is far slower.
    int c = Integer(a.numerator() * b.denominator())
                .compare(b.numerator() * a.denominator());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  boost::multiprecision::cpp_rational value_;
};

/// 2^exponent as an Integer (exponent >= 0).
Integer pow2(unsigned exponent);

}  // namespace pfunc

#endif  // PFUNC_RATIONAL_HPP
