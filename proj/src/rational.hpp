#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cgcore {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator.  Backed by GMP's mpq; the wrapper pins down construction,
// parsing and the "p/q" / "p" wire format.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                       // NOLINT(runtime/explicit)
  Rational(long n) : v_(static_cast<long>(n)) {}   // NOLINT(runtime/explicit)
  Rational(long long n);                           // NOLINT(runtime/explicit)
  Rational(long long num, long long den);          // throws on den == 0
  explicit Rational(mpq_class v);

  // Accepts "p", "-p", "p/q" with optional sign on p; q must be positive
  // digits.  Throws MalformedInputError otherwise (including "1/0").
  static Rational parse(std::string_view text);

  // Lowest-terms serialization: "p" when the denominator is 1, else "p/q".
  std::string str() const;

  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational floor() const;
  Rational ceil() const;
  // Requires is_integer() and a value that fits in long long.
  long long to_integer() const;

  const mpq_class& raw() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);  // throws on division by zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.v_ >= b.v_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

bool all_integral(const std::vector<Rational>& values);

}  // namespace cgcore
