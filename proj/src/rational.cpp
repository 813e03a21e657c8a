#include "rational.hpp"

#include <cctype>
#include <ostream>

#include "errors.hpp"

namespace cgcore {

namespace {

bool digits_only(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long long n) : v_(std::to_string(n)) {}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw MalformedInputError("rational with zero denominator");
  v_ = mpq_class(std::to_string(num)) / mpq_class(std::to_string(den));
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view mag = num;
  bool negative = false;
  if (!mag.empty() && (mag.front() == '-' || mag.front() == '+')) {
    negative = mag.front() == '-';
    mag.remove_prefix(1);
  }
  if (!digits_only(mag)) {
    throw MalformedInputError("malformed rational \"" + std::string(text) +
                              "\"", "malformed-rational");
  }
  mpq_class value((negative ? "-" : "") + std::string(mag), 10);
  if (!den.empty() || num.size() != text.size()) {
    if (!digits_only(den)) {
      throw MalformedInputError("malformed rational \"" + std::string(text) +
                                "\"", "malformed-rational");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) {
      throw MalformedInputError("rational \"" + std::string(text) +
                                "\" has zero denominator",
                                "malformed-rational");
    }
    value /= mpq_class(d);
  }
  value.canonicalize();
  return Rational(std::move(value));
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

long long Rational::to_integer() const {
  if (!is_integer()) {
    throw ContractError("to_integer on non-integer rational " + str());
  }
  if (!v_.get_num().fits_slong_p()) {
    throw ContractError("integer rational out of machine range: " + str());
  }
  return v_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MalformedInputError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

bool all_integral(const std::vector<Rational>& values) {
  for (const auto& v : values) {
    if (!v.is_integer()) return false;
  }
  return true;
}

}  // namespace cgcore
