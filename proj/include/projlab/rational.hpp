#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "projlab/errors.hpp"

namespace projlab {

/// Exact rational number, always in lowest terms with positive denominator.
/// Thin value wrapper over GMP's mpq_class; no floating point ever enters
/// the arithmetic.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
  Rational(long n, long d);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}

  // Parses "num" or "num/den"; rejects anything else (notably floats).
  static Rational parse(const std::string& s);

  // Exact binary expansion of a finite double.
  static Rational from_double(double d) { return Rational(mpq_class(d)); }

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  double to_double() const { return v_.get_d(); }
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  // Exact square root if *this is a perfect square of a rational, else nullopt-like
  // flag via the bool; *this must be >= 0.
  bool exact_sqrt(Rational* out) const;

 private:
  mpq_class v_;
};

inline Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) throw Error(ErrorCode::ParseError, "rational with zero denominator");
  v_.canonicalize();
}

inline Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvariantViolation, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

inline std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

inline Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
  auto valid_int = [](const std::string& x) {
    if (x.empty()) return false;
    std::size_t i = (x[0] == '-' || x[0] == '+') ? 1 : 0;
    if (i == x.size()) return false;
    for (; i < x.size(); ++i)
      if (x[i] < '0' || x[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw Error(ErrorCode::ParseError, "malformed rational literal: '" + s + "'");
  mpz_class dz(den);
  if (dz == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  mpq_class v{mpz_class(num), dz};
  v.canonicalize();
  return Rational(v);
}

inline bool Rational::exact_sqrt(Rational* out) const {
  if (sign() < 0) return false;
  mpz_class n = numerator(), d = denominator();
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  if (rn * rn != n || rd * rd != d) return false;
  *out = Rational(mpq_class(rn, rd));
  return true;
}

}  // namespace projlab
