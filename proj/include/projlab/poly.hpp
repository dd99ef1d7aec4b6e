#pragma once

#include <string>
#include <utility>
#include <vector>

#include "projlab/rational.hpp"

namespace projlab {

/// Univariate polynomial over Rational, coefficients ascending by degree.
/// The zero polynomial has an empty coefficient vector; otherwise the leading
/// coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Poly zero() { return Poly(); }
  static Poly constant(const Rational& r);
  static Poly t();  // the monomial t
  static Poly monomial(const Rational& c, int degree);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is reported as -1 (stand-in for -inf).
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
  }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& s) const;
  Poly pow(unsigned e) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const;
  Rational eval(const Rational& x) const;
  double eval_double(double x) const;

  // Euclidean division: *this = q*d + r with deg r < deg d. d must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  // Exact division; throws InvariantViolation if the remainder is nonzero.
  Poly exact_div(const Poly& d) const;

  // Monic gcd (gcd of zero polynomials is zero).
  static Poly gcd(Poly a, Poly b);
  Poly squarefree_part() const;
  Poly monic() const;

  std::string str(const std::string& var = "t") const;

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Number of distinct real roots of p in the half-open interval (lo, hi],
/// by Sturm's theorem over exact rationals.
int count_real_roots(const Poly& p, const Rational& lo, const Rational& hi);

/// Distinct real roots of p in the open interval (lo, hi), pairwise disjoint
/// and sorted. A root is reported either exactly (a == b, rational root) or by
/// an open interval (a, b) of width < `width` whose endpoints are not roots of
/// the squarefree part of p and which contains exactly one root.
struct IsolatingInterval {
  Rational a, b;
  bool exact() const { return a == b; }
};
std::vector<IsolatingInterval> isolate_roots(const Poly& p, const Rational& lo,
                                             const Rational& hi, const Rational& width);

/// Sturm chain of p; reusable for repeated interval queries on the same p.
class SturmChain {
 public:
  explicit SturmChain(const Poly& p);
  // Sign changes of the chain evaluated at x.
  int sign_changes(const Rational& x) const;
  // Distinct roots in (a, b], assuming nothing about p(a), p(b).
  int count(const Rational& a, const Rational& b) const;
  const Poly& polynomial() const { return chain_.front(); }

 private:
  std::vector<Poly> chain_;
};

}  // namespace projlab
