#include "projlab/poly.hpp"

#include <algorithm>
#include <sstream>

#include "projlab/errors.hpp"

namespace projlab {

Poly Poly::constant(const Rational& r) {
  if (r.is_zero()) return Poly();
  return Poly(std::vector<Rational>{r});
}

Poly Poly::t() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

Poly Poly::monomial(const Rational& c, int degree) {
  if (c.is_zero()) return Poly();
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& x : c_) v.push_back(-x);
  return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly Poly::scaled(const Rational& s) const {
  if (s.is_zero()) return Poly();
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& x : c_) v.push_back(x * s);
  return Poly(std::move(v));
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(Rational(1));
  Poly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> v;
  v.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * Rational(static_cast<long>(i)));
  return Poly(std::move(v));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

double Poly::eval_double(double x) const {
  double acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].to_double();
  return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  Poly r = *this;
  if (r.degree() < d.degree()) return {Poly(), r};
  std::vector<Rational> q(static_cast<std::size_t>(r.degree() - d.degree()) + 1, Rational(0));
  const Rational lead = d.leading();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int k = r.degree() - d.degree();
    Rational f = r.leading() / lead;
    q[static_cast<std::size_t>(k)] = f;
    r = r - (d * Poly::monomial(f, k));
  }
  return {Poly(std::move(q)), r};
}

Poly Poly::exact_div(const Poly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero())
    throw Error(ErrorCode::InvariantViolation, "exact_div with nonzero remainder");
  return q;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading());
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly Poly::squarefree_part() const {
  if (is_zero()) return *this;
  if (degree() == 0) return Poly::constant(Rational(1));
  Poly g = gcd(*this, derivative());
  return exact_div(g).monic();
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    first = false;
    Rational a = c.abs();
    if (i == 0 || a != Rational(1)) os << a.str();
    if (i > 0) {
      if (a != Rational(1)) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

SturmChain::SturmChain(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm chain of the zero polynomial");
  chain_.push_back(p);
  if (p.degree() == 0) return;
  chain_.push_back(p.derivative());
  while (chain_.back().degree() > 0) {
    Poly r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back(-r);
  }
}

int SturmChain::sign_changes(const Rational& x) const {
  int changes = 0, prev = 0;
  for (const auto& q : chain_) {
    int s = q.eval(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int SturmChain::count(const Rational& a, const Rational& b) const {
  if (!(a < b)) return 0;
  const Poly& p = chain_.front();
  // Strip endpoint roots so that the plain Sturm count applies; the interval
  // is half-open (a, b], so a root at b is added back and a root at a is not.
  Poly ps = p.squarefree_part();
  int extra = 0;
  if (ps.degree() <= 0) return 0;
  if (ps.eval(a).is_zero()) {
    ps = ps.exact_div(Poly(std::vector<Rational>{-a, Rational(1)}));
  }
  if (!(ps.degree() > 0)) return extra;
  if (ps.eval(b).is_zero()) {
    extra = 1;
    ps = ps.exact_div(Poly(std::vector<Rational>{-b, Rational(1)}));
  }
  if (ps.degree() <= 0) return extra;
  SturmChain sq(ps);
  return sq.sign_changes(a) - sq.sign_changes(b) + extra;
}

int count_real_roots(const Poly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root count of the zero polynomial");
  if (!(lo < hi)) throw Error(ErrorCode::InvariantViolation, "count_real_roots needs lo < hi");
  return SturmChain(p).count(lo, hi);
}

std::vector<IsolatingInterval> isolate_roots(const Poly& p, const Rational& lo,
                                             const Rational& hi, const Rational& width) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "isolate_roots of the zero polynomial");
  std::vector<IsolatingInterval> out;
  if (!(lo < hi)) return out;
  Poly ps = p.squarefree_part();
  if (ps.degree() <= 0) return out;
  SturmChain chain(ps);
  auto is_root = [&](const Rational& x) { return ps.eval(x).is_zero(); };
  auto vc = [&](const Rational& x) { return chain.sign_changes(x); };

  // Move a root endpoint inward onto a non-root without skipping interior roots.
  auto shrink_right = [&](const Rational& from, const Rational& toward) {
    Rational step = (toward - from) / Rational(4);
    while (true) {
      Rational cand = from + step;
      if (!is_root(cand) && chain.count(from, cand) == 0) return cand;
      step /= Rational(2);
    }
  };
  auto shrink_left = [&](const Rational& from, const Rational& toward) {
    Rational step = (from - toward) / Rational(4);
    while (true) {
      Rational cand = from - step;
      // (cand, from] holds exactly the root at `from` itself.
      if (!is_root(cand) && chain.count(cand, from) == 1) return cand;
      step /= Rational(2);
    }
  };

  Rational a = lo, b = hi;
  if (is_root(a)) a = shrink_right(a, b);
  if (is_root(b)) b = shrink_left(b, a);
  if (!(a < b)) return out;

  struct Seg { Rational a, b; int n; };  // open interval (a,b), non-root endpoints
  std::vector<Seg> stack;
  stack.push_back({a, b, vc(a) - vc(b)});
  const Rational half(1, 2);
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.n <= 0) continue;
    if (s.n == 1 && (s.b - s.a) < width) {
      out.push_back({s.a, s.b});
      continue;
    }
    Rational mid = (s.a + s.b) * half;
    if (is_root(mid)) {
      out.push_back({mid, mid});
      // Carve a root-free collar around the exact root before recursing.
      Rational sigma = (s.b - s.a) / Rational(8);
      while (is_root(mid - sigma) || is_root(mid + sigma) ||
             chain.count(mid - sigma, mid) != 1 || chain.count(mid, mid + sigma) != 0)
        sigma /= Rational(2);
      stack.push_back({s.a, mid - sigma, vc(s.a) - vc(mid - sigma)});
      stack.push_back({mid + sigma, s.b, vc(mid + sigma) - vc(s.b)});
    } else {
      int left = vc(s.a) - vc(mid);
      stack.push_back({s.a, mid, left});
      stack.push_back({mid, s.b, s.n - left});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatingInterval& x, const IsolatingInterval& y) { return x.a < y.a; });
  return out;
}

}  // namespace projlab
