#include "drg/poly.hpp"

#include <algorithm>
#include <cstdlib>

namespace drg {
namespace poly {

IntPoly make(std::initializer_list<long long> ascending_coeffs) {
  IntPoly p;
  for (long long c : ascending_coeffs) p.emplace_back(c);
  normalize(p);
  return p;
}

void normalize(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

bool is_zero(const IntPoly& p) { return p.empty(); }

const Int& leading(const IntPoly& p) { return p.back(); }

Int eval(const IntPoly& p, const Int& x) {
  Int acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_at(const IntPoly& p, const Rational& x) {
  if (p.empty()) return 0;
  // p(a/b) * b^deg = sum c_i a^i b^(deg-i), computed in integers.
  const Int a = numerator(x), b = denominator(x);
  Int acc = 0;
  Int bpow = 1;
  // Horner in a, multiplying in b as we go down.
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * a + *it * bpow;
    bpow *= b;
  }
  // b > 0, so the homogeneous value has the sign of p(x).
  return acc == 0 ? 0 : (acc > 0 ? 1 : -1);
}

Interval eval(const IntPoly& p, const Interval& x) {
  Interval acc(Rational(0));
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * x + Interval(*it);
  }
  return acc;
}

IntPoly derivative(const IntPoly& p) {
  IntPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  normalize(d);
  return d;
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  normalize(r);
  return r;
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  normalize(r);
  return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  normalize(r);
  return r;
}

IntPoly negate(IntPoly p) {
  for (auto& c : p) c = -c;
  return p;
}

Int content(const IntPoly& p) {
  Int g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  return g;
}

IntPoly primitive_part(IntPoly p) {
  const Int g = content(p);
  if (g > 1)
    for (auto& c : p) c /= g;
  return p;
}

bool divide_monic(const IntPoly& p, const IntPoly& d, IntPoly& quotient) {
  if (d.empty() || leading(d) != 1) return false;
  IntPoly rem = p;
  const int dd = degree(d);
  quotient.assign(p.size() > d.size() ? p.size() - d.size() + 1 : 1, Int(0));
  while (degree(rem) >= dd) {
    const int shift = degree(rem) - dd;
    const Int coef = leading(rem);
    quotient[shift] += coef;
    for (size_t i = 0; i < d.size(); ++i) rem[shift + i] -= coef * d[i];
    normalize(rem);
  }
  normalize(quotient);
  return rem.empty();
}

bool deflate_root(const IntPoly& p, const Int& r, IntPoly& quotient) {
  if (p.empty()) return false;
  quotient.assign(p.size() - 1, Int(0));
  Int carry = 0;
  for (size_t i = p.size(); i-- > 1;) {
    carry = carry * r + p[i];
    quotient[i - 1] = carry;
  }
  const Int remainder = carry * r + p[0];
  normalize(quotient);
  return remainder == 0;
}

namespace {

// Pseudo-remainder of f by g scaled so it equals a *positive* multiple of
// the true remainder (keeps Sturm sign structure intact).
IntPoly signed_prem(const IntPoly& f, const IntPoly& g) {
  IntPoly rem = f;
  const int dg = degree(g);
  const Int lg = leading(g);
  int flips = 0;
  while (degree(rem) >= dg) {
    const int shift = degree(rem) - dg;
    const Int coef = leading(rem);
    // rem <- lg*rem - coef*x^shift*g
    for (auto& c : rem) c *= lg;
    for (size_t i = 0; i < g.size(); ++i) rem[shift + i] -= coef * g[i];
    normalize(rem);
    if (lg < 0) ++flips;
  }
  if (flips % 2 == 1) rem = negate(std::move(rem));
  return rem;
}

}  // namespace

IntPoly gcd(IntPoly a, IntPoly b) {
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = primitive_part(signed_prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && leading(a) < 0) a = negate(std::move(a));
  return a;
}

bool is_square_free(const IntPoly& p) {
  if (degree(p) <= 1) return true;
  return degree(gcd(p, derivative(p))) == 0;
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain;
  chain.push_back(primitive_part(p));
  chain.push_back(primitive_part(derivative(p)));
  while (!chain.back().empty() && degree(chain.back()) > 0) {
    IntPoly r = signed_prem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    chain.push_back(primitive_part(negate(std::move(r))));
  }
  return chain;
}

int sign_variations(const std::vector<IntPoly>& chain, const Rational& x) {
  int vars = 0, prev = 0;
  for (const auto& q : chain) {
    const int s = sign_at(q, x);
    if (s != 0) {
      if (prev != 0 && s != prev) ++vars;
      prev = s;
    }
  }
  return vars;
}

int count_roots(const std::vector<IntPoly>& chain, const Rational& a, const Rational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

Rational root_bound(const IntPoly& p) {
  Int m = 0;
  for (const auto& c : p) m = std::max(m, Int(boost::multiprecision::abs(c)));
  const Int lead = boost::multiprecision::abs(leading(p));
  return Rational(m, lead) + 1;
}

}  // namespace poly

RealRoot RealRoot::make_exact(Int v) {
  RealRoot r;
  r.exact_ = true;
  r.value_ = std::move(v);
  r.lo_ = r.hi_ = Rational(r.value_);
  return r;
}

RealRoot RealRoot::make_isolated(IntPoly p, Rational lo, Rational hi) {
  RealRoot r;
  r.exact_ = false;
  r.poly_ = std::move(p);
  r.lo_ = std::move(lo);
  r.hi_ = std::move(hi);
  if (poly::sign_at(r.poly_, r.lo_) == 0 || poly::sign_at(r.poly_, r.hi_) == 0 ||
      poly::sign_at(r.poly_, r.lo_) == poly::sign_at(r.poly_, r.hi_)) {
    throw std::invalid_argument("not an isolating interval with a sign change");
  }
  return r;
}

const Int& RealRoot::value() const {
  if (!exact_) throw std::logic_error("value() on a non-exact root");
  return value_;
}

Interval RealRoot::interval() const { return Interval(lo_, hi_); }

Rational RealRoot::mid() const { return (lo_ + hi_) / 2; }

Rational RealRoot::width() const { return hi_ - lo_; }

void RealRoot::bisect() {
  const Rational m = (lo_ + hi_) / 2;
  const int sm = poly::sign_at(poly_, m);
  if (sm == 0) throw std::logic_error("bisection midpoint is a rational root");
  if (sm == poly::sign_at(poly_, lo_)) {
    lo_ = m;
  } else {
    hi_ = m;
  }
}

RealRoot RealRoot::refined(const Rational& eps) const {
  if (exact_) return *this;
  RealRoot r = *this;
  while (r.hi_ - r.lo_ > eps) r.bisect();
  return r;
}

RealRoot RealRoot::separated_from(const Rational& v) const {
  if (exact_) return *this;
  RealRoot r = *this;
  while (r.lo_ < v && v < r.hi_) r.bisect();
  return r;
}

bool RealRoot::operator<(const RealRoot& o) const {
  if (exact_ && o.exact_) return value_ < o.value_;
  if (hi_ <= o.lo_) return true;
  if (o.hi_ <= lo_) return false;
  throw std::logic_error("comparing overlapping root intervals");
}

std::vector<RealRoot> real_roots(const IntPoly& monic, const Rational& eps) {
  if (poly::is_zero(monic) || poly::leading(monic) != 1)
    throw std::invalid_argument("real_roots expects a monic polynomial");

  IntPoly p = monic;
  std::vector<Int> exact_vals;

  // Zero roots first.
  if (!p.empty() && p[0] == 0) {
    size_t s = 0;
    while (s < p.size() && p[s] == 0) ++s;
    if (s > 1) throw RepeatedRootError("zero is a repeated root");
    exact_vals.emplace_back(0);
    p.erase(p.begin(), p.begin() + s);
  }

  // Integer roots: a monic integer polynomial has rational roots only at
  // integer divisors of its constant term.
  if (poly::degree(p) >= 1) {
    std::vector<Int> divisors;
    const Int c0 = boost::multiprecision::abs(p[0]);
    for (Int d = 1; d * d <= c0; ++d) {
      if (c0 % d == 0) {
        divisors.push_back(d);
        divisors.push_back(c0 / d);
      }
    }
    std::sort(divisors.begin(), divisors.end());
    divisors.erase(std::unique(divisors.begin(), divisors.end()), divisors.end());
    for (const Int& d : divisors) {
      for (const Int r : {Int(d), Int(-d)}) {
        IntPoly q;
        if (poly::deflate_root(p, r, q)) {
          if (poly::eval(q, r) == 0)
            throw RepeatedRootError("repeated integer root " + r.str());
          exact_vals.push_back(r);
          p = std::move(q);
          if (poly::degree(p) < 1) break;
        }
      }
      if (poly::degree(p) < 1) break;
    }
  }

  std::vector<RealRoot> roots;
  for (auto& v : exact_vals) roots.push_back(RealRoot::make_exact(v));

  if (poly::degree(p) >= 1) {
    if (!poly::is_square_free(p)) throw RepeatedRootError("polynomial has a repeated root");
    const auto chain = poly::sturm_chain(p);
    const Rational bound = poly::root_bound(p);
    struct Span {
      Rational a, b;
      int count;
    };
    std::vector<Span> work{{-bound, bound, poly::count_roots(chain, -bound, bound)}};
    std::vector<std::pair<Rational, Rational>> isolated;
    while (!work.empty()) {
      Span s = work.back();
      work.pop_back();
      if (s.count == 0) continue;
      if (s.count == 1) {
        isolated.emplace_back(s.a, s.b);
        continue;
      }
      const Rational m = (s.a + s.b) / 2;
      // No rational roots remain in p, so m is never a root.
      const int left = poly::count_roots(chain, s.a, m);
      work.push_back({s.a, m, left});
      work.push_back({m, s.b, s.count - left});
    }
    for (auto& [a, b] : isolated) {
      RealRoot r = RealRoot::make_isolated(p, a, b).refined(eps);
      for (const auto& v : exact_vals) r = r.separated_from(Rational(v));
      roots.push_back(std::move(r));
    }
  }

  // Separate any overlapping isolating intervals, then order decreasing.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < roots.size(); ++i) {
      for (size_t j = i + 1; j < roots.size(); ++j) {
        if (roots[i].exact() && roots[j].exact()) continue;
        const Interval a = roots[i].interval(), b = roots[j].interval();
        if (std::max(a.lo(), b.lo()) < std::min(a.hi(), b.hi())) {
          roots[i] = roots[i].refined(a.width() / 4);
          roots[j] = roots[j].refined(b.width() / 4);
          changed = true;
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const RealRoot& a, const RealRoot& b) { return b < a; });
  return roots;
}

}  // namespace drg
