#pragma once

#include "drg/exact.hpp"

#include <vector>

namespace drg {

// Integer polynomial, coefficients in ascending degree order, no trailing
// zero coefficients (the zero polynomial is the empty vector).
using IntPoly = std::vector<Int>;

namespace poly {

IntPoly make(std::initializer_list<long long> ascending_coeffs);
void normalize(IntPoly& p);
int degree(const IntPoly& p);  // -1 for the zero polynomial
bool is_zero(const IntPoly& p);
const Int& leading(const IntPoly& p);

Int eval(const IntPoly& p, const Int& x);
// Sign of p at a rational point, via homogeneous integer evaluation.
int sign_at(const IntPoly& p, const Rational& x);
Interval eval(const IntPoly& p, const Interval& x);

IntPoly derivative(const IntPoly& p);
IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly negate(IntPoly p);

Int content(const IntPoly& p);
IntPoly primitive_part(IntPoly p);

// Exact division by a monic divisor; returns false if the remainder is
// nonzero or the divisor is not monic.
bool divide_monic(const IntPoly& p, const IntPoly& monic_divisor, IntPoly& quotient);

// Synthetic division by (x - r); returns false if r is not a root.
bool deflate_root(const IntPoly& p, const Int& r, IntPoly& quotient);

// gcd up to sign, primitive, via a primitive polynomial remainder sequence.
IntPoly gcd(IntPoly a, IntPoly b);
bool is_square_free(const IntPoly& p);

// Sturm chain of a square-free polynomial.
std::vector<IntPoly> sturm_chain(const IntPoly& p);
int sign_variations(const std::vector<IntPoly>& chain, const Rational& x);
// Number of real roots in (a, b].
int count_roots(const std::vector<IntPoly>& chain, const Rational& a, const Rational& b);

// Cauchy bound: all real roots lie in (-B, B).
Rational root_bound(const IntPoly& p);

}  // namespace poly

// One real algebraic number: either an exact integer, or the unique root of
// an integer polynomial inside an isolating rational interval. Polynomials
// attached to isolated roots have no rational roots, so bisection midpoints
// are never roots and sign-based refinement always makes progress.
class RealRoot {
 public:
  RealRoot() = default;  // exact zero
  static RealRoot make_exact(Int v);
  static RealRoot make_isolated(IntPoly p, Rational lo, Rational hi);

  bool exact() const { return exact_; }
  const Int& value() const;          // exact roots only
  const IntPoly& defining_poly() const { return poly_; }
  Interval interval() const;
  Rational mid() const;
  Rational width() const;

  RealRoot refined(const Rational& eps) const;
  // Shrinks the isolating interval until it excludes v (v must not be the root).
  RealRoot separated_from(const Rational& v) const;

  bool operator<(const RealRoot& o) const;   // requires disjoint intervals
  bool operator>(const RealRoot& o) const { return o < *this; }

 private:
  void bisect();

  bool exact_ = true;
  Int value_;
  IntPoly poly_;
  Rational lo_, hi_;
};

struct RepeatedRootError : std::runtime_error {
  explicit RepeatedRootError(const std::string& what) : std::runtime_error(what) {}
};

// All real roots of a monic integer polynomial, strictly decreasing, each
// refined to width <= eps and pairwise separated. Throws RepeatedRootError
// if the polynomial is not square-free.
std::vector<RealRoot> real_roots(const IntPoly& monic, const Rational& eps);

}  // namespace drg
