#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace drg {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 10^e as an exact rational (e may be negative).
Rational pow10(int e);

// Parses decimal or scientific literals ("0.5", "1e-12", "-3.25e+4") exactly.
// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

// Deterministic decimal rendering with `sig` significant digits, round half
// away from zero, trailing zeros trimmed. Values outside [1e-5, 1e15) are
// rendered in scientific notation. Never goes through floating point.
std::string decimal_string(const Rational& x, int sig);

// Closed interval with exact rational endpoints. A point interval (lo == hi)
// represents an exactly known value; all operations are outward-exact, so a
// result interval always contains the true value of the expression.
class Interval {
 public:
  Interval() : lo_(0), hi_(0) {}
  Interval(const Rational& v) : lo_(v), hi_(v) {}   // NOLINT: implicit by design
  Interval(long long v) : lo_(v), hi_(v) {}         // NOLINT
  Interval(const Int& v) : lo_(Rational(v)), hi_(Rational(v)) {}  // NOLINT
  Interval(const Rational& lo, const Rational& hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / 2; }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool contains_zero() const { return contains(0); }

  Interval operator-() const { return Interval(-hi_, -lo_); }
  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  // Requires an interval that excludes zero.
  Interval operator/(const Interval& o) const;
  Interval square() const;
  Interval abs() const;

 private:
  Rational lo_, hi_;
};

enum class Verdict { yes, no, undecided };

const char* to_string(Verdict v);

// Three-valued logic.
Verdict conj(Verdict a, Verdict b);
Verdict disj(Verdict a, Verdict b);

// Equality of an interval-valued quantity against an exact target:
// `no` when the interval excludes the target, `yes` when the target lies
// inside and the width is below `width_tol`, `undecided` otherwise.
Verdict eq_target(const Interval& v, const Rational& target, const Rational& width_tol);

// Equality of two interval-valued quantities, tested as (a - b) vs 0.
Verdict eq_intervals(const Interval& a, const Interval& b, const Rational& width_tol);

// Global numeric policy. `eps` is the root isolation width, `eq_width` the
// interval width below which a contained target counts as equal, and
// `refine_width` the width used by the single retry when a test comes back
// undecided. `mult_tol` is the integrality tolerance for multiplicities.
struct Config {
  Rational eps = pow10(-12);
  Rational eq_width = pow10(-9);
  Rational refine_width = pow10(-50);
  Rational mult_tol = pow10(-6);
};

const Config& default_config();

}  // namespace drg
