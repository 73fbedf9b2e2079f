#include "drg/exact.hpp"

#include <algorithm>
#include <cctype>

namespace drg {

Rational pow10(int e) {
  Int p = 1;
  for (int i = 0; i < (e >= 0 ? e : -e); ++i) p *= 10;
  return e >= 0 ? Rational(p) : Rational(1, p);
}

Rational parse_rational(const std::string& s) {
  size_t i = 0;
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed number: '" + s + "'");
  };
  if (s.empty()) fail();
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
  Int mantissa = 0;
  int frac_digits = 0;
  bool any_digit = false;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
    mantissa = mantissa * 10 + (s[i] - '0');
    any_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      mantissa = mantissa * 10 + (s[i] - '0');
      ++frac_digits;
      any_digit = true;
    }
  }
  if (!any_digit) fail();
  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
    if (i >= s.size()) fail();
    long e = 0;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      e = e * 10 + (s[i] - '0');
      if (e > 100000) fail();
    }
    exp10 = eneg ? -e : e;
  }
  if (i != s.size()) fail();
  Rational r(mantissa);
  r *= pow10(static_cast<int>(exp10 - frac_digits));
  return neg ? -r : r;
}

namespace {

Int ipow10(int e) {
  Int p = 1;
  for (int i = 0; i < e; ++i) p *= 10;
  return p;
}

}  // namespace

std::string decimal_string(const Rational& x, int sig) {
  if (x == 0) return "0";
  const bool neg = x < 0;
  const Rational a = neg ? Rational(-x) : x;
  // e such that 10^e <= a < 10^(e+1)
  int e = static_cast<int>(numerator(a).str().size()) -
          static_cast<int>(denominator(a).str().size());
  while (pow10(e) > a) --e;
  while (pow10(e + 1) <= a) ++e;
  // sig-digit mantissa, rounded half away from zero
  Rational scaled = a / pow10(e - sig + 1);
  Int m = static_cast<Int>(numerator(scaled) * 2 + denominator(scaled)) /
          static_cast<Int>(denominator(scaled) * 2);
  if (m == ipow10(sig)) {
    m /= 10;
    ++e;
  }
  std::string digits = m.str();
  std::string out;
  if (e >= -5 && e < 15) {
    if (e >= sig - 1) {
      out = digits + std::string(e - sig + 1, '0');
    } else if (e >= 0) {
      out = digits.substr(0, e + 1) + "." + digits.substr(e + 1);
    } else {
      out = "0." + std::string(-e - 1, '0') + digits;
    }
  } else {
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(e);
  }
  if (out.find('.') != std::string::npos) {
    size_t epos = out.find('e');
    std::string head = epos == std::string::npos ? out : out.substr(0, epos);
    std::string tail = epos == std::string::npos ? "" : out.substr(epos);
    while (head.back() == '0') head.pop_back();
    if (head.back() == '.') head.pop_back();
    out = head + tail;
  }
  return neg ? "-" + out : out;
}

Interval::Interval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
  if (lo_ > hi_) throw std::invalid_argument("interval endpoints out of order");
}

Interval Interval::operator+(const Interval& o) const {
  return Interval(lo_ + o.lo_, hi_ + o.hi_);
}

Interval Interval::operator-(const Interval& o) const {
  return Interval(lo_ - o.hi_, hi_ - o.lo_);
}

Interval Interval::operator*(const Interval& o) const {
  const Rational p1 = lo_ * o.lo_, p2 = lo_ * o.hi_, p3 = hi_ * o.lo_, p4 = hi_ * o.hi_;
  return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                  std::max(std::max(p1, p2), std::max(p3, p4)));
}

Interval Interval::operator/(const Interval& o) const {
  if (o.contains_zero()) throw std::domain_error("interval division by zero-straddling interval");
  const Rational r1 = Rational(1) / o.hi_, r2 = Rational(1) / o.lo_;
  return *this * Interval(std::min(r1, r2), std::max(r1, r2));
}

Interval Interval::square() const {
  const Rational p1 = lo_ * lo_, p2 = hi_ * hi_;
  if (contains_zero()) return Interval(0, std::max(p1, p2));
  return Interval(std::min(p1, p2), std::max(p1, p2));
}

Interval Interval::abs() const {
  if (lo_ >= 0) return *this;
  if (hi_ <= 0) return -*this;
  const Rational neg_lo = -lo_;
  return Interval(0, std::max(neg_lo, hi_));
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "undecided";
  }
}

Verdict conj(Verdict a, Verdict b) {
  if (a == Verdict::no || b == Verdict::no) return Verdict::no;
  if (a == Verdict::yes && b == Verdict::yes) return Verdict::yes;
  return Verdict::undecided;
}

Verdict disj(Verdict a, Verdict b) {
  if (a == Verdict::yes || b == Verdict::yes) return Verdict::yes;
  if (a == Verdict::no && b == Verdict::no) return Verdict::no;
  return Verdict::undecided;
}

Verdict eq_target(const Interval& v, const Rational& target, const Rational& width_tol) {
  if (!v.contains(target)) return Verdict::no;
  if (v.width() < width_tol) return Verdict::yes;
  return Verdict::undecided;
}

Verdict eq_intervals(const Interval& a, const Interval& b, const Rational& width_tol) {
  return eq_target(a - b, Rational(0), width_tol);
}

const Config& default_config() {
  static const Config cfg;
  return cfg;
}

}  // namespace drg
