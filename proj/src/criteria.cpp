#include "drg/criteria.hpp"

#include <stdexcept>

namespace drg {

namespace {

SdrgCondition eval_sdrg_condition(const Spectrum& s, long long b1, const Config& cfg) {
  SdrgCondition r;
  const Interval one(1LL);
  r.prod13 = (one + s.eig(1)) * (one + s.eig(3));
  r.prod24 = (one + s.eig(2)) * (one + s.eig(4));
  r.target = -b1;
  const Rational target(r.target);
  r.verdict = conj(eq_target(r.prod13, target, cfg.eq_width),
                   eq_target(r.prod24, target, cfg.eq_width));
  return r;
}

}  // namespace

SdrgCondition sdrg_eigenvalue_condition(const Spectrum& s, long long b1, const Config& cfg) {
  SdrgCondition r = eval_sdrg_condition(s, b1, cfg);
  if (r.verdict == Verdict::undecided)
    r = eval_sdrg_condition(s.refined(cfg.refine_width), b1, cfg);
  return r;
}

const char* to_string(AntipodalCondition::Which w) {
  switch (w) {
    case AntipodalCondition::Which::product: return "product";
    case AntipodalCondition::Which::sum: return "sum";
    case AntipodalCondition::Which::both: return "both";
    default: return "none";
  }
}

namespace {

AntipodalCondition eval_antipodal_condition(const Spectrum& s, long long k, long long a1,
                                            const Config& cfg) {
  AntipodalCondition r;
  r.product = s.eig(1) * s.eig(3);
  r.sum = s.eig(1) + s.eig(3);
  const Verdict vp = eq_target(r.product, Rational(-k), cfg.eq_width);
  const Verdict vs = eq_target(r.sum, Rational(a1), cfg.eq_width);
  r.verdict = disj(vp, vs);
  if (vp == Verdict::yes && vs == Verdict::yes) {
    r.which = AntipodalCondition::Which::both;
  } else if (vp == Verdict::yes) {
    r.which = AntipodalCondition::Which::product;
  } else if (vs == Verdict::yes) {
    r.which = AntipodalCondition::Which::sum;
  }
  return r;
}

}  // namespace

AntipodalCondition antipodal_eigenvalue_condition(const Spectrum& s, long long k, long long a1,
                                                  const Config& cfg) {
  AntipodalCondition r = eval_antipodal_condition(s, k, a1, cfg);
  if (r.verdict == Verdict::undecided || (r.verdict == Verdict::yes &&
                                          r.which != AntipodalCondition::Which::both)) {
    // Refine either to decide, or to settle which disjunct actually holds.
    AntipodalCondition fine =
        eval_antipodal_condition(s.refined(cfg.refine_width), k, a1, cfg);
    if (fine.verdict != Verdict::undecided) r = fine;
  }
  return r;
}

namespace {

// Integer r with |value - r| < tol, requiring the interval to be narrow
// enough for the test to be meaningful.
struct RoundResult {
  Verdict ok = Verdict::undecided;
  long long value = 0;
};

RoundResult round_interval(const Interval& v, const Config& cfg) {
  RoundResult r;
  if (v.width() >= cfg.eq_width) return r;  // undecided
  const Rational mid = v.mid();
  const Int num = numerator(mid), den = denominator(mid);
  const Int rounded2 = (2 * num + den) / (2 * den);
  const Rational diff = boost::multiprecision::abs(Rational(mid - Rational(rounded2)));
  if (diff < cfg.mult_tol) {
    r.ok = Verdict::yes;
    r.value = rounded2.convert_to<long long>();
  } else {
    r.ok = Verdict::no;
  }
  return r;
}

MultiplicityPattern eval_multiplicity_pattern(const Spectrum& s, const Config& cfg) {
  MultiplicityPattern res;
  // i = 1 pins r: m1 pi1 = (r-1) pi0.
  const RoundResult r1 = round_interval(Interval(s.mult[1]) * s.pi[1] / s.pi[0], cfg);
  if (r1.ok != Verdict::yes || r1.value < 1) {
    res.verdict = r1.ok == Verdict::undecided ? Verdict::undecided : Verdict::no;
    res.fail_index = 1;
    return res;
  }
  const long long r = r1.value + 1;
  if (r < 2) {
    res.verdict = Verdict::no;
    res.fail_index = 1;
    return res;
  }
  const auto check = [&](int i, long long factor) {
    return eq_intervals(Interval(s.mult[i]) * s.pi[i], Interval(factor) * s.pi[0], cfg.eq_width);
  };
  for (const auto& [i, factor] :
       std::initializer_list<std::pair<int, long long>>{{2, 1}, {3, r - 1}, {4, 1}}) {
    const Verdict v = check(i, factor);
    if (v != Verdict::yes) {
      res.verdict = v;
      res.fail_index = i;
      return res;
    }
  }
  res.verdict = Verdict::yes;
  res.r = r;
  return res;
}

}  // namespace

MultiplicityPattern antipodal_multiplicity_pattern(const Spectrum& s, const Config& cfg) {
  MultiplicityPattern r = eval_multiplicity_pattern(s, cfg);
  if (r.verdict == Verdict::undecided)
    r = eval_multiplicity_pattern(s.refined(cfg.refine_width), cfg);
  return r;
}

namespace {

ProductBalance eval_product_balance(const Spectrum& s, const Config& cfg) {
  ProductBalance r;
  r.alpha = Interval(s.mult[1]) * s.pi[1];
  r.beta = Interval(s.mult[2]) * s.pi[2];
  r.odd_pair = eq_intervals(r.alpha, Interval(s.mult[3]) * s.pi[3], cfg.eq_width);
  r.even_pair = eq_intervals(r.beta, Interval(s.mult[4]) * s.pi[4], cfg.eq_width);
  r.holds = conj(r.odd_pair, r.even_pair);
  return r;
}

}  // namespace

ProductBalance sdrg_product_balance(const Spectrum& s, const Config& cfg) {
  ProductBalance r = eval_product_balance(s, cfg);
  if (r.holds == Verdict::undecided) r = eval_product_balance(s.refined(cfg.refine_width), cfg);
  return r;
}

namespace {

bool is_perfect_square(long long k, long long& root) {
  long long r = 0;
  while ((r + 1) * (r + 1) <= k) ++r;
  root = r;
  return r * r == k;
}

// Does the isolating interval of an irrational root contain sqrt(k)?
bool interval_contains_sqrt(const Interval& v, long long k) {
  if (v.hi() <= 0) return false;
  if (v.hi() * v.hi() <= k) return false;
  if (v.lo() > 0 && v.lo() * v.lo() >= k) return false;
  return true;
}

}  // namespace

BipartiteSdrgCheck bipartite_sdrg_check(const IntersectionArray& ia, const Spectrum& s,
                                        const Config& cfg) {
  BipartiteSdrgCheck res;
  for (int i = 1; i <= 4; ++i)
    if (ia.a(i) != 0) return res;
  res.applicable = true;

  const long long k = ia.k();
  long long sq = 0;
  const bool square = is_perfect_square(k, sq);
  const RealRoot& l1 = s.eigs[1];
  if (l1.exact()) {
    res.verdict = (square && l1.value() == sq) ? Verdict::yes : Verdict::no;
  } else if (square) {
    res.verdict = Verdict::no;  // an irrational eigenvalue cannot equal an integer
  } else {
    // Exact algebraic test: lambda1 = sqrt(k) iff (x^2 - k) divides its
    // defining polynomial and the isolating interval contains sqrt(k).
    IntPoly quotient;
    const IntPoly x2k = poly::make({-k, 0, 1});
    const bool divides = poly::divide_monic(l1.defining_poly(), x2k, quotient);
    res.verdict = (divides && interval_contains_sqrt(l1.interval(), k)) ? Verdict::yes
                                                                        : Verdict::no;
  }

  if (res.verdict == Verdict::yes) {
    const long long n = s.n;
    res.predicted_mult = {1, n / 2 - k, 2 * k - 2, n / 2 - k, 1};
    bool ok = n % 2 == 0 && s.mult == res.predicted_mult;
    // Predicted eigenvalues: k, sqrt(k), 0, -sqrt(k), -k.
    ok = ok && s.eigs[0].exact() && s.eigs[0].value() == k;
    ok = ok && s.eigs[2].exact() && s.eigs[2].value() == 0;
    ok = ok && s.eigs[4].exact() && s.eigs[4].value() == -k;
    ok = ok && eq_target(s.eig(1) + s.eig(3), Rational(0), cfg.eq_width) == Verdict::yes;
    res.spectrum_matches = ok;
  }
  return res;
}

IntersectionArray net_array(long long m, long long mu) {
  if (m < 2 || mu < 1) throw std::invalid_argument("net_array needs m >= 2, mu >= 1");
  const long long k = m * mu;
  if (mu > k - 1) throw std::invalid_argument("net_array needs mu <= k-1");
  IntersectionArray ia;
  ia.b = {k, k - 1, k - mu, 1};
  ia.c = {1, mu, k - 1, k};
  const auto n = ia.n();
  if (!n || *n != 2 * m * m * mu) throw std::logic_error("net array vertex count mismatch");
  return ia;
}

}  // namespace drg
