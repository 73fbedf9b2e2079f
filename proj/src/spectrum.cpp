#include "drg/spectrum.hpp"

#include <algorithm>

namespace drg {

QuotientMatrix quotient_matrix(const IntersectionArray& ia) {
  QuotientMatrix m{};
  for (int i = 0; i < 5; ++i) m[i][i] = ia.a(i);
  for (int i = 0; i < 4; ++i) {
    m[i][i + 1] = ia.b[i];
    m[i + 1][i] = ia.c[i];
  }
  return m;
}

IntPoly characteristic_polynomial(const IntersectionArray& ia) {
  const QuotientMatrix m = quotient_matrix(ia);
  // phi_j = det(xI - M_j) over the leading j x j block:
  // phi_{j+1} = (x - d_j) phi_j - super_j * sub_j * phi_{j-1}.
  IntPoly prev = poly::make({1});
  IntPoly cur = poly::make({-m[0][0], 1});
  for (int j = 1; j < 5; ++j) {
    IntPoly next = poly::sub(poly::mul(cur, IntPoly{Int(-m[j][j]), Int(1)}),
                             poly::mul(prev, IntPoly{Int(m[j - 1][j] * m[j][j - 1])}));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::array<RealRoot, 5> eigenvalues(const IntersectionArray& ia, const Config& cfg) {
  const IntPoly p = characteristic_polynomial(ia);
  std::vector<RealRoot> roots = real_roots(p, cfg.eps);
  if (roots.size() != 5)
    throw RepeatedRootError("expected 5 distinct real eigenvalues, found " +
                            std::to_string(roots.size()));
  if (!roots.front().exact() || roots.front().value() != ia.k())
    throw std::logic_error("largest eigenvalue is not the degree");
  std::array<RealRoot, 5> out{roots[0], roots[1], roots[2], roots[3], roots[4]};
  return out;
}

namespace {

// sum_j k_j u_j(lambda)^2 for an exact rational eigenvalue.
Rational norm_sum_exact(const IntersectionArray& ia, const std::array<long long, 5>& kv,
                        const Rational& lam) {
  std::array<Rational, 5> u;
  u[0] = 1;
  u[1] = lam / ia.k();
  for (int j = 1; j < 4; ++j) {
    u[j + 1] = ((lam - ia.a(j)) * u[j] - ia.c[j - 1] * u[j - 1]) / ia.b[j];
  }
  Rational s = 0;
  for (int j = 0; j < 5; ++j) s += kv[j] * u[j] * u[j];
  return s;
}

Interval norm_sum_interval(const IntersectionArray& ia, const std::array<long long, 5>& kv,
                           const Interval& lam) {
  std::array<Interval, 5> u;
  u[0] = Interval(1LL);
  u[1] = lam / Interval(ia.k());
  for (int j = 1; j < 4; ++j) {
    u[j + 1] = ((lam - Interval(ia.a(j))) * u[j] - Interval(ia.c[j - 1]) * u[j - 1]) /
               Interval(ia.b[j]);
  }
  Interval s(Rational(0));
  for (int j = 0; j < 5; ++j) s = s + Interval(kv[j]) * u[j].square();
  return s;
}

long long round_to_ll(const Rational& x) {
  const Int num = numerator(x), den = denominator(x);
  const Int r = (2 * num + den) / (2 * den);  // floor(x + 1/2)
  return r.convert_to<long long>();
}

}  // namespace

std::array<long long, 5> multiplicities(const IntersectionArray& ia,
                                        const std::array<RealRoot, 5>& eigs, const Config& cfg) {
  const auto kv = ia.k_values();
  if (!kv) throw std::invalid_argument("array has non-integral k_i");
  const long long n = *ia.n();

  std::array<long long, 5> m{};
  for (int i = 0; i < 5; ++i) {
    if (eigs[i].exact()) {
      const Rational s = norm_sum_exact(ia, *kv, Rational(eigs[i].value()));
      const Rational mi = n / s;
      if (denominator(mi) != 1 || mi < 1)
        throw NonIntegralMultiplicityError(i, decimal_string(mi, 12));
      m[i] = round_to_ll(mi);
    } else {
      RealRoot root = eigs[i];
      Interval mi = Interval(Rational(n)) / norm_sum_interval(ia, *kv, root.interval());
      // Tighten until the integrality test at cfg.mult_tol is meaningful.
      while (mi.width() >= cfg.eq_width && root.width() > cfg.refine_width) {
        root = root.refined(std::max(root.width() / Rational(1000000), cfg.refine_width));
        mi = Interval(Rational(n)) / norm_sum_interval(ia, *kv, root.interval());
      }
      const Rational mid = mi.mid();
      const long long rounded = round_to_ll(mid);
      if (rounded < 1 || boost::multiprecision::abs(Rational(mid - rounded)) >= cfg.mult_tol)
        throw NonIntegralMultiplicityError(i, decimal_string(mid, 12));
      m[i] = rounded;
    }
  }
  if (m[0] != 1) throw NonIntegralMultiplicityError(0, std::to_string(m[0]));
  long long total = 0;
  for (long long x : m) total += x;
  if (total != n)
    throw NonIntegralMultiplicityError(-1, "sum " + std::to_string(total) + " != n");
  return m;
}

std::array<Interval, 5> pi_products(const std::array<RealRoot, 5>& eigs) {
  std::array<Interval, 5> pi;
  for (int i = 0; i < 5; ++i) {
    Interval p(Rational(1));
    for (int j = 0; j < 5; ++j) {
      if (j != i) p = p * (eigs[i].interval() - eigs[j].interval()).abs();
    }
    pi[i] = p;
  }
  return pi;
}

Spectrum Spectrum::refined(const Rational& eps) const {
  Spectrum s = *this;
  for (auto& e : s.eigs) e = e.refined(eps);
  s.pi = pi_products(s.eigs);
  return s;
}

Spectrum spectrum_of(const IntersectionArray& ia, const Config& cfg) {
  Spectrum s;
  s.eigs = eigenvalues(ia, cfg);
  s.mult = multiplicities(ia, s.eigs, cfg);
  s.pi = pi_products(s.eigs);
  s.k = ia.k();
  s.n = *ia.n();
  return s;
}

IntervalPoly interval_poly(std::initializer_list<long long> ascending_coeffs) {
  IntervalPoly p;
  for (long long c : ascending_coeffs) p.emplace_back(c);
  return p;
}

Interval eval(const IntervalPoly& p, const Interval& x) {
  Interval acc(Rational(0));
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntervalPoly monic_from_roots(const std::vector<Interval>& roots) {
  IntervalPoly p{Interval(1LL)};
  for (const auto& r : roots) {
    IntervalPoly next(p.size() + 1, Interval(Rational(0)));
    for (size_t i = 0; i < p.size(); ++i) {
      next[i + 1] = next[i + 1] + p[i];
      next[i] = next[i] - p[i] * r;
    }
    p = std::move(next);
  }
  return p;
}

Interval spectral_inner_product(const IntervalPoly& p, const IntervalPoly& q, const Spectrum& s) {
  Interval acc(Rational(0));
  for (int i = 0; i < 5; ++i) {
    const Interval x = s.eig(i);
    acc = acc + Interval(s.mult[i]) * eval(p, x) * eval(q, x);
  }
  return acc / Interval(s.n);
}

}  // namespace drg
