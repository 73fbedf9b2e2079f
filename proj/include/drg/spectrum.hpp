#pragma once

#include "drg/drg_check.hpp"
#include "drg/exact.hpp"
#include "drg/poly.hpp"

#include <array>

namespace drg {

// 5x5 tridiagonal intersection matrix: diagonal a_i, superdiagonal b_i,
// subdiagonal c_{i+1}. Its eigenvalues are the distinct eigenvalues of any
// graph realizing the array.
using QuotientMatrix = std::array<std::array<long long, 5>, 5>;

QuotientMatrix quotient_matrix(const IntersectionArray& ia);

// Characteristic polynomial of the quotient matrix, monic with integer
// coefficients, computed by the leading-principal-minor recurrence.
IntPoly characteristic_polynomial(const IntersectionArray& ia);

struct NonIntegralMultiplicityError : std::runtime_error {
  NonIntegralMultiplicityError(int index, std::string approx)
      : std::runtime_error("multiplicity m_" + std::to_string(index) +
                           " is not a positive integer (" + approx + ")"),
        index(index) {}
  int index;
};

// The 5 distinct eigenvalues, strictly decreasing. Integer eigenvalues are
// exact; irrational ones carry isolating intervals of width <= cfg.eps.
// Throws RepeatedRootError if the array does not have 5 distinct real
// eigenvalues.
std::array<RealRoot, 5> eigenvalues(const IntersectionArray& ia,
                                    const Config& cfg = default_config());

// Standard multiplicity formula m(lambda) = n / sum_j k_j u_j(lambda)^2 with
// u_0 = 1, u_1 = lambda/k, c_j u_{j-1} + a_j u_j + b_j u_{j+1} = lambda u_j.
// Throws NonIntegralMultiplicityError when some m_i is not a positive integer
// within cfg.mult_tol.
std::array<long long, 5> multiplicities(const IntersectionArray& ia,
                                        const std::array<RealRoot, 5>& eigs,
                                        const Config& cfg = default_config());

// pi_i = prod_{j != i} |lambda_i - lambda_j|.
std::array<Interval, 5> pi_products(const std::array<RealRoot, 5>& eigs);

struct Spectrum {
  std::array<RealRoot, 5> eigs;
  std::array<long long, 5> mult{};
  std::array<Interval, 5> pi;
  long long n = 0;
  long long k = 0;

  Interval eig(int i) const { return eigs[i].interval(); }
  // Copy with eigenvalue intervals tightened to width <= eps.
  Spectrum refined(const Rational& eps) const;
};

Spectrum spectrum_of(const IntersectionArray& ia, const Config& cfg = default_config());

// Polynomials with interval coefficients, ascending degree order.
using IntervalPoly = std::vector<Interval>;

IntervalPoly interval_poly(std::initializer_list<long long> ascending_coeffs);
Interval eval(const IntervalPoly& p, const Interval& x);
// (x - r1)(x - r2)... for interval roots.
IntervalPoly monic_from_roots(const std::vector<Interval>& roots);

// <p, q> = (1/n) sum_i m_i p(lambda_i) q(lambda_i).
Interval spectral_inner_product(const IntervalPoly& p, const IntervalPoly& q, const Spectrum& s);

}  // namespace drg
