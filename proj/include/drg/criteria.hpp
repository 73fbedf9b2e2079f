#pragma once

#include "drg/spectrum.hpp"

namespace drg {

// (1+lambda1)(1+lambda3) = (1+lambda2)(1+lambda4) = -b1.
// Characterizes diameter-4 distance-regular graphs whose distance-4 graph is
// strongly regular.
struct SdrgCondition {
  Verdict verdict = Verdict::undecided;
  Interval prod13, prod24;  // the two evaluated eigenvalue products
  long long target = 0;     // -b1
};

SdrgCondition sdrg_eigenvalue_condition(const Spectrum& s, long long b1,
                                        const Config& cfg = default_config());

// lambda1*lambda3 = -k or lambda1+lambda3 = a1. Given the condition above,
// characterizes the antipodal ones.
struct AntipodalCondition {
  enum class Which { none, product, sum, both };
  Verdict verdict = Verdict::undecided;
  Which which = Which::none;
  Interval product, sum;
};

const char* to_string(AntipodalCondition::Which w);

AntipodalCondition antipodal_eigenvalue_condition(const Spectrum& s, long long k, long long a1,
                                                  const Config& cfg = default_config());

// Antipodal multiplicity pattern: m_i = pi_0/pi_i for even i, and
// m_i = (r-1) pi_0/pi_i for odd i, for one integer r >= 2.
struct MultiplicityPattern {
  Verdict verdict = Verdict::undecided;
  long long r = 0;
  int fail_index = -1;  // first index whose equation fails
};

MultiplicityPattern antipodal_multiplicity_pattern(const Spectrum& s,
                                                   const Config& cfg = default_config());

// m_i pi_i = alpha for odd i and m_i pi_i = beta for even i != 0.
struct ProductBalance {
  Verdict holds = Verdict::undecided;
  Verdict odd_pair = Verdict::undecided;   // m1 pi1 = m3 pi3
  Verdict even_pair = Verdict::undecided;  // m2 pi2 = m4 pi4
  Interval alpha, beta;                    // m1 pi1 and m2 pi2
};

ProductBalance sdrg_product_balance(const Spectrum& s, const Config& cfg = default_config());

// For bipartite-type arrays (all a_i = 0): lambda1 = sqrt(k), decided exactly
// through the defining polynomial. On yes, the full predicted spectrum
// {k^1, sqrt(k)^(n/2-k), 0^(2k-2), -sqrt(k)^(n/2-k), -k^1} is cross-checked
// against the computed one.
struct BipartiteSdrgCheck {
  bool applicable = false;  // false when some a_i != 0
  Verdict verdict = Verdict::undecided;
  std::array<long long, 5> predicted_mult{};
  bool spectrum_matches = false;  // meaningful only on verdict == yes
};

BipartiteSdrgCheck bipartite_sdrg_check(const IntersectionArray& ia, const Spectrum& s,
                                        const Config& cfg = default_config());

// {k, k-1, k-mu, 1; 1, mu, k-1, k} with k = m*mu; the incidence-graph array
// of a symmetric (m, mu)-net on n = 2 m^2 mu vertices.
// Requires m >= 2, mu >= 1, mu <= k-1.
IntersectionArray net_array(long long m, long long mu);

}  // namespace drg
