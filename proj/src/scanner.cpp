#include "drg/scanner.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace drg {

const char* to_string(ScanTag t) {
  switch (t) {
    case ScanTag::sdrg_antipodal_candidate: return "sdrg-antipodal-candidate";
    case ScanTag::sdrg_nonantipodal_candidate: return "sdrg-nonantipodal-candidate";
    case ScanTag::drg_candidate_only: return "drg-candidate-only";
    default: return "infeasible";
  }
}

const char* to_string(FeasibilityStage s) {
  switch (s) {
    case FeasibilityStage::none: return "none";
    case FeasibilityStage::k_integrality: return "k-integrality";
    case FeasibilityStage::parity: return "parity";
    case FeasibilityStage::distinct_eigenvalues: return "distinct-eigenvalues";
    default: return "multiplicities";
  }
}

std::string ScanRecord::line() const {
  std::ostringstream out;
  out << array.to_string();
  out << "\tn=" << (n ? std::to_string(*n) : "-");
  out << "\tfeasible=" << (feasible ? "yes" : "no");
  out << "\tfirst_failed=" << to_string(first_failed);
  if (feasible) {
    out << "\tcondition1=" << to_string(condition1);
    out << "\tcondition2=" << to_string(condition2);
    out << "\tdisjunct=" << to_string(condition2_disjunct);
    out << "\tantipodal_pattern=" << to_string(antipodal_pattern.verdict);
    if (antipodal_pattern.verdict == Verdict::yes) out << "(r=" << antipodal_pattern.r << ")";
  } else {
    out << "\tcondition1=-\tcondition2=-\tdisjunct=-\tantipodal_pattern=-";
  }
  out << "\ttag=" << to_string(tag);
  return out.str();
}

namespace {

// Runs the staged feasibility pipeline and the predicates on one
// structurally valid array.
ScanRecord classify(const IntersectionArray& ia, const Config& cfg) {
  ScanRecord rec;
  rec.array = ia;

  const auto kv = ia.k_values();
  if (!kv) {
    rec.first_failed = FeasibilityStage::k_integrality;
    return rec;
  }
  rec.n = ia.n();

  if ((*rec.n % 2 != 0) && (ia.k() % 2 != 0)) {
    rec.first_failed = FeasibilityStage::parity;
    return rec;
  }

  std::array<RealRoot, 5> eigs;
  try {
    eigs = eigenvalues(ia, cfg);
  } catch (const RepeatedRootError&) {
    rec.first_failed = FeasibilityStage::distinct_eigenvalues;
    return rec;
  }

  Spectrum s;
  try {
    s.eigs = eigs;
    s.mult = multiplicities(ia, eigs, cfg);
  } catch (const NonIntegralMultiplicityError&) {
    rec.first_failed = FeasibilityStage::multiplicities;
    return rec;
  }
  s.pi = pi_products(s.eigs);
  s.k = ia.k();
  s.n = *rec.n;

  rec.feasible = true;
  rec.spectrum = s;
  const SdrgCondition c1 = sdrg_eigenvalue_condition(s, ia.b1(), cfg);
  const AntipodalCondition c2 = antipodal_eigenvalue_condition(s, ia.k(), ia.a1(), cfg);
  rec.condition1 = c1.verdict;
  rec.condition2 = c2.verdict;
  rec.condition2_disjunct = c2.which;
  rec.antipodal_pattern = antipodal_multiplicity_pattern(s, cfg);

  if (rec.condition1 == Verdict::yes && rec.condition2 == Verdict::yes) {
    rec.tag = ScanTag::sdrg_antipodal_candidate;
  } else if (rec.condition1 == Verdict::yes && rec.condition2 == Verdict::no) {
    rec.tag = ScanTag::sdrg_nonantipodal_candidate;
  } else {
    rec.tag = ScanTag::drg_candidate_only;
  }
  return rec;
}

}  // namespace

std::vector<ScanRecord> scan(int k_max, long long n_max, const Config& cfg) {
  if (k_max < 2) throw std::invalid_argument("scan needs k_max >= 2");
  if (k_max > 64 || n_max > 1000000)
    throw std::invalid_argument("scan caps: k_max <= 64, n_max <= 10^6");

  std::vector<ScanRecord> records;
  IntersectionArray ia;
  for (long long b0 = 1; b0 <= k_max; ++b0)
    for (long long b1 = 1; b1 <= b0; ++b1)
      for (long long b2 = 1; b2 <= b1; ++b2)
        for (long long b3 = 1; b3 <= b2; ++b3)
          for (long long c2 = 1; c2 <= b0; ++c2)
            for (long long c3 = c2; c3 <= b0; ++c3)
              for (long long c4 = c3; c4 <= b0; ++c4) {
                ia.b = {b0, b1, b2, b3};
                ia.c = {1, c2, c3, c4};
                if (!ia.structurally_valid()) continue;
                // Enumeration bound n <= n_max, where n = sum k_i is
                // evaluated as an exact fraction so that arrays with
                // fractional k_i (kept as k-integrality failures) are
                // bounded the same way.
                long long num = 1, den = 1, nn = 1, nd = 1;
                for (int i = 0; i < 4; ++i) {
                  num *= ia.b[i];
                  den *= ia.c[i];
                  // nn/nd += num/den
                  nn = nn * den + num * nd;
                  nd *= den;
                  const long long g = std::gcd(nn, nd);
                  nn /= g;
                  nd /= g;
                }
                if (nn > n_max * nd) continue;
                records.push_back(classify(ia, cfg));
              }
  return records;
}

std::string ScanSummary::to_string() const {
  std::ostringstream out;
  out << "# scanned " << total << " structurally valid arrays (k_max=" << k_max
      << ", n_max=" << n_max << ")\n";
  out << "# sdrg-antipodal-candidate " << count_sdrg_antipodal << "\n";
  out << "# sdrg-nonantipodal-candidate " << count_sdrg_nonantipodal << "\n";
  out << "# drg-candidate-only " << count_drg_only << "\n";
  out << "# infeasible " << count_infeasible << "\n";
  if (nonantipodal_witnesses.empty()) {
    out << "# no sdrg-nonantipodal-candidate found up to (k_max=" << k_max
        << ", n_max=" << n_max << ")\n";
  } else {
    out << "# sdrg-nonantipodal-candidate arrays:\n";
    for (const auto& a : nonantipodal_witnesses) out << "#   " << a.to_string() << "\n";
  }
  return out.str();
}

ScanSummary open_question_report(const std::vector<ScanRecord>& records, int k_max,
                                 long long n_max) {
  ScanSummary s;
  s.k_max = k_max;
  s.n_max = n_max;
  s.total = records.size();
  for (const auto& r : records) {
    switch (r.tag) {
      case ScanTag::sdrg_antipodal_candidate: ++s.count_sdrg_antipodal; break;
      case ScanTag::sdrg_nonantipodal_candidate:
        ++s.count_sdrg_nonantipodal;
        s.nonantipodal_witnesses.push_back(r.array);
        break;
      case ScanTag::drg_candidate_only: ++s.count_drg_only; break;
      default: ++s.count_infeasible;
    }
  }
  return s;
}

}  // namespace drg
