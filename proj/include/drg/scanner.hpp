#pragma once

#include "drg/criteria.hpp"

#include <optional>
#include <string>
#include <vector>

namespace drg {

enum class ScanTag {
  sdrg_antipodal_candidate,
  sdrg_nonantipodal_candidate,
  drg_candidate_only,
  infeasible,
};

const char* to_string(ScanTag t);

// Feasibility pipeline stages, in the order they run. The first failure is
// recorded and later stages are skipped.
enum class FeasibilityStage {
  none,            // all checks passed
  k_integrality,
  parity,          // n*k must be even
  distinct_eigenvalues,
  multiplicities,
};

const char* to_string(FeasibilityStage s);

struct ScanRecord {
  IntersectionArray array;
  std::optional<long long> n;       // present when the k_i are integral
  bool feasible = false;
  FeasibilityStage first_failed = FeasibilityStage::none;
  std::optional<Spectrum> spectrum; // present when feasible
  Verdict condition1 = Verdict::undecided;
  Verdict condition2 = Verdict::undecided;
  AntipodalCondition::Which condition2_disjunct = AntipodalCondition::Which::none;
  MultiplicityPattern antipodal_pattern;
  ScanTag tag = ScanTag::infeasible;

  std::string line() const;  // array text plus tab-separated verdict fields
};

// All structurally valid arrays {b0,b1,b2,b3; 1,c2,c3,c4} with b0 <= k_max
// and n <= n_max, in lexicographic order of (b0,b1,b2,b3,c2,c3,c4), each
// classified by the feasibility pipeline and the spectral predicates.
// Hard caps: k_max <= 64, n_max <= 10^6.
std::vector<ScanRecord> scan(int k_max, long long n_max,
                             const Config& cfg = default_config());

struct ScanSummary {
  int k_max = 0;
  long long n_max = 0;
  size_t total = 0;
  size_t count_sdrg_antipodal = 0;
  size_t count_sdrg_nonantipodal = 0;
  size_t count_drg_only = 0;
  size_t count_infeasible = 0;
  std::vector<IntersectionArray> nonantipodal_witnesses;

  std::string to_string() const;
};

ScanSummary open_question_report(const std::vector<ScanRecord>& records, int k_max,
                                 long long n_max);

}  // namespace drg
