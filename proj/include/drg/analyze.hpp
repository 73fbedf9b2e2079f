#pragma once

#include "drg/criteria.hpp"
#include "drg/drg_check.hpp"

#include <optional>
#include <string>

namespace drg {

// Everything the pipeline learned about one graph: the combinatorial facts,
// the spectral predicate verdicts, the direct oracle outcomes, and whether
// the two sides agree.
struct AnalysisReport {
  std::string source;
  int n = 0;
  long long edges = 0;
  bool connected = false;
  int diameter = 0;                       // of the connected graph
  BipartiteResult bipartite;
  DrgCheck drg;
  std::optional<IntersectionArray> array; // present iff drg with diameter 4
  std::optional<Spectrum> spectrum;

  std::optional<SdrgCondition> condition1;
  std::optional<AntipodalCondition> condition2;
  std::optional<ProductBalance> product_balance;
  std::optional<MultiplicityPattern> antipodal_pattern;
  std::optional<BipartiteSdrgCheck> bipartite_sdrg;

  std::optional<SrgResult> sdrg_direct;        // srg oracle on the distance-4 graph
  std::optional<AntipodalResult> antipodal_direct;

  // True when every spectral verdict decisively matches its direct oracle
  // (vacuously true when the diameter-4 pipeline does not apply).
  bool consistency = true;
  std::vector<std::string> notes;
};

AnalysisReport analyze(const Graph& g, const std::string& source,
                       const Config& cfg = default_config());

// Numeric rendering shared by all outputs: "<int> exact" for point values,
// "<mid12> [<lo17>,<hi17>]" otherwise.
std::string render_value(const Interval& v);

std::string render_text(const AnalysisReport& r);
// One "key value" line per field, fixed field set and order.
std::string render_machine(const AnalysisReport& r);

}  // namespace drg
