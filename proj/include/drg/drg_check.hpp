#pragma once

#include "drg/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace drg {

// Diameter-4 intersection array {b0,b1,b2,b3; c1,c2,c3,c4}.
struct IntersectionArray {
  std::array<long long, 4> b{};  // b[0] = b0 ... b[3] = b3
  std::array<long long, 4> c{};  // c[0] = c1 ... c[3] = c4

  long long k() const { return b[0]; }
  // a_i = b0 - b_i - c_i with b4 = 0, c0 = 0.
  long long a(int i) const;
  long long a1() const { return a(1); }
  long long b1() const { return b[1]; }

  // Positivity, c1 = 1, monotonicity, and a_i >= 0.
  bool structurally_valid() const;
  // k_0..k_4 when all are integral, nullopt otherwise.
  std::optional<std::array<long long, 5>> k_values() const;
  // Vertex count when k_i are integral.
  std::optional<long long> n() const;
  // structurally_valid plus integral k_i.
  bool valid() const;

  bool operator==(const IntersectionArray& o) const { return b == o.b && c == o.c; }

  // "b0 b1 b2 b3 ; c1 c2 c3 c4"
  std::string to_string() const;
  // Throws std::invalid_argument on malformed input.
  static IntersectionArray parse(const std::string& text);
};

// Exhaustive distance-regularity check over all vertex pairs.
struct DrgWitness {
  int base = 0, other = 0, dist = 0;
  int c = 0, a = 0, b = 0;           // observed counts at (base, other)
  int expected_c = 0, expected_a = 0, expected_b = 0;
  std::string describe() const;
};

struct DrgCheck {
  bool connected = false;
  int diameter = 0;
  bool is_drg = false;
  std::vector<long long> b, c;       // b_0..b_{d-1}, c_1..c_d when is_drg
  std::optional<DrgWitness> witness; // first violation otherwise
};

DrgCheck check_distance_regular(const Graph& g, const DistanceData& dd);
DrgCheck check_distance_regular(const Graph& g);

// Diameter-4 array of a distance-regular graph, nullopt when the graph is
// not distance-regular or the diameter is not 4.
std::optional<IntersectionArray> intersection_array(const Graph& g, const DistanceData& dd);
std::optional<IntersectionArray> intersection_array(const Graph& g);

// Strong-regularity oracle by direct common-neighbor counting.
struct SrgParams {
  long long n = 0, k = 0, lambda = 0, mu = 0;
  bool identity_holds() const { return k * (k - lambda - 1) == (n - k - 1) * mu; }
};

struct SrgResult {
  enum class Status { srg, not_srg, degenerate_complete, degenerate_empty };
  Status status = Status::not_srg;
  SrgParams params;                      // when status == srg
  std::optional<std::pair<int, int>> witness;  // violating pair otherwise
  int witness_count_a = 0, witness_count_b = 0;
  bool ok() const { return status == Status::srg; }
  std::string describe() const;
};

// mu = 0 (a disjoint union of equal complete graphs) is accepted; complete
// and empty graphs are rejected as degenerate.
SrgResult srg_params(const Graph& g);

// Antipodality oracle: "distance 0 or diameter" as an equivalence relation
// with fibres of constant size r.
struct AntipodalResult {
  enum class Status { antipodal, not_antipodal, unequal_fibres };
  Status status = Status::not_antipodal;
  int r = 0;
  std::vector<std::vector<int>> fibres;
  std::array<int, 3> witness{-1, -1, -1};  // (v, u, w): u,w in fibre(v), dist(u,w) bad
  bool ok() const { return status == Status::antipodal; }
  std::string describe() const;
};

AntipodalResult antipodal_fibres(const Graph& g, const DistanceData& dd);
AntipodalResult antipodal_fibres(const Graph& g);

}  // namespace drg
