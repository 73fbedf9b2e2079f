#include "drg/drg_check.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace drg {

long long IntersectionArray::a(int i) const {
  if (i < 0 || i > 4) throw std::out_of_range("a(i) needs 0 <= i <= 4");
  if (i == 0) return 0;
  const long long bi = i < 4 ? b[i] : 0;
  return b[0] - bi - c[i - 1];
}

bool IntersectionArray::structurally_valid() const {
  for (long long x : b)
    if (x < 1) return false;
  for (long long x : c)
    if (x < 1) return false;
  if (c[0] != 1) return false;
  if (!(b[0] >= b[1] && b[1] >= b[2] && b[2] >= b[3])) return false;
  if (!(c[0] <= c[1] && c[1] <= c[2] && c[2] <= c[3] && c[3] <= b[0])) return false;
  for (int i = 1; i <= 4; ++i)
    if (a(i) < 0) return false;
  return true;
}

std::optional<std::array<long long, 5>> IntersectionArray::k_values() const {
  constexpr long long kMax = 1000000000000000LL;  // desk-scale guard
  std::array<long long, 5> k{1, 0, 0, 0, 0};
  long long num = 1;
  for (int i = 1; i <= 4; ++i) {
    if (b[i - 1] < 1 || c[i - 1] < 1) return std::nullopt;
    if (num > kMax / b[i - 1])
      throw std::invalid_argument("intersection array outside supported range");
    num *= b[i - 1];
    // Reducing at every stage keeps num == k_{i-1} * b_{i-1}, so the test
    // below is exactly the integrality of k_i.
    if (num % c[i - 1] != 0) return std::nullopt;
    num /= c[i - 1];
    k[i] = num;
  }
  return k;
}

std::optional<long long> IntersectionArray::n() const {
  const auto k = k_values();
  if (!k) return std::nullopt;
  return std::accumulate(k->begin(), k->end(), 0LL);
}

bool IntersectionArray::valid() const {
  return structurally_valid() && k_values().has_value();
}

std::string IntersectionArray::to_string() const {
  std::ostringstream out;
  out << b[0] << " " << b[1] << " " << b[2] << " " << b[3] << " ; " << c[0] << " " << c[1]
      << " " << c[2] << " " << c[3];
  return out.str();
}

IntersectionArray IntersectionArray::parse(const std::string& text) {
  std::istringstream in(text);
  IntersectionArray ia;
  std::string sep, extra;
  if (!(in >> ia.b[0] >> ia.b[1] >> ia.b[2] >> ia.b[3] >> sep >> ia.c[0] >> ia.c[1] >>
        ia.c[2] >> ia.c[3]) ||
      sep != ";" || (in >> extra)) {
    throw std::invalid_argument("expected 'b0 b1 b2 b3 ; c1 c2 c3 c4', got '" + text + "'");
  }
  return ia;
}

std::string DrgWitness::describe() const {
  std::ostringstream out;
  out << "at vertices (" << base << "," << other << ") distance " << dist << ": counts (c,a,b)=("
      << c << "," << a << "," << b << ") vs expected (" << expected_c << "," << expected_a << ","
      << expected_b << ")";
  return out.str();
}

DrgCheck check_distance_regular(const Graph& g, const DistanceData& dd) {
  DrgCheck res;
  res.connected = dd.connected;
  res.diameter = dd.diameter;
  if (!dd.connected) return res;

  const int n = g.vertex_count();
  const int d = dd.diameter;
  std::vector<int> bs(d + 1, -1), as(d + 1, -1), cs(d + 1, -1);
  cs[0] = 0;
  as[0] = 0;

  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) {
      const int i = dd.dist[v][u];
      int c = 0, a = 0, b = 0;
      for (int w : g.neighbors(u)) {
        const int dw = dd.dist[v][w];
        if (dw == i - 1) {
          ++c;
        } else if (dw == i) {
          ++a;
        } else {
          ++b;
        }
      }
      if (bs[i] < 0) {
        bs[i] = b;
        as[i] = a;
        cs[i] = c;
      } else if (bs[i] != b || as[i] != a || cs[i] != c) {
        res.witness = DrgWitness{v, u, i, c, a, b, cs[i], as[i], bs[i]};
        return res;
      }
    }
  }
  res.is_drg = true;
  res.b.assign(bs.begin(), bs.end() - 1);       // b_0..b_{d-1}
  res.c.assign(cs.begin() + 1, cs.end());       // c_1..c_d
  return res;
}

DrgCheck check_distance_regular(const Graph& g) {
  return check_distance_regular(g, distances(g));
}

std::optional<IntersectionArray> intersection_array(const Graph& g, const DistanceData& dd) {
  const DrgCheck chk = check_distance_regular(g, dd);
  if (!chk.is_drg || chk.diameter != 4) return std::nullopt;
  IntersectionArray ia;
  for (int i = 0; i < 4; ++i) {
    ia.b[i] = chk.b[i];
    ia.c[i] = chk.c[i];
  }
  return ia;
}

std::optional<IntersectionArray> intersection_array(const Graph& g) {
  return intersection_array(g, distances(g));
}

std::string SrgResult::describe() const {
  std::ostringstream out;
  switch (status) {
    case Status::srg:
      out << "srg(" << params.n << "," << params.k << "," << params.lambda << "," << params.mu
          << ")";
      break;
    case Status::degenerate_complete:
      out << "degenerate: complete graph";
      break;
    case Status::degenerate_empty:
      out << "degenerate: empty graph";
      break;
    default:
      out << "not strongly regular";
      if (witness)
        out << ": pair (" << witness->first << "," << witness->second << ") has "
            << witness_count_a << " common neighbors, expected " << witness_count_b;
  }
  return out.str();
}

SrgResult srg_params(const Graph& g) {
  SrgResult res;
  const int n = g.vertex_count();
  const long long m = g.edge_count();
  if (m == 0) {
    res.status = SrgResult::Status::degenerate_empty;
    return res;
  }
  if (m == static_cast<long long>(n) * (n - 1) / 2) {
    res.status = SrgResult::Status::degenerate_complete;
    return res;
  }
  const int k = g.degree(0);
  for (int v = 1; v < n; ++v) {
    if (g.degree(v) != k) {
      res.witness = {0, v};
      res.witness_count_a = g.degree(v);
      res.witness_count_b = k;
      return res;
    }
  }
  int lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int t = g.common_neighbors(u, v);
      int& ref = g.adjacent(u, v) ? lambda : mu;
      if (ref < 0) {
        ref = t;
      } else if (ref != t) {
        res.witness = {u, v};
        res.witness_count_a = t;
        res.witness_count_b = ref;
        return res;
      }
    }
  }
  res.status = SrgResult::Status::srg;
  res.params = {n, k, lambda < 0 ? 0 : lambda, mu < 0 ? 0 : mu};
  return res;
}

std::string AntipodalResult::describe() const {
  std::ostringstream out;
  switch (status) {
    case Status::antipodal:
      out << "antipodal, r=" << r << ", " << fibres.size() << " fibres";
      break;
    case Status::unequal_fibres:
      out << "fibres of unequal size";
      break;
    default:
      out << "not antipodal: vertices " << witness[1] << "," << witness[2] << " in the class of "
          << witness[0] << " are at an intermediate distance";
  }
  return out.str();
}

AntipodalResult antipodal_fibres(const Graph& g, const DistanceData& dd) {
  AntipodalResult res;
  if (!dd.connected || dd.diameter < 1) return res;
  const int n = g.vertex_count();
  const int d = dd.diameter;
  std::vector<char> assigned(n, 0);
  for (int v = 0; v < n; ++v) {
    if (assigned[v]) continue;
    std::vector<int> fibre;
    for (int u = 0; u < n; ++u)
      if (dd.dist[v][u] == 0 || dd.dist[v][u] == d) fibre.push_back(u);
    for (int u : fibre) {
      for (int w : fibre) {
        if (u != w && dd.dist[u][w] != d && dd.dist[u][w] != 0) {
          res.witness = {v, u, w};
          return res;
        }
      }
    }
    for (int u : fibre) assigned[u] = 1;
    res.fibres.push_back(std::move(fibre));
  }
  const size_t r = res.fibres.front().size();
  for (const auto& f : res.fibres) {
    if (f.size() != r) {
      res.status = AntipodalResult::Status::unequal_fibres;
      return res;
    }
  }
  res.status = AntipodalResult::Status::antipodal;
  res.r = static_cast<int>(r);
  return res;
}

AntipodalResult antipodal_fibres(const Graph& g) { return antipodal_fibres(g, distances(g)); }

}  // namespace drg
