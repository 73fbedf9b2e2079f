// Test-only oracles, independent of the library's spectral pipeline:
// a dense symmetric eigensolver (cyclic Jacobi) applied to full adjacency
// matrices, and clustering of the resulting eigenvalue list.
#pragma once

#include "drg/graph.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace oracle {

inline std::vector<std::vector<double>> adjacency_matrix(const drg::Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) a[u][v] = 1.0;
  return a;
}

inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-22) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-15) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (int i = 0; i < n; ++i) {
          const double aip = a[i][p], aiq = a[i][q];
          a[i][p] = c * aip - s * aiq;
          a[i][q] = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          const double api = a[p][i], aqi = a[q][i];
          a[p][i] = c * api - s * aqi;
          a[q][i] = s * api + c * aqi;
        }
      }
    }
  }
  std::vector<double> eigs(n);
  for (int i = 0; i < n; ++i) eigs[i] = a[i][i];
  std::sort(eigs.rbegin(), eigs.rend());
  return eigs;
}

// Distinct values with multiplicities, merging anything closer than tol.
inline std::vector<std::pair<double, int>> cluster(const std::vector<double>& sorted_desc,
                                                   double tol) {
  std::vector<std::pair<double, int>> out;
  for (double v : sorted_desc) {
    if (!out.empty() && std::fabs(out.back().first - v) < tol) {
      out.back().first = (out.back().first * out.back().second + v) / (out.back().second + 1);
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

}  // namespace oracle
