#include "drg/families.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace drg::families {

Graph hypercube(int d) {
  if (d < 1 || d > 16) throw std::invalid_argument("hypercube dimension must be in [1,16]");
  Graph g(1 << d);
  for (int v = 0; v < (1 << d); ++v)
    for (int bit = 0; bit < d; ++bit) {
      const int w = v ^ (1 << bit);
      if (v < w) g.add_edge(v, w);
    }
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

namespace {

long long binomial(int v, int t) {
  long long r = 1;
  for (int i = 1; i <= t; ++i) r = r * (v - t + i) / i;
  return r;
}

}  // namespace

Graph kneser(int v, int t) {
  if (t < 1 || v < 2 * t + 1 || v > 30)
    throw std::invalid_argument("kneser needs v >= 2t+1, t >= 1, v <= 30");
  if (binomial(v, t) > 100000) throw std::invalid_argument("kneser graph too large");
  std::vector<unsigned> subsets;
  for (unsigned mask = 0; mask < (1u << v); ++mask)
    if (__builtin_popcount(mask) == t) subsets.push_back(mask);
  Graph g(static_cast<int>(subsets.size()));
  for (size_t i = 0; i < subsets.size(); ++i)
    for (size_t j = i + 1; j < subsets.size(); ++j)
      if ((subsets[i] & subsets[j]) == 0) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

HadamardMatrix hadamard_matrix_sylvester(int t) {
  if (t < 0 || t > 6) throw std::invalid_argument("sylvester order exponent must be in [0,6]");
  HadamardMatrix h{{1}};
  for (int step = 0; step < t; ++step) {
    const int n = static_cast<int>(h.size());
    HadamardMatrix next(2 * n, std::vector<int>(2 * n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        next[i][j] = h[i][j];
        next[i][j + n] = h[i][j];
        next[i + n][j] = h[i][j];
        next[i + n][j + n] = -h[i][j];
      }
    h = std::move(next);
  }
  return h;
}

namespace {

void check_hadamard(const HadamardMatrix& h) {
  const int n = static_cast<int>(h.size());
  if (n == 0) throw NotHadamardError("empty matrix");
  for (const auto& row : h) {
    if (static_cast<int>(row.size()) != n) throw NotHadamardError("matrix is not square");
    for (int x : row)
      if (x != 1 && x != -1) throw NotHadamardError("entries must be +-1");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int dot = 0;
      for (int l = 0; l < n; ++l) dot += h[i][l] * h[j][l];
      if (dot != (i == j ? n : 0))
        throw NotHadamardError("H * H^T != nI at rows " + std::to_string(i) + "," +
                               std::to_string(j));
    }
}

}  // namespace

Graph hadamard_graph(const HadamardMatrix& h) {
  check_hadamard(h);
  const int order = static_cast<int>(h.size());
  if (order % 2 != 0) throw NotHadamardError("order must be even for a (2,mu)-net");
  // Vertex layout: (row i, +) = i, (row i, -) = order + i,
  //                (col j, +) = 2*order + j, (col j, -) = 3*order + j.
  Graph g(4 * order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      for (int s : {1, -1}) {
        const int t = s * h[i][j];
        const int u = (s == 1 ? 0 : order) + i;
        const int v = 2 * order + (t == 1 ? 0 : order) + j;
        g.add_edge(u, v);
      }
  return g;
}

HadamardMatrix read_hadamard_matrix(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 1 || n > 1024) throw std::runtime_error("bad hadamard matrix order");
  HadamardMatrix h(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok)) throw std::runtime_error("unexpected end of hadamard matrix");
      if (tok == "+" || tok == "1" || tok == "+1") {
        h[i][j] = 1;
      } else if (tok == "-" || tok == "-1") {
        h[i][j] = -1;
      } else {
        throw std::runtime_error("bad hadamard entry '" + tok + "'");
      }
    }
  return h;
}

HadamardMatrix read_hadamard_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open hadamard matrix file: " + path);
  return read_hadamard_matrix(in);
}

}  // namespace drg::families
