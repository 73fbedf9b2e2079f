#pragma once

#include "drg/graph.hpp"

#include <iosfwd>
#include <vector>

namespace drg::families {

// d-dimensional hypercube, 1 <= d <= 16; vertices are bitmasks, edges flip
// one bit.
Graph hypercube(int d);

// n-cycle, n >= 3.
Graph cycle(int n);

// Kneser graph: vertices are the t-subsets of {0..v-1}, adjacent when
// disjoint. Requires v >= 2t+1 and C(v,t) <= 100000.
Graph kneser(int v, int t);

// Sylvester Hadamard matrix of order 2^t, entries +-1, 0 <= t <= 6.
using HadamardMatrix = std::vector<std::vector<int>>;
HadamardMatrix hadamard_matrix_sylvester(int t);

struct NotHadamardError : std::runtime_error {
  explicit NotHadamardError(const std::string& what) : std::runtime_error(what) {}
};

// Incidence graph of the symmetric (2, mu)-net defined by a Hadamard matrix
// of order 2*mu: vertices (row, sign) and (column, sign), with (row i, s)
// adjacent to (col j, t) iff H[i][j] == s*t. 8*mu vertices.
Graph hadamard_graph(const HadamardMatrix& h);

// Matrix file format: first line the order, then rows of '+'/'-' or 1/-1.
HadamardMatrix read_hadamard_matrix(std::istream& in);
HadamardMatrix read_hadamard_matrix_file(const std::string& path);

}  // namespace drg::families
