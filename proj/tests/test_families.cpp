#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drg/analyze.hpp"
#include "drg/drg_check.hpp"
#include "drg/families.hpp"

#include <sstream>

using namespace drg;
using namespace drg::families;

TEST_CASE("hypercubes") {
  const Graph k2 = hypercube(1);
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);

  const Graph c4 = hypercube(2);
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(distances(c4).diameter == 2);

  const Graph q4 = hypercube(4);
  CHECK(q4.vertex_count() == 16);
  CHECK(q4.edge_count() == 32);  // d * 2^(d-1)
  CHECK(distances(q4).diameter == 4);

  for (int d = 1; d <= 6; ++d)
    CHECK(hypercube(d).edge_count() == static_cast<long long>(d) * (1 << (d - 1)));

  CHECK_THROWS_AS(hypercube(0), std::invalid_argument);
  CHECK_THROWS_AS(hypercube(17), std::invalid_argument);
}

TEST_CASE("cycles") {
  CHECK(distances(cycle(8)).diameter == 4);
  const Graph k3 = cycle(3);
  CHECK(k3.edge_count() == 3);
  CHECK(srg_params(k3).status == SrgResult::Status::degenerate_complete);
  const Graph c4 = cycle(4);
  CHECK(c4.adjacent(0, 3));
  CHECK_FALSE(c4.adjacent(0, 2));
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
}

TEST_CASE("kneser graphs") {
  const Graph petersen = kneser(5, 2);
  CHECK(petersen.vertex_count() == 10);
  CHECK(petersen.edge_count() == 15);

  const Graph k3 = kneser(3, 1);
  CHECK(k3.vertex_count() == 3);
  CHECK(k3.edge_count() == 3);

  const Graph o5 = kneser(9, 4);
  CHECK(o5.vertex_count() == 126);
  for (int v = 0; v < o5.vertex_count(); ++v) CHECK(o5.degree(v) == 5);

  CHECK_THROWS_AS(kneser(4, 2), std::invalid_argument);   // v < 2t+1
  CHECK_THROWS_AS(kneser(30, 15), std::invalid_argument); // too large
}

TEST_CASE("sylvester hadamard matrices") {
  const HadamardMatrix h1 = hadamard_matrix_sylvester(1);
  CHECK(h1 == HadamardMatrix{{1, 1}, {1, -1}});

  for (int t : {0, 1, 2, 3, 6}) {
    CAPTURE(t);
    const HadamardMatrix h = hadamard_matrix_sylvester(t);
    const int n = 1 << t;
    REQUIRE(static_cast<int>(h.size()) == n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int dot = 0;
        for (int l = 0; l < n; ++l) dot += h[i][l] * h[j][l];
        CHECK(dot == (i == j ? n : 0));
      }
  }
  CHECK_THROWS_AS(hadamard_matrix_sylvester(7), std::invalid_argument);
  CHECK_THROWS_AS(hadamard_matrix_sylvester(-1), std::invalid_argument);
}

TEST_CASE("hadamard graphs realize the (2,mu)-net arrays") {
  struct Expect {
    int t;
    const char* array;
    int n;
  };
  const Expect cases[] = {
      {1, "2 1 1 1 ; 1 1 1 2", 8},
      {2, "4 3 2 1 ; 1 2 3 4", 16},
      {3, "8 7 4 1 ; 1 4 7 8", 32},
  };
  for (const auto& [t, array, n] : cases) {
    CAPTURE(t);
    const Graph g = hadamard_graph(hadamard_matrix_sylvester(t));
    CHECK(g.vertex_count() == n);
    const auto ia = intersection_array(g);
    REQUIRE(ia.has_value());
    CHECK(ia->to_string() == array);
    CHECK(is_bipartite(g).bipartite);
  }

  // order-4 member matches the hypercube at the array level
  const auto from_h = intersection_array(hadamard_graph(hadamard_matrix_sylvester(2)));
  const auto from_q = intersection_array(hypercube(4));
  CHECK(*from_h == *from_q);
}

TEST_CASE("hadamard graph rejects non-hadamard input") {
  HadamardMatrix bad{{1, 1}, {1, 1}};
  CHECK_THROWS_AS(hadamard_graph(bad), NotHadamardError);
  HadamardMatrix nonsquare{{1, 1}};
  CHECK_THROWS_AS(hadamard_graph(nonsquare), NotHadamardError);
  HadamardMatrix badentries{{1, 2}, {2, 1}};
  CHECK_THROWS_AS(hadamard_graph(badentries), NotHadamardError);
}

TEST_CASE("hadamard matrix file io") {
  std::istringstream in("2\n+ +\n+ -\n");
  const HadamardMatrix h = read_hadamard_matrix(in);
  CHECK(h == HadamardMatrix{{1, 1}, {1, -1}});

  std::istringstream in2("2\n1 1\n1 -1\n");
  CHECK(read_hadamard_matrix(in2) == h);

  std::istringstream bad("2\n+ +\n+ x\n");
  CHECK_THROWS_AS(read_hadamard_matrix(bad), std::runtime_error);
  std::istringstream trunc("3\n+ + +\n");
  CHECK_THROWS_AS(read_hadamard_matrix(trunc), std::runtime_error);
}

TEST_CASE("the corollary family behaves end to end") {
  // every hadamard graph: bipartite, distance-regular of diameter 4, both
  // eigenvalue conditions hold, and both direct oracles confirm with r = 2
  for (int t : {1, 2, 3}) {
    CAPTURE(t);
    const AnalysisReport r =
        analyze(hadamard_graph(hadamard_matrix_sylvester(t)), "hadamard");
    CHECK(r.bipartite.bipartite);
    CHECK(r.drg.is_drg);
    CHECK(r.diameter == 4);
    CHECK(r.condition1->verdict == Verdict::yes);
    CHECK(r.condition2->verdict == Verdict::yes);
    CHECK(r.sdrg_direct->ok());
    CHECK(r.antipodal_direct->ok());
    CHECK(r.antipodal_direct->r == 2);
    CHECK(r.consistency);
  }
}
