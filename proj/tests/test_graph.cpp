#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drg/drg_check.hpp"
#include "drg/families.hpp"
#include "drg/graph.hpp"

#include <set>

using namespace drg;
using families::cycle;
using families::hypercube;
using families::kneser;

namespace {

Graph path4() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  return g;
}

Graph perfect_matching(int n) {
  Graph g(n);
  for (int i = 0; i < n; i += 2) g.add_edge(i, i + 1);
  return g;
}

}  // namespace

TEST_CASE("graph construction guards") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);  // duplicate
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
}

TEST_CASE("bfs distances") {
  const auto c4 = distances(cycle(4));
  CHECK(c4.diameter == 2);
  CHECK(c4.dist[0][2] == 2);
  CHECK(c4.connected);

  Graph k2(2);
  k2.add_edge(0, 1);
  CHECK(distances(k2).diameter == 1);

  const Graph q4 = hypercube(4);
  const auto dq = distances(q4);
  CHECK(dq.diameter == 4);
  for (int v = 0; v < 16; ++v) CHECK(dq.dist[v][v ^ 15] == 4);

  const auto dm = distances(perfect_matching(4));
  CHECK_FALSE(dm.connected);
  CHECK(dm.dist[0][2] == -1);
}

TEST_CASE("intersection arrays by exhaustive counting") {
  const auto c8 = intersection_array(cycle(8));
  REQUIRE(c8.has_value());
  CHECK(c8->to_string() == "2 1 1 1 ; 1 1 1 2");

  const auto q4 = intersection_array(hypercube(4));
  REQUIRE(q4.has_value());
  CHECK(q4->to_string() == "4 3 2 1 ; 1 2 3 4");

  const DrgCheck p4 = check_distance_regular(path4());
  CHECK_FALSE(p4.is_drg);
  REQUIRE(p4.witness.has_value());

  // C9: the odd case, array {2,1,1,1;1,1,1,1}
  const auto c9 = intersection_array(cycle(9));
  REQUIRE(c9.has_value());
  CHECK(c9->to_string() == "2 1 1 1 ; 1 1 1 1");
}

TEST_CASE("derived array quantities") {
  const IntersectionArray q4 = IntersectionArray::parse("4 3 2 1 ; 1 2 3 4");
  CHECK(q4.k() == 4);
  CHECK(q4.a1() == 0);
  CHECK(q4.b1() == 3);
  const auto kv = q4.k_values();
  REQUIRE(kv.has_value());
  CHECK(*kv == std::array<long long, 5>{1, 4, 6, 4, 1});
  CHECK(*q4.n() == 16);
  CHECK(q4.structurally_valid());

  const IntersectionArray o5 = IntersectionArray::parse("5 4 4 3 ; 1 1 2 2");
  CHECK(*o5.n() == 126);
  CHECK(o5.a(4) == 3);

  // double counting: k_i * b_i = k_{i+1} * c_{i+1}
  for (const auto& ia : {q4, o5}) {
    const auto k = *ia.k_values();
    for (int i = 0; i < 4; ++i) CHECK(k[i] * ia.b[i] == k[i + 1] * ia.c[i]);
  }
}

TEST_CASE("distance graphs") {
  const Graph c8 = cycle(8);
  const Graph g4 = distance_graph(c8, 4);
  CHECK(g4.edge_count() == 4);
  for (int v = 0; v < 8; ++v) CHECK(g4.degree(v) == 1);

  const Graph q4 = hypercube(4);
  const Graph q4d = distance_graph(q4, 4);
  CHECK(q4d.edge_count() == 8);
  for (int v = 0; v < 16; ++v) CHECK(q4d.adjacent(v, v ^ 15));

  // i = 1 gives the graph back
  const Graph same = distance_graph(c8, 1);
  CHECK(graph_to_string(same) == graph_to_string(c8));

  CHECK_THROWS_AS(distance_graph(c8, 5), std::invalid_argument);
  CHECK_THROWS_AS(distance_graph(c8, 0), std::invalid_argument);
}

TEST_CASE("strong regularity oracle") {
  const SrgResult matching = srg_params(perfect_matching(16));
  REQUIRE(matching.ok());
  CHECK(matching.params.n == 16);
  CHECK(matching.params.k == 1);
  CHECK(matching.params.lambda == 0);
  CHECK(matching.params.mu == 0);
  CHECK(matching.params.identity_holds());

  const SrgResult petersen = srg_params(kneser(5, 2));
  REQUIRE(petersen.ok());
  CHECK(petersen.params.n == 10);
  CHECK(petersen.params.k == 3);
  CHECK(petersen.params.lambda == 0);
  CHECK(petersen.params.mu == 1);
  CHECK(petersen.params.identity_holds());

  const SrgResult c6 = srg_params(cycle(6));
  CHECK_FALSE(c6.ok());
  REQUIRE(c6.witness.has_value());

  // degenerate cases
  CHECK(srg_params(kneser(3, 1)).status == SrgResult::Status::degenerate_complete);
  CHECK(srg_params(Graph(4)).status == SrgResult::Status::degenerate_empty);

  // non-regular graph: witness pair with differing degrees
  const SrgResult p4 = srg_params(path4());
  CHECK_FALSE(p4.ok());
  CHECK(p4.witness.has_value());
}

TEST_CASE("antipodal fibres oracle") {
  const AntipodalResult q4 = antipodal_fibres(hypercube(4));
  REQUIRE(q4.ok());
  CHECK(q4.r == 2);
  CHECK(q4.fibres.size() == 8);

  const AntipodalResult c8 = antipodal_fibres(cycle(8));
  REQUIRE(c8.ok());
  CHECK(c8.r == 2);
  CHECK(c8.fibres.size() == 4);

  const AntipodalResult pet = antipodal_fibres(kneser(5, 2));
  CHECK_FALSE(pet.ok());
  CHECK(pet.status == AntipodalResult::Status::not_antipodal);

  const AntipodalResult c9 = antipodal_fibres(cycle(9));
  CHECK_FALSE(c9.ok());
}

TEST_CASE("bipartiteness with witnesses") {
  CHECK(is_bipartite(hypercube(4)).bipartite);
  CHECK(is_bipartite(cycle(8)).bipartite);
  CHECK_FALSE(is_bipartite(kneser(3, 1)).bipartite);

  const BipartiteResult o5 = is_bipartite(kneser(9, 4));
  CHECK_FALSE(o5.bipartite);

  for (const Graph& g : {kneser(3, 1), cycle(9), kneser(9, 4)}) {
    const BipartiteResult r = is_bipartite(g);
    REQUIRE_FALSE(r.bipartite);
    const auto& cyc = r.odd_cycle;
    REQUIRE(cyc.size() >= 3);
    CHECK(cyc.size() % 2 == 1);
    std::set<int> distinct(cyc.begin(), cyc.end());
    CHECK(distinct.size() == cyc.size());
    for (size_t i = 0; i < cyc.size(); ++i)
      CHECK(g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
  }

  // two-coloring witness is proper
  const Graph q4 = hypercube(4);
  const BipartiteResult coloring = is_bipartite(q4);
  for (int v = 0; v < 16; ++v)
    for (int w : q4.neighbors(v)) CHECK(coloring.coloring[v] != coloring.coloring[w]);
}

TEST_CASE("cross-oracle: antipodal iff distance-d graph is a union of equal cliques") {
  struct Case {
    Graph g;
    const char* name;
  };
  const Case cases[] = {
      {hypercube(4), "Q4"},
      {cycle(8), "C8"},
      {cycle(9), "C9"},
      {kneser(5, 2), "Petersen"},
      {kneser(9, 4), "O5"},
      {families::hadamard_graph(families::hadamard_matrix_sylvester(2)), "H4"},
  };
  for (const auto& [g, name] : cases) {
    CAPTURE(name);
    const DistanceData dd = distances(g);
    const AntipodalResult anti = antipodal_fibres(g, dd);
    const SrgResult srg = srg_params(distance_graph(g, dd, dd.diameter));
    const bool union_of_cliques = srg.ok() && srg.params.mu == 0;
    CHECK(anti.ok() == union_of_cliques);
    if (anti.ok()) CHECK(srg.params.k == anti.r - 1);
  }
}

TEST_CASE("kneser(9,4) is the 126-vertex degree-5 negative control") {
  const Graph o5 = kneser(9, 4);
  CHECK(o5.vertex_count() == 126);
  for (int v = 0; v < 126; ++v) CHECK(o5.degree(v) == 5);
  const auto ia = intersection_array(o5);
  REQUIRE(ia.has_value());
  CHECK(ia->to_string() == "5 4 4 3 ; 1 1 2 2");
  CHECK_FALSE(srg_params(distance_graph(o5, 4)).ok());
}
