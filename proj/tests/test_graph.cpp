#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <vector>

#include "metdim/graph.hpp"
#include "metdim/hypercube.hpp"

using namespace metdim;

namespace {

Graph path4() {
  return Graph::from_edges({{0, 1}, {1, 2}, {2, 3}});
}

Graph cycle(int k) {
  std::vector<std::pair<long long, long long>> e;
  for (int i = 0; i < k; ++i) e.push_back({i, (i + 1) % k});
  return Graph::from_edges(e);
}

Graph cube_graph(int d) {
  std::vector<std::pair<long long, long long>> e;
  for (const auto& ce : hc::enumerate_edges(d))
    e.push_back({(long long)(ce.base), (long long)(ce.base ^ hc::unit(ce.coord))});
  return Graph::from_edges(e);
}

}  // namespace

TEST_CASE("from_edges basics") {
  const Graph g = path4();
  CHECK(g.n == 4);
  CHECK(g.m() == 3);
  CHECK_FALSE(g.relabeled);
  CHECK(g.adj[1] == std::vector<int>{0, 2});
  CHECK(g.has_edge(2, 3));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.edge_id(1, 2).has_value());
  CHECK_FALSE(g.edge_id(0, 2).has_value());
  // edges are stored u < v, sorted
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("from_edges remaps sparse labels") {
  const Graph g = Graph::from_edges({{10, 70}, {70, 42}});
  CHECK(g.n == 3);
  CHECK(g.relabeled);
  // dense ids follow first-seen-in-sorted-label order; original labels kept
  std::vector<long long> labels = g.original_label;
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<long long>{10, 42, 70});
}

TEST_CASE("from_edges rejects bad input") {
  CHECK_THROWS_AS(Graph::from_edges({}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges({{1, 1}}), std::invalid_argument);          // self-loop
  CHECK_THROWS_AS(Graph::from_edges({{-1, 2}}), std::invalid_argument);         // negative
  CHECK_THROWS_AS(Graph::from_edges({{0, 1}, {2, 3}}), std::invalid_argument);  // disconnected

  std::vector<std::pair<long long, long long>> chain;
  for (int i = 0; i <= kMaxGraphVertices; ++i) chain.push_back({i, i + 1});
  CHECK_THROWS_AS(Graph::from_edges(chain), std::invalid_argument);  // oversized

  // duplicate edges collapse instead of erroring
  const Graph g = Graph::from_edges({{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.m() == 1);
}

TEST_CASE("load_graph text format") {
  std::istringstream in(
      "# toy path\n"
      "\n"
      "0 1\n"
      "  1   2\n"
      "2 3\n");
  const Graph g = load_graph(in);
  CHECK(g.n == 4);
  CHECK(g.m() == 3);

  SUBCASE("extra tokens are rejected with the line number") {
    std::istringstream bad("0 1\n1 2 7\n");
    try {
      load_graph(bad);
      FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  SUBCASE("short lines are rejected") {
    std::istringstream bad("0 1\n2\n");
    CHECK_THROWS_AS(load_graph(bad), std::invalid_argument);
  }
  SUBCASE("missing files are rejected") {
    CHECK_THROWS_AS(load_graph_file("/nonexistent/graph.txt"), std::invalid_argument);
  }
}

TEST_CASE("all-pairs distances") {
  SUBCASE("path") {
    const Graph g = path4();
    const DistanceMatrix dm = all_pairs_distances(g);
    CHECK(dm.at(0, 0) == 0);
    CHECK(dm.at(0, 3) == 3);
    CHECK(dm.at(1, 3) == 2);
    CHECK(dm.diameter() == 3);
  }
  SUBCASE("even cycle") {
    const Graph g = cycle(6);
    const DistanceMatrix dm = all_pairs_distances(g);
    CHECK(dm.at(0, 3) == 3);
    CHECK(dm.at(2, 5) == 3);
    CHECK(dm.at(1, 2) == 1);
    CHECK(dm.diameter() == 3);
  }
  SUBCASE("BFS distances on a cube match popcount") {
    for (int d = 1; d <= 4; ++d) {
      const Graph g = cube_graph(d);
      const DistanceMatrix dm = all_pairs_distances(g);
      for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
          CHECK(dm.at(u, v) == hc::hamming_distance(hc::Vertex(u), hc::Vertex(v)));
    }
  }
}

TEST_CASE("bipartition") {
  SUBCASE("even cycles and cubes are bipartite") {
    for (int k : {4, 6, 8}) {
      const Bipartition b = bipartition(cycle(k));
      REQUIRE(b.bipartite);
      const Graph g = cycle(k);
      for (const auto& [u, v] : g.edges) CHECK(b.color[u] != b.color[v]);
    }
    CHECK(bipartition(cube_graph(4)).bipartite);
  }
  SUBCASE("odd cycle certificate is a real odd closed walk") {
    const Graph g = cycle(5);
    const Bipartition b = bipartition(g);
    REQUIRE_FALSE(b.bipartite);
    REQUIRE(!b.odd_cycle.empty());
    CHECK(b.odd_cycle.size() % 2 == 1);  // odd vertex count = odd cycle length
    for (std::size_t i = 0; i + 1 < b.odd_cycle.size(); ++i)
      CHECK(g.has_edge(b.odd_cycle[i], b.odd_cycle[i + 1]));
    CHECK(g.has_edge(b.odd_cycle.back(), b.odd_cycle.front()));  // closing edge
  }
}

TEST_CASE("edge-to-vertex distance") {
  const Graph g = path4();
  const DistanceMatrix dm = all_pairs_distances(g);
  CHECK(edge_vertex_distance(g, dm, 1, 2, 0) == 1);
  CHECK(edge_vertex_distance(g, dm, 1, 2, 3) == 1);
  CHECK(edge_vertex_distance(g, dm, 0, 1, 0) == 0);
  CHECK(edge_vertex_distance(g, dm, 2, 1, 3) == 1);  // orientation-insensitive
  CHECK_THROWS_AS(edge_vertex_distance(g, dm, 0, 2, 1), std::invalid_argument);
}
