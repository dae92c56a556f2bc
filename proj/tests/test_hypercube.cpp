#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "metdim/hypercube.hpp"

using namespace metdim::hc;

TEST_CASE("hamming distance and friends") {
  CHECK(hamming_distance(0b000, 0b000) == 0);
  CHECK(hamming_distance(0b101, 0b010) == 3);
  CHECK(hamming_distance(0b1100, 0b1010) == 2);

  CHECK(unit(0) == 1);
  CHECK(unit(3) == 8);
  CHECK(flip(3, 0b101, 1) == 0b111);
  CHECK(flip(4, flip(4, 0b1011, 2), 2) == 0b1011);

  CHECK(antipode(3, 0b000) == 0b111);
  CHECK(antipode(4, 0b0101) == 0b1010);
  for (Vertex u = 0; u < 32; ++u) CHECK(hamming_distance(u, antipode(5, u)) == 5);

  CHECK(full_mask(1) == 1);
  CHECK(full_mask(5) == 31);
  CHECK(vertex_count(6) == 64);
  CHECK_THROWS_AS(check_dim(0), std::invalid_argument);
  CHECK_THROWS_AS(check_dim(63), std::invalid_argument);
}

TEST_CASE("vertex bitstring convention: first character is coordinate 1") {
  CHECK(vertex_to_string(3, 0) == "000");
  CHECK(vertex_to_string(3, 3) == "110");
  CHECK(vertex_to_string(3, 4) == "001");
  CHECK(vertex_from_string(3, "110") == 3);
  CHECK(vertex_from_string(5, "10010") == 9);
  for (Vertex u = 0; u < 64; ++u) CHECK(vertex_from_string(6, vertex_to_string(6, u)) == u);

  CHECK_THROWS_AS(vertex_from_string(3, "10"), std::invalid_argument);
  CHECK_THROWS_AS(vertex_from_string(3, "1012"), std::invalid_argument);
  CHECK_THROWS_AS(vertex_from_string(2, "1x"), std::invalid_argument);
}

TEST_CASE("edge counts") {
  CHECK(edge_count(1) == 1);
  CHECK(edge_count(2) == 4);
  CHECK(edge_count(3) == 12);
  CHECK(edge_count(4) == 32);
  CHECK(edge_count(5) == 80);
  CHECK(edge_count(6) == 192);
}

TEST_CASE("canonical edges and the index bijection") {
  // canonical base always has the flipped coordinate at 0
  for (int d = 1; d <= 6; ++d)
    for (Vertex u = 0; u < vertex_count(d); ++u)
      for (int c = 0; c < d; ++c) {
        const CubeEdge e = canonical_edge(d, u, flip(d, u, c));
        CHECK(e.coord == c);
        CHECK(((e.base >> c) & 1) == 0);
        CHECK((e.base == u || e.base == flip(d, u, c)));
      }

  // edge_index is a bijection onto [0, m)
  for (int d = 1; d <= 6; ++d) {
    std::set<std::uint64_t> seen;
    for (Vertex u = 0; u < vertex_count(d); ++u)
      for (int c = 0; c < d; ++c) {
        const std::uint64_t idx = edge_index(d, canonical_edge(d, u, flip(d, u, c)));
        CHECK(idx < edge_count(d));
        seen.insert(idx);
        const CubeEdge back = edge_from_index(d, idx);
        CHECK(back == canonical_edge(d, u, flip(d, u, c)));
      }
    CHECK(seen.size() == edge_count(d));
  }
}

TEST_CASE("enumerate_edges lists each edge once, in index order") {
  for (int d = 1; d <= 6; ++d) {
    const auto edges = enumerate_edges(d);
    REQUIRE(edges.size() == edge_count(d));
    for (std::size_t i = 0; i < edges.size(); ++i) {
      CHECK(edge_index(d, edges[i]) == i);
      CHECK(((edges[i].base >> edges[i].coord) & 1) == 0);
    }
  }
}

TEST_CASE("for_each_edge matches enumerate_edges") {
  const auto listed = enumerate_edges(5);
  std::vector<CubeEdge> streamed;
  for_each_edge(5, [&](const CubeEdge& e) { streamed.push_back(e); });
  REQUIRE(streamed.size() == listed.size());
  for (std::size_t i = 0; i < listed.size(); ++i) CHECK(streamed[i] == listed[i]);
}

TEST_CASE("edge-to-vertex distance: fast path equals endpoint minimum") {
  for (int d = 1; d <= 8; ++d)
    for (const CubeEdge& e : enumerate_edges(d)) {
      const Vertex a = e.base, b = flip(d, e.base, e.coord);
      for (Vertex x = 0; x < vertex_count(d); ++x) {
        const int want = std::min(hamming_distance(a, x), hamming_distance(b, x));
        CHECK(edge_distance_fast(d, e, x) == want);
      }
    }
}

TEST_CASE("half-cube split") {
  SUBCASE("d=2, coordinate 1") {
    const auto [zero, one] = half_cube_split(2, 0);
    CHECK(zero.vertices() == std::vector<Vertex>{0, 2});
    CHECK(one.vertices() == std::vector<Vertex>{1, 3});
  }
  SUBCASE("halves partition the cube") {
    for (int d = 2; d <= 6; ++d)
      for (int c = 0; c < d; ++c) {
        const auto [zero, one] = half_cube_split(d, c);
        CHECK(zero.size() == vertex_count(d) / 2);
        CHECK(one.size() == vertex_count(d) / 2);
        for (Vertex u = 0; u < vertex_count(d); ++u) {
          CHECK(zero.contains(u) != one.contains(u));
          CHECK(zero.contains(u) == (((u >> c) & 1) == 0));
        }
      }
  }
}

TEST_CASE("edge names use 1-based coordinates") {
  CHECK(edge_to_string(3, CubeEdge{0, 0}) == "000@1");
  CHECK(edge_to_string(3, CubeEdge{2, 0}) == "010@1");
  CHECK(edge_to_string(3, CubeEdge{1, 2}) == "100@3");
  CHECK(edge_to_string(5, CubeEdge{9, 1}) == "10010@2");
}
