#pragma once
// Bit-level hypercube Q_d: vertices are d-bit words, edges are single-bit
// flips. Coordinate 1 lives at bit index 0, so a vertex (u_1,...,u_d) prints
// as "u_1 u_2 ... u_d" with the first character taken from bit 0.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace metdim::hc {

using Vertex = std::uint64_t;

inline constexpr int kMaxDim = 62;          // edge indices must fit in uint64
inline constexpr int kMaxMaterializeDim = 20;  // full edge lists only below here

void check_dim(int d);

inline Vertex full_mask(int d) { return (Vertex{1} << d) - 1; }
inline Vertex vertex_count(int d) { return Vertex{1} << d; }

inline int hamming_distance(Vertex u, Vertex v) {
  return __builtin_popcountll(u ^ v);
}

// coord is 0-based here and everywhere in code; printing adds the 1.
Vertex flip(int d, Vertex u, int coord);

inline Vertex antipode(int d, Vertex u) { return u ^ full_mask(d); }

inline Vertex unit(int coord) { return Vertex{1} << coord; }

// Canonical undirected edge: the endpoint with bit `coord` cleared, plus the
// flipped coordinate. Indexed by coord-major order: all edges flipping
// coordinate 0 first (ordered by base), then coordinate 1, and so on.
struct CubeEdge {
  Vertex base = 0;  // bit `coord` of base is always 0
  int coord = 0;
  friend bool operator==(const CubeEdge&, const CubeEdge&) = default;
};

std::uint64_t edge_count(int d);  // d * 2^(d-1)

CubeEdge canonical_edge(int d, Vertex u, Vertex v);  // throws if u,v not adjacent
std::uint64_t edge_index(int d, const CubeEdge& e);
CubeEdge edge_from_index(int d, std::uint64_t idx);

std::vector<CubeEdge> enumerate_edges(int d);  // materialized; d <= 20

// Visit edges in index order without materializing; usable through d = 62.
template <class F>
void for_each_edge(int d, F&& f) {
  check_dim(d);
  const Vertex half = Vertex{1} << (d - 1);
  for (int c = 0; c < d; ++c)
    for (Vertex r = 0; r < half; ++r) f(edge_from_index(d, std::uint64_t(c) * half + r));
}

// Distance from edge e = {base, base^unit(coord)} to vertex x: the nearer
// endpoint. One popcount instead of two plus a min.
inline int edge_distance_fast(int d, const CubeEdge& e, Vertex x) {
  (void)d;
  const Vertex t = e.base ^ x;
  const int p = __builtin_popcountll(t);
  return ((t >> e.coord) & 1) ? p - 1 : p;
}

// The two half-cubes split by coordinate `coord` (0-based): side 0 holds the
// vertices with that coordinate 0, side 1 the rest. Each induces Q_(d-1).
struct HalfCube {
  int d = 0;
  int coord = 0;
  int side = 0;
  bool contains(Vertex u) const { return int((u >> coord) & 1) == side; }
  Vertex size() const { return Vertex{1} << (d - 1); }
  std::vector<Vertex> vertices() const;  // ascending; d <= 20
};

std::pair<HalfCube, HalfCube> half_cube_split(int d, int coord);

std::string vertex_to_string(int d, Vertex u);
Vertex vertex_from_string(int d, std::string_view s);
std::string edge_to_string(int d, const CubeEdge& e);  // "bits@coord", coord 1-based

}  // namespace metdim::hc
