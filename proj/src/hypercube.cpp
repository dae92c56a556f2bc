#include "metdim/hypercube.hpp"

namespace metdim::hc {

void check_dim(int d) {
  if (d < 1 || d > kMaxDim)
    throw std::invalid_argument("hypercube dimension must be in [1, " +
                                std::to_string(kMaxDim) + "], got " + std::to_string(d));
}

Vertex flip(int d, Vertex u, int coord) {
  check_dim(d);
  if (coord < 0 || coord >= d)
    throw std::invalid_argument("coordinate " + std::to_string(coord) +
                                " out of range for d=" + std::to_string(d));
  return u ^ unit(coord);
}

std::uint64_t edge_count(int d) {
  check_dim(d);
  return std::uint64_t(d) << (d - 1);
}

CubeEdge canonical_edge(int d, Vertex u, Vertex v) {
  check_dim(d);
  const Vertex x = u ^ v;
  if (x == 0 || (x & (x - 1)) != 0 || (u | v) > full_mask(d))
    throw std::invalid_argument("not an edge of Q_" + std::to_string(d));
  const int coord = __builtin_ctzll(x);
  return CubeEdge{u & ~x, coord};
}

// Rank of base among the 2^(d-1) words with bit `coord` clear: squeeze the
// hole shut. The inverse re-opens it.
static std::uint64_t squeeze(Vertex base, int coord) {
  const Vertex low = base & ((Vertex{1} << coord) - 1);
  return (base >> (coord + 1) << coord) | low;
}
static Vertex unsqueeze(std::uint64_t rank, int coord) {
  const Vertex low = rank & ((Vertex{1} << coord) - 1);
  return (rank >> coord << (coord + 1)) | low;
}

std::uint64_t edge_index(int d, const CubeEdge& e) {
  check_dim(d);
  if (e.coord < 0 || e.coord >= d || ((e.base >> e.coord) & 1) || e.base > full_mask(d))
    throw std::invalid_argument("malformed edge");
  return (std::uint64_t(e.coord) << (d - 1)) + squeeze(e.base, e.coord);
}

CubeEdge edge_from_index(int d, std::uint64_t idx) {
  check_dim(d);
  if (idx >= edge_count(d)) throw std::invalid_argument("edge index out of range");
  const std::uint64_t half = std::uint64_t{1} << (d - 1);
  const int coord = int(idx / half);
  return CubeEdge{unsqueeze(idx % half, coord), coord};
}

std::vector<CubeEdge> enumerate_edges(int d) {
  check_dim(d);
  if (d > kMaxMaterializeDim)
    throw std::invalid_argument("refusing to materialize edges for d > " +
                                std::to_string(kMaxMaterializeDim));
  std::vector<CubeEdge> out;
  out.reserve(edge_count(d));
  for_each_edge(d, [&](const CubeEdge& e) { out.push_back(e); });
  return out;
}

std::vector<Vertex> HalfCube::vertices() const {
  if (d > kMaxMaterializeDim)
    throw std::invalid_argument("refusing to materialize half-cube for d > " +
                                std::to_string(kMaxMaterializeDim));
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex u = 0; u < vertex_count(d); ++u)
    if (contains(u)) out.push_back(u);
  return out;
}

std::pair<HalfCube, HalfCube> half_cube_split(int d, int coord) {
  check_dim(d);
  if (coord < 0 || coord >= d)
    throw std::invalid_argument("coordinate " + std::to_string(coord) +
                                " out of range for d=" + std::to_string(d));
  return {HalfCube{d, coord, 0}, HalfCube{d, coord, 1}};
}

std::string vertex_to_string(int d, Vertex u) {
  check_dim(d);
  if (u > full_mask(d)) throw std::invalid_argument("vertex out of range");
  std::string s(d, '0');
  for (int i = 0; i < d; ++i)
    if ((u >> i) & 1) s[i] = '1';
  return s;
}

Vertex vertex_from_string(int d, std::string_view s) {
  check_dim(d);
  if (int(s.size()) != d)
    throw std::invalid_argument("expected " + std::to_string(d) + " bits, got \"" +
                                std::string(s) + "\"");
  Vertex u = 0;
  for (int i = 0; i < d; ++i) {
    if (s[i] == '1')
      u |= unit(i);
    else if (s[i] != '0')
      throw std::invalid_argument("bad bitstring \"" + std::string(s) + "\"");
  }
  return u;
}

std::string edge_to_string(int d, const CubeEdge& e) {
  return vertex_to_string(d, e.base) + "@" + std::to_string(e.coord + 1);
}

}  // namespace metdim::hc
