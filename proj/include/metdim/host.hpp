#pragma once
// The two hosts the resolver/solver layer runs on, behind one duck-typed
// interface. Element ids are uniform across both: vertices are 0..n-1 in
// label order, edges are n..n+m-1 in edge-enumeration order.

#include <string>
#include <utility>

#include "metdim/graph.hpp"
#include "metdim/hypercube.hpp"

namespace metdim {

enum class Kind { metric, edge, mixed };

struct HypercubeHost {
  static constexpr int kMaxHostDim = 20;

  int d;
  int n;  // 2^d
  int m;  // d * 2^(d-1)

  explicit HypercubeHost(int dim) : d(dim) {
    hc::check_dim(d);
    if (d > kMaxHostDim)
      throw std::invalid_argument("hypercube host limited to d <= " +
                                  std::to_string(kMaxHostDim));
    n = 1 << d;
    m = int(hc::edge_count(d));
  }

  int vertex_count() const { return n; }
  int edge_count() const { return m; }
  int dist(int u, int v) const { return hc::hamming_distance(hc::Vertex(u), hc::Vertex(v)); }
  int edge_dist(int e, int x) const {
    return hc::edge_distance_fast(d, hc::edge_from_index(d, std::uint64_t(e)), hc::Vertex(x));
  }
  std::pair<int, int> edge_endpoints(int e) const {
    const auto ce = hc::edge_from_index(d, std::uint64_t(e));
    return {int(ce.base), int(ce.base ^ hc::unit(ce.coord))};
  }
  std::string vertex_name(int v) const { return hc::vertex_to_string(d, hc::Vertex(v)); }
  std::string edge_name(int e) const {
    return hc::edge_to_string(d, hc::edge_from_index(d, std::uint64_t(e)));
  }
  std::string id() const { return "Q_" + std::to_string(d); }
};

struct GraphHost {
  Graph g;
  DistanceMatrix dm;
  std::string name;

  explicit GraphHost(Graph graph, std::string label = "graph")
      : g(std::move(graph)), dm(all_pairs_distances(g)), name(std::move(label)) {}

  int vertex_count() const { return g.n; }
  int edge_count() const { return g.m(); }
  int dist(int u, int v) const { return dm.at(u, v); }
  int edge_dist(int e, int x) const {
    const auto [u, v] = g.edges[e];
    return std::min(dm.at(u, x), dm.at(v, x));
  }
  std::pair<int, int> edge_endpoints(int e) const { return g.edges[e]; }
  std::string vertex_name(int v) const { return std::to_string(g.original_label[v]); }
  std::string edge_name(int e) const {
    const auto [u, v] = g.edges[e];
    return "{" + vertex_name(u) + "," + vertex_name(v) + "}";
  }
  std::string id() const { return name; }
};

// Element-id range resolved against a kind: metric sees vertices, edge sees
// edges, mixed sees both.
template <class Host>
std::pair<int, int> element_range(const Host& h, Kind kind) {
  const int n = h.vertex_count(), m = h.edge_count();
  switch (kind) {
    case Kind::metric: return {0, n};
    case Kind::edge: return {n, n + m};
    default: return {0, n + m};
  }
}

template <class Host>
int element_dist(const Host& h, int elem, int v) {
  const int n = h.vertex_count();
  return elem < n ? h.dist(elem, v) : h.edge_dist(elem - n, v);
}

template <class Host>
std::string element_name(const Host& h, int elem) {
  const int n = h.vertex_count();
  return elem < n ? h.vertex_name(elem) : h.edge_name(elem - n);
}

std::string to_string(Kind k);
Kind kind_from_string(const std::string& s);

}  // namespace metdim
