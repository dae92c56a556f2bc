#pragma once
// General-graph backend: edge-list loading, all-pairs BFS distances,
// bipartition testing. Everything here is immutable after construction and
// safe for concurrent reads; construction itself is single-threaded.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace metdim {

inline constexpr int kMaxGraphVertices = 1 << 14;

struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;            // sorted neighbor lists
  std::vector<std::pair<int, int>> edges;       // u < v, sorted
  std::vector<long long> original_label;        // dense id -> input label
  bool relabeled = false;                       // input labels were not 0..n-1

  // Dedupes, remaps sparse labels to dense 0..n-1, rejects self-loops,
  // empty inputs, oversized inputs and disconnected graphs.
  static Graph from_edges(const std::vector<std::pair<long long, long long>>& raw);

  int m() const { return int(edges.size()); }
  bool has_edge(int u, int v) const;
  std::optional<int> edge_id(int u, int v) const;  // index into `edges`
};

// Text format: one "u v" pair per line, '#' starts a comment line, blank
// lines ignored. Errors carry 1-based line numbers.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);

struct DistanceMatrix {
  int n = 0;
  std::vector<std::uint16_t> d;  // row-major n*n
  int at(int u, int v) const { return d[std::size_t(u) * n + v]; }
  int diameter() const;
};

DistanceMatrix all_pairs_distances(const Graph& g);

struct Bipartition {
  bool bipartite = false;
  std::vector<std::int8_t> color;  // 0/1 per vertex when bipartite
  std::vector<int> odd_cycle;      // closed walk certificate when not
};

Bipartition bipartition(const Graph& g);

// Distance from edge {u,v} to vertex x: the nearer endpoint. Throws when
// (u,v) is not an edge of g.
int edge_vertex_distance(const Graph& g, const DistanceMatrix& dm, int u, int v, int x);

}  // namespace metdim
