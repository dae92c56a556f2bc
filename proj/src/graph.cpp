#include "metdim/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace metdim {

bool Graph::has_edge(int u, int v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::optional<int> Graph::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it == edges.end() || *it != std::make_pair(u, v)) return std::nullopt;
  return int(it - edges.begin());
}

Graph Graph::from_edges(const std::vector<std::pair<long long, long long>>& raw) {
  if (raw.empty()) throw std::invalid_argument("graph has no edges");

  std::map<long long, int> id;  // ordered: dense ids follow label order
  for (auto [u, v] : raw) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0) throw std::invalid_argument("negative vertex label");
    id.emplace(u, 0);
    id.emplace(v, 0);
  }
  if (int(id.size()) > kMaxGraphVertices)
    throw std::invalid_argument("graph exceeds " + std::to_string(kMaxGraphVertices) +
                                " vertices");

  Graph g;
  g.n = int(id.size());
  g.original_label.reserve(id.size());
  for (auto& [label, dense] : id) {
    dense = int(g.original_label.size());
    g.original_label.push_back(label);
    if (label != (long long)g.original_label.size() - 1) g.relabeled = true;
  }

  g.edges.reserve(raw.size());
  for (auto [u, v] : raw) {
    int a = id[u], b = id[v];
    if (a > b) std::swap(a, b);
    g.edges.emplace_back(a, b);
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());

  g.adj.assign(g.n, {});
  for (auto [a, b] : g.edges) {
    g.adj[a].push_back(b);
    g.adj[b].push_back(a);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());

  // Connectivity: one BFS from vertex 0.
  std::vector<char> seen(g.n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (int w : g.adj[queue[h]])
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  for (int v = 0; v < g.n; ++v)
    if (!seen[v])
      throw std::invalid_argument("graph is disconnected: vertex " +
                                  std::to_string(g.original_label[v]) +
                                  " unreachable from vertex " +
                                  std::to_string(g.original_label[0]));
  return g;
}

Graph load_graph(std::istream& in) {
  std::vector<std::pair<long long, long long>> raw;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long u, v;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra))
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected \"u v\", got \"" + line + "\"");
    if (u == v)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": self-loop at vertex " +
                                  std::to_string(u));
    if (u < 0 || v < 0)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": negative vertex label");
    raw.emplace_back(u, v);
  }
  if (raw.empty()) throw std::invalid_argument("no edges in input");
  return Graph::from_edges(raw);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  return load_graph(f);
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix dm;
  dm.n = g.n;
  dm.d.assign(std::size_t(g.n) * g.n, 0);
  std::vector<int> queue;
  std::vector<std::uint16_t> dist(g.n);
  for (int s = 0; s < g.n; ++s) {
    std::fill(dist.begin(), dist.end(), std::uint16_t(0xFFFF));
    dist[s] = 0;
    queue.assign(1, s);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int u = queue[h];
      for (int w : g.adj[u])
        if (dist[w] == 0xFFFF) {
          dist[w] = std::uint16_t(dist[u] + 1);
          queue.push_back(w);
        }
    }
    std::copy(dist.begin(), dist.end(), dm.d.begin() + std::size_t(s) * g.n);
  }
  return dm;
}

int DistanceMatrix::diameter() const {
  return int(*std::max_element(d.begin(), d.end()));
}

Bipartition bipartition(const Graph& g) {
  Bipartition bp;
  bp.color.assign(g.n, -1);
  std::vector<int> parent(g.n, -1), depth(g.n, 0), queue{0};
  bp.color[0] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int u = queue[h];
    for (int w : g.adj[u]) {
      if (bp.color[w] < 0) {
        bp.color[w] = std::int8_t(1 - bp.color[u]);
        parent[w] = u;
        depth[w] = depth[u] + 1;
        queue.push_back(w);
      } else if (bp.color[w] == bp.color[u]) {
        // Odd cycle: walk both endpoints up to their meeting point.
        std::vector<int> side_u{u}, side_w{w};
        int a = u, b = w;
        while (depth[a] > depth[b]) side_u.push_back(a = parent[a]);
        while (depth[b] > depth[a]) side_w.push_back(b = parent[b]);
        while (a != b) {
          side_u.push_back(a = parent[a]);
          side_w.push_back(b = parent[b]);
        }
        bp.odd_cycle = side_u;  // u .. lca
        for (auto it = side_w.rbegin() + 1; it != side_w.rend(); ++it)
          bp.odd_cycle.push_back(*it);  // lca-child .. w, then the uw edge closes it
        bp.bipartite = false;
        bp.color.clear();
        return bp;
      }
    }
  }
  bp.bipartite = true;
  return bp;
}

int edge_vertex_distance(const Graph& g, const DistanceMatrix& dm, int u, int v, int x) {
  if (u < 0 || v < 0 || x < 0 || u >= g.n || v >= g.n || x >= g.n)
    throw std::invalid_argument("vertex out of range");
  if (!g.has_edge(u, v))
    throw std::invalid_argument("(" + std::to_string(u) + "," + std::to_string(v) +
                                ") is not an edge");
  return std::min(dm.at(u, x), dm.at(v, x));
}

}  // namespace metdim
