#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cayley/errors.hpp"

namespace cayley {

/// Labeled simple undirected graph.  Neighbor lists are sorted and
/// duplicate-free; labels are pairwise distinct.
struct SimpleGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::string> labels;

  bool has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
  }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  std::size_t edge_count() const {
    std::size_t s = 0;
    for (const auto& nb : adj) s += nb.size();
    return s / 2;
  }
};

inline SimpleGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges,
                              std::vector<std::string> labels = {}) {
  if (n < 0) throw std::invalid_argument("make_graph: negative vertex count");
  SimpleGraph g;
  g.n = n;
  g.adj.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("make_graph: endpoint out of range");
    if (u == v) throw std::invalid_argument("make_graph: self-loop");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nb : g.adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  }
  if (static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("make_graph: label count mismatch");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
    throw std::invalid_argument("make_graph: duplicate labels");
  g.labels = std::move(labels);
  return g;
}

/// Edges as (u, v) with u < v, sorted lexicographically.
inline std::vector<std::pair<int, int>> edge_list(const SimpleGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

/// A bijection on vertex indices; map[v] is the image of v.
using VertexBijection = std::vector<int>;

inline bool is_vertex_bijection(const VertexBijection& m, int n) {
  if (static_cast<int>(m.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int v : m) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

inline bool is_isomorphism(const SimpleGraph& a, const SimpleGraph& b, const VertexBijection& m) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  if (!is_vertex_bijection(m, a.n)) return false;
  for (int u = 0; u < a.n; ++u)
    for (int v : a.adj[u])
      if (u < v && !b.has_edge(m[u], m[v])) return false;
  return true;  // injective edge map + equal edge counts force the converse
}

inline bool is_automorphism(const SimpleGraph& g, const VertexBijection& m) {
  return is_isomorphism(g, g, m);
}

inline std::vector<int> bfs_distances(const SimpleGraph& g, int src) {
  std::vector<int> dist(g.n, -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.adj[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

/// Length of a shortest cycle; nullopt for forests.  BFS from every vertex:
/// a non-tree edge seen from root r closes a cycle of length
/// dist[u]+dist[v]+1, and the minimum over all roots is exact.
inline std::optional<int> girth(const SimpleGraph& g) {
  const auto edges = edge_list(g);
  int best = -1;
  std::vector<int> dist(g.n), parent(g.n);
  for (int r = 0; r < g.n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    dist[r] = 0;
    q.push(r);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        }
      }
    }
    for (auto [u, v] : edges) {
      if (dist[u] < 0 || dist[v] < 0) continue;
      if (parent[u] == v || parent[v] == u) continue;
      int len = dist[u] + dist[v] + 1;
      if (best < 0 || len < best) best = len;
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

struct GraphComponent {
  SimpleGraph graph;
  std::vector<int> to_parent;  // component vertex -> original vertex
};

/// Maximal connected induced subgraphs, ordered by smallest contained
/// original vertex index.
inline std::vector<GraphComponent> connected_components(const SimpleGraph& g) {
  std::vector<GraphComponent> out;
  std::vector<bool> seen(g.n, false);
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    std::vector<int> verts;
    std::queue<int> q;
    seen[s] = true;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      verts.push_back(u);
      for (int w : g.adj[u]) {
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
      }
    }
    std::sort(verts.begin(), verts.end());
    std::vector<int> local(g.n, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    for (int u : verts) {
      labels.push_back(g.labels[u]);
      for (int w : g.adj[u])
        if (u < w) edges.emplace_back(local[u], local[w]);
    }
    out.push_back({make_graph(static_cast<int>(verts.size()), edges, std::move(labels)), verts});
  }
  return out;
}

/// Vertex i of the result is edge_list(g)[i]; two vertices are adjacent iff
/// the edges share an endpoint.
inline SimpleGraph line_graph(const SimpleGraph& g) {
  const auto edges = edge_list(g);
  const int m = static_cast<int>(edges.size());
  std::vector<std::pair<int, int>> ledges;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) ledges.emplace_back(i, j);
    }
  }
  std::vector<std::string> labels;
  for (auto [u, v] : edges) labels.push_back(g.labels[u] + "-" + g.labels[v]);
  return make_graph(m, ledges, std::move(labels));
}

/// Labeled disjoint union; component i's labels are tagged "i:".  A
/// single-element union is returned unchanged.
inline SimpleGraph disjoint_union(const std::vector<SimpleGraph>& gs) {
  if (gs.size() == 1) return gs.front();
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < gs.size(); ++c) {
    for (int u = 0; u < gs[c].n; ++u) {
      labels.push_back(std::to_string(c) + ":" + gs[c].labels[u]);
      for (int w : gs[c].adj[u])
        if (u < w) edges.emplace_back(n + u, n + w);
    }
    n += gs[c].n;
  }
  return make_graph(n, edges, std::move(labels));
}

}  // namespace cayley
