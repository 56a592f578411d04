#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include "cayley/graph.hpp"
#include "cayley/perm.hpp"

namespace cayley {

/// map[v] = b[a[v]]: apply a first, then b (same convention as compose()).
inline VertexBijection compose_map(const VertexBijection& a, const VertexBijection& b) {
  VertexBijection r(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) r[v] = b[a[v]];
  return r;
}

inline VertexBijection inverse_map(const VertexBijection& a) {
  VertexBijection r(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) r[a[v]] = static_cast<int>(v);
  return r;
}

inline VertexBijection identity_map(int n) {
  VertexBijection r(n);
  for (int v = 0; v < n; ++v) r[v] = v;
  return r;
}

/// Closure of the generated map group, sorted; identity included.
inline std::vector<VertexBijection> close_map_group(const std::vector<VertexBijection>& gens,
                                                    int n,
                                                    std::uint64_t cap = kDefaultElementCap) {
  std::unordered_set<std::vector<int>, detail::VecIntHash> seen;
  std::vector<VertexBijection> todo = {identity_map(n)};
  seen.insert(todo.front());
  for (std::size_t head = 0; head < todo.size(); ++head) {
    VertexBijection cur = todo[head];  // copy: todo reallocates
    for (const auto& g : gens) {
      auto w = compose_map(g, cur);
      if (seen.insert(w).second) {
        if (seen.size() > cap) throw CapExceeded("close_map_group: cap exceeded");
        todo.push_back(std::move(w));
      }
    }
  }
  std::sort(todo.begin(), todo.end());
  return todo;
}

/// Equitable partition by iterated neighbor-color refinement (stable
/// degree-based colors).  Color classes are automorphism-invariant.
inline std::vector<int> equitable_colors(const SimpleGraph& g) {
  std::vector<int> color(g.n);
  {
    std::map<int, int> rank;
    for (int v = 0; v < g.n; ++v) rank[g.degree(v)] = 0;
    int next = 0;
    for (auto& [deg, id] : rank) id = next++;
    for (int v = 0; v < g.n; ++v) color[v] = rank[g.degree(v)];
  }
  int classes = color.empty() ? 0 : 1 + *std::max_element(color.begin(), color.end());
  for (int round = 0; round < g.n; ++round) {
    std::map<std::vector<int>, int> sig_id;
    std::vector<std::vector<int>> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      sig[v].push_back(color[v]);
      for (int w : g.adj[v]) sig[v].push_back(color[w]);
      std::sort(sig[v].begin() + 1, sig[v].end());
      sig_id[sig[v]] = 0;
    }
    int next = 0;
    for (auto& [s, id] : sig_id) id = next++;
    if (next == classes) break;  // refinement is monotone; equal count = stable
    classes = next;
    for (int v = 0; v < g.n; ++v) color[v] = sig_id[sig[v]];
  }
  return color;
}

namespace detail {

/// Backtracking search for adjacency-preserving bijections A -> B.  Vertices
/// of A are processed in BFS order (per component, lowest index first), so
/// every non-root vertex has a mapped neighbor whose image anchors the
/// candidate scan.  cnt_a[v] counts mapped neighbors of v in A; cnt_b[w]
/// counts mapped images adjacent to w in B.  A candidate (v, w) is accepted
/// iff classes match, cnt_b[w] == cnt_a[v] and every mapped neighbor of v
/// maps into N(w) — together these force exact neighborhood correspondence.
class MapSearch {
 public:
  MapSearch(const SimpleGraph& a, const SimpleGraph& b, const std::vector<int>& class_a,
            const std::vector<int>& class_b, bool enumerate_all, std::uint64_t cap)
      : a_(a), b_(b), class_a_(class_a), class_b_(class_b),
        enumerate_all_(enumerate_all), cap_(cap) {
    const int n = a_.n;
    order_.reserve(n);
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::vector<int> q = {s};
      seen[s] = true;
      for (std::size_t h = 0; h < q.size(); ++h) {
        order_.push_back(q[h]);
        for (int w : a_.adj[q[h]])
          if (!seen[w]) {
            seen[w] = true;
            q.push_back(w);
          }
      }
    }
    badj_.assign(static_cast<std::size_t>(b_.n) * b_.n, 0);
    for (int u = 0; u < b_.n; ++u)
      for (int w : b_.adj[u]) badj_[static_cast<std::size_t>(u) * b_.n + w] = 1;
    map_.assign(n, -1);
    used_.assign(n, false);
    cnt_a_.assign(n, 0);
    cnt_b_.assign(n, 0);
  }

  std::vector<VertexBijection> run() {
    results_.clear();
    if (a_.n == 0) {
      results_.push_back({});
      return results_;
    }
    extend(0);
    return results_;
  }

 private:
  bool badj(int u, int w) const { return badj_[static_cast<std::size_t>(u) * b_.n + w] != 0; }

  bool candidate_ok(int v, int w) const {
    if (used_[w] || class_a_[v] != class_b_[w]) return false;
    if (cnt_b_[w] != cnt_a_[v]) return false;
    for (int u : a_.adj[v])
      if (map_[u] >= 0 && !badj(map_[u], w)) return false;
    return true;
  }

  void assign(int v, int w) {
    map_[v] = w;
    used_[w] = true;
    for (int x : a_.adj[v]) ++cnt_a_[x];
    for (int y : b_.adj[w]) ++cnt_b_[y];
  }

  void unassign(int v, int w) {
    map_[v] = -1;
    used_[w] = false;
    for (int x : a_.adj[v]) --cnt_a_[x];
    for (int y : b_.adj[w]) --cnt_b_[y];
  }

  // Returns true to abort the search (single-result mode or cap).
  bool extend(std::size_t depth) {
    if (depth == order_.size()) {
      if (results_.size() >= cap_)
        throw CapExceeded("graph map search: element cap exceeded");
      results_.push_back(map_);
      return !enumerate_all_;
    }
    int v = order_[depth];
    int anchor = -1;
    for (int u : a_.adj[v])
      if (map_[u] >= 0) {
        anchor = u;
        break;
      }
    if (anchor >= 0) {
      for (int w : b_.adj[map_[anchor]]) {
        if (!candidate_ok(v, w)) continue;
        assign(v, w);
        bool stop = extend(depth + 1);
        unassign(v, w);
        if (stop) return true;
      }
    } else {
      for (int w = 0; w < b_.n; ++w) {
        if (!candidate_ok(v, w)) continue;
        assign(v, w);
        bool stop = extend(depth + 1);
        unassign(v, w);
        if (stop) return true;
      }
    }
    return false;
  }

  const SimpleGraph& a_;
  const SimpleGraph& b_;
  const std::vector<int>& class_a_;
  const std::vector<int>& class_b_;
  bool enumerate_all_;
  std::uint64_t cap_;
  std::vector<int> order_;
  std::vector<uint8_t> badj_;
  VertexBijection map_;
  std::vector<bool> used_;
  std::vector<int> cnt_a_, cnt_b_;
  std::vector<VertexBijection> results_;
};

}  // namespace detail

/// The full automorphism group of a graph: a deterministic generator list,
/// the exact order, and the materialized element list (sorted).
struct GraphGroup {
  std::vector<VertexBijection> generators;
  std::uint64_t order = 1;
  std::vector<VertexBijection> elements;
};

/// Packages a closed set of maps: sorted elements, order, and a small
/// generating set found greedily over the sorted list.
inline GraphGroup group_from_elements(std::vector<VertexBijection> elements, int n,
                                      std::uint64_t cap = kDefaultElementCap) {
  GraphGroup grp;
  grp.elements = std::move(elements);
  std::sort(grp.elements.begin(), grp.elements.end());
  grp.order = grp.elements.size();
  std::unordered_set<std::vector<int>, detail::VecIntHash> closed;
  closed.insert(identity_map(n));
  for (const auto& e : grp.elements) {
    if (closed.count(e)) continue;
    grp.generators.push_back(e);
    for (const auto& m : close_map_group(grp.generators, n, cap)) closed.insert(m);
  }
  return grp;
}

/// Exhaustive automorphism enumeration: equitable-color pruning plus
/// backtracking.  Throws CapExceeded once more than element_cap maps exist.
inline GraphGroup automorphism_group(const SimpleGraph& g,
                                     std::uint64_t element_cap = kDefaultElementCap) {
  auto colors = equitable_colors(g);
  detail::MapSearch search(g, g, colors, colors, /*enumerate_all=*/true, element_cap);
  return group_from_elements(search.run(), g.n, element_cap);
}

/// An adjacency-preserving bijection between two graphs, or nullopt.
/// Pruning: vertex count, edge count, degree sequence, then per-vertex
/// distance profiles as compatibility classes; lowest-index branching.
inline std::optional<VertexBijection> find_isomorphism(const SimpleGraph& a,
                                                       const SimpleGraph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return std::nullopt;
  auto degseq = [](const SimpleGraph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.n; ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degseq(a) != degseq(b)) return std::nullopt;

  auto profiles = [](const SimpleGraph& g) {
    std::vector<std::vector<int>> p(g.n);
    for (int v = 0; v < g.n; ++v) {
      for (int d : bfs_distances(g, v))
        if (d >= 0) p[v].push_back(d);
      std::sort(p[v].begin(), p[v].end());
    }
    return p;
  };
  auto pa = profiles(a), pb = profiles(b);
  std::map<std::vector<int>, int> ids;
  for (const auto& p : pa) ids[p] = 0;
  for (const auto& p : pb) ids[p] = 0;
  int next = 0;
  for (auto& [p, id] : ids) id = next++;
  std::vector<int> ca(a.n), cb(b.n);
  for (int v = 0; v < a.n; ++v) ca[v] = ids[pa[v]];
  for (int v = 0; v < b.n; ++v) cb[v] = ids[pb[v]];
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  detail::MapSearch search(a, b, ca, cb, /*enumerate_all=*/false, 2);
  auto results = search.run();
  if (results.empty()) return std::nullopt;
  return results.front();
}

}  // namespace cayley
