#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cayley/graph.hpp"
#include "cayley/perm.hpp"
#include "cayley/transposition_set.hpp"

namespace cayley {

/// Cay(H,S): vertex i is group.elements[i]; u ~ v iff v = s*u for some s in
/// S (left multiplication, matching the arc rule).  Connected and
/// |S|-regular by construction; the identity sits at vertex 0.
struct CayleyGraph {
  PermutationGroup group;
  TranspositionSet gens;
  SimpleGraph graph;
  int identity_vertex = 0;

  int vertex_of(const Permutation& p) const { return group.index_of(p); }
};

inline CayleyGraph build_cayley_from(PermutationGroup group, TranspositionSet s) {
  CayleyGraph cg;
  cg.gens = std::move(s);
  cg.group = std::move(group);
  const int n = static_cast<int>(cg.group.order());
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  for (int u = 0; u < n; ++u) {
    labels.push_back(cycle_string(cg.group.element(u)));
    for (const auto& t : cg.gens.pairs) {
      int v = cg.group.index_of(compose(t.as_permutation(), cg.group.element(u)));
      if (u < v) edges.emplace_back(u, v);
    }
  }
  cg.graph = make_graph(n, edges, std::move(labels));
  cg.identity_vertex = cg.group.index_of(Permutation::identity(cg.group.degree));
  return cg;
}

inline CayleyGraph build_cayley(const TranspositionSet& s,
                                std::uint64_t cap = kDefaultGroupCap) {
  return build_cayley_from(generate_group(s, cap), s);
}

inline std::vector<int> distance_from_identity(const CayleyGraph& cg) {
  return bfs_distances(cg.graph, cg.identity_vertex);
}

/// A simple cycle as a vertex sequence starting at the base vertex.
using Cycle = std::vector<int>;

/// All simple cycles of exactly `length` through `base`, each reported once:
/// the sequence starts at base and takes the direction whose second vertex
/// is smaller than its last.
inline std::vector<Cycle> cycles_through_vertex(const SimpleGraph& g, int base, int length) {
  std::vector<Cycle> out;
  std::vector<int> path = {base};
  std::vector<bool> on_path(g.n, false);
  on_path[base] = true;
  auto rec = [&](auto&& self, int u) -> void {
    if (static_cast<int>(path.size()) == length) {
      if (g.has_edge(u, base) && path[1] < path.back()) out.push_back(path);
      return;
    }
    for (int w : g.adj[u]) {
      if (on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      on_path[w] = false;
    }
  };
  if (g.n > 0 && length >= 3) rec(rec, base);
  return out;
}

namespace detail {
inline int require_generator_vertex(const CayleyGraph& cg, const Transposition& t) {
  if (!cg.gens.contains(t))
    throw std::invalid_argument("transposition (" + std::to_string(t.a) + "," +
                                std::to_string(t.b) + ") is not a generator");
  return cg.group.index_of(t.as_permutation());
}
}  // namespace detail

/// All 4-cycles of Cay(H,S) whose vertex set contains e, t and k.
inline std::vector<Cycle> four_cycles_through(const CayleyGraph& cg, const Transposition& t,
                                              const Transposition& k) {
  if (t == k) throw std::invalid_argument("four_cycles_through: t and k must differ");
  int vt = detail::require_generator_vertex(cg, t);
  int vk = detail::require_generator_vertex(cg, k);
  std::vector<Cycle> out;
  for (auto& c : cycles_through_vertex(cg.graph, cg.identity_vertex, 4)) {
    if (std::find(c.begin(), c.end(), vt) != c.end() &&
        std::find(c.begin(), c.end(), vk) != c.end())
      out.push_back(std::move(c));
  }
  return out;
}

/// All 6-cycles whose vertex set contains e, t, k and at least one vertex at
/// BFS-distance 3 from e.
inline std::vector<Cycle> distance3_six_cycles_through(const CayleyGraph& cg,
                                                       const Transposition& t,
                                                       const Transposition& k) {
  if (t == k) throw std::invalid_argument("six-cycle check: t and k must differ");
  int vt = detail::require_generator_vertex(cg, t);
  int vk = detail::require_generator_vertex(cg, k);
  auto dist = distance_from_identity(cg);
  std::vector<Cycle> out;
  for (auto& c : cycles_through_vertex(cg.graph, cg.identity_vertex, 6)) {
    if (std::find(c.begin(), c.end(), vt) == c.end()) continue;
    if (std::find(c.begin(), c.end(), vk) == c.end()) continue;
    if (std::any_of(c.begin(), c.end(), [&](int v) { return dist[v] == 3; }))
      out.push_back(std::move(c));
  }
  return out;
}

/// True iff exactly one qualifying 6-cycle exists for the non-commuting pair.
inline bool unique_distance3_six_cycle(const CayleyGraph& cg, const Transposition& t,
                                       const Transposition& k,
                                       std::vector<Cycle>* witnesses = nullptr) {
  auto cycles = distance3_six_cycles_through(cg, t, k);
  bool unique = cycles.size() == 1;
  if (witnesses) *witnesses = std::move(cycles);
  return unique;
}

struct PairCondition {
  Transposition t, k;
  bool commuting;
  std::size_t four_cycle_count;
  std::size_t six_cycle_count;  // qualifying 6-cycles; only counted when not commuting
  bool four_cycle_ok;           // commuting <=> unique 4-cycle
  bool six_cycle_ok;            // non-commuting => unique qualifying 6-cycle
};

struct NormalityConditionReport {
  bool four_cycle_condition = true;
  bool six_cycle_condition = true;
  std::vector<PairCondition> pairs;

  std::vector<PairCondition> failing() const {
    std::vector<PairCondition> out;
    for (const auto& p : pairs)
      if (!p.four_cycle_ok || !p.six_cycle_ok) out.push_back(p);
    return out;
  }
};

/// Evaluates, for every pair t != k in S, the two cycle conditions that
/// imply normality: commuting <=> unique 4-cycle through e,t,k, and for
/// non-commuting pairs a unique 6-cycle through e,t,k with a distance-3
/// vertex.  Pairs are processed in sorted order.
inline NormalityConditionReport check_normality_conditions(const CayleyGraph& cg) {
  NormalityConditionReport r;
  const auto& s = cg.gens.pairs;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      PairCondition pc{s[i], s[j], commute(s[i], s[j]), 0, 0, true, true};
      pc.four_cycle_count = four_cycles_through(cg, s[i], s[j]).size();
      pc.four_cycle_ok = pc.commuting == (pc.four_cycle_count == 1);
      if (!pc.commuting) {
        pc.six_cycle_count = distance3_six_cycles_through(cg, s[i], s[j]).size();
        pc.six_cycle_ok = pc.six_cycle_count == 1;
      }
      r.four_cycle_condition = r.four_cycle_condition && pc.four_cycle_ok;
      r.six_cycle_condition = r.six_cycle_condition && pc.six_cycle_ok;
      r.pairs.push_back(pc);
    }
  }
  return r;
}

}  // namespace cayley
