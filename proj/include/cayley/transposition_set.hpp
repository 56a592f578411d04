#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cayley/graph.hpp"
#include "cayley/graph_aut.hpp"
#include "cayley/perm.hpp"

namespace cayley {

/// A generator set of transpositions.  The transposition graph lives on the
/// support, so there are never isolated vertices.
struct TranspositionSet {
  std::vector<Transposition> pairs;  // sorted, unique
  std::vector<int> support;          // sorted points occurring in some pair

  std::size_t size() const { return pairs.size(); }
  int max_point() const { return support.empty() ? 0 : support.back(); }

  bool contains(const Transposition& t) const {
    return std::binary_search(pairs.begin(), pairs.end(), t);
  }
  /// Index in `pairs`, which is also the line-graph vertex of edge t.
  int index_of(const Transposition& t) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), t);
    if (it == pairs.end() || *it != t) return -1;
    return static_cast<int>(it - pairs.begin());
  }
  /// Graph vertex of a support point in transposition_graph().
  int vertex_of_point(int point) const {
    auto it = std::lower_bound(support.begin(), support.end(), point);
    if (it == support.end() || *it != point) return -1;
    return static_cast<int>(it - support.begin());
  }
};

inline TranspositionSet make_transposition_set(const std::vector<std::pair<int, int>>& raw) {
  if (raw.empty())
    throw std::invalid_argument("make_transposition_set: at least one transposition required");
  std::vector<Transposition> pairs;
  pairs.reserve(raw.size());
  for (auto [a, b] : raw) pairs.emplace_back(a, b);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  TranspositionSet s;
  for (const auto& t : pairs) {
    s.support.push_back(t.a);
    s.support.push_back(t.b);
  }
  std::sort(s.support.begin(), s.support.end());
  s.support.erase(std::unique(s.support.begin(), s.support.end()), s.support.end());
  s.pairs = std::move(pairs);
  return s;
}

/// Graph on support(S) with an edge {i,j} per transposition (i,j); vertex
/// labels are the points.
inline SimpleGraph transposition_graph(const TranspositionSet& s) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& t : s.pairs)
    edges.emplace_back(s.vertex_of_point(t.a), s.vertex_of_point(t.b));
  std::vector<std::string> labels;
  for (int p : s.support) labels.push_back(std::to_string(p));
  return make_graph(static_cast<int>(s.support.size()), edges, std::move(labels));
}

/// The hypotheses of the structure theorem, evaluated on T(S).
struct HypothesisReport {
  std::optional<int> girth_value;  // nullopt = infinite (forest)
  bool girth_ok = false;           // girth >= 5 or infinite
  int component_count = 0;
  bool components_isomorphic = false;  // vacuously true for one component
  bool is_tree = false;
  bool is_connected = false;
};

inline HypothesisReport check_hypotheses(const TranspositionSet& s) {
  SimpleGraph t = transposition_graph(s);
  HypothesisReport r;
  r.girth_value = girth(t);
  r.girth_ok = !r.girth_value || *r.girth_value >= 5;
  auto comps = connected_components(t);
  r.component_count = static_cast<int>(comps.size());
  r.is_connected = comps.size() == 1;
  r.is_tree = r.is_connected && !r.girth_value;
  r.components_isomorphic = true;
  for (std::size_t i = 1; i < comps.size(); ++i) {
    if (!find_isomorphism(comps[0].graph, comps[i].graph)) {
      r.components_isomorphic = false;
      break;
    }
  }
  return r;
}

inline PermutationGroup generate_group(const TranspositionSet& s,
                                       std::uint64_t cap = kDefaultGroupCap) {
  return generate_group(s.pairs, cap);
}

/// Reads a vertex map on transposition_graph(s) back as a permutation of
/// the points, fixing everything off the support.
inline Permutation point_permutation(const TranspositionSet& s, const VertexBijection& vmap,
                                     int degree = 0) {
  degree = std::max(degree, s.max_point());
  std::vector<int> img(degree);
  for (int p = 1; p <= degree; ++p) img[p - 1] = p;
  for (std::size_t v = 0; v < s.support.size(); ++v)
    img[s.support[v] - 1] = s.support[vmap[v]];
  return Permutation(std::move(img));
}

}  // namespace cayley
