#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cayley/edge_io.hpp"
#include "cayley/errors.hpp"
#include "cayley/transposition_set.hpp"

namespace cayley {

/// Named transposition-graph families.  Component i of a multi-component
/// family occupies the consecutive points i*k+1 .. (i+1)*k, so generated
/// sets are reproducible.
struct TopologySpec {
  enum class Family {
    hypercube,             // r disjoint edges
    bubble_sort,           // path on n vertices
    star,                  // K_{1,n-1} on n vertices
    modified_bubble_sort,  // cycle on n vertices
    extended_cube,         // r disjoint paths on k vertices
    custom,                // explicit edge list
    custom_in_ambient,     // explicit edge list inside S_ambient
  };

  Family family = Family::custom;
  int r = 0;        // hypercube, extended_cube
  int k = 0;        // extended_cube
  int n = 0;        // bubble_sort, star, modified_bubble_sort
  int ambient = 0;  // custom_in_ambient
  std::vector<std::pair<int, int>> edges;  // custom families
  std::string source;                      // original CLI spec string
};

inline std::string family_name(TopologySpec::Family f) {
  switch (f) {
    case TopologySpec::Family::hypercube: return "hypercube";
    case TopologySpec::Family::bubble_sort: return "bubble";
    case TopologySpec::Family::star: return "star";
    case TopologySpec::Family::modified_bubble_sort: return "mbs";
    case TopologySpec::Family::extended_cube: return "extcube";
    case TopologySpec::Family::custom: return "custom";
    case TopologySpec::Family::custom_in_ambient: return "custom-in-ambient";
  }
  return "?";
}

inline TranspositionSet make(const TopologySpec& spec) {
  using F = TopologySpec::Family;
  std::vector<std::pair<int, int>> edges;
  switch (spec.family) {
    case F::hypercube:
      if (spec.r < 1) throw InvalidParams("hypercube: r >= 1 required");
      for (int i = 0; i < spec.r; ++i) edges.emplace_back(2 * i + 1, 2 * i + 2);
      break;
    case F::bubble_sort:
      if (spec.n < 2) throw InvalidParams("bubble: n >= 2 required");
      for (int i = 1; i < spec.n; ++i) edges.emplace_back(i, i + 1);
      break;
    case F::star:
      if (spec.n < 2) throw InvalidParams("star: n >= 2 required");
      for (int i = 2; i <= spec.n; ++i) edges.emplace_back(1, i);
      break;
    case F::modified_bubble_sort:
      if (spec.n < 3) throw InvalidParams("mbs: n >= 3 required to form a cycle");
      for (int i = 1; i < spec.n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(1, spec.n);
      break;
    case F::extended_cube:
      if (spec.r < 1 || spec.k < 3)
        throw InvalidParams("extcube: r >= 1 and k >= 3 required");
      for (int c = 0; c < spec.r; ++c)
        for (int i = 1; i < spec.k; ++i)
          edges.emplace_back(c * spec.k + i, c * spec.k + i + 1);
      break;
    case F::custom:
    case F::custom_in_ambient:
      if (spec.edges.empty()) throw InvalidParams("custom: empty edge list");
      edges = spec.edges;
      break;
  }
  auto s = make_transposition_set(edges);
  if (spec.family == F::custom_in_ambient && spec.ambient < s.max_point())
    throw InvalidParams("ambient n is smaller than the largest point of S");
  return s;
}

/// CLI spec syntax: hypercube:3, extcube:2x3, mbs:5, star:5, bubble:4,
/// custom:file.edges[,ambient=n].  A custom payload that looks like an
/// inline pair list ("1-2,2-3") is parsed directly instead of as a file.
inline TopologySpec parse_topology(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size())
    throw ParseError("topology spec '" + text + "': expected family:params");
  std::string family = text.substr(0, colon);
  std::string params = text.substr(colon + 1);
  TopologySpec spec;
  spec.source = text;

  auto parse_int = [&](const std::string& v) {
    try {
      std::size_t used = 0;
      int x = std::stoi(v, &used);
      if (used != v.size()) throw ParseError("");
      return x;
    } catch (const std::exception&) {
      throw ParseError("topology spec '" + text + "': bad integer '" + v + "'");
    }
  };

  using F = TopologySpec::Family;
  if (family == "hypercube") {
    spec.family = F::hypercube;
    spec.r = parse_int(params);
  } else if (family == "bubble") {
    spec.family = F::bubble_sort;
    spec.n = parse_int(params);
  } else if (family == "star") {
    spec.family = F::star;
    spec.n = parse_int(params);
  } else if (family == "mbs") {
    spec.family = F::modified_bubble_sort;
    spec.n = parse_int(params);
  } else if (family == "extcube") {
    auto x = params.find('x');
    if (x == std::string::npos)
      throw ParseError("topology spec '" + text + "': extcube wants RxK");
    spec.family = F::extended_cube;
    spec.r = parse_int(params.substr(0, x));
    spec.k = parse_int(params.substr(x + 1));
  } else if (family == "custom") {
    spec.family = F::custom;
    std::string payload = params;
    auto comma = params.find(",ambient=");
    if (comma != std::string::npos) {
      spec.family = F::custom_in_ambient;
      spec.ambient = parse_int(params.substr(comma + 9));
      payload = params.substr(0, comma);
    }
    spec.edges = looks_like_inline_pairs(payload) ? parse_inline_pairs(payload)
                                                  : load_edge_file(payload);
  } else {
    throw ParseError("topology spec '" + text + "': unknown family '" + family + "'");
  }
  return spec;
}

}  // namespace cayley
