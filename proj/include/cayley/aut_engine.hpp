#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cayley/cayley_graph.hpp"
#include "cayley/graph_aut.hpp"
#include "cayley/topologies.hpp"
#include "cayley/transposition_set.hpp"

namespace cayley {

inline mpz_class factorial_mpz(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline mpz_class pow_mpz(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// An automorphism of H, stored as an index bijection on the canonical
/// element list.  When tagged as an element of Aut(H,S) it maps S onto S.
struct GroupAutomorphism {
  std::vector<int> element_map;
  auto operator<=>(const GroupAutomorphism&) const = default;
};

/// Structured description of a group order: group(N), semidirect(A,B) with A
/// the normal factor, or wreath(L, inner) of order L! * inner^L.
struct Factorization {
  enum class Form { group, semidirect, wreath };
  Form form = Form::group;
  mpz_class normal_order;      // semidirect: |normal factor|; group: the order
  mpz_class complement_order;  // semidirect only
  unsigned long copies = 0;    // wreath only
  std::shared_ptr<const Factorization> inner;  // wreath only

  std::string text() const {
    switch (form) {
      case Form::group:
        return "group(" + normal_order.get_str() + ")";
      case Form::semidirect:
        return "semidirect(" + normal_order.get_str() + "," + complement_order.get_str() + ")";
      case Form::wreath:
        return "wreath(" + std::to_string(copies) + "," + inner->text() + ")";
    }
    return "?";
  }
};

inline Factorization plain_factor(mpz_class order) {
  Factorization f;
  f.form = Factorization::Form::group;
  f.normal_order = std::move(order);
  return f;
}

inline Factorization semidirect_factor(mpz_class normal, mpz_class complement) {
  Factorization f;
  f.form = Factorization::Form::semidirect;
  f.normal_order = std::move(normal);
  f.complement_order = std::move(complement);
  return f;
}

inline Factorization wreath_factor(unsigned long copies, Factorization inner) {
  Factorization f;
  f.form = Factorization::Form::wreath;
  f.copies = copies;
  f.inner = std::make_shared<Factorization>(std::move(inner));
  return f;
}

enum class AutMethod { FastPath, BruteForce, Both };

/// Computed description of Aut(Cay(H,S)).
struct AutReport {
  mpz_class order;
  Factorization factorization;
  std::vector<VertexBijection> vertex_generators;
  std::optional<bool> is_normal;
  AutMethod method = AutMethod::FastPath;
  std::optional<mpz_class> aut_hs_order;
};

/// Conjugation by g restricted to H, as an element-index map.  Requires g to
/// normalize H (it does whenever g preserves the generator set).
inline GroupAutomorphism conjugation_automorphism(const PermutationGroup& h,
                                                  const Permutation& g) {
  GroupAutomorphism a;
  a.element_map.resize(h.order());
  for (std::size_t i = 0; i < h.order(); ++i) {
    int j = h.index_of(conjugate_by(h.element(static_cast<int>(i)), g));
    if (j < 0)
      throw std::logic_error("conjugation_automorphism: conjugate left the group");
    a.element_map[i] = j;
  }
  return a;
}

namespace detail {

/// Aut(H,S) via the constructive route: every automorphism of T(S) yields a
/// conjugation fixing S setwise; restrict to H and deduplicate (per-edge
/// swaps of K_2 components act trivially on H and collapse).
inline std::vector<GroupAutomorphism> conjugation_aut_hs(const PermutationGroup& h,
                                                         const TranspositionSet& s) {
  SimpleGraph t = transposition_graph(s);
  GraphGroup aut_t = automorphism_group(t);
  std::vector<GroupAutomorphism> out;
  for (const auto& vmap : aut_t.elements)
    out.push_back(conjugation_automorphism(h, point_permutation(s, vmap, h.degree)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// Fast-path Aut(H,S).  Refuses unless girth(T) >= 5 and the components of
/// T are pairwise isomorphic; callers fall back to aut_hs_bruteforce.
inline std::vector<GroupAutomorphism> aut_hs_fast(const TranspositionSet& s,
                                                  std::uint64_t cap = kDefaultGroupCap) {
  HypothesisReport hyp = check_hypotheses(s);
  if (!hyp.girth_ok)
    throw HypothesisViolated("aut_hs_fast: transposition graph girth below 5");
  if (!hyp.components_isomorphic)
    throw HypothesisViolated("aut_hs_fast: components are not pairwise isomorphic");
  PermutationGroup h = generate_group(s, cap);
  return detail::conjugation_aut_hs(h, s);
}

/// Independent oracle for Aut(H,S): try to extend every bijection of S to a
/// homomorphism on H by propagating along the BFS words, rejecting on any
/// conflict.  A conflict-free extension is automatically bijective because
/// its image contains the generators.
inline std::vector<GroupAutomorphism> aut_hs_bruteforce(
    const PermutationGroup& h, const TranspositionSet& s,
    std::uint64_t budget = kDefaultExtensionBudget) {
  const std::size_t m = s.size();
  const std::size_t n = h.order();
  if (m > 20) throw CapExceeded("aut_hs_bruteforce: generator set too large");
  long double cost = 1;
  for (std::size_t i = 2; i <= m; ++i) cost *= static_cast<long double>(i);
  cost *= static_cast<long double>(n) * static_cast<long double>(m);
  if (cost > static_cast<long double>(budget))
    throw CapExceeded("aut_hs_bruteforce: |S|! * |H| * |S| exceeds budget");

  // left[s][u] = index of gen_s * element_u.
  std::vector<std::vector<int>> left(m, std::vector<int>(n));
  for (std::size_t si = 0; si < m; ++si) {
    Permutation gp = s.pairs[si].as_permutation();
    for (std::size_t u = 0; u < n; ++u)
      left[si][u] = h.index_of(compose(gp, h.element(static_cast<int>(u))));
  }

  std::vector<int> phi(m);
  for (std::size_t i = 0; i < m; ++i) phi[i] = static_cast<int>(i);
  std::vector<GroupAutomorphism> out;
  std::vector<int> f(n);
  do {
    f.assign(n, -1);
    f[0] = 0;
    bool ok = true;
    for (std::size_t i = 1; i < n && ok; ++i) {
      // element[i] = gen[via] * element[parent]
      f[i] = left[phi[h.via_generator[i]]][f[h.parent[i]]];
    }
    for (std::size_t si = 0; si < m && ok; ++si)
      for (std::size_t u = 0; u < n; ++u)
        if (f[left[si][u]] != left[phi[si]][f[u]]) {
          ok = false;
          break;
        }
    if (ok) out.push_back({f});
  } while (std::next_permutation(phi.begin(), phi.end()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline AutReport fast_report(const PermutationGroup& h, const TranspositionSet& s,
                             const std::vector<GroupAutomorphism>& aut_hs) {
  AutReport r;
  r.order = mpz_class(static_cast<unsigned long>(h.order())) *
            mpz_class(static_cast<unsigned long>(aut_hs.size()));
  r.factorization = semidirect_factor(static_cast<unsigned long>(h.order()),
                                      static_cast<unsigned long>(aut_hs.size()));
  r.is_normal = true;
  r.method = AutMethod::FastPath;
  r.aut_hs_order = mpz_class(static_cast<unsigned long>(aut_hs.size()));
  // R(H) from right translations by the generators, then the stabilizer part.
  for (const auto& t : s.pairs) {
    Permutation tp = t.as_permutation();
    VertexBijection map(h.order());
    for (std::size_t u = 0; u < h.order(); ++u)
      map[u] = h.index_of(compose(h.element(static_cast<int>(u)), tp));
    r.vertex_generators.push_back(std::move(map));
  }
  for (const auto& a : aut_hs) {
    bool ident = true;
    for (std::size_t i = 0; i < a.element_map.size() && ident; ++i)
      ident = a.element_map[i] == static_cast<int>(i);
    if (!ident) r.vertex_generators.push_back(a.element_map);
  }
  return r;
}

inline AutReport aut_fast_from(const PermutationGroup& h, const TranspositionSet& s,
                               const HypothesisReport& hyp,
                               std::uint64_t extension_budget = kDefaultExtensionBudget) {
  if (!hyp.girth_ok)
    throw HypothesisViolated("aut_fast: transposition graph girth below 5");
  auto aut_hs = hyp.components_isomorphic ? detail::conjugation_aut_hs(h, s)
                                          : aut_hs_bruteforce(h, s, extension_budget);
  return fast_report(h, s, aut_hs);
}

}  // namespace detail

/// Structure-theorem path: for girth(T(S)) >= 5 the automorphism group is
/// R(H) x| Aut(H,S), so the order is |H| * |Aut(H,S)| and the graph is
/// normal.  Vertex generators are the right translations by S plus the
/// stabilizer automorphisms acting by their element maps.
inline AutReport aut_fast(const TranspositionSet& s, std::uint64_t cap = kDefaultGroupCap) {
  HypothesisReport hyp = check_hypotheses(s);
  if (!hyp.girth_ok)
    throw HypothesisViolated("aut_fast: transposition graph girth below 5");
  PermutationGroup h = generate_group(s, cap);
  return detail::aut_fast_from(h, s, hyp);
}

/// Every graph automorphism fixing the identity vertex must be a group
/// automorphism for the Cayley graph to be normal.
struct NormalityCheck {
  bool is_normal = false;
  std::size_t stabilizer_order = 0;
  std::vector<std::vector<int>> stabilizer_maps;    // the full G_e
  std::optional<std::vector<int>> violator;         // certificate when not normal
};

inline NormalityCheck verify_normality(const CayleyGraph& cg, const GraphGroup& full) {
  if (full.elements.empty())
    throw std::invalid_argument("verify_normality: group elements not materialized");
  NormalityCheck r;
  r.is_normal = true;
  for (const auto& m : full.elements) {
    if (m[cg.identity_vertex] != cg.identity_vertex) continue;
    r.stabilizer_maps.push_back(m);
    if (r.is_normal && !is_group_automorphism(m, cg.group)) {
      r.is_normal = false;
      r.violator = m;
    }
  }
  r.stabilizer_order = r.stabilizer_maps.size();
  return r;
}

/// Automorphisms fixing v and each of its neighbors pointwise.
inline GraphGroup stabilizer_Lv(const CayleyGraph& cg, const GraphGroup& full, int v) {
  if (full.elements.empty())
    throw std::invalid_argument("stabilizer_Lv: group elements not materialized");
  std::vector<VertexBijection> kept;
  for (const auto& m : full.elements) {
    if (m[v] != v) continue;
    bool fixes = true;
    for (int w : cg.graph.adj[v])
      if (m[w] != w) {
        fixes = false;
        break;
      }
    if (fixes) kept.push_back(m);
  }
  return group_from_elements(std::move(kept), cg.graph.n);
}

namespace detail {
inline AutReport brute_report(const CayleyGraph& cg, const GraphGroup& full,
                              const NormalityCheck& nc) {
  AutReport r;
  r.order = mpz_class(static_cast<unsigned long>(full.order));
  r.vertex_generators = full.generators;
  r.method = AutMethod::BruteForce;
  r.is_normal = nc.is_normal;
  if (nc.is_normal) {
    r.aut_hs_order = mpz_class(static_cast<unsigned long>(nc.stabilizer_order));
    r.factorization = semidirect_factor(static_cast<unsigned long>(cg.group.order()),
                                        static_cast<unsigned long>(nc.stabilizer_order));
  } else {
    r.factorization = plain_factor(r.order);
  }
  return r;
}
}  // namespace detail

/// Brute-force oracle: full automorphism search on the Cayley graph itself,
/// plus the stabilizer-based normality verdict.
inline AutReport aut_bruteforce(const CayleyGraph& cg,
                                int vertex_budget = kDefaultBruteVertexBudget,
                                std::uint64_t element_cap = kDefaultElementCap) {
  if (cg.graph.n > vertex_budget)
    throw CapExceeded("aut_bruteforce: " + std::to_string(cg.graph.n) +
                      " vertices exceed budget " + std::to_string(vertex_budget));
  GraphGroup full = automorphism_group(cg.graph, element_cap);
  return detail::brute_report(cg, full, verify_normality(cg, full));
}

/// Restriction of sigma in Aut(H,S) to S, as a permutation of the
/// line-graph vertices of T(S) (edge i of T is pairs[i]).
inline VertexBijection psi_restriction(const GroupAutomorphism& sigma,
                                       const TranspositionSet& s,
                                       const PermutationGroup& h) {
  const int m = static_cast<int>(s.size());
  VertexBijection tau(m, -1);
  std::vector<bool> used(m, false);
  for (int i = 0; i < m; ++i) {
    int ti = h.index_of(s.pairs[i].as_permutation());
    if (ti < 0) throw std::logic_error("psi_restriction: generator missing from group");
    const Permutation& img = h.element(sigma.element_map[ti]);
    std::vector<int> moved;
    for (int p = 1; p <= img.degree(); ++p)
      if (img(p) != p) moved.push_back(p);
    if (moved.size() != 2)
      throw NotSFixing("psi_restriction: image of a generator is not a transposition");
    int j = s.index_of(Transposition(moved[0], moved[1]));
    if (j < 0 || used[j])
      throw NotSFixing("psi_restriction: sigma does not map S onto S");
    used[j] = true;
    tau[i] = j;
  }
  // The restriction always preserves edge incidence; a violation here means
  // the element map was not an automorphism at all.
  auto incident = [&](int i, int j) { return !commute(s.pairs[i], s.pairs[j]); };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (incident(i, j) != incident(tau[i], tau[j]))
        throw std::logic_error("psi_restriction: incidence not preserved");
  return tau;
}

/// Inverse of the line-graph construction on automorphisms: reconstructs the
/// unique vertex map inducing tau when every component has >= 3 vertices.
/// For K_2 components, whose endpoint swap is invisible in the line graph,
/// the canonical lift maps lowest label to lowest label.
inline VertexBijection lift_line_graph_aut(const VertexBijection& tau, const SimpleGraph& t) {
  const auto edges = edge_list(t);
  const int m = static_cast<int>(edges.size());
  if (static_cast<int>(tau.size()) != m || !is_vertex_bijection(tau, m))
    throw std::invalid_argument("lift_line_graph_aut: tau is not an edge bijection");
  auto share = [&](int i, int j) {
    auto [a, b] = edges[i];
    auto [c, d] = edges[j];
    return a == c || a == d || b == c || b == d;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (share(i, j) != share(tau[i], tau[j]))
        throw std::invalid_argument("lift_line_graph_aut: tau is not a line-graph automorphism");

  std::vector<std::vector<int>> inc(t.n);
  for (int i = 0; i < m; ++i) {
    inc[edges[i].first].push_back(i);
    inc[edges[i].second].push_back(i);
  }

  VertexBijection sigma(t.n, -1);
  for (int v = 0; v < t.n; ++v) {
    if (inc[v].size() < 2) continue;
    auto [a, b] = edges[tau[inc[v][0]]];
    auto [c, d] = edges[tau[inc[v][1]]];
    int common = -1, count = 0;
    for (int x : {a, b})
      if (x == c || x == d) {
        common = x;
        ++count;
      }
    if (count != 1) throw NoLift("lift_line_graph_aut: incident images share no unique vertex");
    sigma[v] = common;
  }
  for (int v = 0; v < t.n; ++v) {
    if (inc[v].size() != 1) continue;
    if (sigma[v] >= 0) continue;
    int e = inc[v][0];
    int u = edges[e].first == v ? edges[e].second : edges[e].first;
    auto [a, b] = edges[tau[e]];
    if (sigma[u] == a) {
      sigma[v] = b;
    } else if (sigma[u] == b) {
      sigma[v] = a;
    } else if (sigma[u] < 0) {
      // K_2 component: both endpoints have degree 1.  Canonical choice.
      sigma[std::min(v, u)] = std::min(a, b);
      sigma[std::max(v, u)] = std::max(a, b);
    } else {
      throw NoLift("lift_line_graph_aut: leaf image detached from its neighbor's image");
    }
  }
  for (int v = 0; v < t.n; ++v)
    if (sigma[v] < 0) sigma[v] = v;  // isolated vertices (never occur for T(S))

  if (!is_automorphism(t, sigma))
    throw NoLift("lift_line_graph_aut: reconstruction is not an automorphism");
  for (int i = 0; i < m; ++i) {
    std::pair<int, int> img{sigma[edges[i].first], sigma[edges[i].second]};
    if (img.first > img.second) std::swap(img.first, img.second);
    if (img != edges[tau[i]])
      throw NoLift("lift_line_graph_aut: reconstruction does not induce tau");
  }
  return sigma;
}

/// Automorphism group of ell disjoint copies: order ell! * inner^ell, with
/// generators realized on the union vertex set (inner generators on copy 0
/// plus adjacent-copy swaps).
inline AutReport wreath_extension(const AutReport& inner, unsigned long ell,
                                  int inner_vertex_count) {
  if (ell < 1) throw InvalidParams("wreath_extension: ell >= 1 required");
  if (ell == 1) return inner;
  if (ell > 100'000) throw CapExceeded("wreath_extension: ell too large");
  const std::uint64_t total = static_cast<std::uint64_t>(ell) * inner_vertex_count;
  if (total > 2'000'000) throw CapExceeded("wreath_extension: union vertex set too large");

  AutReport r;
  r.order = factorial_mpz(ell) * pow_mpz(inner.order, ell);
  r.factorization = wreath_factor(ell, inner.factorization);
  r.is_normal = std::nullopt;
  r.method = inner.method;
  const int v = inner_vertex_count;
  for (const auto& g : inner.vertex_generators) {
    VertexBijection map = identity_map(static_cast<int>(total));
    for (int i = 0; i < v; ++i) map[i] = g[i];
    r.vertex_generators.push_back(std::move(map));
  }
  for (unsigned long c = 0; c + 1 < ell; ++c) {
    VertexBijection map = identity_map(static_cast<int>(total));
    for (int i = 0; i < v; ++i) {
      map[c * v + i] = static_cast<int>((c + 1) * v + i);
      map[(c + 1) * v + i] = static_cast<int>(c * v + i);
    }
    r.vertex_generators.push_back(std::move(map));
  }
  return r;
}

struct PredictedOrder {
  mpz_class order;
  Factorization factorization;
};

/// Closed-form automorphism orders for the named families.
inline PredictedOrder predicted_order(const TopologySpec& spec) {
  using F = TopologySpec::Family;
  switch (spec.family) {
    case F::hypercube: {
      if (spec.r < 1) throw InvalidParams("hypercube: r >= 1 required");
      mpz_class h = pow_mpz(2, spec.r);
      mpz_class a = factorial_mpz(spec.r);
      return {h * a, semidirect_factor(h, a)};
    }
    case F::bubble_sort: {
      if (spec.n < 2) throw InvalidParams("bubble: n >= 2 required");
      mpz_class h = factorial_mpz(spec.n);
      mpz_class a = spec.n >= 3 ? 2 : 1;
      return {h * a, semidirect_factor(h, a)};
    }
    case F::star: {
      if (spec.n < 2) throw InvalidParams("star: n >= 2 required");
      mpz_class h = factorial_mpz(spec.n);
      mpz_class a = spec.n >= 3 ? factorial_mpz(spec.n - 1) : 1;
      return {h * a, semidirect_factor(h, a)};
    }
    case F::modified_bubble_sort: {
      // The dihedral form holds exactly when n >= 5; the 4-cycle instance
      // has a strictly larger automorphism group.
      if (spec.n < 5) throw InvalidParams("mbs: closed form requires n >= 5");
      mpz_class h = factorial_mpz(spec.n);
      mpz_class a = 2 * spec.n;
      return {h * a, semidirect_factor(h, a)};
    }
    case F::extended_cube: {
      if (spec.r < 1 || spec.k < 3)
        throw InvalidParams("extcube: r >= 1 and k >= 3 required");
      mpz_class h = pow_mpz(factorial_mpz(spec.k), spec.r);
      mpz_class a = factorial_mpz(spec.r) * pow_mpz(2, spec.r);
      return {h * a, semidirect_factor(h, a)};
    }
    case F::custom:
    case F::custom_in_ambient:
      throw InvalidParams("predicted_order: no closed form for custom sets");
  }
  throw InvalidParams("predicted_order: unknown family");
}

}  // namespace cayley
