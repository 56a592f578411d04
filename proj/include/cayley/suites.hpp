#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cayley/aut_engine.hpp"
#include "cayley/cayley_graph.hpp"
#include "cayley/topologies.hpp"

namespace cayley {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// All 2^C(n,2)-1 nonempty transposition sets on points 1..max_points.
inline std::vector<TranspositionSet> all_transposition_sets(int max_points) {
  std::vector<std::pair<int, int>> pool;
  for (int a = 1; a <= max_points; ++a)
    for (int b = a + 1; b <= max_points; ++b) pool.emplace_back(a, b);
  std::vector<TranspositionSet> out;
  for (std::uint32_t mask = 1; mask < (1u << pool.size()); ++mask) {
    std::vector<std::pair<int, int>> chosen;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask & (1u << i)) chosen.push_back(pool[i]);
    out.push_back(make_transposition_set(chosen));
  }
  return out;
}

/// For every transposition set and every pair t != k: tk = kt iff there is a
/// unique 4-cycle through e, t and k.  Exhaustive, both directions.
inline SuiteReport suite_lemma(int max_points = 5, std::uint64_t cap = kDefaultGroupCap) {
  SuiteReport rep{"lemma", {}};
  std::size_t sets = 0, pairs = 0, violations = 0;
  std::string first_violation;
  for (const auto& s : all_transposition_sets(max_points)) {
    ++sets;
    CayleyGraph cg = build_cayley(s, cap);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        ++pairs;
        bool comm = commute(s.pairs[i], s.pairs[j]);
        std::size_t cycles = four_cycles_through(cg, s.pairs[i], s.pairs[j]).size();
        if (comm != (cycles == 1)) {
          ++violations;
          if (first_violation.empty()) {
            std::ostringstream os;
            os << "points<=" << max_points << " set#" << sets << " pair (" << s.pairs[i].a
               << "," << s.pairs[i].b << ")x(" << s.pairs[j].a << "," << s.pairs[j].b
               << "): commuting=" << comm << " 4-cycles=" << cycles;
            first_violation = os.str();
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << sets << " sets, " << pairs << " pairs, " << violations << " violations";
  if (violations) os << "; first: " << first_violation;
  rep.checks.push_back({"commuting <=> unique 4-cycle", violations == 0, os.str()});
  return rep;
}

/// Random transposition set whose graph has girth >= 5 and support <= 6
/// points (so |H| <= 720).  Mixes genuine girth-5/6 cycles in with random
/// forests so the suite exercises both shapes.
inline TranspositionSet sample_girth5_set(std::mt19937& rng) {
  for (;;) {
    if (rng() % 4 == 0) {
      int n = 5 + static_cast<int>(rng() % 2);  // C_5 or C_6, randomly relabeled
      std::vector<int> pts(6);
      for (int i = 0; i < 6; ++i) pts[i] = i + 1;
      std::shuffle(pts.begin(), pts.end(), rng);
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < n; ++i) edges.emplace_back(pts[i], pts[(i + 1) % n]);
      return make_transposition_set(edges);
    }
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> pool;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) pool.emplace_back(a, b);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::size_t m = 1 + rng() % std::min<std::size_t>(pool.size(), n + 1);
    std::vector<std::pair<int, int>> chosen(pool.begin(), pool.begin() + m);
    auto s = make_transposition_set(chosen);
    auto g = girth(transposition_graph(s));
    if (!g || *g >= 5) return s;
  }
}

/// For sampled girth >= 5 sets, every non-commuting pair has exactly one
/// 6-cycle through e, t, k with a vertex at distance 3 from e.
inline SuiteReport suite_condition_ii(int samples = 50, unsigned seed = 1) {
  SuiteReport rep{"condii", {}};
  std::mt19937 rng(seed);
  std::size_t pairs = 0, violations = 0;
  std::string first_violation;
  for (int i = 0; i < samples; ++i) {
    TranspositionSet s = sample_girth5_set(rng);
    CayleyGraph cg = build_cayley(s, 720);
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        if (commute(s.pairs[a], s.pairs[b])) continue;
        ++pairs;
        std::size_t count = distance3_six_cycles_through(cg, s.pairs[a], s.pairs[b]).size();
        if (count != 1) {
          ++violations;
          if (first_violation.empty()) {
            std::ostringstream os;
            os << "sample#" << i << " pair (" << s.pairs[a].a << "," << s.pairs[a].b << ")x("
               << s.pairs[b].a << "," << s.pairs[b].b << "): " << count << " cycles";
            first_violation = os.str();
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << samples << " samples, " << pairs << " non-commuting pairs, " << violations
     << " violations";
  if (violations) os << "; first: " << first_violation;
  rep.checks.push_back({"unique distance-3 6-cycle per non-commuting pair", violations == 0,
                        os.str()});
  return rep;
}

/// The instances the order criteria run on (brute force fits all of them).
inline std::vector<TopologySpec> theorem_battery() {
  std::vector<TopologySpec> out;
  for (int r = 1; r <= 4; ++r) {
    TopologySpec s;
    s.family = TopologySpec::Family::hypercube;
    s.r = r;
    s.source = "hypercube:" + std::to_string(r);
    out.push_back(s);
  }
  TopologySpec bubble;
  bubble.family = TopologySpec::Family::bubble_sort;
  bubble.n = 4;
  bubble.source = "bubble:4";
  out.push_back(bubble);
  TopologySpec star;
  star.family = TopologySpec::Family::star;
  star.n = 5;
  star.source = "star:5";
  out.push_back(star);
  TopologySpec mbs5;
  mbs5.family = TopologySpec::Family::modified_bubble_sort;
  mbs5.n = 5;
  mbs5.source = "mbs:5";
  out.push_back(mbs5);
  TopologySpec mbs4 = mbs5;
  mbs4.n = 4;
  mbs4.source = "mbs:4";
  out.push_back(mbs4);  // the non-normal counterexample
  TopologySpec ext;
  ext.family = TopologySpec::Family::extended_cube;
  ext.r = 2;
  ext.k = 3;
  ext.source = "extcube:2x3";
  out.push_back(ext);
  return out;
}

/// The restriction map: |Aut(H,S)| equals |Aut(L(T))| on every battery
/// instance, its images are line-graph automorphisms, it is injective, and
/// the fast conjugation route agrees with exhaustive extension wherever it
/// is allowed to run.
inline SuiteReport suite_psi() {
  SuiteReport rep{"psi", {}};
  for (const auto& spec : theorem_battery()) {
    TranspositionSet s = make(spec);
    PermutationGroup h = generate_group(s);
    HypothesisReport hyp = check_hypotheses(s);
    SimpleGraph t = transposition_graph(s);
    GraphGroup aut_lt = automorphism_group(line_graph(t));
    auto brute = aut_hs_bruteforce(h, s);

    bool order_match = brute.size() == aut_lt.order;
    rep.checks.push_back({spec.source + ": |Aut(H,S)| = |Aut(L(T))|", order_match,
                          std::to_string(brute.size()) + " vs " + std::to_string(aut_lt.order)});

    bool images_ok = true, injective = true;
    std::set<VertexBijection> images;
    for (const auto& sigma : brute) {
      try {
        auto tau = psi_restriction(sigma, s, h);
        if (!std::binary_search(aut_lt.elements.begin(), aut_lt.elements.end(), tau))
          images_ok = false;
        if (!images.insert(tau).second) injective = false;
      } catch (const NotSFixing&) {
        images_ok = false;
      }
    }
    rep.checks.push_back({spec.source + ": psi images are line-graph automorphisms",
                          images_ok, std::to_string(brute.size()) + " automorphisms"});
    rep.checks.push_back({spec.source + ": psi injective", injective, ""});

    if (hyp.girth_ok && hyp.components_isomorphic) {
      auto fast = aut_hs_fast(s);
      rep.checks.push_back({spec.source + ": fast Aut(H,S) = exhaustive Aut(H,S)",
                            fast == brute,
                            std::to_string(fast.size()) + " vs " + std::to_string(brute.size())});
    } else {
      bool refused = false;
      try {
        aut_hs_fast(s);
      } catch (const HypothesisViolated&) {
        refused = true;
      }
      rep.checks.push_back({spec.source + ": fast path refuses (hypotheses fail)", refused, ""});
    }
  }
  return rep;
}

/// Whitney lifting: every line-graph automorphism lifts to the transposition
/// graph, and restricting the lifted conjugation recovers it (components
/// with >= 3 vertices).
inline SuiteReport suite_lifting() {
  SuiteReport rep{"lifting", {}};
  for (const auto& spec : theorem_battery()) {
    TranspositionSet s = make(spec);
    SimpleGraph t = transposition_graph(s);
    auto comps = connected_components(t);
    bool small_comp = false;
    for (const auto& c : comps) small_comp = small_comp || c.graph.n < 3;
    if (small_comp) continue;  // K_2 components: lift is canonical, not unique

    PermutationGroup h = generate_group(s);
    GraphGroup aut_lt = automorphism_group(line_graph(t));
    bool round_trip = true;
    for (const auto& tau : aut_lt.elements) {
      VertexBijection lifted = lift_line_graph_aut(tau, t);
      GroupAutomorphism sigma = conjugation_automorphism(h, point_permutation(s, lifted));
      if (psi_restriction(sigma, s, h) != tau) round_trip = false;
    }
    rep.checks.push_back({spec.source + ": psi(lift(tau)) = tau for all tau", round_trip,
                          std::to_string(aut_lt.order) + " line-graph automorphisms"});

    GraphGroup aut_t = automorphism_group(t);
    rep.checks.push_back({spec.source + ": |Aut(T)| = |Aut(L(T))|",
                          aut_t.order == aut_lt.order,
                          std::to_string(aut_t.order) + " vs " + std::to_string(aut_lt.order)});
  }
  return rep;
}

/// Closed-form orders vs the structure theorem vs brute force.
inline SuiteReport suite_corollaries() {
  SuiteReport rep{"corollaries", {}};
  std::vector<TopologySpec> specs = theorem_battery();
  {
    TopologySpec b3;
    b3.family = TopologySpec::Family::bubble_sort;
    b3.n = 3;
    b3.source = "bubble:3";
    specs.push_back(b3);
    TopologySpec s4;
    s4.family = TopologySpec::Family::star;
    s4.n = 4;
    s4.source = "star:4";
    specs.push_back(s4);
  }
  for (const auto& spec : specs) {
    if (spec.family == TopologySpec::Family::modified_bubble_sort && spec.n < 5)
      continue;  // no closed form below n = 5
    PredictedOrder pred = predicted_order(spec);
    TranspositionSet s = make(spec);
    AutReport fast = aut_fast(s);
    AutReport brute = aut_bruteforce(build_cayley(s));
    bool ok = pred.order == fast.order && fast.order == brute.order;
    rep.checks.push_back({spec.source + ": predicted = fast = brute", ok,
                          pred.order.get_str() + " / " + fast.order.get_str() + " / " +
                              brute.order.get_str()});
  }
  return rep;
}

}  // namespace cayley
