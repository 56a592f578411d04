#pragma once

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cayley/aut_engine.hpp"
#include "cayley/cayley_graph.hpp"
#include "cayley/topologies.hpp"

namespace cayley {

struct AnalyzeOptions {
  bool brute = false;
  int brute_budget = kDefaultBruteVertexBudget;
  std::uint64_t group_cap = kDefaultGroupCap;
};

/// Analysis of the ambient Cayley graph Cay(S_n, S) when S sits inside a
/// larger symmetric group: ell = n!/|H| isomorphic components.
struct AmbientAnalysis {
  int n = 0;
  mpz_class index;                  // ell
  std::optional<AutReport> wreath;  // S_ell[Aut(Cay(H,S))]
  std::string wreath_skip_reason;
  std::optional<AutReport> brute;  // search on the ell-fold disjoint union
  std::string brute_skip_reason;
  std::optional<bool> match;
};

struct Analysis {
  TopologySpec spec;
  TranspositionSet gens;
  HypothesisReport hyp;
  std::uint64_t group_order = 0;
  int group_degree = 0;

  std::optional<AutReport> fast;
  std::string fast_refusal;
  std::optional<AutReport> brute;
  std::string brute_skip_reason;
  std::optional<bool> match;  // set iff both methods ran

  std::optional<bool> is_normal;
  std::string normality_source;  // "girth-5 structure" | "stabilizer check" | "unknown"
  std::optional<std::size_t> stabilizer_order;
  bool violator_found = false;

  std::optional<AmbientAnalysis> ambient;
  std::vector<std::pair<std::string, double>> timings_ms;
};

namespace detail {
class PhaseTimer {
 public:
  explicit PhaseTimer(Analysis& a) : a_(a) {}
  template <typename F>
  auto run(const std::string& name, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      record(name, t0);
    } else {
      auto r = f();
      record(name, t0);
      return r;
    }
  }

 private:
  void record(const std::string& name, std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
    a_.timings_ms.emplace_back(name, dt.count());
  }
  Analysis& a_;
};
}  // namespace detail

/// The full pipeline: hypotheses -> structure-theorem path (when it applies)
/// -> brute-force oracle (on request, within budget) -> normality verdict ->
/// wreath extension for an ambient symmetric group.
inline Analysis analyze(const TopologySpec& spec, const AnalyzeOptions& opts = {}) {
  Analysis a;
  a.spec = spec;
  detail::PhaseTimer timer(a);

  a.gens = make(spec);
  a.hyp = timer.run("hypotheses", [&] { return check_hypotheses(a.gens); });
  PermutationGroup h = timer.run("group_closure", [&] { return generate_group(a.gens, opts.group_cap); });
  a.group_order = h.order();
  a.group_degree = h.degree;

  if (a.hyp.girth_ok) {
    a.fast = timer.run("fast_path", [&] { return detail::aut_fast_from(h, a.gens, a.hyp); });
  } else {
    std::ostringstream os;
    os << "girth " << (a.hyp.girth_value ? std::to_string(*a.hyp.girth_value) : "inf")
       << " < 5: structure theorem does not apply";
    a.fast_refusal = os.str();
  }

  std::optional<CayleyGraph> cg;
  if (opts.brute) {
    cg = timer.run("cayley_build", [&] { return build_cayley_from(h, a.gens); });
    if (cg->graph.n <= opts.brute_budget) {
      GraphGroup full = timer.run("brute_force", [&] {
        return automorphism_group(cg->graph);
      });
      NormalityCheck nc = timer.run("normality", [&] { return verify_normality(*cg, full); });
      a.brute = detail::brute_report(*cg, full, nc);
      a.is_normal = nc.is_normal;
      a.normality_source = "stabilizer check";
      a.stabilizer_order = nc.stabilizer_order;
      a.violator_found = nc.violator.has_value();
    } else {
      a.brute_skip_reason = std::to_string(cg->graph.n) + " vertices exceed budget " +
                            std::to_string(opts.brute_budget);
    }
  }
  if (a.fast && a.brute) a.match = a.fast->order == a.brute->order;
  if (!a.is_normal.has_value()) {
    if (a.hyp.girth_ok) {
      a.is_normal = true;
      a.normality_source = "girth-5 structure";
    } else {
      a.normality_source = "unknown";
    }
  }

  if (spec.family == TopologySpec::Family::custom_in_ambient) {
    AmbientAnalysis amb;
    amb.n = spec.ambient;
    amb.index = factorial_mpz(spec.ambient) / mpz_class(static_cast<unsigned long>(h.order()));
    const AutReport* inner = a.fast ? &*a.fast : (a.brute ? &*a.brute : nullptr);
    if (!inner) {
      amb.wreath_skip_reason = "no automorphism report for Cay(H,S)";
    } else if (!amb.index.fits_ulong_p()) {
      amb.wreath_skip_reason = "component count does not fit a machine word";
    } else {
      unsigned long ell = amb.index.get_ui();
      amb.wreath = timer.run("wreath", [&] {
        return wreath_extension(*inner, ell, static_cast<int>(h.order()));
      });
      if (opts.brute) {
        if (!cg) cg = build_cayley_from(h, a.gens);
        std::uint64_t union_n = static_cast<std::uint64_t>(ell) * cg->graph.n;
        if (union_n <= static_cast<std::uint64_t>(opts.brute_budget)) {
          GraphGroup full = timer.run("ambient_brute", [&] {
            std::vector<SimpleGraph> copies(ell, cg->graph);
            return automorphism_group(disjoint_union(copies));
          });
          AutReport br;
          br.order = mpz_class(static_cast<unsigned long>(full.order));
          br.vertex_generators = full.generators;
          br.method = AutMethod::BruteForce;
          br.factorization = plain_factor(br.order);
          amb.brute = std::move(br);
          amb.match = amb.wreath->order == amb.brute->order;
        } else {
          amb.brute_skip_reason = std::to_string(union_n) + " vertices exceed budget " +
                                  std::to_string(opts.brute_budget);
        }
      }
    }
    a.ambient = std::move(amb);
  }
  return a;
}

// ---- serialization ----

inline nlohmann::json to_json(const Factorization& f) {
  nlohmann::json j;
  j["text"] = f.text();
  switch (f.form) {
    case Factorization::Form::group:
      j["form"] = "group";
      j["order"] = f.normal_order.get_str();
      break;
    case Factorization::Form::semidirect:
      j["form"] = "semidirect";
      j["normal_order"] = f.normal_order.get_str();
      j["complement_order"] = f.complement_order.get_str();
      break;
    case Factorization::Form::wreath:
      j["form"] = "wreath";
      j["copies"] = f.copies;
      j["inner"] = to_json(*f.inner);
      break;
  }
  return j;
}

inline nlohmann::json to_json(const AutReport& r) {
  nlohmann::json j;
  j["order"] = r.order.get_str();
  j["factorization"] = to_json(r.factorization);
  j["method"] = r.method == AutMethod::FastPath
                    ? "fast"
                    : (r.method == AutMethod::BruteForce ? "brute" : "both");
  j["is_normal"] = r.is_normal ? nlohmann::json(*r.is_normal) : nlohmann::json(nullptr);
  j["aut_hs_order"] =
      r.aut_hs_order ? nlohmann::json(r.aut_hs_order->get_str()) : nlohmann::json(nullptr);
  j["vertex_generators"] = r.vertex_generators;
  return j;
}

inline std::string pairs_string(const TranspositionSet& s) {
  std::string out;
  for (const auto& t : s.pairs) {
    if (!out.empty()) out += ",";
    out += std::to_string(t.a) + "-" + std::to_string(t.b);
  }
  return out;
}

inline nlohmann::json to_json(const Analysis& a, bool with_timings = true) {
  nlohmann::json j;
  j["version"] = 1;
  j["input"] = {{"spec", a.spec.source.empty() ? family_name(a.spec.family) : a.spec.source},
                {"family", family_name(a.spec.family)},
                {"transpositions", pairs_string(a.gens)},
                {"ambient", a.spec.family == TopologySpec::Family::custom_in_ambient
                                ? nlohmann::json(a.spec.ambient)
                                : nlohmann::json(nullptr)}};
  j["group"] = {{"order", std::to_string(a.group_order)}, {"degree", a.group_degree}};
  j["hypotheses"] = {
      {"girth", a.hyp.girth_value ? nlohmann::json(*a.hyp.girth_value) : nlohmann::json("infinite")},
      {"girth_ok", a.hyp.girth_ok},
      {"component_count", a.hyp.component_count},
      {"components_isomorphic", a.hyp.components_isomorphic},
      {"is_tree", a.hyp.is_tree},
      {"is_connected", a.hyp.is_connected}};
  j["fast"] = a.fast ? to_json(*a.fast) : nlohmann::json(nullptr);
  j["fast_refusal"] = a.fast_refusal;
  j["brute"] = a.brute ? to_json(*a.brute) : nlohmann::json(nullptr);
  j["brute_skipped"] = a.brute_skip_reason;
  j["match"] = a.match ? nlohmann::json(*a.match) : nlohmann::json(nullptr);
  j["normality"] = {
      {"is_normal", a.is_normal ? nlohmann::json(*a.is_normal) : nlohmann::json(nullptr)},
      {"source", a.normality_source},
      {"stabilizer_order",
       a.stabilizer_order ? nlohmann::json(*a.stabilizer_order) : nlohmann::json(nullptr)},
      {"violator_found", a.violator_found}};
  if (a.ambient) {
    nlohmann::json amb;
    amb["n"] = a.ambient->n;
    amb["component_count"] = a.ambient->index.get_str();
    amb["wreath"] = a.ambient->wreath ? to_json(*a.ambient->wreath) : nlohmann::json(nullptr);
    amb["wreath_skipped"] = a.ambient->wreath_skip_reason;
    amb["brute"] = a.ambient->brute ? to_json(*a.ambient->brute) : nlohmann::json(nullptr);
    amb["brute_skipped"] = a.ambient->brute_skip_reason;
    amb["match"] = a.ambient->match ? nlohmann::json(*a.ambient->match) : nlohmann::json(nullptr);
    j["ambient"] = amb;
  } else {
    j["ambient"] = nullptr;
  }
  if (with_timings) {
    nlohmann::json t;
    for (const auto& [name, ms] : a.timings_ms) t[name] = ms;
    j["timings_ms"] = t;
  }
  return j;
}

inline std::string render_text(const Analysis& a) {
  std::ostringstream os;
  os << "input:        " << (a.spec.source.empty() ? family_name(a.spec.family) : a.spec.source)
     << "  (S = " << pairs_string(a.gens) << ")\n";
  os << "group:        order " << a.group_order << ", degree " << a.group_degree << "\n";
  os << "transposition graph: girth "
     << (a.hyp.girth_value ? std::to_string(*a.hyp.girth_value) : "inf") << ", "
     << a.hyp.component_count << " component(s)"
     << (a.hyp.component_count > 1
             ? (a.hyp.components_isomorphic ? " (isomorphic)" : " (not isomorphic)")
             : "")
     << (a.hyp.is_tree ? ", tree" : "") << "\n";
  if (a.fast) {
    os << "fast path:    order " << a.fast->order.get_str() << " = "
       << a.fast->factorization.text() << "\n";
  } else {
    os << "fast path:    refused (" << a.fast_refusal << ")\n";
  }
  if (a.brute) {
    os << "brute force:  order " << a.brute->order.get_str() << "\n";
  } else if (!a.brute_skip_reason.empty()) {
    os << "brute force:  skipped (" << a.brute_skip_reason << ")\n";
  }
  if (a.match) os << "match:        " << (*a.match ? "yes" : "MISMATCH") << "\n";
  os << "normal:       "
     << (a.is_normal ? (*a.is_normal ? "yes" : "no") : "unknown") << "  [" << a.normality_source
     << "]";
  if (a.stabilizer_order) {
    os << "  stabilizer order " << *a.stabilizer_order
       << (a.violator_found ? ", violating stabilizer element found" : "");
  }
  os << "\n";
  if (a.ambient) {
    os << "ambient S_" << a.ambient->n << ": " << a.ambient->index.get_str()
       << " isomorphic component(s)\n";
    if (a.ambient->wreath) {
      os << "  wreath order:  " << a.ambient->wreath->order.get_str() << " = "
         << a.ambient->wreath->factorization.text() << "\n";
    } else {
      os << "  wreath:        skipped (" << a.ambient->wreath_skip_reason << ")\n";
    }
    if (a.ambient->brute)
      os << "  union brute:   " << a.ambient->brute->order.get_str() << "\n";
    else if (!a.ambient->brute_skip_reason.empty())
      os << "  union brute:   skipped (" << a.ambient->brute_skip_reason << ")\n";
    if (a.ambient->match)
      os << "  match:         " << (*a.ambient->match ? "yes" : "MISMATCH") << "\n";
  }
  return os.str();
}

/// Exit-code contract for the CLI: 0 ok, 2 parse, 3 cap, 4 mismatch.
inline bool has_mismatch(const Analysis& a) {
  if (a.match && !*a.match) return true;
  if (a.ambient && a.ambient->match && !*a.ambient->match) return true;
  return false;
}

}  // namespace cayley
