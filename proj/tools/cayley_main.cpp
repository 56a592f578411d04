// Command-line front end: analyze topologies, run verification suites, and
// benchmark the structure-theorem path against the brute-force oracle.
//
// Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 budget
// exceeded, 4 fast/brute mismatch (which would falsify the implementation).

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cayley/analysis.hpp"
#include "cayley/suites.hpp"

namespace {

using namespace cayley;

int run_analyze(const std::string& spec_text, const AnalyzeOptions& opts, bool json) {
  TopologySpec spec = parse_topology(spec_text);
  Analysis a = analyze(spec, opts);
  if (json)
    std::cout << to_json(a).dump(2) << "\n";
  else
    std::cout << render_text(a);
  return has_mismatch(a) ? 4 : 0;
}

void print_suite(const SuiteReport& rep) {
  for (const auto& c : rep.checks) {
    std::cout << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
    std::cout << "\n";
  }
}

int run_verify(const std::string& which, int max_points, unsigned seed, int samples) {
  std::vector<SuiteReport> reports;
  if (which == "lemma" || which == "all") reports.push_back(suite_lemma(max_points));
  if (which == "condii" || which == "all") reports.push_back(suite_condition_ii(samples, seed));
  if (which == "psi" || which == "all") reports.push_back(suite_psi());
  if (which == "lifting" || which == "all") reports.push_back(suite_lifting());
  if (which == "corollaries" || which == "all") reports.push_back(suite_corollaries());
  if (reports.empty()) throw ParseError("unknown suite: " + which);
  bool ok = true;
  for (const auto& rep : reports) {
    std::cout << "== suite: " << rep.suite << " ==\n";
    print_suite(rep);
    ok = ok && rep.all_passed();
  }
  std::cout << (ok ? "all checks passed" : "FAILURES present") << "\n";
  return ok ? 0 : 1;
}

std::vector<std::string> expand_ranges(const std::vector<std::string>& specs) {
  std::vector<std::string> out;
  for (const auto& s : specs) {
    auto colon = s.find(':');
    auto dots = s.find("..");
    if (colon == std::string::npos || dots == std::string::npos || dots < colon) {
      out.push_back(s);
      continue;
    }
    std::string head = s.substr(0, colon + 1);
    int lo = std::stoi(s.substr(colon + 1, dots - colon - 1));
    int hi = std::stoi(s.substr(dots + 2));
    for (int v = lo; v <= hi; ++v) out.push_back(head + std::to_string(v));
  }
  return out;
}

int run_bench(const std::vector<std::string>& spec_texts, int reps, const AnalyzeOptions& opts) {
  std::cout << "family,spec,vertices,fast_ms,brute_ms,speedup\n";
  for (const auto& text : expand_ranges(spec_texts)) {
    TopologySpec spec = parse_topology(text);
    TranspositionSet s = make(spec);
    PermutationGroup h = generate_group(s, opts.group_cap);

    auto best_ms = [&](auto&& fn) {
      double best = -1;
      for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        if (best < 0 || ms < best) best = ms;
      }
      return best;
    };

    std::string fast_ms = "refused";
    HypothesisReport hyp = check_hypotheses(s);
    if (hyp.girth_ok)
      fast_ms = std::to_string(best_ms([&] { detail::aut_fast_from(h, s, hyp); }));

    std::string brute_ms = "skipped", speedup = "";
    if (static_cast<int>(h.order()) <= opts.brute_budget) {
      CayleyGraph cg = build_cayley_from(h, s);
      double b = best_ms([&] { automorphism_group(cg.graph); });
      brute_ms = std::to_string(b);
      if (hyp.girth_ok) {
        double f = std::stod(fast_ms);
        speedup = std::to_string(f > 0 ? b / f : 0.0);
      }
    }
    std::cout << family_name(spec.family) << "," << text << "," << h.order() << "," << fast_ms
              << "," << brute_ms << "," << speedup << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley graphs of transposition sets: automorphism groups two ways"};
  app.require_subcommand(1);

  std::string spec_text;
  bool brute = false, json = false;
  int budget = cayley::kDefaultBruteVertexBudget;
  std::uint64_t cap = cayley::kDefaultGroupCap;

  auto* analyze_cmd = app.add_subcommand(
      "analyze", "hypotheses, fast-path and brute-force automorphism orders, normality");
  analyze_cmd->add_option("spec", spec_text,
                          "topology (hypercube:3, bubble:4, star:5, mbs:5, extcube:2x3, "
                          "custom:file[,ambient=n], custom:1-2,2-3)")
      ->required();
  analyze_cmd->add_flag("--brute", brute, "also run the brute-force oracle");
  analyze_cmd->add_option("--budget", budget, "brute-force vertex budget");
  analyze_cmd->add_option("--cap", cap, "group closure cap");
  analyze_cmd->add_flag("--json", json, "emit the JSON report");

  std::string suite = "all";
  int max_points = 5, samples = 50;
  unsigned seed = 1;
  auto* verify_cmd =
      app.add_subcommand("verify", "run a verification suite: lemma|condii|psi|lifting|corollaries|all");
  verify_cmd->add_option("suite", suite, "suite name")->required();
  verify_cmd->add_option("--max-points", max_points, "lemma suite: exhaustive point bound");
  verify_cmd->add_option("--seed", seed, "condii suite: sampling seed");
  verify_cmd->add_option("--samples", samples, "condii suite: sample count");

  std::vector<std::string> bench_specs;
  int reps = 3;
  auto* bench_cmd = app.add_subcommand("bench", "fast path vs brute force timing table (CSV)");
  bench_cmd->add_option("specs", bench_specs, "topology specs; ranges allowed (bubble:3..5)")
      ->required();
  bench_cmd->add_option("--reps", reps, "repetitions per row (best is kept)");
  bench_cmd->add_option("--budget", budget, "brute-force vertex budget");
  bench_cmd->add_option("--cap", cap, "group closure cap");

  try {
    app.parse(argc, argv);
    cayley::AnalyzeOptions opts{brute, budget, cap};
    if (*analyze_cmd) return run_analyze(spec_text, opts, json);
    if (*verify_cmd) return run_verify(suite, max_points, seed, samples);
    if (*bench_cmd) return run_bench(bench_specs, reps, opts);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const cayley::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const cayley::InvalidParams& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return 2;
  } catch (const cayley::CapExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
