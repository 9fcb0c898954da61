// walkgauge command-line front end: invariant reports, verification sweeps,
// enumeration dumps, and Monte-Carlo spot checks.
//
// Exit codes: 0 success, 1 check/verification failure, 2 usage or parse
// error, 3 resource limit exceeded.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "walkgauge/walkgauge.hpp"

namespace {

using walkgauge::Graph;
using walkgauge::json;
using walkgauge::Rational;
using walkgauge::VerificationReport;

constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;

int enumeration_cap() {
  if (const char* env = std::getenv("WALKGAUGE_MAX_N")) {
    try {
      int v = std::stoi(env);
      if (v >= 3) return v;
    } catch (const std::exception&) {
      // fall through to the default on malformed values
    }
  }
  return walkgauge::kEnumerationLimit;
}

Graph parse_family(const std::string& spec) {
  auto bad = [&]() -> Graph {
    throw walkgauge::ParseError("family spec must be S:n,l or P:n,l or C:n, got '" + spec + "'");
  };
  if (spec.size() < 3 || spec[1] != ':') return bad();
  char kind = spec[0];
  std::string rest = spec.substr(2);
  try {
    if (kind == 'C') {
      size_t pos = 0;
      int n = std::stoi(rest, &pos);
      if (pos != rest.size()) return bad();
      return walkgauge::make_cycle(n);
    }
    size_t comma = rest.find(',');
    if (comma == std::string::npos) return bad();
    size_t pos = 0;
    int n = std::stoi(rest.substr(0, comma), &pos);
    std::string lpart = rest.substr(comma + 1);
    int l = std::stoi(lpart, &pos);
    if (pos != lpart.size()) return bad();
    if (kind == 'S') return walkgauge::make_S(n, l);
    if (kind == 'P') return walkgauge::make_P(n, l);
  } catch (const walkgauge::Error&) {
    throw;
  } catch (const std::exception&) {
    return bad();
  }
  return bad();
}

Graph load_graph(const std::string& path, const std::string& family) {
  if (!family.empty()) return parse_family(family);
  std::string text;
  if (path == "-" || path.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw walkgauge::ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  if (walkgauge::detect_graph_format(text) == walkgauge::GraphTextFormat::graph6) {
    // take the first non-empty line
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (!line.empty()) return walkgauge::graph6_decode(line);
    }
    throw walkgauge::ParseError("empty graph6 input");
  }
  return walkgauge::parse_edge_list(text);
}

// ---------------------------------------------------------------------------
// verify: build the work list, run it (optionally in parallel), stream NDJSON
// ---------------------------------------------------------------------------

struct VerifyOptions {
  int n = 0;       // single n (0 = use range)
  int n_min = 0;   // 0 = check-specific default
  int n_max = 0;
  int l = 0;       // single l (0 = all)
  int jobs = 1;
  int cap = walkgauge::kEnumerationLimit;
};

using WorkItem = std::function<VerificationReport()>;

void expand_range(const VerifyOptions& opt, int def_min, int def_max, int& lo, int& hi) {
  lo = opt.n ? opt.n : (opt.n_min ? opt.n_min : def_min);
  hi = opt.n ? opt.n : (opt.n_max ? opt.n_max : def_max);
  if (opt.n_min && !opt.n && lo > hi) hi = lo;
}

// One aggregated report per (check, n) over every enumerated unicyclic class.
VerificationReport sweep_unicyclic_identities(const std::string& which, int n, int cap) {
  VerificationReport agg;
  agg.check_name = which;
  agg.n = n;
  int classes = 0;
  walkgauge::enumerate_unicyclic(n, [&](const Graph& g) {
    ++classes;
    if (agg.status == walkgauge::CheckStatus::fail) return;
    VerificationReport r;
    if (which == "cc-rc-identities") r = walkgauge::check_cc_rc_identities(g);
    else if (which == "kf-identities") r = walkgauge::check_kf_identities(g);
    else r = walkgauge::check_weighted_centrality(g);
    if (r.status == walkgauge::CheckStatus::fail) {
      agg.status = r.status;
      agg.counterexample = r.counterexample;
    }
  }, cap);
  agg.details.push_back("isomorphism classes checked: " + std::to_string(classes));
  return agg;
}

VerificationReport sweep_tree_identities(int n, int cap) {
  VerificationReport agg;
  agg.check_name = "tree-identities";
  agg.n = n;
  int trees = 0;
  walkgauge::enumerate_trees(n, [&](const Graph& t) {
    ++trees;
    if (agg.status == walkgauge::CheckStatus::fail) return;
    VerificationReport r = walkgauge::check_tree_identities(t);
    if (r.status == walkgauge::CheckStatus::fail) {
      agg.status = r.status;
      agg.counterexample = r.counterexample;
      return;
    }
    for (int v = 0; v < n && agg.status != walkgauge::CheckStatus::fail; ++v) {
      VerificationReport b = walkgauge::check_tree_rc_bounds(t, v);
      if (b.status == walkgauge::CheckStatus::fail) {
        agg.status = b.status;
        agg.counterexample = b.counterexample;
      }
    }
  }, cap);
  agg.details.push_back("trees checked: " + std::to_string(trees));
  return agg;
}

std::vector<WorkItem> build_verify_items(const std::string& check, const VerifyOptions& opt) {
  std::vector<WorkItem> items;
  const int cap = opt.cap;
  const int sweep_hi = std::min(8, cap);
  auto add = [&](WorkItem w) { items.push_back(std::move(w)); };

  bool all = check == "all";
  bool known = all;
  auto want = [&](const std::string& name) {
    if (check == name) known = true;
    return all || check == name;
  };

  if (want("golden")) add([cap] { return walkgauge::verify_golden_values(cap); });
  if (want("cycle-lemmas")) {
    int hi = opt.n_max ? opt.n_max : (opt.n ? opt.n : 50);
    add([hi] { return walkgauge::verify_cycle_lemmas(hi); });
  }
  if (want("hitting")) {
    int lo, hi;
    expand_range(opt, 3, sweep_hi, lo, hi);
    for (int n = lo; n <= hi; ++n)
      add([n, cap] { return walkgauge::verify_hitting_agreement(n, cap); });
  }
  if (want("identities")) {
    int lo, hi;
    expand_range(opt, 3, sweep_hi, lo, hi);
    for (int n = lo; n <= hi; ++n)
      for (const char* which : {"cc-rc-identities", "kf-identities", "weighted-centrality"}) {
        std::string w = which;
        add([w, n, cap] { return sweep_unicyclic_identities(w, n, cap); });
      }
  }
  if (want("tree-identities")) {
    int lo, hi;
    expand_range(opt, 2, sweep_hi, lo, hi);
    for (int n = lo; n <= hi; ++n)
      add([n, cap] { return sweep_tree_identities(n, cap); });
  }
  if (want("extremal-cc")) {
    int lo, hi;
    expand_range(opt, 4, sweep_hi, lo, hi);
    for (int n = lo; n <= hi; ++n)
      add([n, cap] { return walkgauge::verify_extremal_cc(n, cap); });
  }
  if (want("extremal-rc")) {
    int lo, hi;
    expand_range(opt, 4, sweep_hi, lo, hi);
    for (int n = lo; n <= hi; ++n)
      add([n, cap] { return walkgauge::verify_extremal_rc(n, cap); });
  }
  if (want("bounds")) {
    int lo, hi;
    expand_range(opt, 3, sweep_hi, lo, hi);
    for (int n = lo; n <= hi; ++n) {
      if (opt.l) {
        int l = opt.l, nn = n;
        add([nn, l, cap] { return walkgauge::verify_bounds_nl(nn, l, cap); });
      } else {
        for (int l = 3; l <= n; ++l) {
          int nn = n;
          add([nn, l, cap] { return walkgauge::verify_bounds_nl(nn, l, cap); });
        }
      }
    }
  }
  if (want("cc-lower-envelope")) {
    int lo, hi;
    expand_range(opt, 6, 100, lo, hi);
    for (int n = lo; n <= hi; ++n)
      add([n] { return walkgauge::check_cc_lower_envelope(n); });
  }
  if (want("f1-comparison")) add([cap] { return walkgauge::check_f1_comparison(cap); });

  if (!known) throw walkgauge::ParseError("unknown check name: " + check);
  return items;
}

int run_verify(const std::string& check, const VerifyOptions& opt) {
  std::vector<WorkItem> items = build_verify_items(check, opt);
  std::vector<VerificationReport> results(items.size());

  int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < items.size(); ++i) results[i] = items[i]();
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        try {
          for (size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1))
            results[i] = items[i]();
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  bool ok = true;
  for (const VerificationReport& r : results) {
    std::cout << walkgauge::verification_report_json(r).dump() << "\n";
    if (r.status == walkgauge::CheckStatus::fail) ok = false;
  }
  return ok ? 0 : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact random-walk and resistance invariants of connected graphs"};
  app.require_subcommand(1);
  const int cap = enumeration_cap();

  // --- invariants ---
  auto* inv = app.add_subcommand("invariants", "full invariant report for one graph");
  std::string inv_path, inv_family, inv_format = "json";
  bool inv_verify = false, inv_approx = false, inv_unicyclic = false;
  inv->add_option("input", inv_path, "edge-list or graph6 file ('-' for stdin)");
  inv->add_option("--family", inv_family, "family spec S:n,l | P:n,l | C:n");
  inv->add_option("--format", inv_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  inv->add_flag("--verify", inv_verify, "run all redundant computation paths");
  inv->add_flag("--approx", inv_approx, "add 15-significant-digit approximations");
  inv->add_flag("--unicyclic", inv_unicyclic, "require the input to be unicyclic");

  // --- verify ---
  auto* ver = app.add_subcommand("verify", "run verification checks, NDJSON stream");
  std::string ver_check = "all";
  VerifyOptions vopt;
  vopt.cap = cap;
  ver->add_option("check", ver_check,
                  "all | golden | cycle-lemmas | hitting | identities | tree-identities | "
                  "extremal-cc | extremal-rc | bounds | cc-lower-envelope | f1-comparison");
  ver->add_option("--n", vopt.n, "single n");
  ver->add_option("--n-min", vopt.n_min, "range start");
  ver->add_option("--n-max", vopt.n_max, "range end");
  ver->add_option("--l", vopt.l, "cycle length (bounds only)");
  ver->add_option("--jobs", vopt.jobs, "worker threads")->check(CLI::Range(1, 256));

  // --- enumerate ---
  auto* enu = app.add_subcommand("enumerate", "all unicyclic graphs on n vertices, one per class");
  int enu_n = 0;
  bool enu_count_only = false;
  std::string enu_format = "graph6";
  enu->add_option("--n", enu_n, "vertex count")->required();
  enu->add_flag("--count-only", enu_count_only, "print only the class count");
  enu->add_option("--format", enu_format, "graph6 or edge-list")
      ->check(CLI::IsMember({"graph6", "edge-list"}));

  // --- simulate ---
  auto* sim = app.add_subcommand("simulate", "Monte-Carlo hitting-time estimate vs exact value");
  std::string sim_path, sim_family;
  int sim_from = 0, sim_to = 0;
  long long sim_trials = 0;
  unsigned long long sim_seed = 1;
  long long sim_step_cap = 10'000'000;
  sim->add_option("input", sim_path, "edge-list or graph6 file ('-' for stdin)");
  sim->add_option("--family", sim_family, "family spec S:n,l | P:n,l | C:n");
  sim->add_option("--from", sim_from, "start vertex")->required();
  sim->add_option("--to", sim_to, "target vertex")->required();
  sim->add_option("--trials", sim_trials, "number of walks")
      ->required()
      ->check(CLI::PositiveNumber);
  sim->add_option("--seed", sim_seed, "RNG seed");
  sim->add_option("--step-cap", sim_step_cap, "per-walk step limit")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*inv) {
      if (inv_path.empty() && inv_family.empty())
        throw walkgauge::ParseError("need an input file or --family");
      if (!inv_path.empty() && !inv_family.empty())
        throw walkgauge::ParseError("give an input file or --family, not both");
      Graph g = load_graph(inv_path, inv_family);
      if (inv_unicyclic && !walkgauge::is_unicyclic(g))
        throw walkgauge::NotUnicyclicError("--unicyclic was passed but the input is not");
      walkgauge::InvariantReport rep = walkgauge::compute_invariants(g, inv_verify);
      if (inv_format == "csv")
        std::cout << walkgauge::invariant_report_csv(rep, inv_approx);
      else
        std::cout << walkgauge::invariant_report_json(rep, inv_approx).dump(2) << "\n";
      return 0;
    }

    if (*ver) return run_verify(ver_check, vopt);

    if (*enu) {
      if (enu_count_only) {
        long long count = 0;
        walkgauge::enumerate_unicyclic(enu_n, [&](const Graph&) { ++count; }, cap);
        std::cout << count << "\n";
        return 0;
      }
      long long count = 0;
      walkgauge::enumerate_unicyclic(enu_n, [&](const Graph& g) {
        ++count;
        if (enu_format == "graph6")
          std::cout << walkgauge::graph6_encode(g) << "\n";
        else
          std::cout << walkgauge::write_edge_list(g) << "\n";
      }, cap);
      std::cout << "# count=" << count << "\n";
      return 0;
    }

    if (*sim) {
      if (sim_path.empty() && sim_family.empty())
        throw walkgauge::ParseError("need an input file or --family");
      if (!sim_path.empty() && !sim_family.empty())
        throw walkgauge::ParseError("give an input file or --family, not both");
      Graph g = load_graph(sim_path, sim_family);
      g.check_vertex(sim_from);
      g.check_vertex(sim_to);
      walkgauge::WalkStats stats = walkgauge::simulate_hitting_time(
          g, sim_from, sim_to, sim_trials, sim_seed, sim_step_cap);
      Rational exact = walkgauge::hitting_times_exact(g, sim_to)[sim_from];
      json out = walkgauge::walk_stats_json(stats);
      out["from"] = sim_from;
      out["to"] = sim_to;
      out["exact"] = exact.str();
      double exact_d = exact.approx();
      if (stats.standard_error > 0)
        out["z_score"] = (stats.sample_mean - exact_d) / stats.standard_error;
      else if (stats.sample_mean == exact_d)
        out["z_score"] = 0.0;
      else
        out["z_score"] = nullptr;
      std::cout << out.dump(2) << "\n";
      return 0;
    }
  } catch (const walkgauge::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const walkgauge::VerificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const walkgauge::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const walkgauge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
