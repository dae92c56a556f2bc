// metdim — metric / edge / mixed metric dimensions of hypercubes and
// edge-list graphs.
//
//   metdim dim --kind metric --host Qd:4
//   metdim verify --kind mixed --host Qd:3 --basis 111,010,001
//   metdim table 1 4 --kinds metric,edge,mixed --format markdown
//   metdim lemma-check lemma3 --d 4 --trials 100 --seed 7
//
// Exit codes: 0 ok, 1 usage or input error, 2 time budget exhausted (the
// inexact record is still printed), 3 verification failure / falsified
// statement.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "metdim/format.hpp"
#include "metdim/host.hpp"
#include "metdim/lemma_lab.hpp"
#include "metdim/resolvers.hpp"
#include "metdim/solvers.hpp"

namespace {

using namespace metdim;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitWitness = 3;

int default_workers() {
  const char* env = std::getenv("METDIM_WORKERS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end && *end == '\0' && v >= 0 && v <= 1024) return int(v);
  std::cerr << "metdim: ignoring malformed METDIM_WORKERS=\"" << env << "\"\n";
  return 0;
}

// ---- host plumbing ----------------------------------------------------------
// "Qd:<d>" names a hypercube; anything else is an edge-list file path. Exactly
// one member is engaged.

struct HostBox {
  std::optional<HypercubeHost> cube;
  std::optional<GraphHost> graph;
};

HostBox open_host(const std::string& spec) {
  HostBox out;
  if (spec.rfind("Qd:", 0) == 0) {
    const std::string tail = spec.substr(3);
    std::size_t used = 0;
    int d = 0;
    try {
      d = std::stoi(tail, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != tail.size())
      throw std::invalid_argument("bad hypercube spec \"" + spec + "\" (want Qd:<d>)");
    out.cube.emplace(d);
  } else {
    out.graph.emplace(load_graph_file(spec), spec);
  }
  return out;
}

template <class Fn>
auto with_host(const HostBox& box, Fn&& fn) {
  return box.cube ? fn(*box.cube) : fn(*box.graph);
}

// Basis tokens: bitstrings for hypercubes (first character = coordinate 1),
// the file's own vertex labels for graphs.
std::vector<int> parse_basis(const HypercubeHost& h, const std::vector<std::string>& toks) {
  std::vector<int> v;
  v.reserve(toks.size());
  for (const auto& t : toks) v.push_back(int(hc::vertex_from_string(h.d, t)));
  return v;
}

std::vector<int> parse_basis(const GraphHost& h, const std::vector<std::string>& toks) {
  std::vector<int> v;
  v.reserve(toks.size());
  for (const auto& t : toks) {
    char* end = nullptr;
    const long long label = std::strtoll(t.c_str(), &end, 10);
    int id = -1;
    if (end && *end == '\0')
      for (int u = 0; u < h.g.n; ++u)
        if (h.g.original_label[u] == label) {
          id = u;
          break;
        }
    if (id < 0) throw std::invalid_argument("unknown vertex label \"" + t + "\"");
    v.push_back(id);
  }
  return v;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::size_t stop = comma == std::string::npos ? s.size() : comma;
    if (stop > start) out.push_back(s.substr(start, stop - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// "--d 5" or "--d 3..6".
void parse_d_range(const std::string& s, LemmaCheckParams& p) {
  const std::size_t dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      p.d_min = p.d_max = std::stoi(s);
    } else {
      p.d_min = std::stoi(s.substr(0, dots));
      p.d_max = std::stoi(s.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad d range \"" + s + "\" (want <d> or <lo>..<hi>)");
  }
}

// ---- subcommands ------------------------------------------------------------

int cmd_dim(const std::string& host_spec, const std::string& kind_s,
            const std::string& strategy_s, bool fix_zero, int workers, double budget,
            OutFormat fmt, bool stable) {
  const HostBox box = open_host(host_spec);
  if (fix_zero && !box.cube)
    throw std::invalid_argument("--fix-zero needs a hypercube host (vertex-transitivity)");

  SolveOptions opts;
  opts.kind = kind_from_string(kind_s);
  opts.strategy = strategy_from_string(strategy_s);
  opts.fix_zero = fix_zero;
  opts.workers = workers;
  opts.time_budget_s = budget;

  const DimensionRecord rec =
      with_host(box, [&](const auto& h) { return exact_dimension(h, opts); });

  switch (fmt) {
    case OutFormat::json: std::cout << record_json(rec, stable).dump(2) << "\n"; break;
    case OutFormat::csv: std::cout << record_csv(rec, stable); break;
    case OutFormat::markdown: std::cout << record_markdown(rec, stable); break;
  }
  // Greedy is an upper bound by request, not a budget failure.
  if (!rec.exact && opts.strategy != Strategy::greedy) return kExitBudget;
  return kExitOk;
}

int cmd_verify(const std::string& host_spec, const std::string& kind_s,
               const std::string& basis_s, OutFormat fmt) {
  const HostBox box = open_host(host_spec);
  const Kind kind = kind_from_string(kind_s);
  const auto toks = split_list(basis_s);

  return with_host(box, [&](const auto& h) {
    LandmarkSet S{parse_basis(h, toks)};
    validate_landmarks(h, S);
    const auto witness = verify_generator(h, S, kind);
    if (!witness) {
      switch (fmt) {
        case OutFormat::json: std::cout << R"({"result":"OK"})" << "\n"; break;
        case OutFormat::csv: std::cout << "result,kind,a,b,signature\nOK,,,,\n"; break;
        case OutFormat::markdown: std::cout << "OK\n"; break;
      }
      return kExitOk;
    }
    const ordered_json wj = witness_json(h, *witness);
    switch (fmt) {
      case OutFormat::json: {
        ordered_json j;
        j["result"] = "witness";
        j["witness"] = wj;
        std::cout << j.dump(2) << "\n";
        break;
      }
      case OutFormat::csv:
        std::cout << "result,kind,a,b,signature\nwitness," << wj["kind"].get<std::string>()
                  << ',' << csv_escape(wj["a"].get<std::string>()) << ','
                  << csv_escape(wj["b"].get<std::string>()) << ','
                  << csv_escape(wj["signature"].dump()) << "\n";
        break;
      case OutFormat::markdown:
        std::cout << "witness: kind=" << wj["kind"].get<std::string>()
                  << " a=" << wj["a"].get<std::string>() << " b=" << wj["b"].get<std::string>()
                  << " signature=" << wj["signature"].dump() << "\n";
        break;
    }
    return kExitWitness;
  });
}

int cmd_table(int d_min, int d_max, const std::string& kinds_s, const std::string& strategy_s,
              int workers, double budget, OutFormat fmt, bool stable) {
  if (d_min < 1 || d_min > d_max || d_max > 7)
    throw std::invalid_argument("table wants 1 <= d_min <= d_max <= 7");

  std::vector<Kind> kinds;
  for (const auto& t : split_list(kinds_s)) kinds.push_back(kind_from_string(t));
  if (kinds.empty()) throw std::invalid_argument("--kinds must name at least one kind");

  SolveOptions base;
  base.strategy = strategy_from_string(strategy_s);
  base.workers = workers;
  base.time_budget_s = budget;

  const DimensionTable t = dimension_table(d_min, d_max, kinds, base);
  switch (fmt) {
    case OutFormat::json: std::cout << table_json(t, stable).dump(2) << "\n"; break;
    case OutFormat::csv: std::cout << table_csv(t); break;
    case OutFormat::markdown: std::cout << table_markdown(t); break;
  }
  for (const auto& line : t.consistency)
    if (line.status == "FAIL") return kExitWitness;
  return t.any_inexact ? kExitBudget : kExitOk;
}

int cmd_lemma_check(const std::string& statement, const std::string& d_range,
                    std::int64_t trials, std::uint64_t seed, int workers, double budget,
                    OutFormat fmt) {
  LemmaCheckParams p;
  if (!d_range.empty()) parse_d_range(d_range, p);
  p.trials = trials;
  p.seed = seed;
  p.workers = workers;
  p.time_budget_s = budget;

  const auto reports = run_lemma_check(statement, p);
  bool all_passed = true;
  for (const auto& r : reports) all_passed = all_passed && r.passed();

  switch (fmt) {
    case OutFormat::json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(report_json(r));
      std::cout << arr.dump(2) << "\n";
      break;
    }
    case OutFormat::csv: {
      std::cout << "statement,d,trials,exhaustive,seed,counterexamples\n";
      for (const auto& r : reports)
        std::cout << r.statement << ',' << (r.d ? std::to_string(*r.d) : "") << ','
                  << r.trials << ',' << (r.exhaustive ? "true" : "false") << ',' << r.seed
                  << ',' << r.counterexamples.size() << "\n";
      break;
    }
    case OutFormat::markdown: {
      std::cout << "| statement | d | trials | exhaustive | counterexamples |\n"
                << "|---|---|---|---|---|\n";
      for (const auto& r : reports)
        std::cout << "| " << r.statement << " | " << (r.d ? std::to_string(*r.d) : "-")
                  << " | " << r.trials << " | " << (r.exhaustive ? "yes" : "no") << " | "
                  << r.counterexamples.size() << " |\n";
      for (const auto& r : reports)
        if (!r.passed())
          std::cout << "\ncounterexamples for " << r.statement << ":\n"
                    << report_json(r).dump(2) << "\n";
      std::cout << (all_passed ? "PASS\n" : "FAIL\n");
      break;
    }
  }
  return all_passed ? kExitOk : kExitWitness;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metric, edge and mixed metric dimensions of hypercubes and graphs"};
  app.require_subcommand(1);

  std::string kind = "metric", host_spec, strategy = "exact", basis, kinds = "metric,edge,mixed";
  std::string statement, d_range, format = "json";
  bool fix_zero = false, stable = false;
  int workers = default_workers();
  double budget = 600.0;
  int d_min = 1, d_max = 4;
  std::int64_t trials = 0;
  std::uint64_t seed = 1;

  auto* dim = app.add_subcommand("dim", "compute one dimension record");
  dim->add_option("--kind", kind, "metric | edge | mixed")->required();
  dim->add_option("--host", host_spec, "Qd:<d> or an edge-list file")->required();
  dim->add_option("--strategy", strategy, "exact | greedy | hybrid");
  dim->add_flag("--fix-zero", fix_zero, "force the all-zeros vertex into every candidate");
  dim->add_option("--workers", workers, "worker threads (0 = runtime default)");
  dim->add_option("--budget", budget, "time budget in seconds");
  dim->add_option("--format", format, "json | csv | markdown");
  dim->add_flag("--stable-output", stable, "zero wall-clock fields for byte-stable output");

  auto* verify = app.add_subcommand("verify", "verify a candidate generator");
  verify->add_option("--kind", kind, "metric | edge | mixed")->required();
  verify->add_option("--host", host_spec, "Qd:<d> or an edge-list file")->required();
  verify->add_option("--basis", basis, "comma-separated bitstrings (Qd) or labels (file)")
      ->required();
  verify->add_option("--format", format, "json | csv | markdown");

  auto* table = app.add_subcommand("table", "dimension rows plus consistency checks");
  table->add_option("d_min", d_min, "first dimension")->required();
  table->add_option("d_max", d_max, "last dimension")->required();
  table->add_option("--kinds", kinds, "comma-separated kinds");
  table->add_option("--strategy", strategy, "exact | greedy | hybrid");
  table->add_option("--workers", workers, "worker threads (0 = runtime default)");
  table->add_option("--budget", budget, "time budget in seconds, per (d, kind)");
  table->add_option("--format", format, "json | csv | markdown");
  table->add_flag("--stable-output", stable, "zero wall-clock fields for byte-stable output");

  auto* lemma = app.add_subcommand("lemma-check", "run the statement checkers");
  lemma->add_option("statement", statement,
                    "lemma1..lemma5, theorem1, theorem2, conjecture, all")
      ->required();
  lemma->add_option("--d", d_range, "<d> or <lo>..<hi> (default per statement)");
  lemma->add_option("--trials", trials, "randomized trials (0 = statement default)");
  lemma->add_option("--seed", seed, "RNG seed");
  lemma->add_option("--workers", workers, "worker threads (0 = runtime default)");
  lemma->add_option("--budget", budget, "time budget in seconds");
  lemma->add_option("--format", format, "json | csv | markdown");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse error
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const OutFormat fmt = format_from_string(format);
    if (dim->parsed())
      return cmd_dim(host_spec, kind, strategy, fix_zero, workers, budget, fmt, stable);
    if (verify->parsed()) return cmd_verify(host_spec, kind, basis, fmt);
    if (table->parsed())
      return cmd_table(d_min, d_max, kinds, strategy, workers, budget, fmt, stable);
    return cmd_lemma_check(statement, d_range, trials, seed, workers, budget, fmt);
  } catch (const BudgetExceeded& e) {
    std::cerr << "metdim: " << e.what() << "\n";
    return kExitBudget;
  } catch (const CheckFailure& e) {
    std::cout << report_json(e.report).dump(2) << "\n";
    std::cerr << "metdim: statement falsified: " << e.what() << "\n";
    return kExitWitness;
  } catch (const std::invalid_argument& e) {
    std::cerr << "metdim: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "metdim: " << e.what() << "\n";
    return kExitUsage;
  }
}
