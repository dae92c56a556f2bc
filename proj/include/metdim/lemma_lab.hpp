#pragma once
// Mechanical checks for the structural facts behind the hypercube dimension
// results: bipartite metric generators resolving edges, the antipodal shape
// of unresolved pairs, the one-coordinate extension trick, antipodal swaps,
// the constant-column bound with its confounded-pair counterexample
// generator, and the metric-to-mixed basis construction. Every randomized
// check records its seed; a falsified statement surfaces as a CheckFailure
// carrying a full report.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "metdim/host.hpp"
#include "metdim/resolvers.hpp"
#include "metdim/rng.hpp"
#include "metdim/solvers.hpp"

namespace metdim {

using ordered_json = nlohmann::ordered_json;

struct CheckReport {
  std::string statement;
  std::optional<int> d;
  std::int64_t trials = 0;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::vector<ordered_json> counterexamples;
  ordered_json extra = ordered_json::object();

  bool passed() const { return counterexamples.empty(); }
};

ordered_json report_json(const CheckReport& r);

struct CheckFailure : std::runtime_error {
  CheckReport report;
  explicit CheckFailure(CheckReport r);
};

// Raised when a driver cannot finish inside the time budget (distinct from a
// falsified statement and from bad input).
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// S resolves the vertices of the connected bipartite host => S also resolves
// its edges. Replays the even-distance endpoint argument on one random edge
// pair and records it in extra["replay"].
CheckReport check_lemma1(const GraphHost& host, const LandmarkSet& S, Rng& rng);

// Vertex pairs left unresolved by an edge generator of Q_d must be antipodal,
// force d even, and sit at distance d/2 from every landmark.
CheckReport classify_unresolved(int d, const LandmarkSet& S);

// S an edge generator of Q_d, s in S: S + flip(s, coordinate 1) is a metric
// generator, and each formerly-unresolved pair is separated by exactly 2.
LandmarkSet extend_to_metric(int d, const LandmarkSet& S, int s, CheckReport* report = nullptr);

// S a metric generator, s in S with antipode(s) outside S: swapping s for its
// antipode preserves the generator property and the cardinality.
LandmarkSet antipodal_swap(int d, const LandmarkSet& S, int s);

// 0-based coordinates whose value agrees across all of S (no precondition).
std::vector<int> constant_columns(int d, const LandmarkSet& S);

// A verified metric generator can have at most one constant column.
CheckReport constant_column_audit(int d, const LandmarkSet& S);

// Counterexample generator for sets with >= 2 constant columns i < j (the two
// smallest are used): the returned vertex pair differs exactly in {i, j} and
// no vertex of S separates it.
std::pair<hc::Vertex, hc::Vertex> confounding_pair(int d, const LandmarkSet& S);

// Metric basis of Q_d -> mixed basis of the same size. d in {3,4} use the
// fixed known bases; d >= 5 runs the antipodal-replacement construction
// (normalizing a translate so that the all-zeros vertex is a member).
LandmarkSet metric_to_mixed(int d, const LandmarkSet& S, CheckReport* report = nullptr);

// Random instance generators (deterministic for a fixed rng state).
Graph random_connected_bipartite(Rng& rng, int n_min = 4, int n_max = 40);
LandmarkSet random_edge_generator(const HypercubeHost& h, Rng& rng,
                                  const LandmarkSet& greedy_base);

struct SweepResult {
  DimensionTable table;
  std::vector<ordered_json> ratios;  // per d >= 2: value vs 2d/log2(d)
};

// Recompute all three dimensions over a d range, re-verify every
// theorem/corollary relation, and tabulate the asymptotic ratios.
SweepResult theorem_sweep(int d_min, int d_max, const SolveOptions& base);

struct LemmaCheckParams {
  std::optional<int> d_min, d_max;  // unset = statement default
  std::int64_t trials = 0;          // 0 = statement default
  std::uint64_t seed = 1;
  int workers = 0;
  double time_budget_s = 600.0;
};

// statement: lemma1..lemma5, theorem1, theorem2, conjecture, all.
// Reports for a falsified statement end the run early (remaining statements
// are skipped); callers can rely on any !passed() report being last.
std::vector<CheckReport> run_lemma_check(const std::string& statement,
                                         const LemmaCheckParams& p);

}  // namespace metdim
