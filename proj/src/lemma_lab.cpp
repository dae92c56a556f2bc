#include "metdim/lemma_lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

#include "metdim/format.hpp"

namespace metdim {

namespace {
constexpr std::size_t kMaxStoredCounterexamples = 16;
}

ordered_json report_json(const CheckReport& r) {
  ordered_json j;
  j["statement"] = r.statement;
  if (r.d) j["d"] = *r.d;
  j["trials"] = r.trials;
  j["exhaustive"] = r.exhaustive;
  j["seed"] = r.seed;
  j["counterexamples"] = r.counterexamples;
  if (!r.extra.empty()) j["details"] = r.extra;
  return j;
}

CheckFailure::CheckFailure(CheckReport r)
    : std::runtime_error("check failed: " + r.statement +
                         (r.d ? " (d=" + std::to_string(*r.d) + ")" : "")),
      report(std::move(r)) {}

// ---- lemma 1 ----------------------------------------------------------------

CheckReport check_lemma1(const GraphHost& host, const LandmarkSet& S, Rng& rng) {
  CheckReport rep;
  rep.statement = "lemma1";
  rep.trials = 1;

  if (verify_generator(host, S, Kind::metric))
    throw std::invalid_argument("check_lemma1 requires a metric generator");
  const auto bp = bipartition(host.g);
  if (!bp.bipartite) throw std::invalid_argument("check_lemma1 requires a bipartite host");

  if (auto w = verify_generator(host, S, Kind::edge)) {
    ordered_json cx;
    cx["reason"] = "metric generator does not resolve the edge set";
    cx["witness"] = witness_json(host, *w);
    cx["n"] = host.g.n;
    cx["edges"] = host.g.edges;
    rep.counterexamples.push_back(std::move(cx));
  }

  // Replay the argument on one random edge pair: pick same-colored endpoints
  // u, v; any landmark separating them by >= 2 also separates the edges.
  const int m = host.edge_count();
  if (m >= 2) {
    int e1 = rng.below_int(m);
    int e2 = rng.below_int(m - 1);
    if (e2 >= e1) ++e2;
    const auto [x1, y1] = host.edge_endpoints(e1);
    const auto [x2, y2] = host.edge_endpoints(e2);

    int u, v;
    if (x1 == x2 || x1 == y2 || y1 == x2 || y1 == y2) {
      const int shared = (x1 == x2 || x1 == y2) ? x1 : y1;
      u = x1 == shared ? y1 : x1;
      v = x2 == shared ? y2 : x2;
    } else {
      u = x1;
      v = bp.color[x2] == bp.color[u] ? x2 : y2;
    }

    ordered_json replay;
    replay["edge_a"] = host.edge_name(e1);
    replay["edge_b"] = host.edge_name(e2);
    replay["u"] = host.vertex_name(u);
    replay["v"] = host.vertex_name(v);
    replay["d_uv"] = host.dist(u, v);

    auto flag = [&](const std::string& reason) {
      ordered_json cx = replay;
      cx["reason"] = reason;
      rep.counterexamples.push_back(std::move(cx));
    };

    if (u == v || bp.color[u] != bp.color[v] || host.dist(u, v) % 2 != 0) {
      flag("selected endpoints are not a distinct even-distance pair");
    } else {
      int s = -1;
      for (int cand : S.v)
        if (host.dist(cand, u) != host.dist(cand, v)) {
          s = cand;
          break;
        }
      if (s < 0) {
        flag("no landmark separates the endpoint pair");
      } else {
        const int du = host.dist(s, u), dv = host.dist(s, v);
        replay["landmark"] = host.vertex_name(s);
        replay["d_su"] = du;
        replay["d_sv"] = dv;
        replay["d_edge_a"] = host.edge_dist(e1, s);
        replay["d_edge_b"] = host.edge_dist(e2, s);
        if (std::abs(du - dv) < 2)
          flag("same-colored endpoints separated by less than 2");
        else if (host.edge_dist(e1, s) == host.edge_dist(e2, s))
          flag("separating landmark fails to separate the edges");
      }
    }
    rep.extra["replay"] = std::move(replay);
  }
  return rep;
}

// ---- lemma 2 ----------------------------------------------------------------

CheckReport classify_unresolved(int d, const LandmarkSet& S) {
  HypercubeHost h(d);
  CheckReport rep;
  rep.statement = "lemma2";
  rep.d = d;
  rep.trials = 1;
  if (verify_generator(h, S, Kind::edge))
    throw std::invalid_argument("classify_unresolved requires an edge generator");

  const auto ws = all_witnesses(h, S, Kind::metric);
  for (const auto& w : ws) {
    const auto u = hc::Vertex(w.a), v = hc::Vertex(w.b);
    std::string fail;
    if ((u ^ v) != hc::full_mask(d))
      fail = "unresolved pair is not antipodal";
    else if (d % 2 != 0)
      fail = "unresolved pair in odd dimension";
    else
      for (int s : S.v)
        if (h.dist(w.a, s) != d / 2 || h.dist(w.b, s) != d / 2) {
          fail = "landmark not at distance d/2 from both sides";
          break;
        }
    if (!fail.empty()) {
      ordered_json cx;
      cx["reason"] = fail;
      cx["u"] = h.vertex_name(w.a);
      cx["v"] = h.vertex_name(w.b);
      cx["landmarks"] = [&] {
        std::vector<std::string> names;
        for (int s : S.v) names.push_back(h.vertex_name(s));
        return names;
      }();
      rep.counterexamples.push_back(std::move(cx));
    }
  }
  rep.extra["unresolved_pairs"] = std::int64_t(ws.size());
  return rep;
}

// ---- lemma 3 ----------------------------------------------------------------

LandmarkSet extend_to_metric(int d, const LandmarkSet& S, int s, CheckReport* report) {
  HypercubeHost h(d);
  if (!S.contains(s)) throw std::invalid_argument("s must be a member of S");
  if (verify_generator(h, S, Kind::edge))
    throw std::invalid_argument("extend_to_metric requires an edge generator");

  CheckReport rep;
  rep.statement = "lemma3";
  rep.d = d;
  rep.trials = 1;

  const int t = int(hc::flip(d, hc::Vertex(s), 0));
  const auto before = all_witnesses(h, S, Kind::metric);
  rep.extra["pivot"] = h.vertex_name(s);
  rep.extra["added"] = h.vertex_name(t);
  rep.extra["formerly_unresolved"] = std::int64_t(before.size());

  LandmarkSet T = S;
  if (!T.contains(t)) T.v.push_back(t);

  for (const auto& w : before) {
    const int gap = std::abs(h.dist(w.a, t) - h.dist(w.b, t));
    if (gap != 2) {
      ordered_json cx;
      cx["reason"] = "new landmark separates a formerly-unresolved pair by " +
                     std::to_string(gap) + ", expected exactly 2";
      cx["u"] = h.vertex_name(w.a);
      cx["v"] = h.vertex_name(w.b);
      rep.counterexamples.push_back(std::move(cx));
    }
  }
  if (auto w = verify_generator(h, T, Kind::metric)) {
    ordered_json cx;
    cx["reason"] = "extended set is not a metric generator";
    cx["witness"] = witness_json(h, *w);
    rep.counterexamples.push_back(std::move(cx));
  }
  if (!rep.passed()) throw CheckFailure(std::move(rep));
  if (report) *report = std::move(rep);
  return T;
}

// ---- lemma 4 ----------------------------------------------------------------

LandmarkSet antipodal_swap(int d, const LandmarkSet& S, int s) {
  HypercubeHost h(d);
  if (!S.contains(s)) throw std::invalid_argument("s must be a member of S");
  if (verify_generator(h, S, Kind::metric))
    throw std::invalid_argument("antipodal_swap requires a metric generator");
  const int sp = int(hc::antipode(d, hc::Vertex(s)));
  if (S.contains(sp))
    throw std::invalid_argument("S already contains the antipode of s");

  LandmarkSet T = S;
  for (int& x : T.v)
    if (x == s) x = sp;

  if (auto w = verify_generator(h, T, Kind::metric)) {
    CheckReport rep;
    rep.statement = "lemma4";
    rep.d = d;
    rep.trials = 1;
    ordered_json cx;
    cx["reason"] = "antipodal replacement broke the generator";
    cx["swapped_out"] = h.vertex_name(s);
    cx["swapped_in"] = h.vertex_name(sp);
    cx["witness"] = witness_json(h, *w);
    rep.counterexamples.push_back(std::move(cx));
    throw CheckFailure(std::move(rep));
  }
  return T;
}

// ---- lemma 5 ----------------------------------------------------------------

std::vector<int> constant_columns(int d, const LandmarkSet& S) {
  hc::check_dim(d);
  if (S.v.empty()) throw std::invalid_argument("landmark set must be non-empty");
  std::vector<int> cols;
  for (int i = 0; i < d; ++i) {
    const int b = (S.v[0] >> i) & 1;
    bool constant = true;
    for (int s : S.v)
      if (((s >> i) & 1) != b) {
        constant = false;
        break;
      }
    if (constant) cols.push_back(i);
  }
  return cols;
}

std::pair<hc::Vertex, hc::Vertex> confounding_pair(int d, const LandmarkSet& S) {
  HypercubeHost h(d);
  validate_landmarks(h, S);
  const auto cols = constant_columns(d, S);
  if (cols.size() < 2)
    throw std::invalid_argument("confounding_pair needs two constant columns");
  const int i = cols[0], j = cols[1];
  const hc::Vertex bi = (hc::Vertex(S.v[0]) >> i) & 1;
  const hc::Vertex bj = (hc::Vertex(S.v[0]) >> j) & 1;
  const hc::Vertex x = ((1 - bi) << i) | (bj << j);
  const hc::Vertex y = (bi << i) | ((1 - bj) << j);
  for (int s : S.v)
    if (hc::hamming_distance(x, hc::Vertex(s)) != hc::hamming_distance(y, hc::Vertex(s)))
      throw std::logic_error("confounded pair construction is wrong");
  return {x, y};
}

CheckReport constant_column_audit(int d, const LandmarkSet& S) {
  HypercubeHost h(d);
  if (verify_generator(h, S, Kind::metric))
    throw std::invalid_argument("constant_column_audit requires a metric generator");

  CheckReport rep;
  rep.statement = "lemma5";
  rep.d = d;
  rep.trials = 1;
  const auto cols = constant_columns(d, S);
  {
    std::vector<int> one_based;
    for (int c : cols) one_based.push_back(c + 1);
    rep.extra["constant_columns"] = one_based;
  }
  if (cols.size() >= 2) {
    const auto [x, y] = confounding_pair(d, S);
    ordered_json cx;
    cx["reason"] = "verified metric generator has two constant columns";
    cx["columns"] = std::vector<int>{cols[0] + 1, cols[1] + 1};
    cx["confounded_x"] = h.vertex_name(int(x));
    cx["confounded_y"] = h.vertex_name(int(y));
    rep.counterexamples.push_back(std::move(cx));
    throw CheckFailure(std::move(rep));
  }
  return rep;
}

// ---- theorem 2 construction ---------------------------------------------------

namespace {

std::vector<std::string> landmark_names(const HypercubeHost& h, const LandmarkSet& S) {
  std::vector<std::string> out;
  for (int v : S.v) out.push_back(h.vertex_name(v));
  return out;
}

bool all_distinct(const LandmarkSet& S) {
  std::vector<int> c = S.v;
  std::sort(c.begin(), c.end());
  return std::adjacent_find(c.begin(), c.end()) == c.end();
}

}  // namespace

LandmarkSet metric_to_mixed(int d, const LandmarkSet& S, CheckReport* report) {
  HypercubeHost h(d);
  if (d < 3) throw std::invalid_argument("metric_to_mixed is defined for d >= 3");
  if (verify_generator(h, S, Kind::metric))
    throw std::invalid_argument("metric_to_mixed requires a metric generator");

  CheckReport rep;
  rep.statement = "theorem2";
  rep.d = d;
  rep.trials = 1;

  auto finish = [&](LandmarkSet T, const std::string& how) {
    rep.extra["source"] = how;
    rep.extra["mixed_basis"] = landmark_names(h, T);
    if (auto w = verify_generator(h, T, Kind::mixed)) {
      ordered_json cx;
      cx["reason"] = "constructed set is not a mixed generator";
      cx["candidate"] = landmark_names(h, T);
      cx["witness"] = witness_json(h, *w);
      rep.counterexamples.push_back(std::move(cx));
      throw CheckFailure(std::move(rep));
    }
    if (T.size() != S.size()) {
      ordered_json cx;
      cx["reason"] = "construction changed the cardinality";
      rep.counterexamples.push_back(std::move(cx));
      throw CheckFailure(std::move(rep));
    }
    if (report) *report = std::move(rep);
    return T;
  };

  if (d == 3) return finish(LandmarkSet{{7, 2, 4}}, "fixed basis for d=3");
  if (d == 4) return finish(LandmarkSet{{15, 2, 4, 8}}, "fixed basis for d=4");

  // d >= 5: normalize a translate containing the all-zeros vertex, then try
  // the four antipodal-replacement candidates in order.
  LandmarkSet W = S;
  if (!W.contains(0)) {
    const int c = *std::min_element(W.v.begin(), W.v.end());
    for (int& x : W.v) x ^= c;
    rep.extra["translated_by"] = h.vertex_name(c);
    if (verify_generator(h, W, Kind::metric))
      throw std::logic_error("translation broke the metric generator");
  }
  if (W.size() < 4)
    throw std::invalid_argument("metric_to_mixed needs at least 4 landmarks for d >= 5");

  const auto cols = constant_columns(d, W);
  if (cols.empty()) return finish(W, "no constant column: the set itself");
  if (cols.size() >= 2) {
    ordered_json cx;
    cx["reason"] = "verified metric generator has two constant columns";
    rep.counterexamples.push_back(std::move(cx));
    throw CheckFailure(std::move(rep));
  }

  std::vector<int> sorted = W.v;
  std::sort(sorted.begin(), sorted.end());
  const int s1 = sorted[0], s2 = sorted[1], s3 = sorted[2];  // s1 == 0

  auto swapped = [&](std::initializer_list<int> outs) {
    LandmarkSet T = W;
    for (int o : outs)
      for (int& x : T.v)
        if (x == o) x = int(hc::antipode(d, hc::Vertex(o)));
    return T;
  };
  const LandmarkSet cands[4] = {swapped({s1}), swapped({s2, s3}), swapped({s2}),
                                swapped({s1, s3})};
  const char* labels[4] = {"swap s1", "swap s2 and s3", "swap s2", "swap s1 and s3"};

  ordered_json attempts = ordered_json::array();
  for (int i = 0; i < 4; ++i) {
    if (!all_distinct(cands[i])) {
      attempts.push_back({{"candidate", labels[i]}, {"result", "collides with an existing member"}});
      continue;
    }
    const auto w = verify_generator(h, cands[i], Kind::mixed);
    if (!w) {
      rep.extra["attempts"] = std::move(attempts);
      return finish(cands[i], labels[i]);
    }
    attempts.push_back({{"candidate", labels[i]},
                        {"members", landmark_names(h, cands[i])},
                        {"witness", witness_json(h, *w)}});
  }

  ordered_json cx;
  cx["reason"] = "all four replacement candidates failed";
  cx["input"] = landmark_names(h, S);
  cx["attempts"] = std::move(attempts);
  rep.counterexamples.push_back(std::move(cx));
  throw CheckFailure(std::move(rep));
}

// ---- random instances ----------------------------------------------------------

Graph random_connected_bipartite(Rng& rng, int n_min, int n_max) {
  const int n = n_min + rng.below_int(n_max - n_min + 1);
  std::vector<int> depth(n, 0);
  std::set<std::pair<int, int>> es;
  for (int v = 1; v < n; ++v) {
    const int p = rng.below_int(v);
    depth[v] = depth[p] + 1;
    es.insert({std::min(p, v), std::max(p, v)});
  }
  // chords between opposite tree layers keep it bipartite
  const int want = rng.below_int(n);
  for (int t = 0, added = 0; t < 4 * n && added < want; ++t) {
    const int u = rng.below_int(n), w = rng.below_int(n);
    if (u == w || (depth[u] & 1) == (depth[w] & 1)) continue;
    if (es.insert({std::min(u, w), std::max(u, w)}).second) ++added;
  }
  std::vector<std::pair<long long, long long>> raw;
  raw.reserve(es.size());
  for (auto [a, b] : es) raw.emplace_back(a, b);
  return Graph::from_edges(raw);
}

LandmarkSet random_edge_generator(const HypercubeHost& h, Rng& rng,
                                  const LandmarkSet& greedy_base) {
  std::vector<int> s = greedy_base.v;
  const int extras = rng.below_int(4);
  for (int i = 0; i < extras; ++i) s.push_back(rng.below_int(h.n));
  const int c = rng.below_int(h.n);  // translation is an automorphism
  for (int& x : s) x ^= c;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  LandmarkSet out{std::move(s)};
  if (verify_generator(h, out, Kind::edge))
    throw std::logic_error("translated edge generator failed to verify");
  return out;
}

// ---- sweep -----------------------------------------------------------------------

SweepResult theorem_sweep(int d_min, int d_max, const SolveOptions& base) {
  SweepResult res;
  res.table = dimension_table(d_min, d_max, {Kind::metric, Kind::edge, Kind::mixed}, base);
  for (const auto& row : res.table.rows) {
    if (row.d < 2) continue;  // 2d/log2(d) is undefined at d=1
    const double approx = 2.0 * row.d / std::log2(double(row.d));
    ordered_json r;
    r["d"] = row.d;
    r["approx_2d_over_log2_d"] = approx;
    for (const auto& rec : row.records) {
      r["ratio_" + to_string(rec.kind)] = double(rec.value) / approx;
      if (!rec.exact) r["inexact_" + to_string(rec.kind)] = true;
    }
    res.ratios.push_back(std::move(r));
  }
  return res;
}

// ---- statement drivers --------------------------------------------------------

namespace {

struct Range {
  int lo, hi;
};

Range resolve_range(const LemmaCheckParams& p, int def_lo, int def_hi, int min_allowed,
                    int max_allowed) {
  const int lo = p.d_min.value_or(def_lo);
  const int hi = p.d_max.value_or(def_hi);
  if (lo < min_allowed || hi > max_allowed || lo > hi)
    throw std::invalid_argument("d range [" + std::to_string(lo) + "," + std::to_string(hi) +
                                "] outside the supported [" + std::to_string(min_allowed) +
                                "," + std::to_string(max_allowed) + "]");
  return {lo, hi};
}

std::int64_t resolve_trials(const LemmaCheckParams& p, std::int64_t def) {
  return p.trials > 0 ? p.trials : def;
}

std::uint64_t derive_seed(std::uint64_t seed, int d) {
  return seed ^ (std::uint64_t(d) * 0x9e3779b97f4a7c15ull);
}

SolveOptions solver_opts(const LemmaCheckParams& p, Kind kind) {
  SolveOptions o;
  o.kind = kind;
  o.strategy = Strategy::exact;
  o.workers = p.workers;
  o.time_budget_s = p.time_budget_s;
  return o;
}

void require_exact(const DimensionRecord& rec) {
  if (!rec.exact)
    throw BudgetExceeded("time budget exhausted while computing " + to_string(rec.kind) +
                         " dimension of " + rec.host + "; raise --budget");
}

void merge_counterexamples(CheckReport& into, CheckReport from, const ordered_json& context) {
  for (auto& cx : from.counterexamples) {
    if (into.counterexamples.size() >= kMaxStoredCounterexamples) {
      into.extra["counterexamples_truncated"] = true;
      return;
    }
    if (!context.empty()) cx["context"] = context;
    into.counterexamples.push_back(std::move(cx));
  }
}

std::vector<CheckReport> run_lemma1(const LemmaCheckParams& p) {
  const std::int64_t trials = resolve_trials(p, 500);
  Rng rng(p.seed);
  CheckReport rep;
  rep.statement = "lemma1";
  rep.trials = trials;
  rep.seed = p.seed;
  std::int64_t max_n = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    GraphHost host(random_connected_bipartite(rng), "random-bipartite-" + std::to_string(t));
    max_n = std::max<std::int64_t>(max_n, host.g.n);
    const auto greedy = greedy_upper_bound(host, Kind::metric, p.workers);
    auto one = check_lemma1(host, LandmarkSet{greedy.basis}, rng);
    if (t == 0 && one.extra.contains("replay")) rep.extra["sample_replay"] = one.extra["replay"];
    merge_counterexamples(rep, std::move(one), {{"trial", t}, {"n", host.g.n}});
    if (rep.counterexamples.size() >= kMaxStoredCounterexamples) break;
  }
  rep.extra["max_n"] = max_n;
  return {rep};
}

std::vector<CheckReport> run_lemma2(const LemmaCheckParams& p) {
  const auto range = resolve_range(p, 2, 5, 1, 10);
  const std::int64_t trials = resolve_trials(p, 1000);
  std::vector<CheckReport> out;
  for (int d = range.lo; d <= range.hi; ++d) {
    HypercubeHost h(d);
    if (d <= 4) {
      // the full pool of minimum edge generators
      const auto rec = exact_dimension(h, solver_opts(p, Kind::edge));
      require_exact(rec);
      std::int64_t scanned = 0;
      const auto pool = enumerate_generators(h, Kind::edge, rec.value, false, SIZE_MAX, &scanned);
      CheckReport rep;
      rep.statement = "lemma2";
      rep.d = d;
      rep.trials = std::int64_t(pool.size());
      rep.exhaustive = true;
      rep.seed = p.seed;
      rep.extra["edim"] = rec.value;
      rep.extra["subsets_scanned"] = scanned;
      std::int64_t unresolved = 0;
      for (const auto& S : pool) {
        auto one = classify_unresolved(d, S);
        unresolved += one.extra["unresolved_pairs"].get<std::int64_t>();
        merge_counterexamples(rep, std::move(one), {{"generator", landmark_names(h, S)}});
      }
      rep.extra["unresolved_pairs_total"] = unresolved;
      out.push_back(std::move(rep));
    }
    {
      // randomized generators: greedy core, random extras, random translation
      const std::uint64_t seed = derive_seed(p.seed, d);
      Rng rng(seed);
      const auto base = greedy_upper_bound(h, Kind::edge, p.workers);
      CheckReport rep;
      rep.statement = "lemma2";
      rep.d = d;
      rep.trials = trials;
      rep.seed = seed;
      std::int64_t unresolved = 0;
      for (std::int64_t t = 0; t < trials; ++t) {
        const auto S = random_edge_generator(h, rng, LandmarkSet{base.basis});
        auto one = classify_unresolved(d, S);
        unresolved += one.extra["unresolved_pairs"].get<std::int64_t>();
        merge_counterexamples(rep, std::move(one), {{"generator", landmark_names(h, S)}});
        if (rep.counterexamples.size() >= kMaxStoredCounterexamples) break;
      }
      rep.extra["unresolved_pairs_total"] = unresolved;
      out.push_back(std::move(rep));
    }
  }
  return out;
}

std::vector<CheckReport> run_lemma3(const LemmaCheckParams& p) {
  const auto range = resolve_range(p, 2, 8, 1, 10);
  const std::int64_t trials = resolve_trials(p, 1000);
  std::vector<CheckReport> out;
  for (int d = range.lo; d <= range.hi; ++d) {
    HypercubeHost h(d);
    CheckReport rep;
    rep.statement = "lemma3";
    rep.d = d;
    rep.seed = derive_seed(p.seed, d);

    std::vector<LandmarkSet> pool;
    if (d <= 4) {
      const auto rec = exact_dimension(h, solver_opts(p, Kind::edge));
      require_exact(rec);
      pool = enumerate_generators(h, Kind::edge, rec.value, false);
      rep.exhaustive = true;
      rep.extra["pool"] = "all minimum edge generators";
      rep.extra["edim"] = rec.value;
    } else {
      Rng rng(rep.seed);
      const auto base = greedy_upper_bound(h, Kind::edge, p.workers);
      for (std::int64_t t = 0; t < trials; ++t)
        pool.push_back(random_edge_generator(h, rng, LandmarkSet{base.basis}));
      rep.extra["pool"] = "random edge generators";
    }

    std::int64_t checks = 0;
    for (const auto& S : pool) {
      for (int s : S.v) {
        ++checks;
        try {
          extend_to_metric(d, S, s);
        } catch (CheckFailure& f) {
          merge_counterexamples(rep, std::move(f.report),
                                {{"generator", landmark_names(h, S)}, {"pivot", h.vertex_name(s)}});
        }
        if (rep.counterexamples.size() >= kMaxStoredCounterexamples) break;
      }
      if (rep.counterexamples.size() >= kMaxStoredCounterexamples) break;
    }
    rep.trials = checks;
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<CheckReport> run_lemma4(const LemmaCheckParams& p) {
  const auto range = resolve_range(p, 1, 6, 1, 7);
  const std::int64_t trials = resolve_trials(p, 1000);
  std::vector<CheckReport> out;
  for (int d = range.lo; d <= range.hi; ++d) {
    HypercubeHost h(d);
    CheckReport rep;
    rep.statement = "lemma4";
    rep.d = d;
    rep.seed = derive_seed(p.seed, d);

    const auto rec = exact_dimension(h, solver_opts(p, Kind::metric));
    require_exact(rec);
    rep.extra["dim"] = rec.value;
    rep.extra["basis"] = rec.basis_names;

    auto audit_no_antipodal_pair = [&](const LandmarkSet& B, const ordered_json& ctx) {
      for (std::size_t i = 0; i < B.v.size(); ++i)
        for (std::size_t j = i + 1; j < B.v.size(); ++j)
          if ((hc::Vertex(B.v[i]) ^ hc::Vertex(B.v[j])) == hc::full_mask(d)) {
            ordered_json cx;
            cx["reason"] = "metric basis contains an antipodal pair";
            cx["a"] = h.vertex_name(B.v[i]);
            cx["b"] = h.vertex_name(B.v[j]);
            cx["context"] = ctx;
            rep.counterexamples.push_back(std::move(cx));
          }
    };
    auto swap_all_members = [&](const LandmarkSet& B, const ordered_json& ctx) {
      for (int s : B.v) {
        try {
          const auto T = antipodal_swap(d, B, s);
          audit_no_antipodal_pair(T, ctx);
        } catch (CheckFailure& f) {
          merge_counterexamples(rep, std::move(f.report), ctx);
        } catch (const std::invalid_argument& e) {
          ordered_json cx;
          cx["reason"] = std::string("swap rejected: ") + e.what();
          cx["context"] = ctx;
          rep.counterexamples.push_back(std::move(cx));
        }
      }
    };

    const LandmarkSet B{rec.basis};
    audit_no_antipodal_pair(B, {{"source", "solver basis"}});
    swap_all_members(B, {{"source", "solver basis"}});
    std::int64_t swaps = B.size();

    Rng rng(rep.seed);
    for (std::int64_t t = 0; t < trials; ++t) {
      const int c = rng.below_int(h.n);
      LandmarkSet T = B;
      for (int& x : T.v) x ^= c;
      std::sort(T.v.begin(), T.v.end());
      if (verify_generator(h, T, Kind::metric))
        throw std::logic_error("translated basis failed to verify");
      audit_no_antipodal_pair(T, {{"source", "translate"}, {"trial", t}});
      const int s = T.v[rng.below_int(T.size())];
      ++swaps;
      try {
        const auto U = antipodal_swap(d, T, s);
        audit_no_antipodal_pair(U, {{"source", "translate+swap"}, {"trial", t}});
      } catch (CheckFailure& f) {
        merge_counterexamples(rep, std::move(f.report), {{"trial", t}});
      } catch (const std::invalid_argument& e) {
        ordered_json cx;
        cx["reason"] = std::string("swap rejected: ") + e.what();
        cx["trial"] = t;
        rep.counterexamples.push_back(std::move(cx));
      }
      if (rep.counterexamples.size() >= kMaxStoredCounterexamples) break;
    }
    rep.trials = swaps;
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<CheckReport> run_lemma5(const LemmaCheckParams& p) {
  const auto range = resolve_range(p, 1, 6, 1, 7);
  const std::int64_t trials = resolve_trials(p, 1000);
  std::vector<CheckReport> out;
  for (int d = range.lo; d <= range.hi; ++d) {
    HypercubeHost h(d);
    CheckReport rep;
    rep.statement = "lemma5";
    rep.d = d;
    rep.seed = derive_seed(p.seed, d);

    const auto rec = exact_dimension(h, solver_opts(p, Kind::metric));
    require_exact(rec);

    auto audit = [&](const LandmarkSet& S, const ordered_json& ctx) {
      try {
        constant_column_audit(d, S);
      } catch (CheckFailure& f) {
        merge_counterexamples(rep, std::move(f.report), ctx);
      }
    };

    std::int64_t audited = 1;
    audit(LandmarkSet{rec.basis}, {{"source", "solver basis"}});

    if (d <= 4) {
      const auto pool = enumerate_generators(h, Kind::metric, rec.value, false);
      for (const auto& S : pool) audit(S, {{"source", "exhaustive basis pool"}});
      audited += std::int64_t(pool.size());
      rep.exhaustive = true;
      rep.extra["bases_audited"] = audited;
    } else {
      Rng rng(rep.seed);
      for (std::int64_t t = 0; t < trials; ++t) {
        const int c = rng.below_int(h.n);
        LandmarkSet T{rec.basis};
        for (int& x : T.v) x ^= c;
        std::sort(T.v.begin(), T.v.end());
        audit(T, {{"source", "translate"}, {"trial", t}});
        ++audited;
        if (rep.counterexamples.size() >= kMaxStoredCounterexamples) break;
      }
      rep.extra["bases_audited"] = audited;
    }

    // counterexample-generator traps: two constant columns must confound the
    // canonical pair
    if (d >= 2) {
      auto trap = [&](const LandmarkSet& S, hc::Vertex wx, hc::Vertex wy,
                      const std::string& label) {
        const auto [x, y] = confounding_pair(d, S);
        if (x != wx || y != wy) {
          ordered_json cx;
          cx["reason"] = "confounding pair mismatch (" + label + ")";
          cx["got"] = {h.vertex_name(int(x)), h.vertex_name(int(y))};
          cx["expected"] = {h.vertex_name(int(wx)), h.vertex_name(int(wy))};
          rep.counterexamples.push_back(std::move(cx));
        }
      };
      trap(LandmarkSet{{0}}, 1, 2, "all-zero columns");
      trap(LandmarkSet{{3}}, 2, 1, "all-one columns");
      if (d >= 3) trap(LandmarkSet{{1, 5}}, 0, 3, "mixed constants");
      rep.extra["trap_cases"] = d >= 3 ? 3 : 2;
    }

    rep.trials = audited;
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<CheckReport> run_theorem1(const LemmaCheckParams& p) {
  const auto range = resolve_range(p, 1, 6, 1, 7);
  SolveOptions base = solver_opts(p, Kind::metric);
  const auto table = dimension_table(range.lo, range.hi, {Kind::metric, Kind::edge}, base);
  if (table.any_inexact)
    throw BudgetExceeded("time budget exhausted inside the sweep; raise --budget");

  CheckReport rep;
  rep.statement = "theorem1";
  rep.trials = range.hi - range.lo + 1;
  rep.exhaustive = true;
  rep.seed = p.seed;
  ordered_json values = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json r;
    r["d"] = row.d;
    for (const auto& rec : row.records)
      r[rec.kind == Kind::metric ? "dim" : "edim"] = rec.value;
    values.push_back(std::move(r));
  }
  rep.extra["values"] = std::move(values);
  for (const auto& c : table.consistency) {
    if ((c.check == "theorem1" || c.check == "odd_equality") && c.status == "FAIL") {
      ordered_json cx;
      cx["reason"] = c.check + " violated";
      cx["d"] = c.d;
      cx["detail"] = c.detail;
      rep.counterexamples.push_back(std::move(cx));
    }
  }
  return {rep};
}

std::vector<CheckReport> run_theorem2(const LemmaCheckParams& p) {
  const auto range = resolve_range(p, 3, 6, 3, 7);
  CheckReport rep;
  rep.statement = "theorem2";
  rep.trials = range.hi - range.lo + 1;
  rep.exhaustive = true;
  rep.seed = p.seed;
  ordered_json rows = ordered_json::array();
  for (int d = range.lo; d <= range.hi; ++d) {
    HypercubeHost h(d);
    const auto rec_dim = exact_dimension(h, solver_opts(p, Kind::metric));
    require_exact(rec_dim);
    KnownDims known;
    known.dim = rec_dim.value;
    const auto rec_mdim = exact_dimension(h, solver_opts(p, Kind::mixed), known);
    require_exact(rec_mdim);
    ordered_json row;
    row["d"] = d;
    row["dim"] = rec_dim.value;
    row["mdim"] = rec_mdim.value;
    if (rec_dim.value != rec_mdim.value) {
      ordered_json cx;
      cx["reason"] = "dim and mdim differ";
      cx["d"] = d;
      cx["dim"] = rec_dim.value;
      cx["mdim"] = rec_mdim.value;
      rep.counterexamples.push_back(std::move(cx));
    }
    try {
      CheckReport sub;
      metric_to_mixed(d, LandmarkSet{rec_dim.basis}, &sub);
      row["mixed_basis"] = sub.extra["mixed_basis"];
      row["source"] = sub.extra["source"];
    } catch (CheckFailure& f) {
      merge_counterexamples(rep, std::move(f.report), {{"d", d}});
    }
    rows.push_back(std::move(row));
  }
  rep.extra["rows"] = std::move(rows);
  return {rep};
}

std::vector<CheckReport> run_conjecture(const LemmaCheckParams& p) {
  const auto range = resolve_range(p, 3, 6, 1, 7);
  SolveOptions base = solver_opts(p, Kind::metric);
  const auto table = dimension_table(range.lo, range.hi, {Kind::metric, Kind::edge}, base);
  if (table.any_inexact)
    throw BudgetExceeded("time budget exhausted inside the sweep; raise --budget");

  CheckReport rep;
  rep.statement = "conjecture";
  rep.trials = range.hi - range.lo + 1;
  rep.exhaustive = true;
  rep.seed = p.seed;
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    int dim = 0, edim = 0;
    for (const auto& rec : row.records)
      (rec.kind == Kind::metric ? dim : edim) = rec.value;
    ordered_json r;
    r["d"] = row.d;
    r["dim"] = dim;
    r["edim"] = edim;
    r["relation"] = edim == dim - 1 ? "edim = dim - 1" : (edim == dim ? "equal" : "other");
    rows.push_back(std::move(r));
  }
  rep.extra["rows"] = std::move(rows);
  rep.extra["note"] = "informational scan: the conjectured equality is quantified over large d "
                      "and is known to fail at d=4, so no row here counts as a counterexample";
  return {rep};
}

}  // namespace

std::vector<CheckReport> run_lemma_check(const std::string& statement,
                                         const LemmaCheckParams& p) {
  using Runner = std::vector<CheckReport> (*)(const LemmaCheckParams&);
  static const std::pair<const char*, Runner> table[] = {
      {"lemma1", run_lemma1},   {"lemma2", run_lemma2},     {"lemma3", run_lemma3},
      {"lemma4", run_lemma4},   {"lemma5", run_lemma5},     {"theorem1", run_theorem1},
      {"theorem2", run_theorem2}, {"conjecture", run_conjecture},
  };
  if (statement == "all") {
    std::vector<CheckReport> out;
    LemmaCheckParams defaults = p;
    defaults.d_min.reset();  // every statement uses its own default window
    defaults.d_max.reset();
    for (const auto& [name, fn] : table) {
      auto reports = fn(defaults);
      const bool bad = std::any_of(reports.begin(), reports.end(),
                                   [](const CheckReport& r) { return !r.passed(); });
      out.insert(out.end(), std::make_move_iterator(reports.begin()),
                 std::make_move_iterator(reports.end()));
      if (bad) return out;  // falsified: stop the remaining statements
    }
    return out;
  }
  for (const auto& [name, fn] : table)
    if (statement == name) return fn(p);
  throw std::invalid_argument("unknown statement \"" + statement +
                              "\" (lemma1..lemma5, theorem1, theorem2, conjecture, all)");
}

}  // namespace metdim
