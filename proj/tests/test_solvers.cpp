#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "metdim/serial_reference.hpp"
#include "metdim/solvers.hpp"

using namespace metdim;

namespace {

DimensionRecord solve(int d, Kind kind, Strategy strategy = Strategy::exact,
                      bool fix_zero = false, int workers = 0) {
  const HypercubeHost h(d);
  SolveOptions opts;
  opts.kind = kind;
  opts.strategy = strategy;
  opts.fix_zero = fix_zero;
  opts.workers = workers;
  return exact_dimension(h, opts);
}

GraphHost path_host(int k) {
  std::vector<std::pair<long long, long long>> e;
  for (int i = 0; i + 1 < k; ++i) e.push_back({i, i + 1});
  return GraphHost(Graph::from_edges(e), "P_" + std::to_string(k));
}

}  // namespace

TEST_CASE("exact values on small cubes") {
  // (d, dim, edim, mdim)
  const int want[][4] = {{1, 1, 1, 2}, {2, 2, 2, 3}, {3, 3, 3, 3}, {4, 4, 3, 4}, {5, 4, 4, 4}};
  for (const auto& row : want) {
    const auto m = solve(row[0], Kind::metric);
    const auto e = solve(row[0], Kind::edge);
    const auto x = solve(row[0], Kind::mixed);
    CHECK(m.value == row[1]);
    CHECK(e.value == row[2]);
    CHECK(x.value == row[3]);
    CHECK(m.exact);
    CHECK(e.exact);
    CHECK(x.exact);
    CHECK_FALSE(m.lower_bound.has_value());
  }
}

TEST_CASE("exact bases are the lexicographically first ones") {
  CHECK(solve(1, Kind::metric).basis == std::vector<int>{0});
  CHECK(solve(2, Kind::metric).basis == std::vector<int>{0, 1});
  CHECK(solve(3, Kind::metric).basis == std::vector<int>{0, 1, 2});
  CHECK(solve(3, Kind::mixed).basis == std::vector<int>{0, 3, 5});
  CHECK(solve(4, Kind::metric).basis == std::vector<int>{0, 1, 2, 4});
  CHECK(solve(4, Kind::edge).basis == std::vector<int>{0, 3, 5});
  CHECK(solve(4, Kind::mixed).basis == std::vector<int>{0, 1, 6, 10});
  CHECK(solve(5, Kind::metric).basis == std::vector<int>{0, 3, 5, 9});
  CHECK(solve(5, Kind::edge).basis == std::vector<int>{0, 3, 5, 9});
  CHECK(solve(5, Kind::mixed).basis == std::vector<int>{0, 3, 13, 21});

  const auto rec = solve(5, Kind::metric);
  CHECK(rec.basis_names ==
        std::vector<std::string>{"00000", "11000", "10100", "10010"});
  CHECK(rec.host == "Q_5");
}

TEST_CASE("agreement with the plain serial reference") {
  for (int d = 1; d <= 4; ++d) {
    const HypercubeHost h(d);
    for (Kind kind : {Kind::metric, Kind::edge, Kind::mixed}) {
      const auto ref = exact_dimension_serial(h, kind);
      const auto rec = solve(d, kind);
      CHECK(ref.value == rec.value);
      CHECK(ref.basis.v == rec.basis);
    }
  }
}

TEST_CASE("fix_zero changes nothing but the work") {
  for (int d : {3, 4, 5})
    for (Kind kind : {Kind::metric, Kind::edge, Kind::mixed}) {
      const auto full = solve(d, kind);
      const auto fixed = solve(d, kind, Strategy::exact, true);
      CHECK(full.value == fixed.value);
      // the unreduced lex-first basis contains vertex 0, so the two runs
      // land on the same set as well
      CHECK(full.basis == fixed.basis);
      CHECK(fixed.subsets_examined <= full.subsets_examined);
    }
}

TEST_CASE("records are identical for every worker count") {
  for (Kind kind : {Kind::metric, Kind::edge, Kind::mixed}) {
    const auto one = solve(4, kind, Strategy::exact, false, 1);
    for (int w : {2, 4, 8}) {
      const auto many = solve(4, kind, Strategy::exact, false, w);
      CHECK(one.value == many.value);
      CHECK(one.basis == many.basis);
      CHECK(one.subsets_examined == many.subsets_examined);
    }
  }
  const auto one = solve(5, Kind::metric, Strategy::exact, false, 1);
  const auto eight = solve(5, Kind::metric, Strategy::exact, false, 8);
  CHECK(one.basis == eight.basis);
  CHECK(one.subsets_examined == eight.subsets_examined);
}

TEST_CASE("minimality certificate") {
  const HypercubeHost h(4);
  const auto rec = solve(4, Kind::metric);
  LandmarkSet full{rec.basis};
  CHECK_FALSE(verify_generator(h, full, Kind::metric).has_value());
  for (std::size_t drop = 0; drop < full.v.size(); ++drop) {
    LandmarkSet s;
    for (std::size_t i = 0; i < full.v.size(); ++i)
      if (i != drop) s.v.push_back(full.v[i]);
    CHECK(verify_generator(h, s, Kind::metric).has_value());
  }
}

TEST_CASE("greedy strategy reports an honest upper bound") {
  for (Kind kind : {Kind::metric, Kind::edge, Kind::mixed}) {
    const auto g = solve(6, kind, Strategy::greedy);
    const auto x = solve(6, kind);
    CHECK_FALSE(g.exact);
    CHECK(g.lower_bound.has_value());
    CHECK(g.value >= x.value);
    const HypercubeHost h(6);
    CHECK_FALSE(verify_generator(h, LandmarkSet{g.basis}, kind).has_value());
  }
  // greedy scales past the exact solver's family caps
  const auto big = solve(10, Kind::mixed, Strategy::greedy);
  CHECK_FALSE(big.exact);
  const HypercubeHost h10(10);
  CHECK_FALSE(verify_generator(h10, LandmarkSet{big.basis}, Kind::mixed).has_value());
}

TEST_CASE("hybrid strategy matches exact") {
  for (int d : {3, 4})
    for (Kind kind : {Kind::metric, Kind::edge, Kind::mixed}) {
      const auto hy = solve(d, kind, Strategy::hybrid);
      const auto ex = solve(d, kind);
      CHECK(hy.exact);
      CHECK(hy.value == ex.value);
    }
}

TEST_CASE("an exhausted budget yields an inexact interval") {
  const HypercubeHost h(6);
  SolveOptions opts;
  opts.kind = Kind::metric;
  opts.time_budget_s = 1e-9;
  const auto rec = exact_dimension(h, opts);
  CHECK_FALSE(rec.exact);
  REQUIRE(rec.lower_bound.has_value());
  CHECK(*rec.lower_bound >= 1);
  CHECK(rec.value >= *rec.lower_bound);
  CHECK(rec.note.find("budget") != std::string::npos);
  // the fallback set still verifies
  CHECK_FALSE(verify_generator(h, LandmarkSet{rec.basis}, Kind::metric).has_value());
}

TEST_CASE("cross-kind lower bounds") {
  const HypercubeHost h(4);
  KnownDims known;
  known.edim = 3;
  known.dim = 4;
  CHECK(lower_bound(h, Kind::metric, known) == 3);   // dim >= edim
  CHECK(lower_bound(h, Kind::edge, known) == 3);     // edim >= dim - 1
  CHECK(lower_bound(h, Kind::mixed, known) == 4);    // mdim >= max(dim, edim)
  CHECK(lower_bound(h, Kind::metric, KnownDims{}) == 1);

  const GraphHost p = path_host(5);
  CHECK(lower_bound(p, Kind::mixed, known) == 1);  // no cube structure assumed
}

TEST_CASE("enumerate_generators agrees with a plain scan") {
  const HypercubeHost h(3);
  // count all size-3 metric generators by brute force
  int want = 0;
  std::vector<int> c{0, 1, 2};
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int d = b + 1; d < 8; ++d)
        if (!verify_generator(h, LandmarkSet{{a, b, d}}, Kind::metric).has_value()) ++want;
  std::int64_t tested = 0;
  const auto all = enumerate_generators(h, Kind::metric, 3, false, SIZE_MAX, &tested);
  CHECK(int(all.size()) == want);
  CHECK(tested == 56);  // C(8,3)
  for (const auto& s : all) CHECK_FALSE(verify_generator(h, s, Kind::metric).has_value());

  const auto zero_only = enumerate_generators(h, Kind::metric, 3, true);
  for (const auto& s : zero_only) CHECK(s.contains(0));
  CHECK(zero_only.size() <= all.size());

  const auto capped = enumerate_generators(h, Kind::metric, 3, false, 2);
  CHECK(capped.size() == 2);
}

TEST_CASE("family caps bound the exact solver") {
  const HypercubeHost h(11);  // 2048 vertices, 11264 edges
  SolveOptions opts;
  opts.kind = Kind::metric;
  CHECK_THROWS_AS(exact_dimension(h, opts), std::invalid_argument);
  CHECK_THROWS_AS(distinguisher_sets(h, Kind::metric), std::invalid_argument);

  // the edge cap binds on dense graphs: K_129 has C(129,2) = 8256 edges
  std::vector<std::pair<long long, long long>> ke;
  for (int u = 0; u < 129; ++u)
    for (int v = u + 1; v < 129; ++v) ke.push_back({u, v});
  const GraphHost k129(Graph::from_edges(ke), "K_129");
  CHECK_THROWS_AS(distinguisher_sets(k129, Kind::edge), std::invalid_argument);
  CHECK_NOTHROW(distinguisher_sets(k129, Kind::metric));
}

TEST_CASE("pair family bookkeeping") {
  const HypercubeHost h(3);
  const PairFamily fam = distinguisher_sets(h, Kind::metric);
  CHECK(fam.elem_count == 8);
  CHECK(fam.pairs == 28);
  // pair_index and pair_elements are inverse
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) {
      const auto p = fam.pair_index(a, b);
      const auto [x, y] = fam.pair_elements(p);
      CHECK(x == a);
      CHECK(y == b);
    }
  // vertex v distinguishes (a, b) iff the distances differ
  for (int v = 0; v < 8; ++v)
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b)
        CHECK(fam.distinguishes(fam.pair_index(a, b), v) ==
              (h.dist(a, v) != h.dist(b, v)));
}

TEST_CASE("graph hosts solve exactly too") {
  const GraphHost p = path_host(6);
  SolveOptions opts;
  opts.kind = Kind::metric;
  const auto rec = exact_dimension(p, opts);
  CHECK(rec.value == 1);  // a path is resolved by one end
  CHECK(rec.basis == std::vector<int>{0});
  opts.kind = Kind::mixed;
  const auto mixed = exact_dimension(p, opts);
  CHECK(mixed.value == 2);  // both ends, for paths of length >= 2
  CHECK(mixed.exact);
}
