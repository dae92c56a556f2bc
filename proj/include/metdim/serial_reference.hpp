#pragma once
// Deliberately plain exact solver: ascending k, every k-subset in
// lexicographic order, full verify_generator on each. No pruning, no pair
// families, no threads. Slow and obviously correct — the reference the fast
// kernel is benchmarked and tested against.

#include <cstdint>
#include <optional>

#include "metdim/resolvers.hpp"

namespace metdim {

struct SerialResult {
  int value = 0;
  LandmarkSet basis;
  std::int64_t subsets_examined = 0;
};

namespace detail {

template <class Host, class F>
bool for_each_combination(const Host& h, int k, F&& visit) {
  const int n = h.vertex_count();
  if (k > n) return false;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if (visit(c)) return true;
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace detail

template <class Host>
SerialResult exact_dimension_serial(const Host& h, Kind kind) {
  SerialResult res;
  for (int k = 1; k <= h.vertex_count(); ++k) {
    LandmarkSet found;
    detail::for_each_combination(h, k, [&](const std::vector<int>& c) {
      ++res.subsets_examined;
      LandmarkSet s{c};
      if (!verify_generator(h, s, kind)) {
        found = std::move(s);
        return true;
      }
      return false;
    });
    if (!found.v.empty()) {
      res.value = k;
      res.basis = std::move(found);
      return res;
    }
  }
  throw std::logic_error("no generator found at any size");  // unreachable: V(G) resolves
}

}  // namespace metdim
