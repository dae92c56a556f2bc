#pragma once
// Resolving-set machinery: signatures, generator verification, witness
// extraction. Landmarks are always vertices; the `kind` decides which
// elements (vertices, edges, or both) must receive distinct signatures.
//
// Verification is the sort-and-bucket route: sort element ids by signature
// bytes, scan equal runs. It shares no code with the solver's
// distinguisher-set route, so the two can check each other.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "metdim/host.hpp"

namespace metdim {

struct LandmarkSet {
  std::vector<int> v;  // vertex ids, order = insertion order

  bool contains(int x) const { return std::find(v.begin(), v.end(), x) != v.end(); }
  int size() const { return int(v.size()); }
};

struct Witness {
  Kind kind = Kind::metric;
  int a = 0, b = 0;  // element ids, a < b
  std::vector<int> signature;  // shared signature of a and b
};

template <class Host>
void validate_landmarks(const Host& h, const LandmarkSet& s) {
  if (s.v.empty()) throw std::invalid_argument("landmark set must be non-empty");
  std::vector<int> sorted = s.v;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("landmark set has duplicates");
  if (sorted.front() < 0 || sorted.back() >= h.vertex_count())
    throw std::invalid_argument("landmark out of range");
}

template <class Host>
std::vector<int> signature(const Host& h, int elem, const LandmarkSet& s) {
  validate_landmarks(h, s);
  std::vector<int> sig(s.v.size());
  for (std::size_t i = 0; i < s.v.size(); ++i) sig[i] = element_dist(h, elem, s.v[i]);
  return sig;
}

namespace detail {

// elem-major distance-to-landmark table for all elements of the kind.
template <class Host>
std::vector<std::uint16_t> signature_table(const Host& h, const LandmarkSet& s, Kind kind,
                                           int& lo, int& count) {
  const auto [beg, end] = element_range(h, kind);
  lo = beg;
  count = end - beg;
  const int k = s.size();
  std::vector<std::uint16_t> t(std::size_t(count) * k);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < k; ++j)
      t[std::size_t(i) * k + j] = std::uint16_t(element_dist(h, beg + i, s.v[j]));
  return t;
}

// Order element indices by signature (component-wise), ties by id.
inline std::vector<int> sort_by_signature(const std::vector<std::uint16_t>& t, int count, int k) {
  std::vector<int> idx(count);
  for (int i = 0; i < count; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const auto* pa = &t[std::size_t(a) * k];
    const auto* pb = &t[std::size_t(b) * k];
    for (int j = 0; j < k; ++j)
      if (pa[j] != pb[j]) return pa[j] < pb[j];
    return a < b;
  });
  return idx;
}

inline bool same_signature(const std::vector<std::uint16_t>& t, int a, int b, int k) {
  return std::equal(&t[std::size_t(a) * k], &t[std::size_t(a) * k] + k, &t[std::size_t(b) * k]);
}

}  // namespace detail

// nullopt when s is a generator for the kind; otherwise the failing pair
// that is lexicographically first under (a, b) element-id order.
template <class Host>
std::optional<Witness> verify_generator(const Host& h, const LandmarkSet& s, Kind kind) {
  validate_landmarks(h, s);
  int lo = 0, count = 0;
  const int k = s.size();
  const auto t = detail::signature_table(h, s, kind, lo, count);
  const auto idx = detail::sort_by_signature(t, count, k);

  bool found = false;
  std::pair<int, int> best;
  for (int i = 0; i + 1 < count;) {
    int j = i + 1;
    while (j < count && detail::same_signature(t, idx[i], idx[j], k)) ++j;
    if (j > i + 1) {
      // run idx[i..j): ids ascend within it, so (idx[i], idx[i+1]) is the
      // run's lexicographically first pair
      const std::pair<int, int> cand{idx[i], idx[i + 1]};
      if (!found || cand < best) {
        best = cand;
        found = true;
      }
    }
    i = j;
  }
  if (!found) return std::nullopt;
  Witness w;
  w.kind = kind;
  w.a = lo + best.first;
  w.b = lo + best.second;
  w.signature.assign(k, 0);
  for (int j = 0; j < k; ++j) w.signature[j] = t[std::size_t(best.first) * k + j];
  return w;
}

// Every unresolved pair, sorted by (a, b).
template <class Host>
std::vector<Witness> all_witnesses(const Host& h, const LandmarkSet& s, Kind kind) {
  validate_landmarks(h, s);
  int lo = 0, count = 0;
  const int k = s.size();
  const auto t = detail::signature_table(h, s, kind, lo, count);
  const auto idx = detail::sort_by_signature(t, count, k);

  std::vector<Witness> out;
  for (int i = 0; i + 1 < count;) {
    int j = i + 1;
    while (j < count && detail::same_signature(t, idx[i], idx[j], k)) ++j;
    for (int a = i; a < j; ++a)
      for (int b = a + 1; b < j; ++b) {
        Witness w;
        w.kind = kind;
        w.a = lo + idx[a];
        w.b = lo + idx[b];
        w.signature.assign(k, 0);
        for (int q = 0; q < k; ++q) w.signature[q] = t[std::size_t(idx[a]) * k + q];
        out.push_back(std::move(w));
      }
    i = j;
  }
  std::sort(out.begin(), out.end(),
            [](const Witness& x, const Witness& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  return out;
}

}  // namespace metdim
