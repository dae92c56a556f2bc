#pragma once
// Seeded RNG with a portable bounded draw. mt19937_64's raw stream is pinned
// by the standard; uniform_int_distribution's mapping is not, so we do the
// range reduction ourselves (Lemire's method).

#include <cstdint>
#include <random>

namespace metdim {

struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::uint64_t next() { return eng(); }

  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    while (true) {
      const std::uint64_t x = eng();
      const unsigned __int128 m = (unsigned __int128)x * n;
      const std::uint64_t lo = (std::uint64_t)m;
      if (lo >= n || lo >= (0 - n) % n) return (std::uint64_t)(m >> 64);
    }
  }

  int below_int(int n) { return int(below(std::uint64_t(n))); }
};

}  // namespace metdim
