#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hal {

// Exact binomial coefficient as int64 (valid for the desk-scale ranges used
// here; throws on overflow).
std::int64_t binomial(int n, int k);

// Deterministic splitmix64 generator; the same seed yields the same stream on
// every platform.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
  // Uniform in [a, b] inclusive
  std::int64_t range(std::int64_t a, std::int64_t b) {
    return a + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(b - a + 1)));
  }
};

// Number of worker threads honoring the HAL_THREADS environment cap.
int thread_budget();

std::string join_ints(const std::vector<int>& v, char sep);

}  // namespace hal
