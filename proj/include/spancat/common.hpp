#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace spancat {

// Outcome of a report-valued check: ok, or a first counterexample in `detail`.
struct Report {
  bool ok = true;
  std::string detail;

  static Report pass() { return {true, {}}; }
  static Report fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

// Deterministic RNG for property sweeps.  Bounded draws are hand-rolled
// (rejection sampling) so output streams do not depend on the standard
// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform value in [0, n).  n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = eng_();
    while (v >= limit) v = eng_();
    return v % n;
  }

  // Uniform value in [lo, hi] inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace spancat
