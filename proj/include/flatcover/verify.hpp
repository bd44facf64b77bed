#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "flatcover/regular_graph.hpp"

namespace flatcover {

enum class VerifyLevel { Quick, Full };

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Runs acceptance criteria 1..11. Full uses the stated sizes and sample
/// counts; Quick shrinks them. Randomized criteria draw from `seed`.
/// When `log` is given, one line per criterion is written as it finishes.
std::vector<CriterionResult> run_acceptance(VerifyLevel level, std::uint64_t seed, std::ostream* log = nullptr);

/// "PASS [3] title (detail, 1.2s)".
std::string format_result(const CriterionResult& result);

/// Smallest adjacency eigenvalue by power iteration on dI - A with a
/// Rayleigh quotient estimate.
double power_iteration_smallest_eigenvalue(const RegularGraphView& g, int iterations, std::uint64_t seed);

/// mt19937_64 with draws that do not depend on the standard library's
/// distribution implementations, so a seed reproduces across platforms.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace flatcover
