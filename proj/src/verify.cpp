#include "flatcover/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <sstream>

#include "flatcover/bounds.hpp"
#include "flatcover/census.hpp"
#include "flatcover/codec.hpp"
#include "flatcover/error.hpp"
#include "flatcover/johnson.hpp"
#include "flatcover/kw_encoder.hpp"

namespace flatcover {
namespace {

using Clock = std::chrono::steady_clock;

constexpr double kTimeLimitSeconds = 120.0;

struct Plan {
  int census_max_n;
  int random_sparse_paving;
  int sparse_paving_max_n;
  int kw_runs;
  int edge_samples;
  int coloring_max_n;
  int sandwich_max_n;
  std::size_t count_max_vertices;
};

constexpr Plan kFull{6, 1000, 14, 1000, 10000, 14, 7, 84};
constexpr Plan kQuick{5, 100, 10, 100, 1000, 10, 6, 35};

// Counts checks and keeps the first violation for the report.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }

  bool ok() const { return failures_ == 0; }

  std::string summary(const std::string& extra = {}) const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (!extra.empty()) os << ", " << extra;
    if (failures_ > 0) os << ", " << failures_ << " violations, first: " << first_;
    return os.str();
  }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::string first_;
};

using ByRank = std::vector<std::vector<Matroid>>;

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ",") + p;
  return out;
}

std::set<std::vector<ElementSet>> base_lists(const std::vector<Matroid>& ms) {
  std::set<std::vector<ElementSet>> out;
  for (const Matroid& m : ms) out.insert(m.bases());
  return out;
}

std::vector<Vertex> random_stable(const JohnsonGraph& g, double p, SeededRng& rng) {
  std::vector<Vertex> order(g.vertex_count());
  for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
  rng.shuffle(order);
  std::vector<char> blocked(g.vertex_count(), 0);
  std::vector<Vertex> out;
  std::vector<Vertex> around;
  for (Vertex v : order) {
    if (blocked[v] || !rng.chance(p)) continue;
    out.push_back(v);
    blocked[v] = 1;
    g.neighbors(v, around);
    for (Vertex u : around) blocked[u] = 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Matroid sparse_paving(const JohnsonGraph& g, const std::vector<Vertex>& non_bases) {
  std::vector<ElementSet> bases;
  std::size_t next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (next < non_bases.size() && non_bases[next] == v) {
      ++next;
      continue;
    }
    bases.push_back(g.vertex_at(v));
  }
  return Matroid::from_bases(g.n(), g.r(), std::move(bases));
}

std::string label(const Matroid& m) {
  return "n=" + std::to_string(m.ground_size()) + " r=" + std::to_string(m.rank()) + " [" + to_text(m) + "]";
}

class Suite {
 public:
  Suite(VerifyLevel level, std::uint64_t seed) : plan_(level == VerifyLevel::Full ? kFull : kQuick), rng_(seed) {}

  CriterionResult census() {
    static const std::uint64_t expected[] = {1, 2, 4, 8, 17, 38, 98};
    Tally t;
    const auto start = Clock::now();
    std::vector<std::string> labeled, unlabeled;
    for (int n = 0; n <= plan_.census_max_n; ++n) {
      ByRank by_rank(static_cast<std::size_t>(n) + 1);
      CensusOptions options;
      options.sink = [&](const Matroid& m) { by_rank[static_cast<std::size_t>(m.rank())].push_back(m); };
      const CensusResult c = count_matroids(n, options);
      t.check(c.total_unlabeled.has_value() && *c.total_unlabeled == expected[n],
              "m_" + std::to_string(n) + " up to isomorphism");
      for (int r = 0; r <= n; ++r) {
        t.check(c.matroid_counts[r] == c.matroid_counts[n - r], "labeled duality at n=" + std::to_string(n));
        t.check(c.unlabeled_counts[r] == c.unlabeled_counts[n - r], "unlabeled duality at n=" + std::to_string(n));
        t.check(by_rank[r].size() == c.matroid_counts[r].get_ui(), "sink count");
      }
      labeled.push_back(c.total_matroids.get_str());
      unlabeled.push_back(c.total_unlabeled ? std::to_string(*c.total_unlabeled) : "?");
      counts_.push_back(c.matroid_counts);
      matroids_.push_back(std::move(by_rank));
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    t.check(seconds < kTimeLimitSeconds, "runtime");
    return finish(1, "census ground truth", t,
                  "up to isomorphism " + join(unlabeled) + "; labeled " + join(labeled));
  }

  CriterionResult bijection() {
    Tally t;
    for (int n = 2; n <= plan_.census_max_n; ++n) {
      for (int r = 1; r < n; ++r) {
        std::vector<Matroid> filtered;
        for (const Matroid& m : matroids_[n][r]) {
          if (is_sparse_paving(m)) filtered.push_back(m);
        }
        const auto from_stable_sets = enumerate_sparse_paving(n, r);
        t.check(base_lists(filtered) == base_lists(from_stable_sets),
                "n=" + std::to_string(n) + " r=" + std::to_string(r));
      }
    }
    const auto s42 = enumerate_sparse_paving(4, 2).size();
    const mpz_class i42 = brute_count_stable_sets(JohnsonGraph(4, 2));
    t.check(s42 == 10 && i42 == 10, "s_{4,2} = i(J(4,2)) = 10");
    return finish(2, "sparse paving matroids match stable sets", t,
                  "s_{4,2}=" + std::to_string(s42) + " i(J(4,2))=" + i42.get_str());
  }

  CriterionResult codec() {
    Tally t;
    const auto start = Clock::now();
    std::size_t exhaustive = 0;
    for (const auto& by_rank : matroids_) {
      for (const auto& ms : by_rank) {
        for (const Matroid& m : ms) {
          ++exhaustive;
          round_trip(t, m);
        }
      }
    }
    for (int i = 0; i < plan_.random_sparse_paving; ++i) {
      const int n = 4 + static_cast<int>(rng_.below(static_cast<std::uint64_t>(plan_.sparse_paving_max_n - 3)));
      const int r = 1 + static_cast<int>(rng_.below(static_cast<std::uint64_t>(n - 1)));
      const JohnsonGraph g(n, r);
      round_trip(t, sparse_paving(g, random_stable(g, 0.1 + 0.9 * rng_.unit(), rng_)));
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    t.check(seconds < kTimeLimitSeconds, "runtime");
    return finish(3, "codec losslessness", t,
                  std::to_string(exhaustive) + " enumerated and " + std::to_string(plan_.random_sparse_paving) +
                      " random sparse paving matroids, both methods");
  }

  CriterionResult kw_invariants() {
    Tally t;
    static const int sizes[] = {8, 10, 12};
    for (int i = 0; i < plan_.kw_runs; ++i) {
      const int n = sizes[i % 3];
      const int r = 1 + static_cast<int>(rng_.below(static_cast<std::uint64_t>(n / 2)));
      const JohnsonGraph g(n, r);
      const double p = rng_.unit();
      std::vector<Vertex> k;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (rng_.chance(p)) k.push_back(v);
      }
      const KWEncoding enc = kw_encode(g, k);
      const std::string where = "J(" + std::to_string(n) + "," + std::to_string(r) + ") run " + std::to_string(i);
      std::vector<char> in_k(g.vertex_count(), 0), reach(g.vertex_count(), 0);
      for (Vertex v : k) in_k[v] = 1;
      bool s_in_k = true;
      std::vector<Vertex> around;
      for (Vertex v : enc.selected) {
        s_in_k = s_in_k && in_k[v];
        reach[v] = 1;
        g.neighbors(v, around);
        for (Vertex u : around) reach[u] = 1;
      }
      for (Vertex v : enc.available) reach[v] = 1;
      bool k_covered = true;
      for (Vertex v : k) k_covered = k_covered && reach[v];
      t.check(s_in_k, where + ": S not inside K");
      t.check(k_covered, where + ": K not inside S+N(S)+A");
      t.check(reconstruct_available(g, enc.selected) == enc.available, where + ": replay");
      t.check(enc.selected.size() <= selected_bound(g), where + ": |S|");
      t.check(enc.available.size() <= available_bound(g), where + ": |A|");
    }
    return finish(4, "encoding procedure invariants", t, std::to_string(plan_.kw_runs) + " runs");
  }

  CriterionResult edge_bound() {
    Tally t;
    auto check = [&](const JohnsonGraph& g, const std::vector<Vertex>& a) {
      t.check(mpq_class(2 * edge_count(g, a)) >= alon_chung_bound(g, a.size()),
              "|A|=" + std::to_string(a.size()) + " in J(" + std::to_string(g.n()) + "," + std::to_string(g.r()) + ")");
    };
    const JohnsonGraph small(4, 2);
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
      std::vector<Vertex> a;
      for (Vertex v = 0; v < 6; ++v) {
        if ((mask >> v) & 1) a.push_back(v);
      }
      check(small, a);
    }
    const JohnsonGraph big(8, 4);
    for (int i = 0; i < plan_.edge_samples; ++i) {
      const double p = rng_.unit();
      std::vector<Vertex> a;
      for (Vertex v = 0; v < big.vertex_count(); ++v) {
        if (rng_.chance(p)) a.push_back(v);
      }
      check(big, a);
    }
    return finish(5, "spectral edge bound", t,
                  "64 subsets of J(4,2), " + std::to_string(plan_.edge_samples) + " random subsets of J(8,4)");
  }

  CriterionResult hoffman() {
    Tally t;
    std::vector<std::string> found;
    for (auto [n, r] : {std::pair{4, 2}, {5, 2}, {6, 2}, {6, 3}, {7, 3}}) {
      const JohnsonGraph g(n, r);
      const int alpha = brute_max_stable_set(g);
      const std::uint64_t bound = g.vertex_count() / static_cast<std::uint64_t>(n - r + 1);
      t.check(static_cast<std::uint64_t>(alpha) <= bound, "J(" + std::to_string(n) + "," + std::to_string(r) + ")");
      found.push_back("J(" + std::to_string(n) + "," + std::to_string(r) + ") " + std::to_string(alpha) +
                      "<=" + std::to_string(bound));
    }
    return finish(6, "Hoffman bound", t, join(found));
  }

  CriterionResult coloring() {
    Tally t;
    for (int n = 2; n <= plan_.coloring_max_n; ++n) {
      for (int r = 1; r < n; ++r) {
        const JohnsonGraph g(n, r);
        const std::string where = "J(" + std::to_string(n) + "," + std::to_string(r) + ")";
        bool proper = true;
        for (ElementSet x : g.vertices()) {
          const int cx = graham_sloane_color(n, x);
          for (ElementSet y : g.neighbors(x)) proper = proper && cx != graham_sloane_color(n, y);
        }
        t.check(proper, where + " coloring");
        const auto cls = graham_sloane_stable_set(n, r);
        t.check(cls.size() * static_cast<std::size_t>(n) >= g.vertex_count(), where + " class size");
        bool stable = true;
        for (std::size_t i = 0; i < cls.size(); ++i) {
          for (std::size_t j = i + 1; j < cls.size(); ++j) stable = stable && !JohnsonGraph::adjacent(cls[i], cls[j]);
        }
        t.check(stable, where + " class stable");
      }
    }
    return finish(7, "Graham-Sloane coloring", t, "n <= " + std::to_string(plan_.coloring_max_n));
  }

  CriterionResult piff() {
    Tally t;
    std::size_t largest = 0;
    for (const auto& by_rank : matroids_) {
      for (const auto& ms : by_rank) {
        for (const Matroid& m : ms) {
          const int n = m.ground_size();
          const auto k = piff_encode(m);
          largest = std::max(largest, k.size());
          t.check(piff_decode(n, m.rank(), k) == m, "round trip " + label(m));
          t.check(k.size() * static_cast<std::size_t>(n + 1) <= (std::size_t{1} << (n + 1)) || n == 0,
                  "size " + label(m));
        }
      }
    }
    return finish(8, "circuit-closure encoding", t, "largest |K(M)| " + std::to_string(largest));
  }

  CriterionResult sandwich() {
    Tally t;
    int side_conditions = 0;
    for (int n = 1; n <= plan_.sandwich_max_n; ++n) {
      std::vector<mpz_class> m_counts;
      if (static_cast<std::size_t>(n) < counts_.size()) {
        m_counts = counts_[n];
      } else {
        m_counts.resize(static_cast<std::size_t>(n) + 1);
        for (int r = 0; 2 * r <= n; ++r) {
          m_counts[r] = static_cast<unsigned long>(count_rank(n, r));
          m_counts[n - r] = m_counts[r];
        }
      }
      for (int r = 1; r < n; ++r) {
        const std::string where = "n=" + std::to_string(n) + " r=" + std::to_string(r);
        const mpz_class s = count_sparse_paving(n, r);
        const Interval log_s = log2(s);
        const Interval log_m = log2(m_counts[r]);
        t.check(knuth_lower(n, r).certainly_le(log_s), where + " Knuth");
        const int half = std::min(r, n - r);
        if (const auto sn = kw_sn_upper(n, half); sn.side_condition_met) {
          ++side_conditions;
          t.check(log_s.certainly_le(sn.value), where + " s_{n,r} chain");
        }
        if (const auto mn = kw_mn_upper(n, half); mn.side_condition_met) {
          ++side_conditions;
          t.check(log_m.certainly_le(mn.value), where + " m_{n,r} chain");
        }
      }
    }
    int counted = 0;
    for (int n = 2; n <= 9; ++n) {
      for (int r = 1; r < n; ++r) {
        const JohnsonGraph g(n, r);
        if (g.vertex_count() > plan_.count_max_vertices) continue;
        ++counted;
        t.check(log2(brute_count_stable_sets(g)).certainly_le(count_bound_indsets(g)),
                "count bound J(" + std::to_string(n) + "," + std::to_string(r) + ")");
      }
    }
    for (const auto& row : headline_table(plan_.sandwich_max_n)) t.check(row.gap_ratio == 2, "gap ratio");
    return finish(9, "bound sandwich", t,
                  "n <= " + std::to_string(plan_.sandwich_max_n) + ", " + std::to_string(side_conditions) +
                      " chains with side condition met, counting bound on " + std::to_string(counted) +
                      " graphs with N <= " + std::to_string(plan_.count_max_vertices));
  }

  CriterionResult relaxation() {
    Tally t;
    std::size_t relaxations = 0;
    for (const auto& by_rank : matroids_) {
      for (const auto& ms : by_rank) {
        for (const Matroid& m : ms) {
          if (m.rank() == 0 || m.rank() == m.ground_size()) continue;
          const auto isolated = isolated_non_bases(m);
          const std::uint64_t subsets = std::uint64_t{1} << isolated.size();
          for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            std::vector<ElementSet> u;
            for (std::size_t i = 0; i < isolated.size(); ++i) {
              if ((mask >> i) & 1) u.push_back(isolated[i]);
            }
            ++relaxations;
            try {
              const Matroid relaxed = relax(m, u);
              auto bases = m.bases();
              bases.insert(bases.end(), u.begin(), u.end());
              std::sort(bases.begin(), bases.end());
              t.check(relaxed.bases() == bases, "relaxed bases " + label(m));
            } catch (const Error& e) {
              t.check(false, std::string(e.what()) + " " + label(m));
            }
          }
          const auto stripped = strip_circuit_hyperplanes(m);
          t.check(isolated_non_bases(stripped.relaxed).empty(), "strip leaves a circuit-hyperplane " + label(m));
          std::vector<ElementSet> restored;
          for (ElementSet b : stripped.relaxed.bases()) {
            if (!std::binary_search(stripped.circuit_hyperplanes.begin(), stripped.circuit_hyperplanes.end(), b)) {
              restored.push_back(b);
            }
          }
          t.check(restored == m.bases(), "strip round trip " + label(m));
          if (is_sparse_paving(m)) {
            t.check(stripped.relaxed == Matroid::uniform(m.rank(), m.ground_size()), "sparse paving strip " + label(m));
          }
        }
      }
    }
    return finish(10, "circuit-hyperplane relaxation", t, std::to_string(relaxations) + " relaxations");
  }

  CriterionResult spectrum() {
    Tally t;
    std::vector<std::string> found;
    for (auto [n, r] : {std::pair{5, 2}, {6, 2}, {6, 3}}) {
      const JohnsonGraph g(n, r);
      const double estimate = power_iteration_smallest_eigenvalue(g, 3000, rng_.next());
      t.check(std::abs(estimate + r) < 1e-6, "J(" + std::to_string(n) + "," + std::to_string(r) + ")");
      char buf[64];
      std::snprintf(buf, sizeof buf, "J(%d,%d) %.9f", n, r, estimate);
      found.emplace_back(buf);
    }
    return finish(11, "spectral spot check", t, join(found));
  }

 private:
  void round_trip(Tally& t, const Matroid& m) {
    for (auto method : {EncodingMethod::KW, EncodingMethod::Dominating}) {
      try {
        t.check(decode(encode(m, method)) == m, std::string(to_string(method)) + " " + label(m));
      } catch (const Error& e) {
        t.check(false, std::string(to_string(method)) + " threw " + e.what());
      }
    }
  }

  static CriterionResult finish(int id, std::string title, const Tally& t, const std::string& extra) {
    CriterionResult out;
    out.id = id;
    out.title = std::move(title);
    out.passed = t.ok();
    out.detail = t.summary(extra);
    return out;
  }

  Plan plan_;
  SeededRng rng_;
  std::vector<ByRank> matroids_;               // index n, then rank
  std::vector<std::vector<mpz_class>> counts_;  // m_{n,r}
};

}  // namespace

double power_iteration_smallest_eigenvalue(const RegularGraphView& g, int iterations, std::uint64_t seed) {
  const std::size_t count = g.vertex_count();
  const double d = g.degree();
  SeededRng rng(seed);
  std::vector<std::vector<Vertex>> adjacency(count);
  for (Vertex v = 0; v < count; ++v) g.neighbors(v, adjacency[v]);
  std::vector<double> x(count), y(count);
  for (double& v : x) v = rng.unit() - 0.5;
  double estimate = 0;
  for (int it = 0; it < iterations; ++it) {
    double norm = 0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm);
    for (double& v : x) v /= norm;
    double rayleigh = 0;
    for (std::size_t v = 0; v < count; ++v) {
      double sum = d * x[v];
      for (Vertex u : adjacency[v]) sum -= x[u];
      y[v] = sum;
      rayleigh += x[v] * sum;
    }
    estimate = rayleigh;
    x.swap(y);
  }
  return d - estimate;
}

std::vector<CriterionResult> run_acceptance(VerifyLevel level, std::uint64_t seed, std::ostream* log) {
  Suite suite(level, seed);
  std::vector<CriterionResult> out;
  auto run = [&](CriterionResult (Suite::*criterion)()) {
    const auto start = Clock::now();
    CriterionResult result;
    try {
      result = (suite.*criterion)();
    } catch (const std::exception& e) {
      result.id = static_cast<int>(out.size()) + 1;
      result.title = "criterion " + std::to_string(result.id);
      result.passed = false;
      result.detail = std::string("aborted: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (log) *log << format_result(result) << std::endl;
    out.push_back(result);
  };
  run(&Suite::census);
  run(&Suite::bijection);
  run(&Suite::codec);
  run(&Suite::kw_invariants);
  run(&Suite::edge_bound);
  run(&Suite::hoffman);
  run(&Suite::coloring);
  run(&Suite::piff);
  run(&Suite::sandwich);
  run(&Suite::relaxation);
  run(&Suite::spectrum);
  return out;
}

std::string format_result(const CriterionResult& result) {
  std::ostringstream os;
  os << (result.passed ? "PASS" : "FAIL") << " [" << result.id << "] " << result.title << ": " << result.detail;
  return os.str();
}

}  // namespace flatcover
