#include "flatcover/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "flatcover/error.hpp"
#include "flatcover/johnson.hpp"

namespace flatcover {
namespace {

using Family = std::uint64_t;  // bit i = i-th r-set in vertex order

constexpr std::uint64_t kPlainLimit = 20;
constexpr std::uint64_t kPrunedLimit = 35;

std::vector<ElementSet> family_bases(const std::vector<ElementSet>& rsets, Family family) {
  std::vector<ElementSet> bases;
  bases.reserve(static_cast<std::size_t>(std::popcount(family)));
  for (Family f = family; f != 0; f &= f - 1) bases.push_back(rsets[static_cast<std::size_t>(std::countr_zero(f))]);
  return bases;
}

// One exchange requirement: if both sets in `pair` are chosen, some set in
// `candidates` must be chosen too.
struct Requirement {
  Family pair;
  Family candidates;
};

class PrunedSearch {
 public:
  PrunedSearch(int n, int r) : rsets_(subsets_of_size(n, r)), by_deadline_(rsets_.size()) {
    const JohnsonGraph g(n, r);
    for (std::size_t i = 0; i < rsets_.size(); ++i) {
      for (std::size_t j = 0; j < rsets_.size(); ++j) {
        if (i == j) continue;
        const ElementSet b = rsets_[i];
        const ElementSet other = rsets_[j];
        for (int e : (b - other).elements()) {
          Family candidates = 0;
          for (int f : (other - b).elements()) candidates |= Family{1} << g.index_of(b.without(e).with(f));
          const std::size_t deadline = std::max({i, j, static_cast<std::size_t>(63 - std::countl_zero(candidates))});
          by_deadline_[deadline].push_back({(Family{1} << i) | (Family{1} << j), candidates});
        }
      }
    }
  }

  std::size_t size() const { return rsets_.size(); }
  const std::vector<ElementSet>& rsets() const { return rsets_; }

  /// Completes every family whose first `depth` decisions match `prefix`.
  void run_from(Family prefix, std::size_t depth, std::vector<Family>& out) const {
    for (std::size_t k = 0; k < depth; ++k) {
      if (!consistent(prefix, k)) return;
    }
    descend(prefix, depth, out);
  }

 private:
  bool consistent(Family chosen, std::size_t decided) const {
    for (const auto& req : by_deadline_[decided]) {
      if ((chosen & req.pair) == req.pair && (chosen & req.candidates) == 0) return false;
    }
    return true;
  }

  void descend(Family chosen, std::size_t next, std::vector<Family>& out) const {
    if (next == rsets_.size()) {
      if (chosen != 0) out.push_back(chosen);
      return;
    }
    const Family with = chosen | (Family{1} << next);
    if (consistent(with, next)) descend(with, next + 1, out);
    if (consistent(chosen, next)) descend(chosen, next + 1, out);
  }

  std::vector<ElementSet> rsets_;
  std::vector<std::vector<Requirement>> by_deadline_;
};

EnumerationStrategy resolve(EnumerationStrategy strategy, std::uint64_t vertex_count) {
  if (strategy == EnumerationStrategy::Automatic) {
    strategy = vertex_count <= kPlainLimit ? EnumerationStrategy::Plain : EnumerationStrategy::Pruned;
  }
  const std::uint64_t limit = strategy == EnumerationStrategy::Plain ? kPlainLimit : kPrunedLimit;
  if (vertex_count > limit) {
    throw Error(ErrorCode::TooLarge, "matroid enumeration needs C(n,r) <= " + std::to_string(limit) + ", got " +
                                         std::to_string(vertex_count));
  }
  return strategy;
}

// Runs `work(task, out)` for task = 0..tasks-1 over `jobs` threads and
// returns the union of outputs in ascending order.
template <typename Work>
std::vector<Family> run_partitioned(std::size_t tasks, int jobs, Work&& work) {
  const auto workers = static_cast<std::size_t>(std::clamp(jobs, 1, 64));
  std::vector<std::vector<Family>> results(workers);
  std::atomic<std::size_t> next{0};
  auto worker = [&](std::size_t id) {
    for (std::size_t task = next++; task < tasks; task = next++) work(task, results[id]);
  };
  if (workers == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t id = 0; id < workers; ++id) threads.emplace_back(worker, id);
    for (auto& t : threads) t.join();
  }
  std::vector<Family> merged;
  for (auto& part : results) merged.insert(merged.end(), part.begin(), part.end());
  std::sort(merged.begin(), merged.end());
  return merged;
}

std::vector<Family> matroid_families(int n, int r, EnumerationStrategy strategy, int jobs) {
  if (n < 0 || n > kMaxGroundSize || r < 0 || r > n) {
    throw Error(ErrorCode::RankOutOfRange, "enumeration needs 0 <= r <= n");
  }
  const std::uint64_t count = binomial(n, r);
  strategy = resolve(strategy, count);
  const auto rsets = subsets_of_size(n, r);

  if (strategy == EnumerationStrategy::Plain) {
    const Family limit = Family{1} << count;
    // Blocks of 4096 families per task.
    const std::size_t tasks = static_cast<std::size_t>((limit + 4095) / 4096);
    return run_partitioned(tasks, jobs, [&](std::size_t task, std::vector<Family>& out) {
      const Family begin = std::max<Family>(1, static_cast<Family>(task) * 4096);
      const Family end = std::min<Family>(limit, static_cast<Family>(task + 1) * 4096);
      for (Family family = begin; family < end; ++family) {
        if (Matroid::try_from_bases(n, r, family_bases(rsets, family))) out.push_back(family);
      }
    });
  }

  const PrunedSearch search(n, r);
  const std::size_t depth = std::min<std::size_t>(search.size(), 8);
  auto families = run_partitioned(std::size_t{1} << depth, jobs, [&](std::size_t prefix, std::vector<Family>& out) {
    search.run_from(static_cast<Family>(prefix), depth, out);
  });
  // The pruned search answers to the independent exchange checker.
  for (Family family : families) {
    if (!Matroid::try_from_bases(n, r, family_bases(rsets, family))) {
      throw std::logic_error("pruned enumeration produced a non-matroid");
    }
  }
  return families;
}

}  // namespace

void for_each_matroid(int n, int r, const MatroidSink& sink, EnumerationStrategy strategy, int jobs) {
  const auto rsets = subsets_of_size(n, r);
  for (Family family : matroid_families(n, r, strategy, jobs)) sink(Matroid::from_bases(n, r, family_bases(rsets, family)));
}

std::vector<Matroid> enumerate_matroids(int n, int r, EnumerationStrategy strategy) {
  std::vector<Matroid> out;
  for_each_matroid(n, r, [&](const Matroid& m) { out.push_back(m); }, strategy);
  std::sort(out.begin(), out.end(), [](const Matroid& a, const Matroid& b) { return a.bases() < b.bases(); });
  return out;
}

std::uint64_t count_rank(int n, int r, EnumerationStrategy strategy, int jobs) {
  return matroid_families(n, r, strategy, jobs).size();
}

std::vector<Matroid> enumerate_sparse_paving(int n, int r) {
  if (r <= 0 || r >= n) throw Error(ErrorCode::RankOutOfRange, "sparse paving enumeration needs 0 < r < n");
  const std::uint64_t count = binomial(n, r);
  if (count > 70) throw Error(ErrorCode::TooLarge, "sparse paving enumeration needs C(n,r) <= 70");
  const auto rsets = subsets_of_size(n, r);

  // Depth-first over stable sets in vertex order.
  std::vector<std::vector<ElementSet>> stable_sets;
  std::vector<ElementSet> current;
  auto extend = [&](auto&& self, std::size_t next) -> void {
    if (next == rsets.size()) {
      stable_sets.push_back(current);
      return;
    }
    self(self, next + 1);
    const ElementSet x = rsets[next];
    const bool free = std::none_of(current.begin(), current.end(), [x](ElementSet y) { return JohnsonGraph::adjacent(x, y); });
    if (free) {
      current.push_back(x);
      self(self, next + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);

  std::vector<Matroid> out;
  out.reserve(stable_sets.size());
  for (const auto& stable : stable_sets) {
    std::vector<ElementSet> bases;
    std::set_difference(rsets.begin(), rsets.end(), stable.begin(), stable.end(), std::back_inserter(bases));
    out.push_back(Matroid::from_bases(n, r, std::move(bases)));
  }
  std::sort(out.begin(), out.end(), [](const Matroid& a, const Matroid& b) { return a.bases() < b.bases(); });
  return out;
}

std::vector<ElementSet> canonical_form(const Matroid& m) {
  const int n = m.ground_size();
  if (n > 7) throw Error(ErrorCode::TooLarge, "canonical form needs n <= 7");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<ElementSet> best = m.bases();
  std::vector<ElementSet> image(m.bases().size());
  std::vector<ElementSet::Word> relabel(std::size_t{1} << n);
  do {
    for (std::size_t x = 0; x < relabel.size(); ++x) {
      ElementSet::Word y = 0;
      for (int e = 0; e < n; ++e) {
        if ((x >> e) & 1U) y |= ElementSet::Word{1} << perm[static_cast<std::size_t>(e)];
      }
      relabel[x] = y;
    }
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = ElementSet(relabel[m.bases()[i].bits()]);
    std::sort(image.begin(), image.end());
    if (image < best) best = image;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

mpz_class count_sparse_paving(int n, int r) {
  if (r < 0 || r > n) throw Error(ErrorCode::RankOutOfRange, "sparse paving count needs 0 <= r <= n");
  if (r == 0 || r == n) return 1;
  return brute_count_stable_sets(JohnsonGraph(n, r));
}

CensusResult count_matroids(int n, const CensusOptions& options) {
  if (n < 0 || n > 7) throw Error(ErrorCode::TooLarge, "census needs n <= 7");
  const bool unlabeled = options.unlabeled && n <= 6;
  CensusResult out;
  out.n = n;
  out.total_matroids = 0;
  out.total_sparse_paving = 0;
  for (int r = 0; r <= n; ++r) {
    std::uint64_t labeled = 0;
    std::set<std::vector<ElementSet>> classes;
    if (unlabeled || options.sink) {
      for_each_matroid(
          n, r,
          [&](const Matroid& m) {
            ++labeled;
            if (unlabeled) classes.insert(canonical_form(m));
            if (options.sink) options.sink(m);
          },
          EnumerationStrategy::Automatic, options.jobs);
    } else {
      labeled = count_rank(n, r, EnumerationStrategy::Automatic, options.jobs);
    }
    out.matroid_counts.emplace_back(static_cast<unsigned long>(labeled));
    out.sparse_paving_counts.push_back(count_sparse_paving(n, r));
    out.total_matroids += out.matroid_counts.back();
    out.total_sparse_paving += out.sparse_paving_counts.back();
    if (unlabeled) out.unlabeled_counts.push_back(classes.size());
  }
  if (unlabeled) {
    out.total_unlabeled = std::accumulate(out.unlabeled_counts.begin(), out.unlabeled_counts.end(), std::uint64_t{0});
  }
  return out;
}

}  // namespace flatcover
