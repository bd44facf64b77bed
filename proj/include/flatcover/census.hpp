#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "flatcover/matroid.hpp"

namespace flatcover {

enum class EnumerationStrategy {
  Automatic,  ///< plain when C(n, r) <= 20, pruned otherwise
  Plain,      ///< filter every subset of the r-sets, C(n, r) <= 20
  Pruned,     ///< depth-first with early exchange checks, C(n, r) <= 35
};

using MatroidSink = std::function<void(const Matroid&)>;

/**
 * Calls `sink` once for every matroid of rank r on {0..n-1}, on the calling
 * thread, in ascending order of the family bitmask (bit i = i-th r-set).
 * The order does not depend on strategy or job count. Pruned results are
 * re-checked by the exchange validator before they are reported. Throws
 * TooLarge outside the strategy's range.
 */
void for_each_matroid(int n, int r, const MatroidSink& sink,
                      EnumerationStrategy strategy = EnumerationStrategy::Automatic, int jobs = 1);

/// All rank-r matroids on n elements, sorted by base list.
std::vector<Matroid> enumerate_matroids(int n, int r, EnumerationStrategy strategy = EnumerationStrategy::Automatic);

/// Number of rank-r matroids without materializing the list.
std::uint64_t count_rank(int n, int r, EnumerationStrategy strategy = EnumerationStrategy::Automatic, int jobs = 1);

/// One sparse paving matroid per stable set of J(n, r), sorted by base list.
/// Requires 0 < r < n and C(n, r) <= 70.
std::vector<Matroid> enumerate_sparse_paving(int n, int r);

/// Canonical label-free form: the smallest sorted base list over all
/// relabelings of the ground set. Requires n <= 7.
std::vector<ElementSet> canonical_form(const Matroid& m);

struct CensusOptions {
  int jobs = 1;
  /// Also count isomorphism classes (requires n <= 6).
  bool unlabeled = true;
  /// Receives every enumerated matroid.
  MatroidSink sink;
};

/// Labeled counts per rank (index r = 0..n).
struct CensusResult {
  int n = 0;
  std::vector<mpz_class> matroid_counts;        ///< m_{n,r}
  std::vector<mpz_class> sparse_paving_counts;  ///< s_{n,r}
  std::vector<std::uint64_t> unlabeled_counts;  ///< isomorphism classes per rank, when computed
  mpz_class total_matroids;                     ///< m_n
  mpz_class total_sparse_paving;                ///< s_n
  std::optional<std::uint64_t> total_unlabeled;
};

/// Exhaustive census for n <= 7.
CensusResult count_matroids(int n, const CensusOptions& options = {});

/// s_{n,r} from the stable set count of J(n, r).
mpz_class count_sparse_paving(int n, int r);

}  // namespace flatcover
