#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "flatcover/numeric.hpp"

namespace flatcover {

enum class Exactness {
  ExactRational,        ///< the enclosed value is an exact rational
  BigInteger,           ///< log2 of an exact big-integer expression
  FloatWithErrorBound,  ///< directed-rounding evaluation of a real formula
};

const char* to_string(Exactness exactness);

/// A named quantity in bits (log2 scale unless the name says otherwise).
struct NamedBound {
  std::string name;
  Interval value;
  Exactness exactness;
};

/// Result of a proof chain that only applies under a side condition.
struct ChainValue {
  bool side_condition_met = false;
  Interval value;  ///< meaningful only when side_condition_met
};

// Standard binomial estimates, checked for one n over every admissible r.
struct BinomialCheck {
  int n = 0;
  bool entropy_bound = true;        ///< C(n,r) <= (e n / r)^r, 1 <= r <= n
  bool central_upper = true;        ///< C(n, n/2) <= 2^n / sqrt(n) * sqrt(2/pi)
  bool central_gap_shrinks = true;  ///< sqrt(2/pi) - C(n,n/2) sqrt(n) / 2^n does not grow from n to n+2
  bool prefix_sum_bound = true;     ///< sum_{i<=k} C(n,i) <= (n-k+1)/(n-2k+1) C(n,k), k < n/2
  Interval central_ratio;           ///< C(n, n/2) sqrt(n) / 2^n, tends to sqrt(2/pi)
};

BinomialCheck binomial_bounds_check(int n);

/// C(n,r)/n as a lower bound on log2 s_{n,r}. Requires 0 < r < n.
Interval knuth_lower(int n, int r);

/// log2 log2 of the circuit-closure bound (2^{n+1}/(n+1)) log2(e(n+1)^2/2). n >= 2.
Interval piff_upper(int n);

/// log2 sum_{j <= floor(alpha N)} C(N, j) for J(n, r), 0 < r <= n/2.
Interval trivial_stable_bound(int n, int r);

/// log2 N + k log2(eN/k) + alpha N with k = ceil(sigma N); side condition k < N/2.
ChainValue kw_sn_upper(int n, int r);

/// log2 k + k log2(eN/k) + log2(2k) + 2k log2(e 2^n (n+1) / (2k)) + alpha N;
/// side condition 2k < N/2.
ChainValue kw_mn_upper(int n, int r);

/// ceil(sigma N) for J(n, r).
mpz_class kw_selected_limit(int n, int r);

/// Per-n summary row.
struct HeadlineRow {
  int n = 0;
  Interval knuth_lower;       ///< C(n, n/2) / n
  Interval headline_upper;    ///< (2/n) C(n, n/2)
  mpq_class gap_ratio;        ///< headline / knuth, exactly 2
  Interval piff_loglog;       ///< log2 log2 of the circuit-closure bound
  std::optional<Interval> kw_sn_max;  ///< max over r <= n/2 with side condition met
  std::optional<Interval> kw_mn_max;
  std::optional<Interval> census_log2_mn;  ///< exact census, small n only
  std::optional<Interval> census_log2_sn;
};

struct CensusTotals {
  int n;
  mpz_class matroids;
  mpz_class sparse_paving;
};

/// Rows for n = 1..n_max (n_max <= 64); census totals are attached where given.
std::vector<HeadlineRow> headline_table(int n_max, const std::vector<CensusTotals>& census = {});

/// Every row as named bounds with exactness tags.
std::vector<NamedBound> describe(const HeadlineRow& row);

}  // namespace flatcover
