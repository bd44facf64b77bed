#include "flatcover/bounds.hpp"

#include <algorithm>

#include "flatcover/error.hpp"

namespace flatcover {
namespace {

void require_half_rank(int n, int r) {
  if (r <= 0 || 2 * r > n || n > 64) {
    throw Error(ErrorCode::RankOutOfRange,
                "bound needs 0 < r <= n/2 <= 32, got n=" + std::to_string(n) + " r=" + std::to_string(r));
  }
}

mpz_class vertex_count(int n, int r) { return binomial_big(static_cast<unsigned long>(n), static_cast<unsigned long>(r)); }

// alpha N = C(n,r) / (n - r + 1).
mpq_class alpha_n(int n, int r) {
  mpq_class v(vertex_count(n, r), mpz_class(n - r + 1));
  v.canonicalize();
  return v;
}

// k log2(e M / k) for integer k >= 1.
Interval entropy_term(const Interval& log2_m, const mpz_class& k) {
  return enclose(k) * (log2_e() + log2_m - log2(k));
}

mpz_class pow2(unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

}  // namespace

const char* to_string(Exactness exactness) {
  switch (exactness) {
    case Exactness::ExactRational: return "exact-rational";
    case Exactness::BigInteger: return "big-integer";
    case Exactness::FloatWithErrorBound: return "float-with-error-bound";
  }
  return "unknown";
}

BinomialCheck binomial_bounds_check(int n) {
  if (n < 1 || n > 64) throw Error(ErrorCode::RankOutOfRange, "binomial checks cover 1 <= n <= 64");
  BinomialCheck out;
  out.n = n;
  const auto un = static_cast<unsigned long>(n);
  const Interval log2_n = log2(mpz_class(n));
  for (int r = 1; r <= n; ++r) {
    const Interval lhs = log2(binomial_big(un, static_cast<unsigned long>(r)));
    const Interval rhs = enclose(std::int64_t{r}) * (log2_e() + log2_n - log2(mpz_class(r)));
    out.entropy_bound = out.entropy_bound && lhs.certainly_le(rhs);
  }

  // Squared forms keep everything rational except pi:
  // C^2 n / 4^n <= 2 / pi.
  auto squared_ratio = [](int m) {
    const mpz_class c = binomial_big(static_cast<unsigned long>(m), static_cast<unsigned long>(m / 2));
    return mpq_class(c * c * m, pow2(2UL * static_cast<unsigned long>(m)));
  };
  const mpq_class sq = squared_ratio(n);
  out.central_upper = (enclose(sq) * pi()).hi <= 2.0;
  out.central_ratio = sqrt(enclose(sq));
  out.central_gap_shrinks = sq <= squared_ratio(n + 2);

  for (int k = 0; 2 * k < n; ++k) {
    const auto uk = static_cast<unsigned long>(k);
    const mpz_class lhs = binomial_prefix_sum(un, uk) * (n - 2 * k + 1);
    const mpz_class rhs = binomial_big(un, uk) * (n - k + 1);
    out.prefix_sum_bound = out.prefix_sum_bound && lhs <= rhs;
  }
  return out;
}

Interval knuth_lower(int n, int r) {
  if (r <= 0 || r >= n) throw Error(ErrorCode::RankOutOfRange, "Knuth bound needs 0 < r < n");
  return enclose(mpq_class(vertex_count(n, r), mpz_class(n)));
}

Interval piff_upper(int n) {
  if (n < 2 || n > 64) throw Error(ErrorCode::RankOutOfRange, "circuit-closure bound needs 2 <= n <= 64");
  // log2(k) with k = 2^{n+1}/(n+1), and log2 of log2(e (n+1)^2 / 2).
  const Interval log2_n1 = log2(mpz_class(n + 1));
  const Interval log2_k = enclose(std::int64_t{n + 1}) - log2_n1;
  const Interval per_entry = log2_e() + log2_n1 + log2_n1 - Interval::point(1.0);
  return log2_k + log2(per_entry);
}

Interval trivial_stable_bound(int n, int r) {
  require_half_rank(n, r);
  const mpz_class limit = floor_of(alpha_n(n, r));
  return log2(binomial_prefix_sum(vertex_count(n, r).get_ui(), limit.get_ui()));
}

mpz_class kw_selected_limit(int n, int r) {
  require_half_rank(n, r);
  const int d = r * (n - r);
  return ceil_ln_times(mpz_class(d + 1), mpq_class(vertex_count(n, r), mpz_class(d + r)));
}

ChainValue kw_sn_upper(int n, int r) {
  require_half_rank(n, r);
  const mpz_class k = kw_selected_limit(n, r);
  const mpz_class big_n = vertex_count(n, r);
  ChainValue out;
  out.side_condition_met = k >= 1 && 2 * k < big_n;
  if (!out.side_condition_met) return out;
  const Interval log2_big_n = log2(big_n);
  out.value = log2_big_n + entropy_term(log2_big_n, k) + enclose(alpha_n(n, r));
  return out;
}

ChainValue kw_mn_upper(int n, int r) {
  require_half_rank(n, r);
  const mpz_class k = kw_selected_limit(n, r);
  const mpz_class big_n = vertex_count(n, r);
  ChainValue out;
  out.side_condition_met = k >= 1 && 4 * k < big_n;
  if (!out.side_condition_met) return out;
  const Interval log2_big_n = log2(big_n);
  // Pairs (flat, rank) come from a universe of 2^n (n+1).
  const Interval log2_universe = enclose(std::int64_t{n}) + log2(mpz_class(n + 1));
  const mpz_class k2 = 2 * k;
  out.value = log2(k) + entropy_term(log2_big_n, k) + log2(k2) + entropy_term(log2_universe, k2) +
              enclose(alpha_n(n, r));
  return out;
}

std::vector<HeadlineRow> headline_table(int n_max, const std::vector<CensusTotals>& census) {
  if (n_max < 1 || n_max > 64) throw Error(ErrorCode::RankOutOfRange, "headline table covers 1 <= n <= 64");
  std::vector<HeadlineRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    HeadlineRow row;
    row.n = n;
    const mpz_class central = vertex_count(n, n / 2);
    row.knuth_lower = enclose(mpq_class(central, mpz_class(n)));
    row.headline_upper = enclose(mpq_class(2 * central, mpz_class(n)));
    row.gap_ratio = mpq_class(2 * central, mpz_class(n)) / mpq_class(central, mpz_class(n));
    row.gap_ratio.canonicalize();
    row.piff_loglog = n >= 2 ? piff_upper(n) : Interval{};
    for (int r = 1; 2 * r <= n; ++r) {
      if (auto sn = kw_sn_upper(n, r); sn.side_condition_met) {
        if (!row.kw_sn_max || row.kw_sn_max->hi < sn.value.hi) row.kw_sn_max = sn.value;
      }
      if (auto mn = kw_mn_upper(n, r); mn.side_condition_met) {
        if (!row.kw_mn_max || row.kw_mn_max->hi < mn.value.hi) row.kw_mn_max = mn.value;
      }
    }
    for (const auto& c : census) {
      if (c.n != n) continue;
      row.census_log2_mn = log2(c.matroids);
      row.census_log2_sn = log2(c.sparse_paving);
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<NamedBound> describe(const HeadlineRow& row) {
  std::vector<NamedBound> out{
      {"knuth_lower_log2_sn", row.knuth_lower, Exactness::ExactRational},
      {"headline_upper_log2_mn", row.headline_upper, Exactness::ExactRational},
      {"gap_ratio", enclose(row.gap_ratio), Exactness::ExactRational},
  };
  if (row.n >= 2) out.push_back({"piff_upper_loglog_mn", row.piff_loglog, Exactness::FloatWithErrorBound});
  if (row.kw_sn_max) out.push_back({"kw_sn_upper_max_r", *row.kw_sn_max, Exactness::FloatWithErrorBound});
  if (row.kw_mn_max) out.push_back({"kw_mn_upper_max_r", *row.kw_mn_max, Exactness::FloatWithErrorBound});
  if (row.census_log2_mn) out.push_back({"census_log2_mn", *row.census_log2_mn, Exactness::BigInteger});
  if (row.census_log2_sn) out.push_back({"census_log2_sn", *row.census_log2_sn, Exactness::BigInteger});
  return out;
}

}  // namespace flatcover
