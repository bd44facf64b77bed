#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "flatcover/numeric.hpp"
#include "flatcover/regular_graph.hpp"

namespace flatcover {

/// One iteration of the encoding loop, recorded for phase audits.
struct EncodeStep {
  std::size_t available_before;  ///< |A| when the vertex was picked
  Vertex vertex;
  int induced_degree;  ///< degree of the vertex inside G[A]
  bool selected;
  std::size_t removed;  ///< vertices taken out of A by this step
};

/// Output of the encoding procedure.
struct KWEncoding {
  std::vector<Vertex> selected;   ///< S, in selection order
  std::vector<Vertex> available;  ///< A at termination, ascending

  friend bool operator==(const KWEncoding&, const KWEncoding&) = default;
};

/**
 * Runs the Kleitman-Winston encoding loop on `g` for the vertex set `k`.
 *
 * Starting from A = V and S = {}, while |A| > alpha N it takes the first
 * vertex v of the canonical ordering of A (maximum degree in G[A], ties to
 * the smaller vertex). If v is in K, v joins S and v together with its
 * neighbors leaves A; otherwise only v leaves A.
 *
 * The guard compares |A| (d + lambda) > lambda N exactly. `k` need not be
 * sorted. Throws ZeroDegree when d = 0.
 */
KWEncoding kw_encode(const RegularGraphView& g, std::span<const Vertex> k,
                     std::vector<EncodeStep>* trace = nullptr);

/// Recovers A from S alone by replaying the loop with membership in S as
/// the selection rule.
std::vector<Vertex> reconstruct_available(const RegularGraphView& g, std::span<const Vertex> selected);

/// S together with the residual K & A. Throws ResidualOutsideA when the
/// residual is not inside the available set reconstructed from S.
std::vector<Vertex> decode_stable_set(const RegularGraphView& g, std::span<const Vertex> selected,
                                      std::span<const Vertex> residual);

/// Edges with both ends in `subset`.
std::uint64_t edge_count(const RegularGraphView& g, std::span<const Vertex> subset);

/// |A| (d|A|/N - lambda (N - |A|)/N), a lower bound on 2 e(A).
mpq_class alon_chung_bound(const RegularGraphView& g, std::size_t subset_size);

/// alpha = lambda / (d + lambda).
mpq_class kw_alpha(const RegularGraphView& g);

/// floor(alpha N), the largest final |A|.
std::uint64_t available_bound(const RegularGraphView& g);

/// Enclosure of sigma N with sigma = ln(d + 1) / (d + lambda).
Interval sigma_times_n(const RegularGraphView& g);

/// ceil(sigma N), the largest |S|.
std::uint64_t selected_bound(const RegularGraphView& g);

/// log2 of sum_{i <= ceil(sigma N)} C(N, i) * 2^(alpha N), the stable set count bound.
Interval count_bound_indsets(const RegularGraphView& g);

}  // namespace flatcover
