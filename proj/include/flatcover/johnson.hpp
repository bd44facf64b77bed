#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "flatcover/element_set.hpp"
#include "flatcover/regular_graph.hpp"

namespace flatcover {

/**
 * The Johnson graph J(n, r): vertices are the r-subsets of {0..n-1}, two
 * vertices adjacent when they share r-1 elements. Adjacency is computed on
 * demand and never materialized.
 *
 * Vertex i is the i-th r-subset in ascending mask order (colex order), which
 * is the fixed vertex order used throughout.
 */
class JohnsonGraph final : public RegularGraphView {
 public:
  JohnsonGraph(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }

  std::size_t vertex_count() const override { return vertex_count_; }
  int degree() const override { return r_ * (n_ - r_); }

  /// r when r <= n/2, else n - r (the graph is isomorphic to J(n, n-r)).
  Ratio smallest_eigenvalue_magnitude() const override;

  void neighbors(Vertex v, std::vector<Vertex>& out) const override;
  std::string label(Vertex v) const override { return vertex_at(v).to_string(); }

  std::vector<ElementSet> vertices() const { return subsets_of_size(n_, r_); }
  std::vector<ElementSet> neighbors(ElementSet x) const;

  Vertex index_of(ElementSet x) const;
  ElementSet vertex_at(Vertex index) const;

  static bool adjacent(ElementSet x, ElementSet y) {
    return x.size() == y.size() && (x ^ y).size() == 2;
  }

 private:
  int n_;
  int r_;
  std::size_t vertex_count_;
};

/// Spectral parameters of J(n, r) for 0 < r <= n/2.
struct JohnsonParams {
  std::uint64_t vertex_count;  ///< C(n, r)
  int degree;                  ///< r(n - r)
  int lambda;                  ///< r, minus the smallest eigenvalue
  Ratio alpha;                 ///< 1 / (n - r + 1)
  double sigma;                ///< ln(r(n-r)+1) / (r(n-r+1))
};

JohnsonParams params(int n, int r);

/// (sum of elements) mod n. Adjacent vertices always get different colors.
int graham_sloane_color(int n, ElementSet x);

/// The largest color class of J(n, r), smallest color on ties.
std::vector<ElementSet> graham_sloane_stable_set(int n, int r);

/// Greedy maximum coverage over closed neighborhoods, ties to the smaller vertex.
std::vector<ElementSet> greedy_dominating_set(const JohnsonGraph& g);

/// Maximum induced degree within `available`, ties to the smaller vertex.
ElementSet first_in_canonical_ordering(const JohnsonGraph& g, std::span<const ElementSet> available);

/// Exact stability number by branch and bound. Needs N <= 127.
int brute_max_stable_set(const RegularGraphView& g);

/// Exact number of stable sets, including the empty one. Needs N <= 127.
mpz_class brute_count_stable_sets(const RegularGraphView& g);

}  // namespace flatcover
