#pragma once

#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace flatcover {

using Ratio = boost::rational<std::int64_t>;
using Vertex = std::uint32_t;

/**
 * What the encoding procedure needs to know about a graph: it is d-regular
 * on N vertices numbered 0..N-1 (the numbering is the fixed vertex order),
 * and -lambda is a lower bound on its adjacency spectrum.
 *
 * lambda is trusted input. The guarantees of the procedure only use it as a
 * bound, so a valid but loose lambda weakens the bounds without breaking
 * correctness.
 */
class RegularGraphView {
 public:
  virtual ~RegularGraphView() = default;

  virtual std::size_t vertex_count() const = 0;
  virtual int degree() const = 0;
  virtual Ratio smallest_eigenvalue_magnitude() const = 0;

  /// Replaces `out` with the neighbors of v, ascending.
  virtual void neighbors(Vertex v, std::vector<Vertex>& out) const = 0;

  virtual std::string label(Vertex v) const { return std::to_string(v); }
};

/// A regular graph held as adjacency lists. Construction checks regularity.
class ExplicitRegularGraph final : public RegularGraphView {
 public:
  ExplicitRegularGraph(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges,
                       Ratio lambda);

  std::size_t vertex_count() const override { return adjacency_.size(); }
  int degree() const override { return degree_; }
  Ratio smallest_eigenvalue_magnitude() const override { return lambda_; }
  void neighbors(Vertex v, std::vector<Vertex>& out) const override { out = adjacency_[v]; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  int degree_ = 0;
  Ratio lambda_;
};

// Small families with known smallest eigenvalue.
ExplicitRegularGraph cycle_graph(std::size_t length);  ///< even length only (lambda = 2)
ExplicitRegularGraph complete_graph(std::size_t order);  ///< lambda = 1
ExplicitRegularGraph complete_bipartite_graph(std::size_t side);  ///< K_{m,m}, lambda = m
ExplicitRegularGraph hypercube_graph(int dimension);  ///< lambda = dimension

}  // namespace flatcover
