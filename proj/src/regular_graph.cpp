#include "flatcover/regular_graph.hpp"

#include <algorithm>

#include "flatcover/error.hpp"

namespace flatcover {

ExplicitRegularGraph::ExplicitRegularGraph(std::size_t vertex_count,
                                           const std::vector<std::pair<Vertex, Vertex>>& edges, Ratio lambda)
    : adjacency_(vertex_count), lambda_(lambda) {
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count || u == v) {
      throw Error(ErrorCode::PreconditionViolated, "edge endpoints must be distinct vertices");
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw Error(ErrorCode::PreconditionViolated, "repeated edge");
    }
  }
  degree_ = adjacency_.empty() ? 0 : static_cast<int>(adjacency_.front().size());
  for (const auto& list : adjacency_) {
    if (static_cast<int>(list.size()) != degree_) throw Error(ErrorCode::PreconditionViolated, "graph is not regular");
  }
  if (lambda_ < 0) throw Error(ErrorCode::PreconditionViolated, "lambda must be nonnegative");
}

ExplicitRegularGraph cycle_graph(std::size_t length) {
  if (length < 4 || length % 2 != 0) {
    throw Error(ErrorCode::PreconditionViolated, "cycle graph needs an even length >= 4");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < length; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % length));
  }
  return ExplicitRegularGraph(length, edges, Ratio(2));
}

ExplicitRegularGraph complete_graph(std::size_t order) {
  if (order < 2) throw Error(ErrorCode::PreconditionViolated, "complete graph needs at least 2 vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < order; ++u) {
    for (Vertex v = u + 1; v < order; ++v) edges.emplace_back(u, v);
  }
  return ExplicitRegularGraph(order, edges, Ratio(1));
}

ExplicitRegularGraph complete_bipartite_graph(std::size_t side) {
  if (side < 1) throw Error(ErrorCode::PreconditionViolated, "complete bipartite graph needs a nonempty side");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < side; ++u) {
    for (Vertex v = 0; v < side; ++v) edges.emplace_back(u, static_cast<Vertex>(side + v));
  }
  return ExplicitRegularGraph(2 * side, edges, Ratio(static_cast<std::int64_t>(side)));
}

ExplicitRegularGraph hypercube_graph(int dimension) {
  if (dimension < 1 || dimension > 20) throw Error(ErrorCode::PreconditionViolated, "hypercube dimension in 1..20");
  const std::size_t order = std::size_t{1} << dimension;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < order; ++u) {
    for (int bit = 0; bit < dimension; ++bit) {
      const Vertex v = u ^ (Vertex{1} << bit);
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return ExplicitRegularGraph(order, edges, Ratio(dimension));
}

}  // namespace flatcover
