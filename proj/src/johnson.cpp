#include "flatcover/johnson.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <queue>
#include <unordered_map>

#include "flatcover/error.hpp"

namespace flatcover {

JohnsonGraph::JohnsonGraph(int n, int r) : n_(n), r_(r) {
  if (n < 0 || n > kMaxGroundSize || r < 0 || r > n) {
    throw Error(ErrorCode::RankOutOfRange, "J(n, r) needs 0 <= r <= n <= 63");
  }
  const std::uint64_t count = binomial(n, r);
  if (count > std::numeric_limits<Vertex>::max()) {
    throw Error(ErrorCode::TooLarge, "J(" + std::to_string(n) + "," + std::to_string(r) + ") has too many vertices");
  }
  vertex_count_ = static_cast<std::size_t>(count);
}

Ratio JohnsonGraph::smallest_eigenvalue_magnitude() const { return Ratio(std::min(r_, n_ - r_)); }

std::vector<ElementSet> JohnsonGraph::neighbors(ElementSet x) const {
  std::vector<ElementSet> out;
  out.reserve(static_cast<std::size_t>(degree()));
  const ElementSet outside = x.complement(n_);
  for (int drop : x.elements()) {
    for (int add : outside.elements()) out.push_back(x.without(drop).with(add));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void JohnsonGraph::neighbors(Vertex v, std::vector<Vertex>& out) const {
  out.clear();
  for (ElementSet y : neighbors(vertex_at(v))) out.push_back(index_of(y));
}

Vertex JohnsonGraph::index_of(ElementSet x) const {
  // Colex rank: sum over the i-th smallest element e_i of C(e_i, i + 1).
  std::uint64_t index = 0;
  int i = 0;
  for (int e : x.elements()) index += binomial(e, ++i);
  return static_cast<Vertex>(index);
}

ElementSet JohnsonGraph::vertex_at(Vertex index) const {
  std::uint64_t rest = index;
  ElementSet out;
  int ceiling = n_;
  for (int i = r_; i >= 1; --i) {
    int c = ceiling - 1;
    while (binomial(c, i) > rest) --c;
    out = out.with(c);
    rest -= binomial(c, i);
    ceiling = c;
  }
  return out;
}

JohnsonParams params(int n, int r) {
  if (r <= 0 || 2 * r > n) {
    throw Error(ErrorCode::RankOutOfRange, "parameters need 0 < r <= n/2, got n=" + std::to_string(n) +
                                               " r=" + std::to_string(r));
  }
  const int d = r * (n - r);
  return JohnsonParams{
      .vertex_count = binomial(n, r),
      .degree = d,
      .lambda = r,
      .alpha = Ratio(r, d + r),
      .sigma = std::log(static_cast<double>(d) + 1.0) / static_cast<double>(d + r),
  };
}

int graham_sloane_color(int n, ElementSet x) {
  int sum = 0;
  for (int e : x.elements()) sum += e;
  return sum % n;
}

std::vector<ElementSet> graham_sloane_stable_set(int n, int r) {
  if (r <= 0 || r >= n) throw Error(ErrorCode::RankOutOfRange, "Graham-Sloane classes need 0 < r < n");
  const auto all = subsets_of_size(n, r);
  std::vector<std::size_t> counts(static_cast<std::size_t>(n), 0);
  for (ElementSet x : all) ++counts[graham_sloane_color(n, x)];
  const int color = static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin());
  std::vector<ElementSet> out;
  out.reserve(counts[color]);
  for (ElementSet x : all) {
    if (graham_sloane_color(n, x) == color) out.push_back(x);
  }
  return out;
}

std::vector<ElementSet> greedy_dominating_set(const JohnsonGraph& g) {
  if (g.r() <= 0 || g.r() >= g.n()) throw Error(ErrorCode::RankOutOfRange, "dominating set needs 0 < r < n");
  const std::size_t count = g.vertex_count();
  // gain[v] = undominated vertices in the closed neighborhood of v.
  std::vector<int> gain(count, g.degree() + 1);
  std::vector<char> dominated(count, 0);
  using Entry = std::pair<int, Vertex>;
  auto worse = [](const Entry& a, const Entry& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
  for (Vertex v = 0; v < count; ++v) heap.emplace(gain[v], v);

  std::vector<ElementSet> chosen;
  std::size_t remaining = count;
  std::vector<Vertex> around;
  std::vector<Vertex> around_u;
  while (remaining > 0) {
    auto [stored, v] = heap.top();
    heap.pop();
    // Gains only shrink, so a stale entry is re-queued with its true value.
    if (stored != gain[v]) {
      heap.emplace(gain[v], v);
      continue;
    }
    chosen.push_back(g.vertex_at(v));
    g.neighbors(v, around);
    around.push_back(v);
    for (Vertex u : around) {
      if (dominated[u]) continue;
      dominated[u] = 1;
      --remaining;
      g.neighbors(u, around_u);
      --gain[u];
      for (Vertex w : around_u) --gain[w];
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

ElementSet first_in_canonical_ordering(const JohnsonGraph& g, std::span<const ElementSet> available) {
  if (available.empty()) throw Error(ErrorCode::EmptyInput, "canonical ordering of an empty set");
  std::vector<ElementSet> sorted(available.begin(), available.end());
  std::sort(sorted.begin(), sorted.end());
  ElementSet best = sorted.front();
  int best_degree = -1;
  for (ElementSet x : sorted) {
    int degree = 0;
    for (ElementSet y : g.neighbors(x)) degree += std::binary_search(sorted.begin(), sorted.end(), y) ? 1 : 0;
    if (degree > best_degree) {
      best = x;
      best_degree = degree;
    }
  }
  return best;
}

namespace {

using Mask = unsigned __int128;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

int popcount(Mask m) {
  return std::popcount(static_cast<std::uint64_t>(m)) + std::popcount(static_cast<std::uint64_t>(m >> 64));
}

int lowest(Mask m) {
  const auto low = static_cast<std::uint64_t>(m);
  return low != 0 ? std::countr_zero(low) : 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
}

std::vector<Mask> adjacency_masks(const RegularGraphView& g, std::size_t limit, const char* what) {
  const std::size_t count = g.vertex_count();
  if (count > limit) {
    throw Error(ErrorCode::TooLarge, std::string(what) + " needs at most " + std::to_string(limit) +
                                         " vertices, got " + std::to_string(count));
  }
  std::vector<Mask> adj(count, 0);
  std::vector<Vertex> around;
  for (Vertex v = 0; v < count; ++v) {
    g.neighbors(v, around);
    for (Vertex u : around) adj[v] |= bit(u);
  }
  return adj;
}

class StableSetCounter {
 public:
  explicit StableSetCounter(std::vector<Mask> adj) : adj_(std::move(adj)) {}

  Mask count(Mask alive) {
    if (alive == 0) return 1;
    if (auto it = memo_.find(alive); it != memo_.end()) return it->second;

    // Split off the connected component of the lowest live vertex.
    const int start = lowest(alive);
    Mask component = bit(start);
    Mask frontier = component;
    while (frontier != 0) {
      const int v = lowest(frontier);
      frontier &= frontier - 1;
      const Mask fresh = adj_[v] & alive & ~component;
      component |= fresh;
      frontier |= fresh;
    }
    Mask result;
    if (component != alive) {
      result = count(component) * count(alive & ~component);
    } else {
      int best = start;
      int best_degree = -1;
      for (Mask rest = alive; rest != 0; rest &= rest - 1) {
        const int v = lowest(rest);
        const int degree = popcount(adj_[v] & alive);
        if (degree > best_degree) {
          best = v;
          best_degree = degree;
        }
      }
      if (best_degree == 0) {
        result = Mask{1} << popcount(alive);
      } else {
        result = count(alive & ~bit(best)) + count(alive & ~bit(best) & ~adj_[best]);
      }
    }
    if (memo_.size() < kMemoLimit) memo_.emplace(alive, result);
    return result;
  }

 private:
  static constexpr std::size_t kMemoLimit = std::size_t{1} << 21;

  struct MaskHash {
    std::size_t operator()(Mask m) const {
      const auto lo = static_cast<std::uint64_t>(m);
      const auto hi = static_cast<std::uint64_t>(m >> 64);
      return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
    }
  };

  std::vector<Mask> adj_;
  std::unordered_map<Mask, Mask, MaskHash> memo_;
};

class MaxStableSearch {
 public:
  explicit MaxStableSearch(std::vector<Mask> adj) : adj_(std::move(adj)) {}

  int run(Mask alive) {
    expand(alive, 0);
    return best_;
  }

 private:
  // Greedy clique cover: a stable set takes at most one vertex per clique.
  int clique_cover_bound(Mask alive) const {
    int cliques = 0;
    while (alive != 0) {
      Mask clique_candidates = alive;
      while (clique_candidates != 0) {
        const int v = lowest(clique_candidates);
        alive &= ~bit(v);
        clique_candidates &= adj_[v] & alive;
      }
      ++cliques;
    }
    return cliques;
  }

  void expand(Mask alive, int size) {
    if (alive == 0) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + popcount(alive) <= best_) return;
    if (size + clique_cover_bound(alive) <= best_) return;
    int pick = lowest(alive);
    int pick_degree = -1;
    for (Mask rest = alive; rest != 0; rest &= rest - 1) {
      const int v = lowest(rest);
      const int degree = popcount(adj_[v] & alive);
      if (degree > pick_degree) {
        pick = v;
        pick_degree = degree;
      }
    }
    expand(alive & ~bit(pick) & ~adj_[pick], size + 1);
    if (pick_degree > 0) expand(alive & ~bit(pick), size);
  }

  std::vector<Mask> adj_;
  int best_ = 0;
};

Mask all_vertices(std::size_t count) { return count == 128 ? ~Mask{0} : bit(count) - 1; }

}  // namespace

int brute_max_stable_set(const RegularGraphView& g) {
  auto adj = adjacency_masks(g, 127, "maximum stable set search");
  const std::size_t count = adj.size();
  return MaxStableSearch(std::move(adj)).run(all_vertices(count));
}

mpz_class brute_count_stable_sets(const RegularGraphView& g) {
  auto adj = adjacency_masks(g, 127, "stable set counting");
  const std::size_t count = adj.size();
  Mask total = StableSetCounter(std::move(adj)).count(all_vertices(count));
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(total >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(total)));
  return (hi << 64) + lo;
}

}  // namespace flatcover
