#include "flatcover/kw_encoder.hpp"

#include <algorithm>
#include <set>

#include "flatcover/error.hpp"

namespace flatcover {
namespace {

using Wide = __int128;

// Maintains G[A] with induced degrees and yields the canonical first vertex.
class AvailableSet {
 public:
  explicit AvailableSet(const RegularGraphView& g)
      : graph_(g),
        alive_(g.vertex_count(), 1),
        degree_(g.vertex_count(), g.degree()),
        buckets_(static_cast<std::size_t>(g.degree()) + 1),
        size_(g.vertex_count()),
        max_degree_(g.degree()) {
    auto& top = buckets_[static_cast<std::size_t>(g.degree())];
    for (Vertex v = 0; v < g.vertex_count(); ++v) top.insert(top.end(), v);
  }

  std::size_t size() const { return size_; }

  Vertex first() {
    while (buckets_[static_cast<std::size_t>(max_degree_)].empty()) --max_degree_;
    return *buckets_[static_cast<std::size_t>(max_degree_)].begin();
  }

  int degree(Vertex v) const { return degree_[v]; }
  bool contains(Vertex v) const { return alive_[v] != 0; }

  void remove(Vertex v) {
    if (!alive_[v]) return;
    alive_[v] = 0;
    buckets_[static_cast<std::size_t>(degree_[v])].erase(v);
    --size_;
    graph_.neighbors(v, scratch_);
    for (Vertex u : scratch_) {
      if (!alive_[u]) continue;
      auto& bucket = buckets_[static_cast<std::size_t>(degree_[u])];
      bucket.erase(u);
      --degree_[u];
      buckets_[static_cast<std::size_t>(degree_[u])].insert(u);
    }
  }

  /// Removes v and its live neighbors; returns how many left A.
  std::size_t remove_closed_neighborhood(Vertex v) {
    std::vector<Vertex> around;
    graph_.neighbors(v, around);
    std::size_t removed = 1;
    remove(v);
    for (Vertex u : around) {
      if (alive_[u]) {
        remove(u);
        ++removed;
      }
    }
    return removed;
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(size_);
    for (Vertex v = 0; v < alive_.size(); ++v) {
      if (alive_[v]) out.push_back(v);
    }
    return out;
  }

 private:
  const RegularGraphView& graph_;
  std::vector<char> alive_;
  std::vector<int> degree_;
  std::vector<std::set<Vertex>> buckets_;
  std::size_t size_;
  int max_degree_;
  std::vector<Vertex> scratch_;
};

// |A| (d + lambda) > lambda N, with lambda = p / q.
bool above_threshold(const RegularGraphView& g, std::size_t available) {
  const Ratio lambda = g.smallest_eigenvalue_magnitude();
  const Wide p = lambda.numerator();
  const Wide q = lambda.denominator();
  return static_cast<Wide>(available) * (static_cast<Wide>(g.degree()) * q + p) >
         p * static_cast<Wide>(g.vertex_count());
}

template <typename Selects>
KWEncoding run_procedure(const RegularGraphView& g, Selects&& selects, std::vector<EncodeStep>* trace) {
  if (g.degree() <= 0) throw Error(ErrorCode::ZeroDegree, "the encoding procedure needs d > 0");
  AvailableSet available(g);
  KWEncoding out;
  if (trace) trace->clear();
  while (above_threshold(g, available.size())) {
    const Vertex v = available.first();
    const std::size_t before = available.size();
    const int induced = available.degree(v);
    std::size_t removed = 1;
    const bool chosen = selects(v);
    if (chosen) {
      out.selected.push_back(v);
      removed = available.remove_closed_neighborhood(v);
    } else {
      available.remove(v);
    }
    if (trace) trace->push_back({before, v, induced, chosen, removed});
  }
  out.available = available.members();
  return out;
}

std::vector<char> membership(std::size_t count, std::span<const Vertex> members) {
  std::vector<char> in(count, 0);
  for (Vertex v : members) {
    if (v >= count) throw Error(ErrorCode::PreconditionViolated, "vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  return in;
}

}  // namespace

KWEncoding kw_encode(const RegularGraphView& g, std::span<const Vertex> k, std::vector<EncodeStep>* trace) {
  const auto in_k = membership(g.vertex_count(), k);
  return run_procedure(g, [&](Vertex v) { return in_k[v] != 0; }, trace);
}

std::vector<Vertex> reconstruct_available(const RegularGraphView& g, std::span<const Vertex> selected) {
  const auto in_s = membership(g.vertex_count(), selected);
  return run_procedure(g, [&](Vertex v) { return in_s[v] != 0; }, nullptr).available;
}

std::vector<Vertex> decode_stable_set(const RegularGraphView& g, std::span<const Vertex> selected,
                                      std::span<const Vertex> residual) {
  const auto available = reconstruct_available(g, selected);
  std::vector<Vertex> out(selected.begin(), selected.end());
  for (Vertex v : residual) {
    if (!std::binary_search(available.begin(), available.end(), v)) {
      throw Error(ErrorCode::ResidualOutsideA, "vertex " + g.label(v) + " is not available after replay");
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t edge_count(const RegularGraphView& g, std::span<const Vertex> subset) {
  const auto in = membership(g.vertex_count(), subset);
  std::vector<Vertex> around;
  std::uint64_t twice = 0;
  for (Vertex v = 0; v < in.size(); ++v) {
    if (!in[v]) continue;
    g.neighbors(v, around);
    for (Vertex u : around) twice += in[u] ? 1 : 0;
  }
  return twice / 2;
}

namespace {

mpq_class lambda_q(const RegularGraphView& g) {
  const Ratio lambda = g.smallest_eigenvalue_magnitude();
  return mpq_class(mpz_class(static_cast<long>(lambda.numerator())),
                   mpz_class(static_cast<long>(lambda.denominator())));
}

mpz_class to_mpz(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

}  // namespace

mpq_class alon_chung_bound(const RegularGraphView& g, std::size_t subset_size) {
  const mpz_class n = to_mpz(g.vertex_count());
  const mpz_class a = to_mpz(subset_size);
  mpq_class bound = mpq_class(a) * (mpq_class(g.degree() * a, n) - lambda_q(g) * mpq_class(n - a, n));
  bound.canonicalize();
  return bound;
}

mpq_class kw_alpha(const RegularGraphView& g) {
  const mpq_class lambda = lambda_q(g);
  mpq_class alpha = lambda / (lambda + g.degree());
  alpha.canonicalize();
  return alpha;
}

std::uint64_t available_bound(const RegularGraphView& g) {
  return floor_of(kw_alpha(g) * to_mpz(g.vertex_count())).get_ui();
}

Interval sigma_times_n(const RegularGraphView& g) {
  const Interval log_term = ln(mpz_class(g.degree() + 1));
  const mpq_class scale = mpq_class(to_mpz(g.vertex_count())) / (lambda_q(g) + g.degree());
  return log_term * enclose(scale);
}

std::uint64_t selected_bound(const RegularGraphView& g) {
  const mpq_class scale = mpq_class(to_mpz(g.vertex_count())) / (lambda_q(g) + g.degree());
  return ceil_ln_times(mpz_class(g.degree() + 1), scale).get_ui();
}

Interval count_bound_indsets(const RegularGraphView& g) {
  const mpz_class prefix = binomial_prefix_sum(g.vertex_count(), selected_bound(g));
  return log2(prefix) + enclose(kw_alpha(g) * to_mpz(g.vertex_count()));
}

}  // namespace flatcover
