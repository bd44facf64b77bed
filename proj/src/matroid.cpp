#include "flatcover/matroid.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "flatcover/error.hpp"

namespace flatcover {
namespace {

// Exhaustive tables are indexed by subset mask.
constexpr int kMaxTableGround = 24;

void require_table_size(int n, const char* what) {
  if (n > kMaxTableGround) {
    throw Error(ErrorCode::TooLarge, std::string(what) + " needs n <= " +
                                         std::to_string(kMaxTableGround) + ", got " +
                                         std::to_string(n));
  }
}

// covered[X] is true when some basis is a subset of X.
std::vector<bool> basis_below_table(int n, std::span<const ElementSet> bases) {
  std::vector<bool> covered(std::size_t{1} << n, false);
  for (ElementSet b : bases) covered[b.bits()] = true;
  for (int bit = 0; bit < n; ++bit) {
    const std::size_t step = std::size_t{1} << bit;
    for (std::size_t x = 0; x < covered.size(); ++x) {
      if ((x & step) != 0 && covered[x ^ step]) covered[x] = true;
    }
  }
  return covered;
}

// independent[X] is true when X lies inside some basis.
std::vector<bool> independence_table(const Matroid& m) {
  const int n = m.ground_size();
  std::vector<bool> indep(std::size_t{1} << n, false);
  for (ElementSet b : m.bases()) indep[b.bits()] = true;
  for (int bit = 0; bit < n; ++bit) {
    const std::size_t step = std::size_t{1} << bit;
    for (std::size_t x = 0; x < indep.size(); ++x) {
      if ((x & step) == 0 && indep[x | step]) indep[x] = true;
    }
  }
  return indep;
}

// For a basis B and e in B, the elements f outside B with B - e + f a basis.
ElementSet exchange_targets(std::span<const ElementSet> sorted, int n, ElementSet b, int e) {
  ElementSet targets;
  const ElementSet base = b.without(e);
  for (int f = 0; f < n; ++f) {
    if (b.contains(f)) continue;
    if (std::binary_search(sorted.begin(), sorted.end(), base.with(f))) targets = targets.with(f);
  }
  return targets;
}

struct Violation {
  ElementSet b;
  ElementSet b_prime;
  int e;
};

// A violation at (B, e) exists exactly when some basis B' avoids every
// element of targets(B, e) + e.
std::optional<Violation> find_exchange_violation(int n, std::span<const ElementSet> sorted) {
  const bool use_table = n <= 20;
  std::vector<bool> below;
  if (use_table) below = basis_below_table(n, sorted);
  const ElementSet ground = ElementSet::full(n);
  for (ElementSet b : sorted) {
    for (int e : b.elements()) {
      const ElementSet forbidden = exchange_targets(sorted, n, b, e).with(e);
      if (use_table && !below[(ground - forbidden).bits()]) continue;
      for (ElementSet other : sorted) {
        if ((other & forbidden).empty()) return Violation{b, other, e};
      }
    }
  }
  return std::nullopt;
}

bool valid_candidates(int n, int r, std::span<const ElementSet> candidates) {
  return std::all_of(candidates.begin(), candidates.end(),
                     [&](ElementSet c) { return c.size() == r && c.within(n); });
}

void sort_unique(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

}  // namespace

Matroid Matroid::from_bases(int n, int r, std::vector<ElementSet> candidates) {
  if (n < 0 || n > kMaxGroundSize || r < 0 || r > n) {
    throw Error(ErrorCode::PreconditionViolated,
                "need 0 <= r <= n <= 63, got n=" + std::to_string(n) + " r=" + std::to_string(r));
  }
  if (candidates.empty()) throw Error(ErrorCode::EmptyFamily, "no bases given");
  for (ElementSet c : candidates) {
    if (c.size() != r || !c.within(n)) {
      throw Error(ErrorCode::WrongCardinality,
                  "{" + c.to_string() + "} is not an " + std::to_string(r) + "-subset of the ground set");
    }
  }
  sort_unique(candidates);
  if (auto bad = find_exchange_violation(n, candidates)) throw ExchangeViolation(bad->b, bad->b_prime, bad->e);
  return Matroid(n, r, std::move(candidates));
}

std::optional<Matroid> Matroid::try_from_bases(int n, int r, std::vector<ElementSet> candidates) {
  if (n < 0 || n > kMaxGroundSize || r < 0 || r > n || candidates.empty()) return std::nullopt;
  if (!valid_candidates(n, r, candidates)) return std::nullopt;
  sort_unique(candidates);
  if (find_exchange_violation(n, candidates)) return std::nullopt;
  return Matroid(n, r, std::move(candidates));
}

Matroid Matroid::uniform(int r, int n) {
  if (n < 0 || n > kMaxGroundSize || r < 0 || r > n) {
    throw Error(ErrorCode::PreconditionViolated, "uniform matroid needs 0 <= r <= n <= 63");
  }
  return Matroid(n, r, subsets_of_size(n, r));
}

bool Matroid::is_basis(ElementSet x) const {
  return std::binary_search(bases_.begin(), bases_.end(), x);
}

int Matroid::rank(ElementSet x) const {
  const int cap = std::min(x.size(), r_);
  int best = 0;
  for (ElementSet b : bases_) {
    best = std::max(best, (b & x).size());
    if (best == cap) break;
  }
  return best;
}

ElementSet Matroid::closure(ElementSet x) const {
  const int base_rank = rank(x);
  ElementSet out = x;
  for (int e = 0; e < n_; ++e) {
    if (!x.contains(e) && rank(x.with(e)) == base_rank) out = out.with(e);
  }
  return out;
}

void canonicalize(std::vector<FlatWithRank>& flats) {
  std::sort(flats.begin(), flats.end());
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
}

std::vector<ElementSet> circuits(const Matroid& m) {
  const int n = m.ground_size();
  require_table_size(n, "circuit enumeration");
  const auto indep = independence_table(m);
  std::vector<ElementSet> out;
  for (std::size_t x = 1; x < indep.size(); ++x) {
    if (indep[x]) continue;
    bool minimal = true;
    for (std::size_t w = x; w != 0 && minimal; w &= w - 1) {
      minimal = indep[x & ~(w & (~w + 1))];
    }
    if (minimal) out.emplace_back(x);
  }
  return out;
}

std::vector<ElementSet> flats(const Matroid& m) {
  require_table_size(m.ground_size(), "flat enumeration");
  std::vector<ElementSet> out;
  const std::size_t count = std::size_t{1} << m.ground_size();
  for (std::size_t x = 0; x < count; ++x) {
    if (m.is_flat(ElementSet(x))) out.emplace_back(x);
  }
  return out;
}

ElementSet unique_circuit(const Matroid& m, ElementSet x) {
  if (x.size() != m.rank() || m.rank(x) != m.rank() - 1) {
    throw Error(ErrorCode::PreconditionViolated,
                "{" + x.to_string() + "} is not an r-set of rank r-1");
  }
  ElementSet c = x;
  for (int e : x.elements()) {
    const ElementSet smaller = c.without(e);
    if (!m.is_independent(smaller)) c = smaller;
  }
  return c;
}

Matroid dual(const Matroid& m) {
  std::vector<ElementSet> co;
  co.reserve(m.bases().size());
  for (ElementSet b : m.bases()) co.push_back(b.complement(m.ground_size()));
  std::sort(co.begin(), co.end());
  return Matroid::from_bases(m.ground_size(), m.ground_size() - m.rank(), std::move(co));
}

bool is_paving(const Matroid& m) {
  // Paving means every (r-1)-set is independent, i.e. lies inside a basis.
  if (m.rank() == 0) return true;
  std::vector<ElementSet> covered;
  covered.reserve(m.bases().size() * m.rank());
  for (ElementSet b : m.bases()) {
    for (int e : b.elements()) covered.push_back(b.without(e));
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  return covered.size() == binomial(m.ground_size(), m.rank() - 1);
}

bool is_sparse_paving(const Matroid& m) { return is_paving(m) && is_paving(dual(m)); }

std::vector<ElementSet> non_bases(const Matroid& m) {
  std::vector<ElementSet> out;
  for (ElementSet x : subsets_of_size(m.ground_size(), m.rank())) {
    if (!m.is_basis(x)) out.push_back(x);
  }
  return out;
}

PiffCollection piff_encode(const Matroid& m) {
  PiffCollection out;
  for (ElementSet c : circuits(m)) out.push_back({m.closure(c), c.size() - 1});
  canonicalize(out);
  return out;
}

Matroid piff_decode(int n, int r, std::span<const FlatWithRank> collection) {
  std::vector<ElementSet> bases;
  for (ElementSet x : subsets_of_size(n, r)) {
    const bool dependent = std::any_of(collection.begin(), collection.end(),
                                       [x](const FlatWithRank& f) { return flat_covers_set(f, x); });
    if (!dependent) bases.push_back(x);
  }
  try {
    return Matroid::from_bases(n, r, std::move(bases));
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidCertificate, e.what());
  }
}

namespace {

bool has_non_basis_neighbor(const Matroid& m, ElementSet x) {
  const ElementSet outside = x.complement(m.ground_size());
  for (int out : x.elements()) {
    for (int in : outside.elements()) {
      if (!m.is_basis(x.without(out).with(in))) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<ElementSet> isolated_non_bases(const Matroid& m) {
  std::vector<ElementSet> out;
  for (ElementSet x : non_bases(m)) {
    if (!has_non_basis_neighbor(m, x)) out.push_back(x);
  }
  return out;
}

Matroid relax(const Matroid& m, std::span<const ElementSet> relaxed) {
  if (m.rank() <= 0 || m.rank() >= m.ground_size()) {
    throw Error(ErrorCode::PreconditionViolated, "relaxation needs 0 < r < n");
  }
  std::vector<ElementSet> bases = m.bases();
  for (ElementSet x : relaxed) {
    if (x.size() != m.rank() || !x.within(m.ground_size()) || m.is_basis(x)) {
      throw Error(ErrorCode::NotIsolated, "{" + x.to_string() + "} is not a non-basis");
    }
    if (has_non_basis_neighbor(m, x)) {
      throw Error(ErrorCode::NotIsolated, "{" + x.to_string() + "} has a neighboring non-basis");
    }
    bases.push_back(x);
  }
  return Matroid::from_bases(m.ground_size(), m.rank(), std::move(bases));
}

StrippedMatroid strip_circuit_hyperplanes(const Matroid& m) {
  auto hyperplanes = isolated_non_bases(m);
  Matroid relaxed = relax(m, hyperplanes);
  return {std::move(relaxed), std::move(hyperplanes)};
}

void write_matroid(std::ostream& os, const Matroid& m) {
  os << "matroid 1 " << m.ground_size() << ' ' << m.rank() << '\n';
  // The rank-0 matroid's only basis is the empty set; it is implied by the header.
  if (m.rank() == 0) return;
  for (ElementSet b : m.bases()) os << b.to_string() << '\n';
}

std::string to_text(const Matroid& m) {
  std::ostringstream os;
  write_matroid(os, m);
  return os.str();
}

ElementSet parse_element_line(const std::string& line, int n) {
  std::istringstream in(line);
  ElementSet out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int e = -1;
    try {
      e = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || e < 0 || e >= n) {
      throw Error(ErrorCode::Parse, "bad element '" + token + "' for ground set of size " + std::to_string(n));
    }
    if (out.contains(e)) throw Error(ErrorCode::Parse, "repeated element " + token);
    out = out.with(e);
  }
  return out;
}

namespace {

bool skip_line(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

Matroid read_matroid(std::istream& is) {
  std::string line;
  int n = -1;
  int r = -1;
  while (std::getline(is, line)) {
    if (skip_line(line)) continue;
    std::istringstream header(line);
    std::string tag;
    int version = 0;
    if (!(header >> tag >> version >> n >> r) || tag != "matroid" || version != 1) {
      throw Error(ErrorCode::Parse, "expected 'matroid 1 <n> <r>', got '" + line + "'");
    }
    break;
  }
  if (n < 0 || n > kMaxGroundSize || r < 0 || r > n) throw Error(ErrorCode::Parse, "missing or invalid header");
  std::vector<ElementSet> bases;
  while (std::getline(is, line)) {
    if (skip_line(line)) continue;
    bases.push_back(parse_element_line(line, n));
  }
  if (r == 0) {
    if (!bases.empty()) throw Error(ErrorCode::Parse, "rank-0 matroid lists no bases");
    bases.emplace_back();
  }
  return Matroid::from_bases(n, r, std::move(bases));
}

}  // namespace flatcover
