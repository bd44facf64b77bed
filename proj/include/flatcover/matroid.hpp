#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flatcover/element_set.hpp"

namespace flatcover {

/**
 * A matroid on {0, ..., n-1} given by its bases.
 *
 * The base list is kept strictly ascending by mask value, so two matroids
 * are equal exactly when their base lists are equal (labeled, no
 * isomorphism quotient). Instances are immutable once built and can only
 * be obtained through a validating factory.
 */
class Matroid {
 public:
  /// Validates the basis exchange axiom. Candidates may arrive in any order
  /// and with duplicates; throws EmptyFamily, WrongCardinality or
  /// ExchangeViolation.
  static Matroid from_bases(int n, int r, std::vector<ElementSet> candidates);

  /// Same checks without throwing; empty when the family is not a matroid.
  static std::optional<Matroid> try_from_bases(int n, int r, std::vector<ElementSet> candidates);

  /// U_{r,n}: every r-subset is a basis.
  static Matroid uniform(int r, int n);

  int ground_size() const { return n_; }
  int rank() const { return r_; }
  ElementSet ground_set() const { return ElementSet::full(n_); }
  const std::vector<ElementSet>& bases() const { return bases_; }

  bool is_basis(ElementSet x) const;

  /// Largest |B & X| over all bases B.
  int rank(ElementSet x) const;
  bool is_independent(ElementSet x) const { return rank(x) == x.size(); }
  ElementSet closure(ElementSet x) const;
  bool is_flat(ElementSet x) const { return closure(x) == x; }

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  Matroid(int n, int r, std::vector<ElementSet> sorted_bases)
      : n_(n), r_(r), bases_(std::move(sorted_bases)) {}

  int n_ = 0;
  int r_ = 0;
  std::vector<ElementSet> bases_;
};

/// A flat together with its rank, the unit of every certificate.
struct FlatWithRank {
  ElementSet flat;
  int rank = 0;

  auto operator<=>(const FlatWithRank&) const = default;
};

/// The flat certifies X dependent when |X & F| exceeds rank(F).
inline bool flat_covers_set(const FlatWithRank& f, ElementSet x) {
  return (x & f.flat).size() > f.rank;
}

/// Sorts by (flat mask, rank) and drops duplicates.
void canonicalize(std::vector<FlatWithRank>& flats);

/// Inclusion-minimal dependent sets in ascending mask order. Needs n <= 24.
std::vector<ElementSet> circuits(const Matroid& m);

/// All flats in ascending mask order. Needs n <= 24.
std::vector<ElementSet> flats(const Matroid& m);

/// The circuit inside an r-set of rank r-1.
ElementSet unique_circuit(const Matroid& m, ElementSet x);

Matroid dual(const Matroid& m);

bool is_paving(const Matroid& m);
bool is_sparse_paving(const Matroid& m);

/// Dependent r-sets, ascending.
std::vector<ElementSet> non_bases(const Matroid& m);

/// Closures of circuits with their ranks; a complete description of M.
using PiffCollection = std::vector<FlatWithRank>;

PiffCollection piff_encode(const Matroid& m);
Matroid piff_decode(int n, int r, std::span<const FlatWithRank> collection);

/// Non-bases with no neighboring non-basis in J(n, r): the circuit-hyperplanes.
std::vector<ElementSet> isolated_non_bases(const Matroid& m);

/// Promotes each member of `relaxed` to a basis. Every member must be an
/// isolated non-basis; requires 0 < r < n.
Matroid relax(const Matroid& m, std::span<const ElementSet> relaxed);

struct StrippedMatroid {
  Matroid relaxed;
  std::vector<ElementSet> circuit_hyperplanes;
};

/// Relaxes every circuit-hyperplane at once.
StrippedMatroid strip_circuit_hyperplanes(const Matroid& m);

// Text format v1:
//   matroid 1 <n> <r>
//   one line per basis, ascending element indices
void write_matroid(std::ostream& os, const Matroid& m);
Matroid read_matroid(std::istream& is);
std::string to_text(const Matroid& m);

/// Parses a whitespace-separated index list, checking every index is below n.
ElementSet parse_element_line(const std::string& line, int n);

}  // namespace flatcover
