#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace flatcover {

/// Largest ground set whose subsets fit one machine word.
inline constexpr int kMaxGroundSize = 63;

/**
 * A subset of the ground set {0, ..., n-1}, stored as a bitmask. The ground
 * set size is supplied by context (the owning matroid or graph); only bits
 * below it may be set.
 *
 * Ordering is by numeric mask value. That order is the fixed vertex order
 * used by every enumeration and by the encoding procedure.
 */
class ElementSet {
 public:
  using Word = std::uint64_t;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(Word bits) : bits_(bits) {}
  constexpr ElementSet(std::initializer_list<int> elements) {
    for (int e : elements) bits_ |= Word{1} << e;
  }

  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 64 ? ~Word{0} : (Word{1} << n) - 1);
  }
  static constexpr ElementSet singleton(int e) { return ElementSet(Word{1} << e); }

  constexpr Word bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool within(int n) const { return subset_of(full(n)); }

  /// Smallest element; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr ElementSet with(int e) const { return ElementSet(bits_ | (Word{1} << e)); }
  constexpr ElementSet without(int e) const { return ElementSet(bits_ & ~(Word{1} << e)); }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet operator^(ElementSet o) const { return ElementSet(bits_ ^ o.bits_); }

  /// Complement relative to a ground set of size n.
  constexpr ElementSet complement(int n) const { return full(n) - *this; }

  constexpr auto operator<=>(const ElementSet&) const = default;

  /// Elements in ascending order.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (Word w = bits_; w != 0; w &= w - 1) out.push_back(std::countr_zero(w));
    return out;
  }

  /// Space-separated ascending indices, e.g. "0 2 5"; empty string for the empty set.
  std::string to_string() const;

 private:
  Word bits_ = 0;
};

/// Next larger mask with the same popcount (Gosper's hack). Requires a nonzero mask.
constexpr ElementSet::Word next_same_size(ElementSet::Word x) {
  const ElementSet::Word c = x & (~x + 1);
  const ElementSet::Word r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

/// All k-subsets of {0..n-1} in ascending mask order.
std::vector<ElementSet> subsets_of_size(int n, int k);

/// Binomial coefficient in 64 bits; callers keep arguments within range (n <= 63).
constexpr std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(result);
}

}  // namespace flatcover
