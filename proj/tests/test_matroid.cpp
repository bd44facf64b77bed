#include <doctest.h>

#include <sstream>

#include "flatcover/error.hpp"
#include "flatcover/matroid.hpp"
#include "support/oracles.hpp"

using namespace flatcover;

namespace {

// Four elements, rank 2, every pair except {0,1} is a basis.
Matroid sole_non_basis() {
  std::vector<ElementSet> bases;
  for (ElementSet x : subsets_of_size(4, 2)) {
    if (x != ElementSet{0, 1}) bases.push_back(x);
  }
  return Matroid::from_bases(4, 2, bases);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("element sets") {
  const ElementSet x{0, 2, 5};
  CHECK(x.bits() == 0b100101);
  CHECK(x.size() == 3);
  CHECK(x.to_string() == "0 2 5");
  CHECK(ElementSet{}.to_string().empty());
  CHECK(x.complement(6) == ElementSet{1, 3, 4});
  CHECK(x.within(6));
  CHECK_FALSE(x.within(5));
  CHECK(x.first() == 0);

  const auto pairs = subsets_of_size(4, 2);
  std::vector<std::uint64_t> masks;
  for (ElementSet p : pairs) masks.push_back(p.bits());
  CHECK(masks == std::vector<std::uint64_t>{3, 5, 6, 9, 10, 12});
  CHECK(subsets_of_size(4, 0) == std::vector<ElementSet>{ElementSet{}});
  CHECK(subsets_of_size(3, 3).size() == 1);
  CHECK(subsets_of_size(20, 10).size() == 184756);
  CHECK(binomial(63, 31) == 916312070471295267ULL);
  CHECK(binomial(5, 7) == 0);
}

TEST_CASE("from_bases examples") {
  const Matroid u = Matroid::from_bases(4, 2, subsets_of_size(4, 2));
  CHECK(u == Matroid::uniform(2, 4));
  CHECK(u.bases().size() == 6);

  const Matroid m = sole_non_basis();
  CHECK(m.bases().size() == 5);

  try {
    Matroid::from_bases(4, 2, {ElementSet{0, 1}, ElementSet{2, 3}});
    FAIL("expected an exchange violation");
  } catch (const ExchangeViolation& v) {
    CHECK(v.code() == ErrorCode::ExchangeViolation);
    CHECK(v.b.contains(v.e));
    CHECK_FALSE(v.b_prime.contains(v.e));
    for (int f : (v.b_prime - v.b).elements()) {
      const ElementSet swapped = v.b.without(v.e).with(f);
      CHECK((swapped != ElementSet{0, 1} && swapped != ElementSet{2, 3}));
    }
  }

  CHECK(code_of([] { Matroid::from_bases(4, 2, {}); }) == ErrorCode::EmptyFamily);
  CHECK(code_of([] { Matroid::from_bases(4, 2, {ElementSet{0, 1, 2}}); }) == ErrorCode::WrongCardinality);
  CHECK(code_of([] { Matroid::from_bases(3, 1, {ElementSet{4}}); }) == ErrorCode::WrongCardinality);

  // Input order and duplicates do not matter.
  const Matroid shuffled = Matroid::from_bases(4, 2, {ElementSet{2, 3}, ElementSet{0, 2}, ElementSet{2, 3},
                                                      ElementSet{0, 3}, ElementSet{1, 2}, ElementSet{1, 3}});
  CHECK(shuffled == m);
  CHECK_FALSE(Matroid::try_from_bases(4, 2, {ElementSet{0, 1}, ElementSet{2, 3}}).has_value());
}

TEST_CASE("from_bases agrees with the pairwise exchange oracle") {
  for (auto [n, r] : {std::pair{4, 2}, {5, 2}, {5, 3}, {4, 1}, {4, 3}}) {
    const auto all = subsets_of_size(n, r);
    const std::uint64_t limit = std::uint64_t{1} << all.size();
    std::uint64_t accepted = 0;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      std::vector<ElementSet> family;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if ((mask >> i) & 1) family.push_back(all[i]);
      }
      const bool expected = oracle::exchange_holds(family);
      REQUIRE(Matroid::try_from_bases(n, r, family).has_value() == expected);
      accepted += expected ? 1 : 0;
    }
    CHECK(accepted == enumerate_matroids(n, r).size());
  }

  std::mt19937_64 rng(20240611);
  const auto all = subsets_of_size(6, 3);
  std::bernoulli_distribution keep(0.8);
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<ElementSet> family;
    for (ElementSet x : all) {
      if (keep(rng)) family.push_back(x);
    }
    REQUIRE(Matroid::try_from_bases(6, 3, family).has_value() == oracle::exchange_holds(family));
  }
}

TEST_CASE("rank and closure examples") {
  const Matroid u = Matroid::uniform(2, 4);
  CHECK(u.rank(ElementSet{0, 1, 2}) == 2);
  CHECK(u.rank(ElementSet{}) == 0);
  CHECK(u.closure(ElementSet{0}) == ElementSet{0});
  CHECK(u.closure(u.ground_set()) == u.ground_set());

  const Matroid m = sole_non_basis();
  CHECK(m.rank(ElementSet{0, 1}) == 1);
  CHECK(m.closure(ElementSet{0}) == ElementSet{0, 1});
  CHECK(m.closure(m.ground_set()) == m.ground_set());
  CHECK_FALSE(m.is_independent(ElementSet{0, 1}));
  CHECK(m.is_flat(ElementSet{0, 1}));
  CHECK_FALSE(m.is_flat(ElementSet{0}));
}

TEST_CASE("circuits, unique circuit and non-bases") {
  const Matroid u = Matroid::uniform(2, 4);
  CHECK(circuits(u) == subsets_of_size(4, 3));
  CHECK(non_bases(u).empty());

  const Matroid m = sole_non_basis();
  CHECK(circuits(m) == std::vector<ElementSet>{ElementSet{0, 1}, ElementSet{0, 2, 3}, ElementSet{1, 2, 3}});
  CHECK(non_bases(m) == std::vector<ElementSet>{ElementSet{0, 1}});
  CHECK(unique_circuit(m, ElementSet{0, 1}) == ElementSet{0, 1});

  CHECK(circuits(Matroid::uniform(4, 4)).empty());
  CHECK(non_bases(Matroid::uniform(0, 3)).empty());

  std::vector<ElementSet> bases;
  for (ElementSet x : subsets_of_size(5, 3)) {
    if (x != ElementSet{0, 1, 2}) bases.push_back(x);
  }
  const Matroid five = Matroid::from_bases(5, 3, bases);
  CHECK(unique_circuit(five, ElementSet{0, 1, 2}) == ElementSet{0, 1, 2});
  const auto five_circuits = oracle::circuits(five.bases(), 5);
  CHECK(std::find(five_circuits.begin(), five_circuits.end(), ElementSet{0, 1, 2}) != five_circuits.end());

  CHECK(code_of([&] { unique_circuit(u, ElementSet{0, 1}); }) == ErrorCode::PreconditionViolated);
  CHECK(code_of([&] { unique_circuit(m, ElementSet{0}); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("dual and paving examples") {
  const Matroid u = Matroid::uniform(2, 4);
  CHECK(dual(u) == u);
  CHECK(dual(Matroid::uniform(3, 3)) == Matroid::uniform(0, 3));
  CHECK(is_paving(u));
  CHECK(is_sparse_paving(u));

  const Matroid m = sole_non_basis();
  CHECK(is_paving(m));
  CHECK(is_sparse_paving(m));

  // Element 3 is a loop.
  const Matroid loop = Matroid::from_bases(4, 2, subsets_of_size(3, 2));
  CHECK_FALSE(is_paving(loop));
  CHECK_FALSE(is_sparse_paving(loop));
}

TEST_CASE("flat_covers_set") {
  const FlatWithRank f{ElementSet{0, 1}, 1};
  CHECK(flat_covers_set(f, ElementSet{0, 1}));
  CHECK_FALSE(flat_covers_set(f, ElementSet{0, 2}));
  const FlatWithRank whole{ElementSet::full(4), 2};
  for (ElementSet x : subsets_of_size(4, 2)) CHECK_FALSE(flat_covers_set(whole, x));
}

TEST_CASE("piff examples") {
  const Matroid u23 = Matroid::uniform(2, 3);
  CHECK(piff_encode(u23) == PiffCollection{{ElementSet{0, 1, 2}, 2}});
  const Matroid u24 = Matroid::uniform(2, 4);
  CHECK(piff_encode(u24) == PiffCollection{{ElementSet::full(4), 2}});
  const Matroid free3 = Matroid::uniform(3, 3);
  CHECK(piff_encode(free3).empty());
  CHECK(piff_decode(3, 3, {}) == free3);
  CHECK(piff_decode(5, 2, {}) == Matroid::uniform(2, 5));

  // Entries that decode to a non-matroid.
  const PiffCollection bad{{ElementSet{0, 1}, 1}, {ElementSet{2, 3}, 1}, {ElementSet{0, 2}, 1}, {ElementSet{1, 3}, 1}};
  CHECK(code_of([&] { piff_decode(4, 2, bad); }) == ErrorCode::InvalidCertificate);
}

TEST_CASE("relax and strip examples") {
  const Matroid m = sole_non_basis();
  CHECK(isolated_non_bases(m) == std::vector<ElementSet>{ElementSet{0, 1}});
  const auto stripped = strip_circuit_hyperplanes(m);
  CHECK(stripped.relaxed == Matroid::uniform(2, 4));
  CHECK(stripped.circuit_hyperplanes == std::vector<ElementSet>{ElementSet{0, 1}});

  const auto plain = strip_circuit_hyperplanes(Matroid::uniform(2, 4));
  CHECK(plain.relaxed == Matroid::uniform(2, 4));
  CHECK(plain.circuit_hyperplanes.empty());

  // {0,1} and {0,2} are adjacent non-bases, neither is isolated.
  const Matroid parallel = Matroid::from_bases(4, 2, {ElementSet{0, 3}, ElementSet{1, 3}, ElementSet{2, 3}});
  const std::vector<ElementSet> pair{ElementSet{0, 1}};
  CHECK(code_of([&] { relax(parallel, pair); }) == ErrorCode::NotIsolated);
  const std::vector<ElementSet> basis{ElementSet{0, 3}};
  CHECK(code_of([&] { relax(parallel, basis); }) == ErrorCode::NotIsolated);
  CHECK(code_of([&] { relax(Matroid::uniform(0, 3), {}); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("rank, closure and circuits match the oracles for every matroid on at most 5 elements") {
  for (int n = 0; n <= 5; ++n) {
    for (const Matroid& m : oracle::all_matroids(n)) {
      const std::uint64_t limit = std::uint64_t{1} << n;
      for (std::uint64_t x = 0; x < limit; ++x) {
        const ElementSet s(x);
        REQUIRE(m.rank(s) == oracle::rank(m.bases(), s));
        REQUIRE(m.closure(s) == oracle::closure(m.bases(), n, s));
      }
      REQUIRE(circuits(m) == oracle::circuits(m.bases(), n));
    }
  }
}

TEST_CASE("matroid axioms hold exhaustively for n <= 5") {
  for (int n = 0; n <= 5; ++n) {
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (const Matroid& m : oracle::all_matroids(n)) {
      const auto fl = flats(m);
      const Matroid d = dual(m);
      REQUIRE(dual(d) == m);
      REQUIRE(d.rank() == n - m.rank());
      for (std::uint64_t a = 0; a < limit; ++a) {
        const ElementSet x(a);
        for (std::uint64_t b = 0; b < limit; ++b) {
          const ElementSet y(b);
          REQUIRE(m.rank(x & y) + m.rank(x | y) <= m.rank(x) + m.rank(y));
        }
        const ElementSet cl = m.closure(x);
        REQUIRE(m.closure(cl) == cl);
        REQUIRE(m.rank(cl) == m.rank(x));
        bool covered = false;
        for (ElementSet f : fl) covered = covered || flat_covers_set({f, m.rank(f)}, x);
        REQUIRE(covered == !m.is_independent(x));
        REQUIRE(d.rank(x) == m.rank(x.complement(n)) - m.rank() + x.size());
      }
      REQUIRE(is_sparse_paving(m) == (is_paving(m) && is_paving(d)));
    }
  }
}

TEST_CASE("flats are exactly the closed sets") {
  for (const Matroid& m : oracle::all_matroids(4)) {
    std::vector<ElementSet> expected;
    for (std::uint64_t x = 0; x < 16; ++x) {
      if (oracle::closure(m.bases(), 4, ElementSet(x)) == ElementSet(x)) expected.push_back(ElementSet(x));
    }
    CHECK(flats(m) == expected);
  }
}

TEST_CASE("piff round trip and strip decomposition for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const double limit = std::ldexp(1.0, n + 1) / (n + 1);
    for (const Matroid& m : oracle::all_matroids(n)) {
      const auto k = piff_encode(m);
      REQUIRE(piff_decode(n, m.rank(), k) == m);
      REQUIRE(static_cast<double>(k.size()) <= limit);
      if (m.rank() == 0 || m.rank() == n) continue;
      const auto s = strip_circuit_hyperplanes(m);
      REQUIRE(isolated_non_bases(s.relaxed).empty());
      std::vector<ElementSet> restored = s.relaxed.bases();
      std::vector<ElementSet> expected = m.bases();
      for (ElementSet h : s.circuit_hyperplanes) {
        REQUIRE(std::binary_search(restored.begin(), restored.end(), h));
      }
      std::erase_if(restored, [&](ElementSet x) {
        return std::binary_search(s.circuit_hyperplanes.begin(), s.circuit_hyperplanes.end(), x);
      });
      REQUIRE(restored == expected);
      if (is_sparse_paving(m)) REQUIRE(s.relaxed == Matroid::uniform(m.rank(), n));
    }
  }
}

TEST_CASE("random sets on larger ground sets") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto stable = oracle::random_stable_set(8, 4, 0.5, rng);
    const Matroid m = oracle::sparse_paving_from(8, 4, stable);
    CHECK(is_sparse_paving(m));
    CHECK(non_bases(m) == stable);
    std::uniform_int_distribution<std::uint64_t> pick(0, 255);
    for (int k = 0; k < 200; ++k) {
      const ElementSet x(pick(rng));
      const ElementSet y(pick(rng));
      REQUIRE(m.rank(x & y) + m.rank(x | y) <= m.rank(x) + m.rank(y));
      REQUIRE(m.rank(x) == oracle::rank(m.bases(), x));
    }
    CHECK(strip_circuit_hyperplanes(m).relaxed == Matroid::uniform(4, 8));
  }
}

TEST_CASE("text format") {
  const Matroid m = sole_non_basis();
  const std::string text = to_text(m);
  CHECK(text == "matroid 1 4 2\n0 2\n1 2\n0 3\n1 3\n2 3\n");
  std::istringstream in("# comment\n\nmatroid 1 4 2\n2 3\n\n0 2\n# more\n1 2\n0 3\n1 3\n");
  CHECK(read_matroid(in) == m);

  const Matroid zero = Matroid::uniform(0, 3);
  CHECK(to_text(zero) == "matroid 1 3 0\n");
  std::istringstream zin(to_text(zero));
  CHECK(read_matroid(zin) == zero);

  std::istringstream bad_header("matroid 2 4 2\n");
  CHECK(code_of([&] { read_matroid(bad_header); }) == ErrorCode::Parse);
  std::istringstream bad_index("matroid 1 3 1\n5\n");
  CHECK(code_of([&] { read_matroid(bad_index); }) == ErrorCode::Parse);
  std::istringstream not_matroid("matroid 1 4 2\n0 1\n2 3\n");
  CHECK(code_of([&] { read_matroid(not_matroid); }) == ErrorCode::ExchangeViolation);
  CHECK(parse_element_line(" 3  1 ", 4) == ElementSet{1, 3});
  CHECK(code_of([] { parse_element_line("1 x", 4); }) == ErrorCode::Parse);
}
