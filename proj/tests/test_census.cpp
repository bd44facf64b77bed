#include <doctest.h>

#include <map>
#include <set>

#include "flatcover/census.hpp"
#include "flatcover/error.hpp"
#include "flatcover/johnson.hpp"
#include "support/oracles.hpp"

using namespace flatcover;

namespace {

std::set<std::vector<ElementSet>> base_lists(const std::vector<Matroid>& ms) {
  std::set<std::vector<ElementSet>> out;
  for (const Matroid& m : ms) out.insert(m.bases());
  return out;
}

}  // namespace

TEST_CASE("small rank counts") {
  CHECK(enumerate_matroids(4, 0).size() == 1);
  CHECK(enumerate_matroids(3, 1).size() == 7);
  CHECK(count_rank(4, 2) == 36);
  std::uint64_t total = 0;
  for (int r = 0; r <= 4; ++r) total += count_rank(4, r);
  CHECK(total == 68);
  // Rank 1: any nonempty family of singletons.
  for (int n = 1; n <= 6; ++n) CHECK(count_rank(n, 1) == (std::uint64_t{1} << n) - 1);
}

TEST_CASE("enumeration is sorted, duplicate free and agrees with the oracle filter") {
  for (auto [n, r] : {std::pair{4, 2}, {5, 2}, {5, 3}}) {
    const auto ms = enumerate_matroids(n, r);
    REQUIRE(std::is_sorted(ms.begin(), ms.end(), [](const Matroid& a, const Matroid& b) { return a.bases() < b.bases(); }));
    REQUIRE(base_lists(ms).size() == ms.size());
    const auto all = oracle::r_sets(n, r);
    std::size_t expected = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << all.size()); ++mask) {
      std::vector<ElementSet> family;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if ((mask >> i) & 1) family.push_back(all[i]);
      }
      expected += oracle::exchange_holds(family) ? 1 : 0;
    }
    CHECK(ms.size() == expected);
  }
}

TEST_CASE("plain and pruned strategies agree") {
  for (int n = 1; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      if (binomial(n, r) > 20) continue;
      const auto plain = enumerate_matroids(n, r, EnumerationStrategy::Plain);
      const auto pruned = enumerate_matroids(n, r, EnumerationStrategy::Pruned);
      REQUIRE(plain == pruned);
    }
  }
  CHECK(count_rank(6, 3, EnumerationStrategy::Pruned, 3) == 2053);
  CHECK(count_rank(6, 3, EnumerationStrategy::Pruned, 1) == 2053);
  CHECK_THROWS_AS(count_rank(7, 3, EnumerationStrategy::Plain), Error);
  CHECK_THROWS_AS(count_rank(8, 4, EnumerationStrategy::Pruned), Error);
}

TEST_CASE("census counts and duality") {
  const std::vector<std::uint64_t> labeled{1, 2, 5, 16, 68, 406, 3807};
  const std::vector<std::uint64_t> unlabeled{1, 2, 4, 8, 17, 38, 98};
  for (int n = 0; n <= 6; ++n) {
    const CensusResult c = count_matroids(n);
    CHECK(c.total_matroids == labeled[n]);
    REQUIRE(c.total_unlabeled.has_value());
    CHECK(*c.total_unlabeled == unlabeled[n]);
    mpz_class sum = 0, sp = 0;
    for (int r = 0; r <= n; ++r) {
      CHECK(c.matroid_counts[r] == c.matroid_counts[n - r]);
      CHECK(c.sparse_paving_counts[r] == c.sparse_paving_counts[n - r]);
      CHECK(c.unlabeled_counts[r] == c.unlabeled_counts[n - r]);
      CHECK(c.sparse_paving_counts[r] <= c.matroid_counts[r]);
      sum += c.matroid_counts[r];
      sp += c.sparse_paving_counts[r];
    }
    CHECK(sum == c.total_matroids);
    CHECK(sp == c.total_sparse_paving);
    CHECK(c.total_sparse_paving <= c.total_matroids);
  }
  CHECK(count_sparse_paving(4, 2) == 10);
  CHECK(count_sparse_paving(6, 3) == 271);
  CHECK(count_sparse_paving(5, 0) == 1);
}

TEST_CASE("job count does not change results") {
  CensusOptions one;
  one.unlabeled = false;
  CensusOptions four = one;
  four.jobs = 4;
  const auto a = count_matroids(5, one);
  const auto b = count_matroids(5, four);
  CHECK(a.matroid_counts == b.matroid_counts);
  CHECK_FALSE(a.total_unlabeled.has_value());

  std::vector<std::vector<ElementSet>> seen_one, seen_four;
  for_each_matroid(5, 2, [&](const Matroid& m) { seen_one.push_back(m.bases()); }, EnumerationStrategy::Pruned, 1);
  for_each_matroid(5, 2, [&](const Matroid& m) { seen_four.push_back(m.bases()); }, EnumerationStrategy::Pruned, 4);
  std::sort(seen_one.begin(), seen_one.end());
  std::sort(seen_four.begin(), seen_four.end());
  CHECK(seen_one == seen_four);
}

TEST_CASE("sparse paving bijection for n <= 6") {
  const JohnsonGraph j42(4, 2);
  CHECK(enumerate_sparse_paving(4, 2).size() == 10);
  CHECK(brute_count_stable_sets(j42) == 10);
  for (int n = 2; n <= 6; ++n) {
    for (int r = 1; r < n; ++r) {
      const auto sp = enumerate_sparse_paving(n, r);
      for (const Matroid& m : sp) REQUIRE(is_sparse_paving(m));
      std::vector<Matroid> filtered;
      for (const Matroid& m : enumerate_matroids(n, r)) {
        if (is_sparse_paving(m)) filtered.push_back(m);
      }
      REQUIRE(base_lists(filtered) == base_lists(sp));
      REQUIRE(mpz_class(static_cast<unsigned long>(sp.size())) == brute_count_stable_sets(JohnsonGraph(n, r)));
    }
  }
  CHECK_THROWS_AS(enumerate_sparse_paving(4, 0), Error);
  CHECK_THROWS_AS(enumerate_sparse_paving(9, 4), Error);
}

TEST_CASE("dual of the census of rank r is the census of rank n - r") {
  for (int n = 1; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      std::vector<Matroid> duals;
      for (const Matroid& m : enumerate_matroids(n, r)) duals.push_back(dual(m));
      REQUIRE(base_lists(duals) == base_lists(enumerate_matroids(n, n - r)));
    }
  }
}

TEST_CASE("canonical form is a relabeling invariant") {
  const Matroid m = Matroid::from_bases(4, 2, {ElementSet{0, 2}, ElementSet{0, 3}, ElementSet{1, 2}, ElementSet{1, 3}});
  const Matroid relabeled = Matroid::from_bases(4, 2, {ElementSet{0, 1}, ElementSet{0, 3}, ElementSet{2, 1}, ElementSet{2, 3}});
  CHECK(canonical_form(m) == canonical_form(relabeled));
  CHECK(canonical_form(m) != canonical_form(Matroid::uniform(2, 4)));
  std::map<std::vector<ElementSet>, int> classes;
  for (const Matroid& x : enumerate_matroids(4, 2)) ++classes[canonical_form(x)];
  CHECK(classes.size() == 7);
}
