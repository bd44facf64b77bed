#include <doctest.h>

#include <sstream>

#include "flatcover/codec.hpp"
#include "flatcover/error.hpp"
#include "flatcover/johnson.hpp"
#include "support/oracles.hpp"

using namespace flatcover;

namespace {

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

// Every non-basis among X and its neighbors is covered, and no flat covers a basis.
void check_local_cover(const Matroid& m, const LocalCover& cover) {
  const JohnsonGraph g(m.ground_size(), m.rank());
  auto targets = g.neighbors(cover.at);
  targets.push_back(cover.at);
  for (ElementSet y : targets) {
    if (m.is_basis(y)) continue;
    const bool hit = std::any_of(cover.flats.begin(), cover.flats.end(),
                                 [y](const FlatWithRank& f) { return flat_covers_set(f, y); });
    REQUIRE(hit);
  }
  for (const FlatWithRank& f : cover.flats) {
    REQUIRE(m.closure(f.flat) == f.flat);
    REQUIRE(m.rank(f.flat) == f.rank);
    for (ElementSet b : m.bases()) REQUIRE_FALSE(flat_covers_set(f, b));
  }
}

}  // namespace

TEST_CASE("local cover examples") {
  const Matroid u = Matroid::uniform(2, 4);
  const auto lu = local_cover_general(u, ElementSet{0, 1});
  CHECK(lu.flats == std::vector<FlatWithRank>{{ElementSet{0}, 1}, {ElementSet{1}, 1}});

  const Matroid m = sole_non_basis();
  const auto lg = local_cover_general(m, ElementSet{0, 2});
  CHECK(std::find(lg.flats.begin(), lg.flats.end(), FlatWithRank{ElementSet{0, 1}, 1}) != lg.flats.end());
  check_local_cover(m, lg);

  const auto ld = local_cover_dependent(m, ElementSet{0, 1});
  CHECK(ld.flats == std::vector<FlatWithRank>{{ElementSet{0, 1}, 1}});

  // Elements 0 and 1 are loops.
  const Matroid loops = Matroid::from_bases(4, 2, {ElementSet{2, 3}});
  const auto ll = local_cover_dependent(loops, ElementSet{0, 1});
  CHECK(ll.flats == std::vector<FlatWithRank>{{ElementSet{0, 1}, 0}});

  CHECK(code_of([&] { local_cover_dependent(u, ElementSet{0, 1}); }) == ErrorCode::NotDependent);
}

TEST_CASE("local covers are sound and complete for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Matroid& m : oracle::all_matroids(n)) {
      const int r = m.rank();
      for (ElementSet x : subsets_of_size(n, r)) {
        const auto general = local_cover_general(m, x);
        REQUIRE(static_cast<int>(general.flats.size()) <= r);
        check_local_cover(m, general);
        if (!m.is_basis(x)) {
          const auto dependent = local_cover_dependent(m, x);
          REQUIRE(dependent.flats.size() <= 2);
          check_local_cover(m, dependent);
        }
      }
    }
  }
}

TEST_CASE("encode examples") {
  const Matroid m = sole_non_basis();
  const auto detailed = encode_kw_detailed(m);
  const JohnsonGraph g(4, 2);
  CHECK(detailed.procedure.selected == std::vector<Vertex>{g.index_of(ElementSet{0, 1})});
  CHECK(detailed.procedure.available == std::vector<Vertex>{g.index_of(ElementSet{2, 3})});
  CHECK(detailed.certificate.cover == std::vector<FlatWithRank>{{ElementSet{0, 1}, 1}});
  CHECK(detailed.certificate.residual.empty());
  CHECK(decode(detailed.certificate) == m);

  const auto dom = encode_dominating(m);
  CHECK(dom.residual.empty());
  CHECK(std::find(dom.cover.begin(), dom.cover.end(), FlatWithRank{ElementSet{0, 1}, 1}) != dom.cover.end());
  CHECK(decode(dom) == m);

  const Matroid u = Matroid::uniform(2, 4);
  const auto ku = encode_kw(u);
  CHECK(ku.cover.empty());
  CHECK(ku.residual.empty());
  CHECK(decode(ku) == u);
  CHECK(decode(encode_dominating(u)) == u);

  CHECK(code_of([] { encode_kw(Matroid::uniform(3, 4)); }) == ErrorCode::RankOutOfRange);
  CHECK(code_of([] { encode_kw(Matroid::uniform(0, 4)); }) == ErrorCode::RankOutOfRange);
}

TEST_CASE("decode examples") {
  EncodedMatroid e{.n = 4, .r = 2, .method = EncodingMethod::KW, .dualized = false,
                   .cover = {{ElementSet{0, 1}, 1}}, .residual = {}};
  CHECK(decode(e) == sole_non_basis());
  e.cover.clear();
  CHECK(decode(e) == Matroid::uniform(2, 4));
  e.residual = subsets_of_size(4, 2);
  CHECK(code_of([&] { decode(e); }) == ErrorCode::InvalidCertificate);
  e.residual = {ElementSet{0, 1}, ElementSet{2, 3}, ElementSet{0, 2}, ElementSet{1, 3}};
  CHECK(code_of([&] { decode(e); }) == ErrorCode::InvalidCertificate);
  e.residual = {ElementSet{0, 1, 2}};
  CHECK(code_of([&] { decode(e); }) == ErrorCode::InvalidCertificate);
}

TEST_CASE("trivial ranks and dualization") {
  for (int n = 0; n <= 5; ++n) {
    for (int r : {0, n}) {
      const Matroid m = Matroid::uniform(r, n);
      for (auto method : {EncodingMethod::KW, EncodingMethod::Dominating}) {
        const auto e = encode(m, method);
        CHECK(e.cover.empty());
        CHECK(e.residual.empty());
        CHECK(e.r == r);
        CHECK(decode(e) == m);
      }
    }
  }
  std::vector<ElementSet> bases;
  for (ElementSet x : subsets_of_size(5, 3)) {
    if (x != ElementSet{0, 1, 2}) bases.push_back(x);
  }
  const Matroid high = Matroid::from_bases(5, 3, bases);
  const auto e = encode(high, EncodingMethod::KW);
  CHECK(e.dualized);
  CHECK(e.r == 3);
  CHECK(e.stored_rank() == 2);
  CHECK(decode(e) == high);
  CHECK_FALSE(encode(high, EncodingMethod::Dominating).dualized);
}

TEST_CASE("both codecs are lossless on every matroid with n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    for (const Matroid& m : oracle::all_matroids(n)) {
      for (auto method : {EncodingMethod::KW, EncodingMethod::Dominating}) {
        const auto e = encode(m, method);
        REQUIRE(decode(e) == m);
        std::istringstream in(to_text(e));
        REQUIRE(read_encoded(in) == e);
      }
      const int r = m.rank();
      if (r > 0 && 2 * r <= n) {
        const auto detailed = encode_kw_detailed(m);
        const JohnsonGraph g(n, r);
        REQUIRE(detailed.certificate.cover.size() <= 2 * selected_bound(g));
        REQUIRE(detailed.certificate.residual.size() <= available_bound(g));
      }
      if (r > 0 && r < n) {
        const auto dom = encode_dominating(m);
        REQUIRE(dom.cover.size() <= static_cast<std::size_t>(r) * greedy_dominating_set(JohnsonGraph(n, r)).size());
      }
    }
  }
}

TEST_CASE("random sparse paving matroids up to n = 12") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 6 + trial % 7;
    const int r = 2 + trial % (n / 2 - 1);
    const auto stable = oracle::random_stable_set(n, r, 0.3 + 0.1 * (trial % 7), rng);
    const Matroid m = oracle::sparse_paving_from(n, r, stable);
    const auto detailed = encode_kw_detailed(m);
    const JohnsonGraph g(n, r);
    REQUIRE(detailed.certificate.cover.size() <= 2 * selected_bound(g));
    REQUIRE(detailed.certificate.residual.size() <= available_bound(g));
    REQUIRE(decode(detailed.certificate) == m);
    REQUIRE(decode(encode_dominating(m)) == m);
    const Matroid d = dual(m);
    REQUIRE(decode(encode(d, EncodingMethod::KW)) == d);
  }
}

TEST_CASE("certificate text format") {
  const Matroid m = sole_non_basis();
  const auto e = encode_kw(m);
  CHECK(to_text(e) == "encmatroid 1 4 2 kw 0\nF 1 0 1\n");
  EncodedMatroid with_residual{.n = 4, .r = 2, .method = EncodingMethod::Dominating, .dualized = true,
                               .cover = {{ElementSet{}, 0}, {ElementSet{1, 2}, 1}}, .residual = {ElementSet{2, 3}}};
  const std::string text = to_text(with_residual);
  CHECK(text == "encmatroid 1 4 2 dominating 1\nF 0\nF 1 1 2\nN 2 3\n");
  std::istringstream in(text);
  CHECK(read_encoded(in) == with_residual);

  std::istringstream bad("encmatroid 1 4 2 zip 0\n");
  CHECK_THROWS_AS(read_encoded(bad), Error);
  std::istringstream bad_line("encmatroid 1 4 2 kw 0\nQ 1 2\n");
  CHECK(code_of([&] { read_encoded(bad_line); }) == ErrorCode::Parse);
  std::istringstream bad_flat("encmatroid 1 4 2 kw 0\nF 1 7\n");
  CHECK(code_of([&] { read_encoded(bad_flat); }) == ErrorCode::Parse);
  CHECK(parse_method("kw") == EncodingMethod::KW);
  CHECK(parse_method("dominating") == EncodingMethod::Dominating);
}

TEST_CASE("certificate size accounting") {
  const Matroid m = sole_non_basis();
  const auto e = encode_kw(m);
  const auto size = certificate_size(e, 1);
  CHECK(size.cover_bits == doctest::Approx(4 + std::log2(5.0)));
  CHECK(size.residual_bits == 0);
  CHECK(size.listing_bits == doctest::Approx(std::log2(6.0)));
  CHECK(size.bitmap_bits == 6);
}
