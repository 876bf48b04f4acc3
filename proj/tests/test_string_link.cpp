#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "linkhom/string_link.hpp"
#include "test_util.hpp"

using namespace linkhom;
using testutil::rand_int;

namespace {

StringLink commutator(const BraidWord& a, const BraidWord& b) {
  return StringLink(compose(compose(a, b), compose(a.inverse(), b.inverse())));
}

// Borromean-style generator on 3 strands: strands 1 and 2 both loop strand 3,
// as a commutator, so every linking number vanishes.
StringLink triple_clasp() {
  return commutator(band_generator(3, 1, 3), band_generator(3, 2, 3));
}

// Deletes variable `index`: drops every term mentioning it and renumbers the
// higher indices down by one. Mirrors what strand deletion does to entries.
ReducedPolynomial drop_index(const ReducedPolynomial& p, int index) {
  ReducedPolynomial out(p.rank() - 1);
  for (const auto& [m, c] : p.terms()) {
    bool mentions = false;
    Monomial renamed;
    renamed.reserve(m.size());
    for (auto e : m) {
      if (e == index) {
        mentions = true;
        break;
      }
      renamed.push_back(e > index ? e - 1 : e);
    }
    if (!mentions) out.add_term(renamed, c);
  }
  return out;
}

}  // namespace

TEST_CASE("construction") {
  CHECK(StringLink::identity(3).components() == 3);
  CHECK(StringLink(band_generator(4, 1, 3)).components() == 4);
  try {
    StringLink bad(BraidWord(3, {2}));
    CHECK(false);
  } catch (const not_pure_error& e) {
    CHECK(std::string(e.what()).find("[1 3 2]") != std::string::npos);
  }
}

TEST_CASE("longitudes and entries of small links") {
  StringLink clasp(BraidWord(2, {1, 1}));
  CHECK(longitude(clasp, 1) == FreeWord(2, {1, 2}));
  CHECK(longitude(clasp, 2) == FreeWord(2, {1}));
  CHECK(longitude(StringLink::identity(3), 2) == FreeWord(3));

  InvariantVector v = invariants(clasp);
  ReducedPolynomial e1(2);
  e1.add_term({}, 1);
  e1.add_term({2}, 1);
  ReducedPolynomial e2(2);
  e2.add_term({}, 1);
  e2.add_term({1}, 1);
  CHECK(v.entry(1) == e1);
  CHECK(v.entry(2) == e2);
  CHECK_THROWS_AS(v.entry(0), argument_error);
  CHECK_THROWS_AS(v.entry(3), argument_error);

  for (int n = 1; n <= 4; ++n) {
    InvariantVector id = invariants(StringLink::identity(n));
    for (int i = 1; i <= n; ++i)
      CHECK(id.entry(i) == ReducedPolynomial::constant(n, 1));
  }
}

TEST_CASE("triple clasp invariants") {
  StringLink s = triple_clasp();
  // picking the unit from each x3 factor of the longitude leaves
  // (1+X1)(1+X2)(1-X1)(1-X2) = 1 + X1X2 - X2X1
  ReducedPolynomial expected(3);
  expected.add_term({}, 1);
  expected.add_term({1, 2}, 1);
  expected.add_term({2, 1}, -1);
  CHECK(invariants(s).entry(3) == expected);

  for (int i = 1; i < 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      CHECK(mu(s, {i, j}) == 0);
      CHECK(crossing_linking(s.rep(), i, j) == 0);
    }

  // the degree-2 coefficients are totally antisymmetric in the three labels
  CHECK(mu(s, {1, 2, 3}) == 1);
  CHECK(mu(s, {2, 3, 1}) == 1);
  CHECK(mu(s, {3, 1, 2}) == 1);
  CHECK(mu(s, {2, 1, 3}) == -1);
  CHECK(mu(s, {1, 3, 2}) == -1);
  CHECK(mu(s, {3, 2, 1}) == -1);
}

TEST_CASE("entry shape on random links") {
  auto g = testutil::rng(401);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rand_int(g, 1, 4);
    StringLink s(testutil::random_pure_braid(g, n, rand_int(g, 2, 8)));
    InvariantVector v = invariants(s);
    for (int i = 1; i <= n; ++i) {
      CHECK(v.entry(i).coefficient({}) == 1);
      for (const auto& [m, c] : v.entry(i).terms())
        CHECK(std::find(m.begin(), m.end(), i) == m.end());
    }
    // defining property of the longitude
    for (int i = 1; i <= n; ++i) {
      FreeWord lam = longitude(s, i);
      CHECK(lam * FreeWord::generator(n, i) * invert(lam) ==
            artin_image(s.rep(), i));
    }
  }
}

TEST_CASE("equality decision") {
  auto g = testutil::rng(402);
  StringLink clasp(BraidWord(2, {1, 1}));
  CHECK(link_homotopy_equal(clasp, clasp));
  CHECK_FALSE(link_homotopy_equal(clasp, StringLink::identity(2)));
  CHECK_FALSE(link_homotopy_equal(clasp, stack(clasp, clasp)));
  CHECK_FALSE(link_homotopy_equal(triple_clasp(), StringLink::identity(3)));
  CHECK_THROWS_AS(link_homotopy_equal(clasp, StringLink::identity(3)),
                  mismatch_error);
  CHECK_THROWS_AS(stack(clasp, StringLink::identity(3)), mismatch_error);

  for (int trial = 0; trial < 25; ++trial) {
    int n = rand_int(g, 2, 4);
    StringLink s(testutil::random_pure_braid(g, n, rand_int(g, 2, 8)));
    CHECK(link_homotopy_equal(s, s));
    CHECK(link_homotopy_equal(stack(s, inverse(s)), StringLink::identity(n)));
    CHECK(link_homotopy_equal(stack(inverse(s), s), StringLink::identity(n)));
    CHECK(link_homotopy_equal(stack(s, StringLink::identity(n)), s));
  }
}

TEST_CASE("degree-one coefficients are linking numbers") {
  auto g = testutil::rng(403);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rand_int(g, 2, 4);
    StringLink a(testutil::random_pure_braid(g, n, rand_int(g, 2, 8)));
    StringLink b(testutil::random_pure_braid(g, n, rand_int(g, 2, 8)));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        CHECK(mu(a, {i, j}) == Int(crossing_linking(a.rep(), i, j)));
        CHECK(mu(stack(a, b), {i, j}) == mu(a, {i, j}) + mu(b, {i, j}));
      }
  }
  StringLink clasp(BraidWord(2, {1, 1}));
  CHECK_THROWS_AS(mu(clasp, {1}), argument_error);
  CHECK_THROWS_AS(mu(clasp, {1, 1}), argument_error);
  CHECK_THROWS_AS(mu(clasp, {0, 2}), argument_error);
  CHECK_THROWS_AS(mu(clasp, {1, 3}), argument_error);
}

TEST_CASE("strand deletion on links") {
  StringLink s = triple_clasp();
  for (int i = 1; i <= 3; ++i)
    CHECK(link_homotopy_equal(delta_i(s, i), StringLink::identity(2)));
  CHECK(delta(s).size() == 3);

  // clasp on strands 1,2 with a spectator strand 3
  StringLink spect(BraidWord(3, {1, 1}));
  CHECK(link_homotopy_equal(delta_i(spect, 3), StringLink(BraidWord(2, {1, 1}))));
  CHECK(link_homotopy_equal(delta_i(spect, 1), StringLink::identity(2)));
  CHECK_THROWS_AS(delta_i(StringLink::identity(1), 1), argument_error);

  auto g = testutil::rng(404);
  for (int trial = 0; trial < 25; ++trial) {
    int n = rand_int(g, 2, 4);
    StringLink a(testutil::random_pure_braid(g, n, rand_int(g, 2, 8)));
    StringLink b(testutil::random_pure_braid(g, n, rand_int(g, 2, 8)));
    int i = rand_int(g, 1, n);
    CHECK(link_homotopy_equal(delta_i(stack(a, b), i),
                              stack(delta_i(a, i), delta_i(b, i))));
    // deletion acts on entries by dropping the variable and renumbering
    InvariantVector full = invariants(a);
    InvariantVector reduced = invariants(delta_i(a, i));
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      int jj = j > i ? j - 1 : j;
      CHECK(reduced.entry(jj) == drop_index(full.entry(j), i));
    }
  }
}

TEST_CASE("borromean recognition") {
  CHECK(is_borromean(StringLink::identity(1)));
  CHECK(is_borromean(StringLink::identity(4)));
  CHECK(is_borromean(StringLink(BraidWord(2, {1, 1}))));
  CHECK(is_borromean(triple_clasp()));
  CHECK_FALSE(is_borromean(StringLink(BraidWord(3, {1, 1}))));
  CHECK_FALSE(is_borromean(StringLink(band_generator(4, 2, 4))));
}

TEST_CASE("borromean basis order") {
  CHECK(borromean_basis(1).empty());
  CHECK(borromean_basis(2) == std::vector<Monomial>{{1}});
  CHECK(borromean_basis(3) == std::vector<Monomial>{{1, 2}});
  CHECK(borromean_basis(4) ==
        std::vector<Monomial>{{1, 2, 3}, {2, 1, 3}});
  std::vector<Monomial> b5 = borromean_basis(5);
  REQUIRE(b5.size() == 6);
  CHECK(b5.front() == Monomial{1, 2, 3, 4});
  CHECK(b5.back() == Monomial{3, 2, 1, 4});
  CHECK_THROWS_AS(borromean_basis(0), argument_error);
}

TEST_CASE("borromean coordinates") {
  CHECK(borromean_coordinates(StringLink::identity(1)).empty());
  CHECK(borromean_coordinates(StringLink::identity(3)) ==
        std::vector<Int>{0});
  CHECK(borromean_coordinates(StringLink(BraidWord(2, {1, 1}))) ==
        std::vector<Int>{1});

  StringLink c = triple_clasp();
  CHECK(borromean_coordinates(c) == std::vector<Int>{1});
  CHECK(borromean_coordinates(inverse(c)) == std::vector<Int>{-1});
  StringLink acc = c;
  for (int k = 2; k <= 4; ++k) {
    acc = stack(acc, c);
    CHECK(borromean_coordinates(acc) == std::vector<Int>{k});
  }
  CHECK_THROWS_AS(borromean_coordinates(StringLink(BraidWord(3, {1, 1}))),
                  domain_error);
}

TEST_CASE("two-component links are classified by one linking number") {
  std::vector<StringLink> pure;
  for (int len = 0; len <= 4; ++len)
    for (int bits = 0; bits < (1 << len); ++bits) {
      std::vector<BLetter> w(len);
      for (int q = 0; q < len; ++q) w[q] = (bits >> q) & 1 ? 1 : -1;
      BraidWord b(2, w);
      if (is_pure(b)) pure.emplace_back(b);
    }
  REQUIRE(pure.size() > 10);
  for (std::size_t a = 0; a < pure.size(); ++a)
    for (std::size_t b = a + 1; b < pure.size(); ++b)
      CHECK(link_homotopy_equal(pure[a], pure[b]) ==
            (mu(pure[a], {1, 2}) == mu(pure[b], {1, 2})));
}

TEST_CASE("first difference witnesses") {
  StringLink clasp(BraidWord(2, {1, 1}));
  auto w = first_difference(invariants(clasp), invariants(StringLink::identity(2)));
  REQUIRE(w.has_value());
  CHECK(w->strand == 2);
  CHECK(w->monomial == Monomial{1});
  CHECK(w->left == 1);
  CHECK(w->right == 0);

  CHECK_FALSE(first_difference(invariants(clasp), invariants(clasp)).has_value());

  // a degree-1 difference wins over any higher-degree one
  auto v = first_difference(invariants(StringLink(BraidWord(3, {1, 1}))),
                            invariants(triple_clasp()));
  REQUIRE(v.has_value());
  CHECK(v->monomial.size() == 1);
  CHECK_THROWS_AS(
      first_difference(invariants(clasp), invariants(StringLink::identity(3))),
      mismatch_error);
}
