#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linkhom/braid.hpp"
#include "test_util.hpp"

using namespace linkhom;
using testutil::rand_int;

TEST_CASE("parsing and formatting") {
  BraidWord b = parse_braid("n=3: s1 s2^-1");
  CHECK(b.strands() == 3);
  CHECK(b.letters() == std::vector<BLetter>{1, -2});
  CHECK(format(b) == "n=3: s1 s2^-1");

  CHECK(parse_braid("n=2:") == BraidWord(2));
  CHECK(format(BraidWord(2)) == "n=2:");
  CHECK(parse_braid("  n=2:  s1\n# trailing comment\n s1 # more\n") ==
        BraidWord(2, {1, 1}));
  CHECK(parse_braid("n=3: A1,3") == band_generator(3, 1, 3));
  CHECK(parse_braid("n=3: A1,3^-1") == band_generator(3, 1, 3).inverse());
  CHECK(parse_braid("n=4: A2,4 s1") ==
        compose(band_generator(4, 2, 4), BraidWord(4, {1})));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_braid(""), parse_error);
  CHECK_THROWS_AS(parse_braid("m=2:"), parse_error);
  CHECK_THROWS_AS(parse_braid("n=2 s1"), parse_error);
  CHECK_THROWS_AS(parse_braid("n=0:"), parse_error);
  CHECK_THROWS_AS(parse_braid("n=2: q1"), parse_error);
  CHECK_THROWS_AS(parse_braid("n=2: s1^2"), parse_error);
  CHECK_THROWS_AS(parse_braid("n=2: s"), parse_error);
  CHECK_THROWS_AS(parse_braid("n=2: A1,2,3"), parse_error);

  try {
    parse_braid("n=2: s1 s5");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.position == 8);  // byte offset of the offending token
  }
  try {
    parse_braid("n=3: A3,1");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("round-trip through text") {
  auto g = testutil::rng(301);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rand_int(g, 2, 5);
    BraidWord b = testutil::random_braid_word(g, n, rand_int(g, 0, 15));
    CHECK(parse_braid(format(b)) == b);
  }
}

TEST_CASE("underlying permutations") {
  CHECK(underlying_permutation(BraidWord(3)) == Permutation{1, 2, 3});
  CHECK(underlying_permutation(BraidWord(2, {1})) == Permutation{2, 1});
  CHECK(underlying_permutation(BraidWord(3, {1, 2})) == Permutation{3, 1, 2});
  CHECK(is_pure(BraidWord(2, {1, 1})));
  CHECK_FALSE(is_pure(BraidWord(2, {1})));
  CHECK(format_permutation(underlying_permutation(BraidWord(3, {1}))) == "[2 1 3]");

  auto g = testutil::rng(302);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rand_int(g, 2, 5);
    BraidWord a = testutil::random_braid_word(g, n, rand_int(g, 0, 10));
    BraidWord b = testutil::random_braid_word(g, n, rand_int(g, 0, 10));
    CHECK(underlying_permutation(compose(a, b)) ==
          testutil::compose_permutations(underlying_permutation(a),
                                         underlying_permutation(b)));
    CHECK(is_pure(compose(a, a.inverse())));
  }
}

TEST_CASE("band generators") {
  CHECK(band_generator(2, 1, 2) == BraidWord(2, {1, 1}));
  CHECK(band_generator(3, 1, 3) == BraidWord(3, {2, 1, 1, -2}));
  CHECK(band_generator(4, 2, 4) == BraidWord(4, {3, 2, 2, -3}));
  CHECK_THROWS_AS(band_generator(3, 2, 2), argument_error);
  CHECK_THROWS_AS(band_generator(3, 1, 4), argument_error);

  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        BraidWord a = band_generator(n, i, j);
        CHECK(is_pure(a));
        for (int p = 1; p < n; ++p)
          for (int q = p + 1; q <= n; ++q)
            CHECK(crossing_linking(a, p, q) ==
                  ((p == i && q == j) ? 1 : 0));
      }
}

TEST_CASE("meridian images under the braid action") {
  CHECK(artin_image(BraidWord(3), 2) == FreeWord::generator(3, 2));
  // two-step substitution by hand: x2 -> x1 -> x1 x2 x1^-1
  CHECK(artin_image(BraidWord(2, {1, 1}), 2) == FreeWord(2, {1, 2, -1}));
  // and the companion strand: x1 -> x1 x2 x1^-1 -> (x1 x2 x1^-1) x1 (x1 x2 x1^-1)^-1
  CHECK(artin_image(BraidWord(2, {1, 1}), 1) == FreeWord(2, {1, 2, 1, -2, -1}));
  CHECK(artin_image(BraidWord(2, {1}), 2) == FreeWord::generator(2, 1));
}

TEST_CASE("strand deletion") {
  BraidWord a13 = band_generator(3, 1, 3);
  CHECK(delete_strand(a13, 2) == BraidWord(2, {1, 1}));
  CHECK(delete_strand(a13, 1) == BraidWord(2, {1, -1}));
  CHECK(delete_strand(a13, 3) == BraidWord(2));
  CHECK_THROWS_AS(delete_strand(BraidWord(2, {1}), 1), not_pure_error);
  CHECK_THROWS_AS(delete_strand(BraidWord(2), 3), argument_error);

  auto g = testutil::rng(303);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rand_int(g, 3, 5);
    BraidWord a = testutil::random_pure_braid(g, n);
    BraidWord b = testutil::random_pure_braid(g, n);
    int i = rand_int(g, 1, n);
    CHECK(delete_strand(compose(a, b), i) ==
          compose(delete_strand(a, i), delete_strand(b, i)));
    CHECK(delete_strand(a.inverse(), i) == delete_strand(a, i).inverse());

    int j = rand_int(g, 1, n);
    if (j != i) {
      int jj = j > i ? j - 1 : j;
      int ii = i > j ? i - 1 : i;
      CHECK(delete_strand(delete_strand(a, i), jj) ==
            delete_strand(delete_strand(a, j), ii));
    }
  }
}

TEST_CASE("crossing linking numbers") {
  CHECK(crossing_linking(BraidWord(2, {1, 1}), 1, 2) == 1);
  CHECK(crossing_linking(BraidWord(2, {-1, -1}), 1, 2) == -1);
  CHECK(crossing_linking(BraidWord(3), 1, 3) == 0);
  CHECK_THROWS_AS(crossing_linking(BraidWord(2, {1}), 1, 2), not_pure_error);
  CHECK_THROWS_AS(crossing_linking(BraidWord(2, {1, 1}), 1, 1),
                  argument_error);

  try {
    crossing_linking(BraidWord(3, {1}), 1, 2);
    CHECK(false);
  } catch (const not_pure_error& e) {
    CHECK(std::string(e.what()).find("[2 1 3]") != std::string::npos);
  }

  auto g = testutil::rng(304);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rand_int(g, 2, 5);
    BraidWord a = testutil::random_pure_braid(g, n);
    BraidWord b = testutil::random_pure_braid(g, n);
    int i = rand_int(g, 1, n), j = rand_int(g, 1, n);
    if (i == j) continue;
    CHECK(crossing_linking(a, i, j) == crossing_linking(a, j, i));
    CHECK(crossing_linking(compose(a, b), i, j) ==
          crossing_linking(a, i, j) + crossing_linking(b, i, j));
    CHECK(crossing_linking(a.inverse(), i, j) == -crossing_linking(a, i, j));
    // stable under class-preserving rewrites
    BraidWord moved = a;
    for (int m = 0; m < 6; ++m) moved = testutil::rewrite_once(g, moved);
    CHECK(crossing_linking(moved, i, j) == crossing_linking(a, i, j));
  }
}
