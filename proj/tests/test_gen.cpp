#include <doctest.h>

#include <isokit/designs.hpp>
#include <isokit/gen.hpp>
#include <isokit/isotopy.hpp>

#include <set>

using namespace isokit;

TEST_CASE("group tables") {
  CHECK(gen::group_square("Z2") == validate_latin_square({{0, 1}, {1, 0}}));
  CHECK(gen::group_square("Z2xZ2") ==
        validate_latin_square({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}));
  auto z4 = gen::group_square("Z4");
  CHECK(z4.at(1, 3) == 0);
  CHECK(z4.at(3, 3) == 2);

  // spec strings with spaces
  CHECK(gen::group_square("Z2 x Z4").order() == 8);
  CHECK_THROWS_AS(gen::group_square("A5"), Error);
  CHECK_THROWS_AS(gen::group_square("Z100"), Error);
}

TEST_CASE("D4 and Q8 are nonabelian groups of order 8") {
  for (const char* spec : {"D4", "Q8"}) {
    auto l = gen::group_square(spec);
    REQUIRE(l.order() == 8);
    // identity element 0, associativity, some non-commuting pair
    bool noncomm = false;
    for (int a = 0; a < 8; ++a) {
      CHECK(l.at(0, a) == a);
      CHECK(l.at(a, 0) == a);
      for (int b = 0; b < 8; ++b) {
        if (l.at(a, b) != l.at(b, a)) noncomm = true;
        for (int c = 0; c < 8; ++c) CHECK(l.at(l.at(a, b), c) == l.at(a, l.at(b, c)));
      }
    }
    CHECK(noncomm);
  }
  // D4 has 2 elements of order 4, Q8 has 6.
  auto order_of = [](const LatinSquare& l, int x) {
    int e = x, ord = 1;
    while (e != 0) {
      e = l.at(e, x);
      ++ord;
    }
    return ord;
  };
  int d4_four = 0, q8_four = 0;
  for (int x = 0; x < 8; ++x) {
    if (order_of(gen::group_square("D4"), x) == 4) ++d4_four;
    if (order_of(gen::group_square("Q8"), x) == 4) ++q8_four;
  }
  CHECK(d4_four == 2);
  CHECK(q8_four == 6);
}

TEST_CASE("random latin squares validate and vary") {
  CHECK(gen::random_latin_square(1, 3) == validate_latin_square({{0}}));
  for (int n : {2, 3, 5, 8, 13}) {
    for (uint64_t seed : {1u, 2u, 3u}) {
      auto l = gen::random_latin_square(n, seed);
      CHECK(l.order() == n);  // construction re-validates internally
    }
  }
  // Distinct seeds should explore distinct squares at moderate order.
  std::set<std::vector<int>> seen;
  for (uint64_t seed = 0; seed < 6; ++seed) seen.insert(gen::random_latin_square(6, seed).cells());
  CHECK(seen.size() >= 5);
}

TEST_CASE("order-5 walk reaches both main classes") {
  // Order 5 has two main classes; a seed batch must witness both.
  auto reference = gen::random_latin_square(5, 0);
  bool found_other = false;
  for (uint64_t seed = 1; seed <= 12 && !found_other; ++seed) {
    auto l = gen::random_latin_square(5, seed);
    if (!iso::main_class_equivalent(reference, l).yes()) found_other = true;
  }
  CHECK(found_other);
}

TEST_CASE("sts constructions") {
  CHECK(gen::sts(9).block_count() == 12);  // v(v-1)/6
  CHECK_THROWS_AS(gen::sts(5), Error);
  CHECK_THROWS_AS(gen::sts(8), Error);
  for (int v : {3, 7, 9, 13, 15, 19, 21, 25}) {
    auto d = gen::sts(v);
    CHECK(d.v() == v);
    CHECK(d.block_count() == v * (v - 1) / 6);
  }
}

TEST_CASE("sts(7) is the Fano plane") {
  // The unique S(2,3,7), so any valid fixture must be isomorphic.
  auto fixture = validate_steiner_design(
      7, 2, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
  auto r = designs::sts_iso(gen::sts(7), fixture);
  CHECK(r.yes());
}

TEST_CASE("affine planes") {
  auto ag2 = gen::affine_plane(2);
  CHECK(ag2.order() == 2);
  CHECK(ag2.degree() == 3);
  CHECK(ag2.all_lines().size() == 6);
  auto ag3 = gen::affine_plane(3);
  CHECK(ag3.all_lines().size() == 12);
  CHECK_THROWS_AS(gen::affine_plane(4), Error);
  CHECK_THROWS_AS(gen::affine_plane(17), Error);
}

TEST_CASE("s348 is the Steiner (3,4,8)-design") {
  auto d = gen::s348();
  CHECK(d.v() == 8);
  CHECK(d.t() == 3);
  CHECK(d.k() == 4);
  CHECK(d.block_count() == 14);
  // Exhaustive: all C(8,3) = 56 triples in exactly one block (the validator
  // checked this already; recount independently).
  int covered = 0;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int c = b + 1; c < 8; ++c) {
        int hits = 0;
        for (const auto& blk : d.blocks()) {
          std::set<int> s(blk.begin(), blk.end());
          if (s.count(a) && s.count(b) && s.count(c)) ++hits;
        }
        CHECK(hits == 1);
        ++covered;
      }
  CHECK(covered == 56);
}

TEST_CASE("paley graphs") {
  auto c5 = gen::paley_conference(5);
  auto p = srg_check(c5);
  REQUIRE(p.has_value());
  CHECK(*p == SrgParams{5, 2, 0, 1});
  // Residues mod 5 are {1, 4}: the 5-cycle.
  CHECK(c5.adjacent(0, 1));
  CHECK(c5.adjacent(0, 4));
  CHECK(!c5.adjacent(0, 2));

  auto p13 = srg_check(gen::paley_conference(13));
  REQUIRE(p13.has_value());
  CHECK(*p13 == SrgParams{13, 6, 2, 3});

  CHECK_THROWS_AS(gen::paley_conference(7), Error);
  CHECK_THROWS_AS(gen::paley_conference(9), Error);
}

TEST_CASE("all latin squares counts") {
  CHECK(gen::all_latin_squares(1).size() == 1);
  CHECK(gen::all_latin_squares(2).size() == 2);
  CHECK(gen::all_latin_squares(3).size() == 12);
  CHECK(gen::all_latin_squares(4).size() == 576);
  CHECK_THROWS_AS(gen::all_latin_squares(5), Error);

  // Independent recount: column-major fill order yields the same set.
  for (int n : {2, 3, 4}) {
    auto row_major = gen::all_latin_squares(n);
    auto col_major = gen::all_latin_squares(n, true);
    REQUIRE(row_major.size() == col_major.size());
    std::set<std::vector<int>> a, b;
    for (const auto& l : row_major) a.insert(l.cells());
    for (const auto& l : col_major) b.insert(l.cells());
    CHECK(a == b);
  }
}
