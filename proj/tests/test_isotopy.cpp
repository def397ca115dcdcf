#include <doctest.h>

#include <isokit/gen.hpp>
#include <isokit/isotopy.hpp>
#include <isokit/oracle.hpp>

#include <random>

using namespace isokit;

namespace {

Isotopy random_isotopy(int n, std::mt19937_64& rng) {
  Isotopy iso = Isotopy::identity(n);
  std::shuffle(iso.alpha.begin(), iso.alpha.end(), rng);
  std::shuffle(iso.beta.begin(), iso.beta.end(), rng);
  std::shuffle(iso.gamma.begin(), iso.gamma.end(), rng);
  return iso;
}

}  // namespace

TEST_CASE("identity pairs are isotopic under both methods") {
  auto z3 = gen::group_square("Z3");
  auto rc = iso::isotopy_cube(z3, z3);
  auto rn = iso::isotopy_normal_form(z3, z3);
  REQUIRE(rc.yes());
  REQUIRE(rn.yes());
  CHECK(verify_isotopy(z3, z3, *rc.witness));
  CHECK(verify_isotopy(z3, z3, *rn.witness));
}

TEST_CASE("row swap is an isotopy") {
  auto z4 = gen::group_square("Z4");
  Isotopy swap01{{1, 0, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}};
  auto l2 = apply_isotopy(z4, swap01);
  for (auto method : {iso::Method::cube, iso::Method::normal}) {
    auto r = iso::isotopy(z4, l2, method);
    REQUIRE(r.yes());
    CHECK(verify_isotopy(z4, l2, *r.witness));
  }
}

TEST_CASE("symbol relabeling is an isotopy") {
  auto l = gen::random_latin_square(5, 21);
  std::mt19937_64 rng(4);
  Isotopy relabel = Isotopy::identity(5);
  std::shuffle(relabel.gamma.begin(), relabel.gamma.end(), rng);
  auto l2 = apply_isotopy(l, relabel);
  CHECK(iso::isotopy_normal_form(l, l2).yes());
  CHECK(iso::isotopy_cube(l, l2).yes());
}

TEST_CASE("Z4 vs Klein four is non-isotopic by every route") {
  auto z4 = gen::group_square("Z4");
  auto v4 = gen::group_square("Z2xZ2");
  CHECK(iso::isotopy_cube(z4, v4).no());
  CHECK(iso::isotopy_normal_form(z4, v4).no());
  CHECK(oracle::isotopy_brute(z4, v4).no());
  CHECK_THROWS_AS(iso::isotopy_cube(z4, gen::group_square("Z3")), Error);
}

TEST_CASE("methods agree with the oracle on order <= 5 samples") {
  std::mt19937_64 rng(12);
  std::vector<LatinSquare> pool;
  for (int n : {2, 3, 4, 5})
    for (uint64_t s = 0; s < 4; ++s) pool.push_back(gen::random_latin_square(n, s + 10 * n));
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      if (a.order() != b.order()) continue;
      auto vb = oracle::isotopy_brute(a, b).verdict;
      CHECK(iso::isotopy_cube(a, b).verdict == vb);
      CHECK(iso::isotopy_normal_form(a, b).verdict == vb);
    }
  }
}

TEST_CASE("random isotopes are always recognized") {
  std::mt19937_64 rng(77);
  for (int n : {4, 5, 6, 7}) {
    for (int rep = 0; rep < 3; ++rep) {
      auto l = gen::random_latin_square(n, rng());
      auto moved = apply_isotopy(l, random_isotopy(n, rng));
      auto r = iso::isotopy_normal_form(l, moved, rep);
      REQUIRE(r.yes());
      CHECK(verify_isotopy(l, moved, *r.witness));
    }
  }
}

TEST_CASE("quasigroup_iso basics") {
  auto z4 = gen::group_square("Z4");
  auto r = iso::quasigroup_iso(z4, z4);
  REQUIRE(r.yes());

  CHECK(iso::quasigroup_iso(z4, gen::group_square("Z2xZ2")).no());

  // Z5 relabeled by x -> 2x: the relabeled table is isomorphic.
  auto z5 = gen::group_square("Z5");
  std::vector<int> relabel(5);
  for (int x = 0; x < 5; ++x) relabel[x] = 2 * x % 5;
  auto moved = apply_isotopy(z5, Isotopy{relabel, relabel, relabel});
  auto rr = iso::quasigroup_iso(z5, moved);
  REQUIRE(rr.yes());
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      CHECK((*rr.witness)[z5.at(x, y)] == moved.at((*rr.witness)[x], (*rr.witness)[y]));
}

TEST_CASE("Albert property on group tables up to order 8") {
  // Isotopic groups are isomorphic, so the verdicts must coincide.
  std::vector<std::string> specs = {"Z1", "Z2", "Z3",    "Z4", "Z2xZ2", "Z5",
                                    "Z6", "Z7", "Z8",    "Z2xZ4", "Z2xZ2xZ2", "D4", "Q8"};
  for (const auto& sa : specs) {
    for (const auto& sb : specs) {
      auto a = gen::group_square(sa);
      auto b = gen::group_square(sb);
      if (a.order() != b.order()) continue;
      auto it = iso::isotopy_normal_form(a, b);
      auto qi = iso::quasigroup_iso(a, b);
      CHECK(it.verdict == qi.verdict);
    }
  }
}

TEST_CASE("main class equivalence") {
  auto z4 = gen::group_square("Z4");
  CHECK(iso::main_class_equivalent(z4, z4).yes());

  // Transpose is the (row, column) role swap.
  std::vector<int> cells(16);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) cells[c * 4 + r] = z4.at(r, c);
  auto transposed = validate_latin_square_flat(4, cells);
  auto mc = iso::main_class_equivalent(z4, transposed);
  CHECK(mc.yes());

  // All six conjugates of Z4 stay away from the Klein four-group.
  auto v4 = gen::group_square("Z2xZ2");
  for (const auto& conj : iso::conjugates(z4)) CHECK(oracle::isotopy_brute(conj, v4).no());
  CHECK(!iso::main_class_equivalent(z4, v4).yes());
}

TEST_CASE("conjugates are Latin and the identity conjugate is first") {
  auto l = gen::random_latin_square(6, 9);
  auto conj = iso::conjugates(l);
  REQUIRE(conj.size() == 6);
  CHECK(conj[0] == l);
}

TEST_CASE("normalize produces a bordered square with a verified isotopy") {
  auto l = gen::random_latin_square(7, 30);
  for (auto [r0, c0] : std::vector<std::pair<int, int>>{{0, 0}, {3, 5}, {6, 6}}) {
    auto nf = iso::normalize(l, r0, c0);
    for (int j = 0; j < 7; ++j) {
      CHECK(nf.square.at(0, j) == j);
      CHECK(nf.square.at(j, 0) == j);
    }
    CHECK(verify_isotopy(l, nf.square, nf.to_normal));
  }
}
