#pragma once

#include <cstdint>
#include <string>

#include "isokit/structures.hpp"

namespace isokit {
namespace gen {

// Multiplication table of a named group under a fixed element ordering.
// Accepted specs: "Zn", products like "Z2xZ2" / "Z2 x Z4", "D4", "Q8".
// Throws Error{unknown_spec}; order capped at 64.
LatinSquare group_square(const std::string& spec);

// Seeded random square via the Jacobson–Matthews walk (10*n^3 proper steps
// starting from the cyclic square; an intercalate flip is exactly the walk
// move that keeps the square proper). Output is re-validated. n <= 64.
LatinSquare random_latin_square(int n, uint64_t seed);

// Steiner triple system: Bose construction for v = 3 (mod 6), Skolem
// construction for v = 1 (mod 6). Throws Error{inadmissible_order}.
SteinerDesign sts(int v);

// AG(2, q) as a net with k = q+1 parallel classes (slopes plus verticals).
// q prime, q <= 13.
Net affine_plane(int q);

// The Steiner (3,4,8)-design: points F_2^3, blocks all 4-sets summing to 0.
SteinerDesign s348();

// Paley graph on Z_q, q prime, q = 1 (mod 4), q <= 101: x ~ y iff x - y is
// a nonzero quadratic residue. srg_check yields conference parameters.
Graph paley_conference(int q);

// Every Latin square of order n exactly once (n <= 4; counts 1, 2, 12, 576).
// `column_major` fills cells in column-wise order instead; same set results
// (used as an independent recount in tests).
std::vector<LatinSquare> all_latin_squares(int n, bool column_major = false);

bool is_prime(int q);

}  // namespace gen
}  // namespace isokit
