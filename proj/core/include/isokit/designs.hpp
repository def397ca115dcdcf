#pragma once

#include <cstdint>

#include "isokit/isotopy.hpp"
#include "isokit/structures.hpp"

namespace isokit {
namespace designs {

// Idempotent commutative quasigroup of a Steiner triple system:
// x*x = x and a*b = c for each block {a, b, c}. Throws Error{not_sts}.
LatinSquare sts_to_quasigroup(const SteinerDesign& d);

// Point bijection mapping blocks onto blocks, found through quasigroup_iso
// on the derived squares and verified directly against the block lists.
SearchResult<std::vector<int>> sts_iso(const SteinerDesign& d1, const SteinerDesign& d2,
                                       uint64_t seed = 0, int trials = 16,
                                       iso::Budget budget = {});

struct DerivedDesign {
  SteinerDesign design;
  std::vector<int> point_map;  // point_map[new_index] = original point
};

// Derived design at an ordered point subset A (|A| < t): points X \ A,
// blocks {B \ A : A is a proper subset of B}, renumbered ascending.
DerivedDesign derived_design(const SteinerDesign& d, const std::vector<int>& a);

// Steiner (t, t+1)-design isomorphism via the derived-design reduction:
// fix A = (0, ..., t-3) in d1, enumerate ordered B in d2, solve the derived
// STS isomorphism and lift. The lift is verified block-wise on d1, d2.
SearchResult<std::vector<int>> steiner_t_iso(const SteinerDesign& d1,
                                             const SteinerDesign& d2, uint64_t seed = 0,
                                             int trials = 16, iso::Budget budget = {});

// Net isomorphism. Degree <= 2 nets are determined by their parameters; for
// k >= 3, three parallel classes are converted to a Latin square per net and
// every isotopy witness is tested for extension to all kn lines.
SearchResult<std::vector<int>> net_iso(const Net& n1, const Net& n2, uint64_t seed = 0,
                                       int trials = 16, iso::Budget budget = {});

// Projective completion of an affine plane (k = n+1): one new point per
// parallel class plus the line at infinity.
SteinerDesign affine_to_projective(const Net& net);

// Removes block `line` and its points from a projective plane, regrouping
// the remaining lines into parallel classes (lines through a removed point
// become a class). Returns the affine net.
Net projective_to_affine(const SteinerDesign& d, int line);

}  // namespace designs
}  // namespace isokit
