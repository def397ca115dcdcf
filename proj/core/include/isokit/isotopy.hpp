#pragma once

#include <cstdint>
#include <functional>

#include "isokit/structures.hpp"

namespace isokit {
namespace iso {

enum class Method { cube, normal, both };

struct Budget {
  // Image enumeration is certified-exhaustive while the candidate count
  // stays under this bound; beyond it a capped search runs and a miss is
  // reported as unknown, never as a negative.
  long long exhaustive_limit = 100'000'000;
  long long node_limit = 50'000'000;
};

// Cube-sequence method: find cube generating sequences A, B in l1, search
// image sequences in l2 (pruned depth-first, complete unless capped), build
// phi_A/phi_B by word-table extension and accept when the derived relation
// phi_C = {(xy, phi_A(x) phi_B(y))} is a bijection.
SearchResult<Isotopy> isotopy_cube(const LatinSquare& l1, const LatinSquare& l2,
                                   uint64_t seed = 0, int trials = 16,
                                   Budget budget = {});

// Miller normal-form method: border-normalize l1 once, try all n^2 normal
// forms of l2, test quasigroup isomorphism of the normalized tables and
// recombine the permutations into an isotopy.
SearchResult<Isotopy> isotopy_normal_form(const LatinSquare& l1, const LatinSquare& l2,
                                          uint64_t seed = 0, int trials = 16,
                                          Budget budget = {});

SearchResult<Isotopy> isotopy(const LatinSquare& l1, const LatinSquare& l2, Method method,
                              uint64_t seed = 0, int trials = 16, Budget budget = {});

// Quasigroup isomorphism via cube generating sequences: a bijection phi with
// phi(xy) = phi(x) phi(y), verified over all n^2 pairs.
SearchResult<std::vector<int>> quasigroup_iso(const LatinSquare& l1, const LatinSquare& l2,
                                              uint64_t seed = 0, int trials = 16,
                                              Budget budget = {});

// Enumerates isomorphisms until the callback accepts one. Used by callers
// that must reject witnesses failing an outer condition (net extension).
// Returns yes as soon as the callback accepts; no when the enumeration is
// complete; unknown when capped.
SearchResult<std::vector<int>> for_each_quasigroup_iso(
    const LatinSquare& l1, const LatinSquare& l2,
    const std::function<bool(const std::vector<int>&)>& accept, uint64_t seed = 0,
    int trials = 16, Budget budget = {});

// Isotopy-witness enumeration (normal-form route). accept sees each witness;
// returning true stops the search and marks the result yes.
SearchResult<Isotopy> for_each_isotopy(const LatinSquare& l1, const LatinSquare& l2,
                                       const std::function<bool(const Isotopy&)>& accept,
                                       uint64_t seed = 0, int trials = 16,
                                       Budget budget = {});

struct MainClassResult {
  Verdict verdict = Verdict::unknown;
  int conjugate = -1;  // which of the 6 role permutations matched
  std::optional<Isotopy> witness;  // isotopy from the matching conjugate to l2

  bool yes() const { return verdict == Verdict::yes; }
};

// The six conjugates of a square: role permutations of (row, column, symbol)
// applied to the triple set {(r, c, L[r][c])}.
std::vector<LatinSquare> conjugates(const LatinSquare& l);

// True iff some conjugate of l1 is isotopic to l2 under the chosen method.
MainClassResult main_class_equivalent(const LatinSquare& l1, const LatinSquare& l2,
                                      Method method = Method::normal, uint64_t seed = 0,
                                      int trials = 16, Budget budget = {});

// Border normalization: returns the normalized square together with the
// isotopy that maps `l` onto it, choosing which cell takes the (0,0) role.
struct NormalForm {
  LatinSquare square;
  Isotopy to_normal;  // normalized = apply_isotopy(l, to_normal)
};
NormalForm normalize(const LatinSquare& l, int r0 = 0, int c0 = 0);

}  // namespace iso
}  // namespace isokit
