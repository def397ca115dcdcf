#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "isokit/structures.hpp"

namespace isokit {
namespace cube {

// Sequence (s0, s1, ..., sk) of symbols of a host square; the word for an
// exponent vector e in {0,1}^k is s0 s1^e1 ... sk^ek with zero factors
// dropped before evaluation.
struct CubeSequence {
  std::vector<int> elements;

  int k() const { return static_cast<int>(elements.size()) - 1; }
};

// Total map plus, per source symbol, one exponent vector witnessing it.
struct CubeMap {
  std::vector<int> table;                    // symbol -> symbol, a bijection
  std::vector<std::vector<int>> witness;     // witness[g] = exponent vector with
                                             // cube_eval(L1, S, w) == g
};

int default_cap(int n);  // 2*ceil(log2 n) + 4
int max_cap(int n);      // 4*ceil(log2 n)
int ceil_log2(int n);

// Evaluates a word list under the pinned balanced parenthesization: pair up
// left-to-right at each level, an odd trailing element passes up unchanged.
int eval_word(const LatinSquare& l, const std::vector<int>& word);

// Word value for exponent vector e (|e| must equal S.k()).
int cube_eval(const LatinSquare& l, const CubeSequence& s, const std::vector<uint8_t>& e);

// Exact image set of cube_eval over all 2^k exponent vectors.
// Throws Error{cap_exceeded} when S.k() > cap (default: default_cap(n)).
std::set<int> cube_set(const LatinSquare& l, const CubeSequence& s, int cap = -1);

// Greedy seeded search for a cube generating sequence; exhaustive fallback
// for n <= 6. Result is post-verified to cover all n symbols and has
// k <= max_cap(n). Throws Error{not_found} when the trial budget ends.
CubeSequence find_cube_sequence(const LatinSquare& l, uint64_t seed, int trials = 16);

// True iff the pair set is a well-defined bijection between {0..size-1}
// carriers (total, single-valued, surjective).
bool is_bijection_relation(const std::vector<std::pair<int, int>>& pairs, int size_a, int size_b);

// Relation {(cube_eval(L1,S,e), cube_eval(L2,T,e))} over all e; returned as
// a CubeMap iff it is a bijection. Both S and T must generate their squares
// (Error{not_generating}) and have equal length (Error{length_mismatch}).
std::optional<CubeMap> extend_cube_map(const LatinSquare& l1, const LatinSquare& l2,
                                       const CubeSequence& s, const CubeSequence& t,
                                       int cap = -1);

}  // namespace cube
}  // namespace isokit
