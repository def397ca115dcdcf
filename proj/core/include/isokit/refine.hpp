#pragma once

#include <cstdint>

#include "isokit/structures.hpp"

namespace isokit {
namespace refine {

// Vertex coloring with per-round history. Color ids are canonical: each
// round's signatures are sorted and ids assigned by rank, so colorings of
// jointly refined graphs are comparable.
struct Coloring {
  std::vector<int> colors;
  int round = 0;
  std::vector<std::vector<int>> history;  // history[r] = colors after round r

  int classes() const;
  bool discrete() const;
};

constexpr int kStable = -1;

// One-or-more rounds of Color Refinement; `rounds` = kStable runs until the
// induced partition stops refining. `counting` selects multiset signatures,
// otherwise the count-free set variant.
Coloring color_refine(const Graph& g, const std::vector<int>& initial, int rounds,
                      bool counting);

// Degree initialization chi_0(v) = deg(v); with a uniform start and counting
// refinement this is subsumed after one round.
std::vector<int> degree_coloring(const Graph& g);
std::vector<int> uniform_coloring(const Graph& g);

// Joint refinement of two graphs under a shared color-id space.
struct JointColoring {
  Coloring left, right;
};
JointColoring color_refine_joint(const Graph& g, const Graph& h,
                                 const std::vector<int>& init_g,
                                 const std::vector<int>& init_h, int rounds, bool counting);

// True iff every pair of vertices outside S has distinct S-neighborhoods.
bool is_distinguishing(const Graph& g, const std::vector<int>& s);

// Random subsets of size target_size (default ceil(4 log2 n), capped at n)
// until is_distinguishing accepts, then a greedy set-cover fallback that
// always terminates. Returns the vertex sequence.
std::vector<int> find_distinguishing_set(const Graph& g, int target_size = -1,
                                         uint64_t seed = 0, int trials = 64);

// Individualizes S: vertices of S get unique colors 1.., rest 0.
std::vector<int> individualized_coloring(const Graph& g, const std::vector<int>& s);

struct ConferenceOptions {
  int target_size = -1;
  long long node_limit = 1'000'000;
  bool param_screen = true;  // reject h early when srg parameters differ
};

// Conference-graph isomorphism: individualize a discretizing sequence S of g
// against guessed image sequences in h, run two count-free refinement
// rounds, and accept only color-matched discrete colorings whose induced map
// preserves adjacency both ways. g must be a conference graph
// (Error{not_conference_graph}); h is arbitrary.
SearchResult<std::vector<int>> conference_iso(const Graph& g, const Graph& h,
                                              uint64_t seed = 0, int trials = 64,
                                              ConferenceOptions opts = {});

// Generic individualize-and-refine backtracking: refine to stability, branch
// on the first non-singleton color class, prune on signature mismatch.
// Complete at the given depth; unknown only when the depth cap was hit.
SearchResult<std::vector<int>> individualize_and_refine(const Graph& g, const Graph& h,
                                                        int depth = 3,
                                                        bool counting = true);

}  // namespace refine
}  // namespace isokit
