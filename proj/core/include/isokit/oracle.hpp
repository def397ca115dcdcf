#pragma once

#include "isokit/structures.hpp"

namespace isokit {
namespace oracle {

// Exhaustive engines with exact verdicts at desk scale. Every witness is
// re-verified against the definitional predicate before being returned.

// n <= 6. Backtracks over alpha row-by-row, deriving gamma constraints.
SearchResult<Isotopy> isotopy_brute(const LatinSquare& l1, const LatinSquare& l2);

// n <= 10. Permutation backtracking with degree pruning.
SearchResult<std::vector<int>> graph_iso_brute(const Graph& g, const Graph& h);

// v <= 15 (pair/block pruning). Witness maps blocks onto blocks.
SearchResult<std::vector<int>> design_iso_brute(const SteinerDesign& d1,
                                                const SteinerDesign& d2);

}  // namespace oracle
}  // namespace isokit
