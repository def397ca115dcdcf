#pragma once

#include <string>

#include "isokit/isotopy.hpp"
#include "isokit/structures.hpp"

namespace isokit {
namespace recover {

// Vertex (r, c) at index r*n + c; (a,b,c) ~ (x,y,z) iff same row, column, or
// symbol. SRG(n^2, 3(n-1), n, 6) for n >= 3.
Graph latin_square_graph(const LatinSquare& l);

// Recovers a square L' with latin_square_graph(L') isomorphic to g, by the
// clique-labeling procedure; every uniqueness assertion is checked and a
// violation raises Error{not_lsg} carrying the failing step, which doubles
// as a pseudo-graph rejector at small orders.
LatinSquare recover_latin_square(const Graph& g);

// Points adjacent iff they determine a line. SRG(n^2, k(n-1),
// n-2+(k-1)(k-2), k(k-1)).
Graph net_graph(const Net& net);

// Requires n > (k-1)^2: inside the common neighborhood of an edge the line
// clique is separated from the (k-1)^2 - 1 bounded-degree rest.
Net recover_net(const Graph& g, int n, int k);

// Vertex per block, edge iff the blocks intersect. For an STS on v points:
// SRG(v(v-1)/6, 3(v-3)/2, (v+3)/2, 9).
Graph block_graph(const SteinerDesign& d);

// Requires t = 2 and R - 2 > (k-1)^2 where R = (v-1)/(k-1). Points are
// recovered as the R-cliques of blocks through them.
SteinerDesign recover_steiner2(const Graph& g, int v, int k);

enum class Family { pseudo_lsg, pseudo_net, pseudo_sts, conference };

struct FamilyMatch {
  Family family;
  long n = 0;  // structure order (LSG/net: n; STS: v; conference: vertex count)
  long k = 0;  // net degree, when applicable
  bool threshold_known = false;  // conference graphs carry no genuineness bound
  bool threshold_met = false;
};

// Pattern-matches the four parameter families and reports whether the
// genuineness threshold holds (Bruck n > 23; net n > p(k-1); Bose > 67).
std::vector<FamilyMatch> pseudo_thresholds(const SrgParams& p);

// Bruck's polynomial p(x) = x^4/2 + x^3 + x^2 + 3x/2.
long bruck_polynomial(long x);

// Isomorphism of Latin square graphs: recover both squares and compare main
// classes; graphs that fail recovery fall back to the brute oracle when
// small enough, otherwise the recovery error propagates.
Verdict lsg_iso(const Graph& g, const Graph& h, uint64_t seed = 0, int trials = 16);

}  // namespace recover
}  // namespace isokit
