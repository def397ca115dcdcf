#include "isokit/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace isokit {
namespace oracle {

namespace {

// Extends alpha one row at a time; beta is fixed per call, gamma is derived
// cell-by-cell and conflicts prune the branch.
bool complete_gamma(const LatinSquare& l1, const LatinSquare& l2,
                    const std::vector<int>& alpha, const std::vector<int>& beta,
                    std::vector<int>& gamma) {
  const int n = l1.order();
  gamma.assign(n, -1);
  std::vector<char> used(n, 0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      int src = l1.at(r, c);
      int dst = l2.at(alpha[r], beta[c]);
      if (gamma[src] < 0) {
        if (used[dst]) return false;
        gamma[src] = dst;
        used[dst] = 1;
      } else if (gamma[src] != dst) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

SearchResult<Isotopy> isotopy_brute(const LatinSquare& l1, const LatinSquare& l2) {
  const int n = l1.order();
  if (l2.order() != n) throw Error(errc::order_mismatch, "orders differ");
  if (n > 6) throw Error(errc::too_large, "isotopy_brute requires n <= 6");

  std::vector<int> alpha(n), beta(n), gamma;
  std::iota(alpha.begin(), alpha.end(), 0);
  do {
    std::iota(beta.begin(), beta.end(), 0);
    do {
      if (complete_gamma(l1, l2, alpha, beta, gamma)) {
        Isotopy iso{alpha, beta, gamma};
        if (verify_isotopy(l1, l2, iso)) return SearchResult<Isotopy>::found(iso);
      }
    } while (std::next_permutation(beta.begin(), beta.end()));
  } while (std::next_permutation(alpha.begin(), alpha.end()));
  return SearchResult<Isotopy>::absent();
}

SearchResult<std::vector<int>> graph_iso_brute(const Graph& g, const Graph& h) {
  const int n = g.order();
  if (h.order() != n) return SearchResult<std::vector<int>>::absent();
  if (n > 10) throw Error(errc::too_large, "graph_iso_brute requires n <= 10");
  if (g.edge_count() != h.edge_count()) return SearchResult<std::vector<int>>::absent();

  std::vector<int> gdeg(n), hdeg(n);
  for (int i = 0; i < n; ++i) gdeg[i] = g.degree(i), hdeg[i] = h.degree(i);
  {
    auto gs = gdeg, hs = hdeg;
    std::sort(gs.begin(), gs.end());
    std::sort(hs.begin(), hs.end());
    if (gs != hs) return SearchResult<std::vector<int>>::absent();
  }

  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> rec = [&](int u) -> bool {
    if (u == n) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v] || gdeg[u] != hdeg[v]) continue;
      bool ok = true;
      for (int w = 0; w < u && ok; ++w)
        if (g.adjacent(u, w) != h.adjacent(v, map[w])) ok = false;
      if (!ok) continue;
      map[u] = v;
      used[v] = 1;
      if (rec(u + 1)) return true;
      used[v] = 0;
      map[u] = -1;
    }
    return false;
  };
  if (!rec(0)) return SearchResult<std::vector<int>>::absent();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.adjacent(u, v) != h.adjacent(map[u], map[v]))
        throw Error(errc::not_found, "oracle self-check failed");
  return SearchResult<std::vector<int>>::found(map);
}

SearchResult<std::vector<int>> design_iso_brute(const SteinerDesign& d1,
                                                const SteinerDesign& d2) {
  if (d1.v() != d2.v() || d1.t() != d2.t() || d1.k() != d2.k() ||
      d1.block_count() != d2.block_count())
    return SearchResult<std::vector<int>>::absent();
  const int v = d1.v();
  if (v > 15) throw Error(errc::too_large, "design_iso_brute requires v <= 15");

  // Pair-coverage fingerprints prune hard for 2-designs; for t >= 3 the
  // pairwise co-block counts still constrain the search.
  auto pair_count = [v](const SteinerDesign& d) {
    std::vector<int> cnt(static_cast<size_t>(v) * v, 0);
    for (const auto& b : d.blocks())
      for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = i + 1; j < b.size(); ++j) {
          ++cnt[static_cast<size_t>(b[i]) * v + b[j]];
          ++cnt[static_cast<size_t>(b[j]) * v + b[i]];
        }
    return cnt;
  };
  auto pc1 = pair_count(d1), pc2 = pair_count(d2);

  std::set<std::vector<int>> blocks2(d2.blocks().begin(), d2.blocks().end());
  std::vector<int> map(v, -1);
  std::vector<char> used(v, 0);
  std::function<bool(int)> rec = [&](int p) -> bool {
    if (p == v) {
      for (const auto& b : d1.blocks()) {
        std::vector<int> img;
        for (int x : b) img.push_back(map[x]);
        std::sort(img.begin(), img.end());
        if (!blocks2.count(img)) return false;
      }
      return true;
    }
    for (int q = 0; q < v; ++q) {
      if (used[q]) continue;
      bool ok = true;
      for (int r = 0; r < p && ok; ++r)
        if (pc1[static_cast<size_t>(p) * v + r] != pc2[static_cast<size_t>(q) * v + map[r]])
          ok = false;
      if (!ok) continue;
      map[p] = q;
      used[q] = 1;
      if (rec(p + 1)) return true;
      used[q] = 0;
      map[p] = -1;
    }
    return false;
  };
  if (!rec(0)) return SearchResult<std::vector<int>>::absent();
  return SearchResult<std::vector<int>>::found(map);
}

}  // namespace oracle
}  // namespace isokit
