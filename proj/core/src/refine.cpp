#include "isokit/refine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "isokit/gen.hpp"

namespace isokit {
namespace refine {

int Coloring::classes() const {
  std::set<int> c(colors.begin(), colors.end());
  return static_cast<int>(c.size());
}

bool Coloring::discrete() const { return classes() == static_cast<int>(colors.size()); }

namespace {

// Signature = (old color, neighbor colors as sorted multiset or set).
using Signature = std::pair<int, std::vector<int>>;

std::vector<int> canonical_ids(std::vector<Signature>& sigs) {
  std::vector<Signature> sorted(sigs);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> ids(sigs.size());
  for (size_t i = 0; i < sigs.size(); ++i)
    ids[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) -
                              sorted.begin());
  return ids;
}

// Rank-normalizes colors so equal inputs share ids across both graphs.
void normalize_initial(std::vector<int>& a, std::vector<int>& b) {
  std::vector<int> all(a);
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  auto rank = [&](int c) {
    return static_cast<int>(std::lower_bound(all.begin(), all.end(), c) - all.begin());
  };
  for (int& c : a) c = rank(c);
  for (int& c : b) c = rank(c);
}

Signature vertex_signature(const Graph& g, const std::vector<int>& colors, int u,
                           bool counting) {
  std::vector<int> nb;
  for (int v = 0; v < g.order(); ++v)
    if (g.adjacent(u, v)) nb.push_back(colors[v]);
  std::sort(nb.begin(), nb.end());
  if (!counting) nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  return {colors[u], std::move(nb)};
}

}  // namespace

std::vector<int> degree_coloring(const Graph& g) {
  std::vector<int> c(g.order());
  for (int u = 0; u < g.order(); ++u) c[u] = g.degree(u);
  return c;
}

std::vector<int> uniform_coloring(const Graph& g) {
  return std::vector<int>(g.order(), 0);
}

JointColoring color_refine_joint(const Graph& g, const Graph& h,
                                 const std::vector<int>& init_g,
                                 const std::vector<int>& init_h, int rounds,
                                 bool counting) {
  std::vector<int> cg(init_g), ch(init_h);
  normalize_initial(cg, ch);
  JointColoring out;
  out.left.colors = cg;
  out.right.colors = ch;
  out.left.history = {cg};
  out.right.history = {ch};

  int done = 0;
  while (rounds == kStable || done < rounds) {
    std::vector<Signature> sigs;
    sigs.reserve(g.order() + h.order());
    for (int u = 0; u < g.order(); ++u) sigs.push_back(vertex_signature(g, cg, u, counting));
    for (int u = 0; u < h.order(); ++u) sigs.push_back(vertex_signature(h, ch, u, counting));
    auto ids = canonical_ids(sigs);
    std::vector<int> ng(ids.begin(), ids.begin() + g.order());
    std::vector<int> nh(ids.begin() + g.order(), ids.end());

    auto count_classes = [](const std::vector<int>& a, const std::vector<int>& b) {
      std::set<int> s(a.begin(), a.end());
      s.insert(b.begin(), b.end());
      return s.size();
    };
    bool refined = count_classes(ng, nh) > count_classes(cg, ch);
    cg = std::move(ng);
    ch = std::move(nh);
    ++done;
    out.left.history.push_back(cg);
    out.right.history.push_back(ch);
    if (rounds == kStable && !refined) break;
  }
  out.left.colors = cg;
  out.right.colors = ch;
  out.left.round = out.right.round = done;
  return out;
}

Coloring color_refine(const Graph& g, const std::vector<int>& initial, int rounds,
                      bool counting) {
  Graph empty(0);
  auto joint = color_refine_joint(g, empty, initial, {}, rounds, counting);
  return joint.left;
}

bool is_distinguishing(const Graph& g, const std::vector<int>& s) {
  std::vector<char> in_s(g.order(), 0);
  for (int v : s) in_s[v] = 1;
  std::vector<std::vector<int>> traces;
  for (int u = 0; u < g.order(); ++u) {
    if (in_s[u]) continue;
    std::vector<int> trace;
    for (int v : s)
      if (g.adjacent(u, v)) trace.push_back(v);
    traces.push_back(std::move(trace));
  }
  std::sort(traces.begin(), traces.end());
  return std::adjacent_find(traces.begin(), traces.end()) == traces.end();
}

std::vector<int> find_distinguishing_set(const Graph& g, int target_size, uint64_t seed,
                                         int trials) {
  const int n = g.order();
  if (target_size < 0) {
    int t = static_cast<int>(std::ceil(4 * std::log2(std::max(2, n))));
    target_size = std::min(n, t);
  }
  target_size = std::min(target_size, n);

  std::mt19937_64 rng(seed);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (int t = 0; t < trials; ++t) {
    std::vector<int> pool(all);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> s(pool.begin(), pool.begin() + target_size);
    if (is_distinguishing(g, s)) return s;
  }

  // Greedy set cover over the unresolved outside pairs; total since S = V
  // distinguishes vacuously.
  std::vector<int> s;
  std::vector<char> in_s(n, 0);
  while (!is_distinguishing(g, s)) {
    int best = -1;
    long best_gain = -1;
    for (int w = 0; w < n; ++w) {
      if (in_s[w]) continue;
      long gain = 0;
      for (int u = 0; u < n; ++u) {
        if (in_s[u] || u == w) continue;
        for (int v = u + 1; v < n; ++v) {
          if (in_s[v] || v == w) continue;
          // Pair (u, v) currently unresolved?
          bool resolved = false;
          for (int x : s)
            if (g.adjacent(u, x) != g.adjacent(v, x)) {
              resolved = true;
              break;
            }
          if (!resolved && g.adjacent(u, w) != g.adjacent(v, w)) ++gain;
        }
      }
      // Removing w from the outside set resolves every pair containing it.
      if (gain > best_gain) {
        best_gain = gain;
        best = w;
      }
    }
    s.push_back(best);
    in_s[best] = 1;
  }
  return s;
}

std::vector<int> individualized_coloring(const Graph& g, const std::vector<int>& s) {
  std::vector<int> colors(g.order(), 0);
  for (size_t i = 0; i < s.size(); ++i) colors[s[i]] = static_cast<int>(i) + 1;
  return colors;
}

namespace {

std::optional<std::vector<int>> map_from_discrete(const Graph& g, const Graph& h,
                                                  const std::vector<int>& cg,
                                                  const std::vector<int>& ch) {
  if (g.order() != h.order()) return std::nullopt;
  std::map<int, int> color_to_h;
  for (int v = 0; v < h.order(); ++v)
    if (!color_to_h.emplace(ch[v], v).second) return std::nullopt;
  std::vector<int> phi(g.order(), -1);
  std::vector<char> used(h.order(), 0);
  for (int u = 0; u < g.order(); ++u) {
    auto it = color_to_h.find(cg[u]);
    if (it == color_to_h.end() || used[it->second]) return std::nullopt;
    phi[u] = it->second;
    used[it->second] = 1;
  }
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != h.adjacent(phi[u], phi[v])) return std::nullopt;
  return phi;
}

bool multisets_match(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  auto sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

}  // namespace

SearchResult<std::vector<int>> conference_iso(const Graph& g, const Graph& h,
                                              uint64_t seed, int trials,
                                              ConferenceOptions opts) {
  auto pg = srg_check(g);
  bool conf = false;
  if (pg) {
    long n = pg->n;
    conf = 2 * pg->k == n - 1 && 4 * pg->lambda == n - 5 && 4 * pg->mu == n - 1;
  }
  if (!conf) throw Error(errc::not_conference_graph, "g is not a conference graph");

  if (g.order() != h.order()) return SearchResult<std::vector<int>>::absent();
  if (opts.param_screen) {
    auto ph = srg_check(h);
    if (!ph || !(*ph == *pg)) return SearchResult<std::vector<int>>::absent();
  }

  // A sequence that discretizes g after two count-free rounds; verified, per
  // the contract, rather than trusting the distinguishing property.
  std::vector<int> s = find_distinguishing_set(g, opts.target_size, seed, trials);
  {
    auto c = color_refine(g, individualized_coloring(g, s), 2, false);
    while (!c.discrete()) {
      // Extend with the smallest vertex sharing a color (always terminates:
      // S = V(g) is discrete immediately).
      std::vector<char> in_s(g.order(), 0);
      for (int v : s) in_s[v] = 1;
      int pick = -1;
      for (int u = 0; u < g.order() && pick < 0; ++u)
        for (int v = u + 1; v < g.order() && pick < 0; ++v)
          if (!in_s[u] && !in_s[v] && c.colors[u] == c.colors[v]) pick = u;
      if (pick < 0) break;
      s.push_back(pick);
      c = color_refine(g, individualized_coloring(g, s), 2, false);
    }
  }

  const int m = static_cast<int>(s.size());
  long long nodes = 0;
  bool capped = false;
  std::vector<int> image;
  std::optional<std::vector<int>> witness;
  std::vector<char> used(h.order(), 0);

  // Candidate images for s_d are restricted to h-vertices whose joint color
  // matches s_d's; sound pruning, completeness preserved under enumeration.
  std::function<bool(int)> dfs = [&](int depth) -> bool {
    if (++nodes > opts.node_limit) {
      capped = true;
      return false;
    }
    std::vector<int> sg(s.begin(), s.begin() + depth);
    auto joint = color_refine_joint(g, h, individualized_coloring(g, sg),
                                    individualized_coloring(h, image), 2, false);
    if (!multisets_match(joint.left.colors, joint.right.colors)) return false;
    if (depth == m) {
      if (!joint.left.discrete() || !joint.right.discrete()) return false;
      auto phi = map_from_discrete(g, h, joint.left.colors, joint.right.colors);
      if (!phi) return false;
      witness = phi;
      return true;
    }
    int want = joint.left.colors[s[depth]];
    for (int v = 0; v < h.order(); ++v) {
      if (used[v] || joint.right.colors[v] != want) continue;
      used[v] = 1;
      image.push_back(v);
      if (dfs(depth + 1)) return true;
      image.pop_back();
      used[v] = 0;
      if (capped) return false;
    }
    return false;
  };
  dfs(0);

  if (witness) return SearchResult<std::vector<int>>::found(*witness);
  if (capped) return SearchResult<std::vector<int>>::undecided();
  return SearchResult<std::vector<int>>::absent();
}

SearchResult<std::vector<int>> individualize_and_refine(const Graph& g, const Graph& h,
                                                        int depth, bool counting) {
  if (g.order() != h.order()) return SearchResult<std::vector<int>>::absent();
  bool capped = false;
  std::optional<std::vector<int>> witness;

  std::function<bool(const std::vector<int>&, const std::vector<int>&, int)> rec =
      [&](const std::vector<int>& ig, const std::vector<int>& ih, int budget) -> bool {
    auto joint = color_refine_joint(g, h, ig, ih, kStable, counting);
    if (!multisets_match(joint.left.colors, joint.right.colors)) return false;
    if (joint.left.discrete()) {
      auto phi = map_from_discrete(g, h, joint.left.colors, joint.right.colors);
      if (!phi) return false;
      witness = phi;
      return true;
    }
    if (budget == 0) {
      capped = true;
      return false;
    }
    // Branch on the first non-singleton class: a fixed g-representative
    // against every h-vertex of the same color.
    std::map<int, int> count;
    for (int c : joint.left.colors) ++count[c];
    int u = -1;
    for (int v = 0; v < g.order() && u < 0; ++v)
      if (count[joint.left.colors[v]] > 1) u = v;
    int next_color = 1 + *std::max_element(joint.left.colors.begin(), joint.left.colors.end());
    for (int v = 0; v < h.order(); ++v) {
      if (joint.right.colors[v] != joint.left.colors[u]) continue;
      auto nig = joint.left.colors;
      auto nih = joint.right.colors;
      nig[u] = next_color;
      nih[v] = next_color;
      if (rec(nig, nih, budget - 1)) return true;
    }
    return false;
  };
  rec(uniform_coloring(g), uniform_coloring(h), depth);

  if (witness) return SearchResult<std::vector<int>>::found(*witness);
  if (capped) return SearchResult<std::vector<int>>::undecided();
  return SearchResult<std::vector<int>>::absent();
}

}  // namespace refine
}  // namespace isokit
