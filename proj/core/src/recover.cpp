#include "isokit/recover.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "isokit/oracle.hpp"

namespace isokit {
namespace recover {

Graph latin_square_graph(const LatinSquare& l) {
  const int n = l.order();
  Graph g(n * n);
  auto idx = [n](int r, int c) { return r * n + c; };
  for (int r1 = 0; r1 < n; ++r1)
    for (int c1 = 0; c1 < n; ++c1)
      for (int r2 = r1; r2 < n; ++r2)
        for (int c2 = (r2 == r1 ? c1 + 1 : 0); c2 < n; ++c2)
          if (r1 == r2 || c1 == c2 || l.at(r1, c1) == l.at(r2, c2))
            g.add_edge(idx(r1, c1), idx(r2, c2));
  return g;
}

namespace {

struct LsgFail {
  int step;
  std::string detail;
};

// Clique/outlier splits of the common neighborhood of an edge: S of size
// |C|-2 with S u {x1,x2} a clique and both leftovers non-adjacent to all of
// S. Ambiguity is possible at small orders; all splits are enumerated in
// deterministic order and the caller backtracks.
std::vector<std::pair<std::vector<int>, std::pair<int, int>>> edge_splits(
    const Graph& g, const std::vector<int>& common) {
  std::vector<std::pair<std::vector<int>, std::pair<int, int>>> out;
  const int m = static_cast<int>(common.size());
  for (int ui = 0; ui < m; ++ui) {
    for (int vi = ui + 1; vi < m; ++vi) {
      std::vector<int> s;
      for (int i = 0; i < m; ++i)
        if (i != ui && i != vi) s.push_back(common[i]);
      bool ok = true;
      for (size_t i = 0; i < s.size() && ok; ++i) {
        if (g.adjacent(common[ui], s[i]) || g.adjacent(common[vi], s[i])) ok = false;
        for (size_t j = i + 1; j < s.size() && ok; ++j)
          if (!g.adjacent(s[i], s[j])) ok = false;
      }
      if (ok) out.push_back({std::move(s), {common[ui], common[vi]}});
    }
  }
  return out;
}

// One recovery attempt for a fixed labeling seed; returns the square or the
// failing step.
std::optional<LatinSquare> try_recover(const Graph& g, int n, const std::vector<int>& fr,
                                       const std::vector<int>& fc, LsgFail& fail) {
  const int x1 = fr[0];
  std::vector<int> cells(static_cast<size_t>(n) * n, -1);
  auto cell = [&](int i, int j) -> int& { return cells[static_cast<size_t>(i) * n + j]; };
  for (int j = 0; j < n; ++j) cell(0, j) = j;
  for (int i = 1; i < n; ++i) cell(i, 0) = i;

  std::vector<char> labeled(g.order(), 0);
  for (int v : fr) labeled[v] = 1;
  for (int v : fc) labeled[v] = 1;

  for (int z = 0; z < g.order(); ++z) {
    if (labeled[z]) continue;
    std::vector<int> xadj, yadj;
    for (int j = 1; j < n; ++j)
      if (g.adjacent(z, fr[j])) xadj.push_back(j);
    for (int i = 1; i < n; ++i)
      if (g.adjacent(z, fc[i])) yadj.push_back(i);

    if (g.adjacent(z, x1)) {
      // Value edge to x1: z holds symbol 0 at the unique (row, column).
      if (xadj.size() != 1 || yadj.size() != 1) {
        fail = {6, "value-0 vertex without unique row/column"};
        return std::nullopt;
      }
      int i = yadj[0], j = xadj[0];
      if (cell(i, j) >= 0) {
        fail = {6, "cell written twice"};
        return std::nullopt;
      }
      cell(i, j) = 0;
      continue;
    }

    // z is adjacent to x_j (its column), y_i (its row), x_k and y_k (its
    // value); degenerate overlaps leave the diagonal to step 7.
    int i = -1, j = -1, k = -1;
    if (xadj.size() == 1 && yadj.size() == 1) {
      if (xadj[0] != yadj[0]) {
        fail = {6, "inconsistent singleton adjacency"};
        return std::nullopt;
      }
      continue;  // i = j = k: diagonal fixed point, deferred
    } else if (xadj.size() == 1 && yadj.size() == 2) {
      j = k = xadj[0];
      if (yadj[0] == k) i = yadj[1];
      else if (yadj[1] == k) i = yadj[0];
      else {
        fail = {6, "value index missing from row adjacency"};
        return std::nullopt;
      }
    } else if (xadj.size() == 2 && yadj.size() == 1) {
      i = k = yadj[0];
      if (xadj[0] == k) j = xadj[1];
      else if (xadj[1] == k) j = xadj[0];
      else {
        fail = {6, "value index missing from column adjacency"};
        return std::nullopt;
      }
    } else if (xadj.size() == 2 && yadj.size() == 2) {
      std::vector<int> common;
      std::set_intersection(xadj.begin(), xadj.end(), yadj.begin(), yadj.end(),
                            std::back_inserter(common));
      if (common.size() == 1) {
        k = common[0];
        j = xadj[0] == k ? xadj[1] : xadj[0];
        i = yadj[0] == k ? yadj[1] : yadj[0];
      } else if (common.size() == 2) {
        continue;  // diagonal cell with swapped role candidates, deferred
      } else {
        fail = {6, "no shared value index"};
        return std::nullopt;
      }
    } else {
      fail = {6, "adjacency counts out of range"};
      return std::nullopt;
    }
    if (cell(i, j) >= 0) {
      fail = {6, "cell written twice"};
      return std::nullopt;
    }
    cell(i, j) = k;
  }

  // Diagonal completion: each row gets the one value it is missing.
  for (int i = 1; i < n; ++i) {
    int missing_col = -1;
    std::vector<char> seen(n, 0);
    for (int j = 0; j < n; ++j) {
      if (cell(i, j) < 0) {
        if (missing_col >= 0) {
          fail = {7, "row with several unfilled cells"};
          return std::nullopt;
        }
        missing_col = j;
      } else {
        seen[cell(i, j)] = 1;
      }
    }
    if (missing_col >= 0) {
      int value = -1;
      for (int s = 0; s < n; ++s)
        if (!seen[s]) value = s;
      cell(i, missing_col) = value;
    }
  }

  try {
    return validate_latin_square_flat(n, cells);
  } catch (const Error&) {
    fail = {7, "completed table is not a Latin square"};
    return std::nullopt;
  }
}

}  // namespace

LatinSquare recover_latin_square(const Graph& g) {
  const int nn = g.order();
  int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(nn))));
  if (n * n != nn)
    throw Error(errc::not_lsg, "vertex count is not a perfect square", 0);
  if (n == 1) return validate_latin_square_flat(1, {0});

  // Lexicographically least edge.
  int x1 = -1, x2 = -1;
  for (int u = 0; u < nn && x1 < 0; ++u)
    for (int v = u + 1; v < nn && x1 < 0; ++v)
      if (g.adjacent(u, v)) {
        x1 = u;
        x2 = v;
      }
  if (x1 < 0) throw Error(errc::not_lsg, "graph has no edges", 1);

  std::vector<int> common;
  for (int v = 0; v < nn; ++v)
    if (v != x1 && v != x2 && g.adjacent(x1, v) && g.adjacent(x2, v)) common.push_back(v);
  if (static_cast<int>(common.size()) != n)
    throw Error(errc::not_lsg,
                "edge has " + std::to_string(common.size()) + " common neighbors, expected " +
                    std::to_string(n),
                1);

  LsgFail fail{1, "no clique split of the common neighborhood"};
  for (auto& [s, leftovers] : edge_splits(g, common)) {
    std::vector<int> fr{x1, x2};
    fr.insert(fr.end(), s.begin(), s.end());
    for (int y2 : {leftovers.first, leftovers.second}) {
      // Step 3: the n-clique on {x1, y2} gives the first column.
      std::vector<int> c2;
      for (int v = 0; v < nn; ++v)
        if (v != x1 && v != y2 && g.adjacent(x1, v) && g.adjacent(y2, v)) c2.push_back(v);
      if (static_cast<int>(c2.size()) != n) {
        fail = {3, "first-column edge has wrong common neighborhood"};
        continue;
      }
      for (auto& [s2, left2] : edge_splits(g, c2)) {
        if (std::find(s2.begin(), s2.end(), x2) != s2.end()) continue;
        // Step 4: reorder the column clique so x_i ~ y_i.
        std::vector<int> fc{x1, y2};
        fc.resize(n, -1);
        std::vector<char> taken(s2.size(), 0);
        bool ok = true;
        for (int i = 2; i < n && ok; ++i) {
          int match = -1;
          for (size_t idx = 0; idx < s2.size(); ++idx) {
            if (g.adjacent(fr[i], s2[idx])) {
              if (match >= 0) {
                ok = false;
                break;
              }
              match = static_cast<int>(idx);
            }
          }
          if (!ok || match < 0 || taken[match]) {
            ok = false;
            fail = {4, "row/column value matching is not a bijection"};
            break;
          }
          taken[match] = 1;
          fc[i] = s2[match];
        }
        if (!ok) continue;
        if (auto square = try_recover(g, n, fr, fc, fail)) return *square;
      }
    }
  }
  throw Error(errc::not_lsg, fail.detail, fail.step);
}

Graph net_graph(const Net& net) {
  const int n = net.order();
  Graph g(n * n);
  for (const auto& cls : net.classes())
    for (const auto& line : cls)
      for (size_t i = 0; i < line.size(); ++i)
        for (size_t j = i + 1; j < line.size(); ++j) g.add_edge(line[i], line[j]);
  return g;
}

Net recover_net(const Graph& g, int n, int k) {
  if (n <= (k - 1) * (k - 1))
    throw Error(errc::precondition_violated, "recover_net requires n > (k-1)^2");
  if (g.order() != n * n)
    throw Error(errc::not_net_graph, "vertex count != n^2");

  std::set<std::vector<int>> lines;
  for (auto [x1, x2] : g.edges()) {
    std::vector<int> h{x1, x2};
    for (int v = 0; v < g.order(); ++v)
      if (v != x1 && v != x2 && g.adjacent(x1, v) && g.adjacent(x2, v)) h.push_back(v);
    // Degree census inside H: the n line vertices see >= n-1 others, the
    // rest are bounded by (k-1)^2 - 1.
    std::vector<int> line;
    for (int u : h) {
      int deg = 0;
      for (int v : h)
        if (v != u && g.adjacent(u, v)) ++deg;
      if (deg >= n - 1) line.push_back(u);
      else if (deg > (k - 1) * (k - 1) - 1)
        throw Error(errc::not_net_graph, "neighborhood degree census out of bounds");
    }
    if (static_cast<int>(line.size()) != n)
      throw Error(errc::not_net_graph, "edge neighborhood clique is not an n-line");
    for (size_t i = 0; i < line.size(); ++i)
      for (size_t j = i + 1; j < line.size(); ++j)
        if (!g.adjacent(line[i], line[j]))
          throw Error(errc::not_net_graph, "recovered line is not a clique");
    std::sort(line.begin(), line.end());
    lines.insert(line);
  }
  if (static_cast<int>(lines.size()) != k * n)
    throw Error(errc::not_net_graph,
                "expected " + std::to_string(k * n) + " lines, found " +
                    std::to_string(lines.size()));
  try {
    return net_from_lines(n, k, {lines.begin(), lines.end()});
  } catch (const Error& e) {
    throw Error(errc::not_net_graph, std::string("line family invalid: ") + e.what());
  }
}

Graph block_graph(const SteinerDesign& d) {
  const int b = d.block_count();
  Graph g(b);
  for (int i = 0; i < b; ++i) {
    for (int j = i + 1; j < b; ++j) {
      const auto &bi = d.blocks()[i], &bj = d.blocks()[j];
      std::vector<int> meet;
      std::set_intersection(bi.begin(), bi.end(), bj.begin(), bj.end(),
                            std::back_inserter(meet));
      if (!meet.empty()) g.add_edge(i, j);
    }
  }
  return g;
}

namespace {

// Bron-Kerbosch with pivoting; reports maximal cliques of size exactly
// `target` to the callback.
void max_cliques(const Graph& g, int target,
                 const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> r;
  std::function<void(std::vector<int>, std::vector<int>)> bk =
      [&](std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) {
          if (static_cast<int>(r.size()) == target) emit(r);
          return;
        }
        int pivot = -1, best = -1;
        for (int u : p) {
          int cnt = 0;
          for (int v : p)
            if (g.adjacent(u, v)) ++cnt;
          if (cnt > best) {
            best = cnt;
            pivot = u;
          }
        }
        for (int u : x) {
          int cnt = 0;
          for (int v : p)
            if (g.adjacent(u, v)) ++cnt;
          if (cnt > best) {
            best = cnt;
            pivot = u;
          }
        }
        std::vector<int> cand;
        for (int u : p)
          if (pivot < 0 || !g.adjacent(pivot, u)) cand.push_back(u);
        for (int u : cand) {
          std::vector<int> np, nx;
          for (int v : p)
            if (g.adjacent(u, v)) np.push_back(v);
          for (int v : x)
            if (g.adjacent(u, v)) nx.push_back(v);
          r.push_back(u);
          bk(np, nx);
          r.pop_back();
          p.erase(std::find(p.begin(), p.end(), u));
          x.push_back(u);
        }
      };
  std::vector<int> p(g.order());
  for (int i = 0; i < g.order(); ++i) p[i] = i;
  bk(p, {});
}

}  // namespace

SteinerDesign recover_steiner2(const Graph& g, int v, int k) {
  if ((v - 1) % (k - 1) != 0)
    throw Error(errc::not_block_graph, "R = (v-1)/(k-1) is not an integer");
  const long R = (v - 1) / (k - 1);
  if (R - 2 <= static_cast<long>(k - 1) * (k - 1))
    throw Error(errc::precondition_violated, "recover_steiner2 requires R-2 > (k-1)^2");
  long b = static_cast<long>(v) * (v - 1) / (static_cast<long>(k) * (k - 1));
  if (g.order() != b)
    throw Error(errc::not_block_graph, "vertex count != v(v-1)/(k(k-1))");

  // Points are the R-cliques of blocks through them. Genuine stars pairwise
  // share at most one block; an R-clique crossing another in two blocks is
  // an impostor and is dropped when every edge it covers is also covered by
  // an undisputed star.
  std::vector<std::vector<int>> stars;
  max_cliques(g, static_cast<int>(R), [&](const std::vector<int>& c) {
    auto s = c;
    std::sort(s.begin(), s.end());
    stars.push_back(std::move(s));
  });
  std::sort(stars.begin(), stars.end());

  auto shares_two = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> meet;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
    return meet.size() >= 2;
  };
  std::vector<char> disputed(stars.size(), 0);
  for (size_t i = 0; i < stars.size(); ++i)
    for (size_t j = i + 1; j < stars.size(); ++j)
      if (shares_two(stars[i], stars[j])) disputed[i] = disputed[j] = 1;
  if (std::count(disputed.begin(), disputed.end(), 1) != 0) {
    // Keep a disputed clique only if it owns an edge no other candidate
    // covers; drop the rest and re-check consistency below.
    std::map<std::pair<int, int>, int> edge_cover;
    for (const auto& s : stars)
      for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) ++edge_cover[{s[i], s[j]}];
    std::vector<std::vector<int>> kept;
    for (size_t si = 0; si < stars.size(); ++si) {
      if (!disputed[si]) {
        kept.push_back(stars[si]);
        continue;
      }
      bool owns = false;
      for (size_t i = 0; i < stars[si].size() && !owns; ++i)
        for (size_t j = i + 1; j < stars[si].size() && !owns; ++j)
          if (edge_cover[{stars[si][i], stars[si][j]}] == 1) owns = true;
      if (owns) kept.push_back(stars[si]);
    }
    stars = std::move(kept);
  }

  if (static_cast<int>(stars.size()) != v)
    throw Error(errc::not_block_graph,
                "expected " + std::to_string(v) + " point cliques, found " +
                    std::to_string(stars.size()));

  std::vector<std::vector<int>> blocks(g.order());
  for (size_t point = 0; point < stars.size(); ++point)
    for (int blk : stars[point]) blocks[blk].push_back(static_cast<int>(point));
  for (const auto& blk : blocks)
    if (static_cast<int>(blk.size()) != k)
      throw Error(errc::not_block_graph, "a block lies on the wrong number of point cliques");
  try {
    return validate_steiner_design(v, 2, k, std::move(blocks));
  } catch (const Error& e) {
    throw Error(errc::not_block_graph, std::string("recovered design invalid: ") + e.what());
  }
}

long bruck_polynomial(long x) {
  return x * x * x * x / 2 + x * x * x + x * x + 3 * x / 2;
}

std::vector<FamilyMatch> pseudo_thresholds(const SrgParams& p) {
  std::vector<FamilyMatch> out;
  // Pseudo-Latin-square: (n^2, 3(n-1), n, 6).
  {
    long n = p.lambda;
    if (n >= 1 && p.n == n * n && p.k == 3 * (n - 1) && p.mu == 6)
      out.push_back({Family::pseudo_lsg, n, 3, true, n > 23});
  }
  // Pseudo-net: (n^2, k(n-1), n-2+(k-1)(k-2), k(k-1)); mu determines k.
  for (long k = 1; k * (k - 1) <= p.mu; ++k) {
    if (k * (k - 1) != p.mu) continue;
    if (p.k % k != 0) continue;
    long n = p.k / k + 1;
    if (n >= 1 && p.n == n * n && p.k == k * (n - 1) &&
        p.lambda == n - 2 + (k - 1) * (k - 2)) {
      // Bruck's bound applies for k > 1.
      bool known = k > 1;
      out.push_back({Family::pseudo_net, n, k, known, known && n > bruck_polynomial(k - 1)});
    }
  }
  // Pseudo-STS: (m(m-1)/6, 3(m-3)/2, (m+3)/2, 9) on v = m points.
  {
    if (p.mu == 9 && (2 * p.k + 9) % 3 == 0) {
      long m = (2 * p.k + 9) / 3;
      if (m >= 3 && p.n == m * (m - 1) / 6 && p.k == 3 * (m - 3) / 2 &&
          p.lambda == (m + 3) / 2 && (m + 3) % 2 == 0)
        out.push_back({Family::pseudo_sts, m, 3, true, p.n > 67});
    }
  }
  // Conference: (n, (n-1)/2, (n-5)/4, (n-1)/4); no genuineness bound.
  {
    long n = p.n;
    if (n >= 5 && 2 * p.k == n - 1 && 4 * p.lambda == n - 5 && 4 * p.mu == n - 1)
      out.push_back({Family::conference, n, 0, false, false});
  }
  return out;
}

Verdict lsg_iso(const Graph& g, const Graph& h, uint64_t seed, int trials) {
  if (g.order() != h.order()) return Verdict::no;
  LatinSquare lg, lh;
  try {
    lg = recover_latin_square(g);
    lh = recover_latin_square(h);
  } catch (const Error&) {
    if (g.order() <= 10) {
      auto r = oracle::graph_iso_brute(g, h);
      return r.verdict;
    }
    throw;
  }
  return iso::main_class_equivalent(lg, lh, iso::Method::normal, seed, trials).verdict;
}

}  // namespace recover
}  // namespace isokit
