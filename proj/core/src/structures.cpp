#include "isokit/structures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace isokit {

std::vector<int> LatinSquare::row(int r) const {
  return {cells_.begin() + static_cast<long>(r) * n_,
          cells_.begin() + static_cast<long>(r + 1) * n_};
}

std::vector<int> LatinSquare::column(int c) const {
  std::vector<int> out(n_);
  for (int r = 0; r < n_; ++r) out[r] = at(r, c);
  return out;
}

LatinSquare validate_latin_square(const std::vector<std::vector<int>>& cells) {
  const int n = static_cast<int>(cells.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : cells) {
    if (static_cast<int>(row.size()) != n)
      throw Error(errc::not_square, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_latin_square_flat(n, std::move(flat));
}

LatinSquare validate_latin_square_flat(int n, std::vector<int> cells) {
  if (n < 0 || static_cast<long>(cells.size()) != static_cast<long>(n) * n)
    throw Error(errc::not_square, "table is not square");
  for (int x : cells)
    if (x < 0 || x >= n)
      throw Error(errc::symbol_out_of_range, "symbol out of range: " + std::to_string(x));
  std::vector<char> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      int s = cells[static_cast<size_t>(r) * n + c];
      if (seen[s])
        throw Error(errc::row_repeats, "row " + std::to_string(r) + " repeats symbol " + std::to_string(s), r);
      seen[s] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      int s = cells[static_cast<size_t>(r) * n + c];
      if (seen[s])
        throw Error(errc::column_repeats, "column " + std::to_string(c) + " repeats symbol " + std::to_string(s), c);
      seen[s] = 1;
    }
  }
  LatinSquare l;
  l.n_ = n;
  l.cells_ = std::move(cells);
  return l;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw Error(errc::malformed_net, "self-loop rejected");
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw Error(errc::point_out_of_range, "vertex out of range");
  adj_[static_cast<size_t>(u) * n_ + v] = 1;
  adj_[static_cast<size_t>(v) * n_ + u] = 1;
}

int Graph::degree(int u) const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d += adj_[static_cast<size_t>(u) * n_ + v];
  return d;
}

std::vector<int> Graph::neighbors(int u) const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (adj_[static_cast<size_t>(u) * n_ + v]) out.push_back(v);
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

long Graph::edge_count() const {
  long m = 0;
  for (int u = 0; u < n_; ++u) m += degree(u);
  return m / 2;
}

std::optional<SrgParams> srg_check(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  const int k = g.degree(0);
  for (int u = 1; u < n; ++u)
    if (g.degree(u) != k) return std::nullopt;

  long lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      long common = 0;
      for (int w = 0; w < n; ++w)
        if (g.adjacent(u, w) && g.adjacent(v, w)) ++common;
      if (g.adjacent(u, v)) {
        if (lambda < 0) lambda = common;
        else if (lambda != common) return std::nullopt;
      } else {
        if (mu < 0) mu = common;
        else if (mu != common) return std::nullopt;
      }
    }
  }
  // Complete or empty graph: lambda or mu never witnessed, so undefined.
  if (lambda < 0 || mu < 0) return std::nullopt;
  return SrgParams{n, k, lambda, mu};
}

SrgParams srg_complement_params(const SrgParams& p) {
  SrgParams c{p.n, p.n - p.k - 1, p.n - 2 - 2 * p.k + p.mu, p.n - 2 * p.k + p.lambda};
  if (c.k < 0 || c.lambda < 0 || c.mu < 0)
    throw Error(errc::complement_infeasible, "complement parameters negative");
  return c;
}

SteinerDesign validate_steiner_design(int v, int t, int k,
                                      std::vector<std::vector<int>> blocks) {
  if (!(0 < t && t <= k && k <= v))
    throw Error(errc::not_sts, "require 0 < t <= k <= v");
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    if (static_cast<int>(b.size()) != k)
      throw Error(errc::not_sts, "block size != k");
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
      throw Error(errc::not_sts, "repeated point in block");
    for (int p : b)
      if (p < 0 || p >= v) throw Error(errc::point_out_of_range, "point out of range");
  }
  std::sort(blocks.begin(), blocks.end());
  if (std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end())
    throw Error(errc::not_sts, "duplicate block");

  // Every t-subset of points in exactly one block: count t-subsets over
  // blocks, then compare the total against C(v, t).
  std::map<std::vector<int>, int> cover;
  std::vector<int> idx(t);
  for (const auto& b : blocks) {
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<int> sub(t);
      for (int i = 0; i < t; ++i) sub[i] = b[idx[i]];
      if (++cover[sub] > 1)
        throw Error(errc::not_sts, "t-subset covered twice");
      int i = t - 1;
      while (i >= 0 && idx[i] == k - t + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  long long expect = 1;
  for (int i = 0; i < t; ++i) expect = expect * (v - i) / (i + 1);
  if (static_cast<long long>(cover.size()) != expect)
    throw Error(errc::not_sts, "some t-subset uncovered");

  SteinerDesign d;
  d.v_ = v;
  d.t_ = t;
  d.k_ = k;
  d.blocks_ = std::move(blocks);
  return d;
}

std::vector<std::vector<int>> Net::all_lines() const {
  std::vector<std::vector<int>> out;
  for (const auto& cls : classes_)
    for (const auto& line : cls) out.push_back(line);
  return out;
}

Net validate_net(int n, int k, std::vector<std::vector<std::vector<int>>> classes) {
  if (n < 1 || k < 0 || k > n + 1)
    throw Error(errc::malformed_net, "require 1 <= n and 0 <= k <= n+1");
  if (static_cast<int>(classes.size()) != k)
    throw Error(errc::malformed_net, "class count != k");
  const int np = n * n;
  for (auto& cls : classes) {
    if (static_cast<int>(cls.size()) != n)
      throw Error(errc::malformed_net, "class does not have n lines");
    std::vector<char> covered(np, 0);
    for (auto& line : cls) {
      std::sort(line.begin(), line.end());
      if (static_cast<int>(line.size()) != n)
        throw Error(errc::malformed_net, "line does not have n points");
      for (int p : line) {
        if (p < 0 || p >= np) throw Error(errc::point_out_of_range, "point out of range");
        if (covered[p]) throw Error(errc::malformed_net, "class is not a partition");
        covered[p] = 1;
      }
    }
    std::sort(cls.begin(), cls.end());
  }
  // Cross-class lines meet in exactly one point.
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      for (const auto& la : classes[a]) {
        for (const auto& lb : classes[b]) {
          std::vector<int> meet;
          std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(),
                                std::back_inserter(meet));
          if (meet.size() != 1)
            throw Error(errc::malformed_net, "cross-class lines must meet in one point");
        }
      }
    }
  }
  Net net;
  net.n_ = n;
  net.k_ = k;
  net.classes_ = std::move(classes);
  return net;
}

Net net_from_lines(int n, int k, const std::vector<std::vector<int>>& lines) {
  if (static_cast<int>(lines.size()) != n * k)
    throw Error(errc::malformed_net, "expected k*n lines");
  std::vector<std::vector<int>> sorted(lines);
  for (auto& l : sorted) std::sort(l.begin(), l.end());
  // Classmates iff disjoint: classes are the components of the disjointness
  // relation (within a class all lines are pairwise disjoint, across classes
  // all pairs intersect).
  const int m = static_cast<int>(sorted.size());
  std::vector<int> comp(m, -1);
  auto disjoint = [&](int a, int b) {
    std::vector<int> meet;
    std::set_intersection(sorted[a].begin(), sorted[a].end(), sorted[b].begin(),
                          sorted[b].end(), std::back_inserter(meet));
    return meet.empty();
  };
  int nc = 0;
  for (int i = 0; i < m; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = nc;
    for (int j = 0; j < m; ++j)
      if (j != i && comp[j] < 0 && disjoint(i, j)) comp[j] = nc;
    ++nc;
  }
  if (nc != k) throw Error(errc::malformed_net, "line list does not split into k classes");
  std::vector<std::vector<std::vector<int>>> classes(k);
  for (int i = 0; i < m; ++i) classes[comp[i]].push_back(sorted[i]);
  return validate_net(n, k, std::move(classes));
}

Isotopy Isotopy::identity(int n) {
  Isotopy iso;
  iso.alpha.resize(n);
  std::iota(iso.alpha.begin(), iso.alpha.end(), 0);
  iso.beta = iso.alpha;
  iso.gamma = iso.alpha;
  return iso;
}

bool is_permutation(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool verify_isotopy(const LatinSquare& l1, const LatinSquare& l2, const Isotopy& iso) {
  const int n = l1.order();
  if (l2.order() != n || iso.order() != n) return false;
  if (!is_permutation(iso.alpha) || !is_permutation(iso.beta) || !is_permutation(iso.gamma))
    return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (l2.at(iso.alpha[a], iso.beta[b]) != iso.gamma[l1.at(a, b)]) return false;
  return true;
}

LatinSquare apply_isotopy(const LatinSquare& l, const Isotopy& iso) {
  const int n = l.order();
  std::vector<int> cells(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      cells[static_cast<size_t>(iso.alpha[r]) * n + iso.beta[c]] = iso.gamma[l.at(r, c)];
  return validate_latin_square_flat(n, std::move(cells));
}

std::vector<int> inverse_permutation(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

std::vector<int> compose_permutations(const std::vector<int>& outer,
                                      const std::vector<int>& inner) {
  std::vector<int> out(inner.size());
  for (size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

}  // namespace isokit
