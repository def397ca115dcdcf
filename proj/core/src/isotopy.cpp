#include "isokit/isotopy.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "isokit/cube.hpp"

namespace isokit {
namespace iso {

namespace {

// Depth-first enumeration of image tuples T for a fixed sequence A in l1.
// A branch dies as soon as the partial word relation stops being extendable
// to a bijection (a source symbol with two images, or two sources sharing an
// image). Complete unless the node budget is hit.
//
// visit(fwd) is called for every full tuple whose relation is a bijection;
// returning true stops the search.
struct ImageSearch {
  const LatinSquare& l1;
  const LatinSquare& l2;
  const std::vector<int>& a_elems;
  long long node_limit;
  long long nodes = 0;
  bool capped = false;

  std::vector<long> l1_words;           // word value per mask
  std::vector<int> fwd, bwd;            // partial relation, -1 = unset
  std::vector<std::vector<int>> t_words;  // per-depth image word values
  std::vector<int> tuple;

  ImageSearch(const LatinSquare& l1_, const LatinSquare& l2_, const std::vector<int>& a,
              long long limit)
      : l1(l1_), l2(l2_), a_elems(a), node_limit(limit) {
    const int k = static_cast<int>(a.size()) - 1;
    l1_words.resize(1L << k);
    std::vector<int> word;
    for (long mask = 0; mask < (1L << k); ++mask) {
      word.clear();
      word.push_back(a[0]);
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1) word.push_back(a[i + 1]);
      l1_words[mask] = cube::eval_word(l1, word);
    }
    fwd.assign(l1.order(), -1);
    bwd.assign(l2.order(), -1);
  }

  int eval_image_word(long mask) {
    std::vector<int> word;
    word.push_back(tuple[0]);
    for (size_t i = 1; i < tuple.size(); ++i)
      if (mask >> (i - 1) & 1) word.push_back(tuple[i]);
    return cube::eval_word(l2, word);
  }

  template <typename Visit>
  bool dfs(size_t depth, Visit&& visit) {
    const size_t len = a_elems.size();
    if (depth == len) return visit(fwd);
    for (int cand = 0; cand < l2.order(); ++cand) {
      if (++nodes > node_limit) {
        capped = true;
        return false;
      }
      tuple.push_back(cand);
      // Masks introduced by this element: bit depth-1 newly set (all masks
      // for the first element).
      long lo = depth == 0 ? 0 : (1L << (depth - 1));
      long hi = depth == 0 ? 1 : (1L << depth);
      std::vector<std::pair<int, int>> added;
      bool ok = true;
      for (long mask = lo; mask < hi && ok; ++mask) {
        int g = static_cast<int>(l1_words[mask]);
        int h = eval_image_word(mask);
        if (fwd[g] < 0 && bwd[h] < 0) {
          fwd[g] = h;
          bwd[h] = g;
          added.emplace_back(g, h);
        } else if (fwd[g] != h || bwd[h] != g) {
          ok = false;
        }
      }
      if (ok && dfs(depth + 1, visit)) return true;
      for (auto [g, h] : added) {
        fwd[g] = -1;
        bwd[h] = -1;
      }
      tuple.pop_back();
      if (capped) return false;
    }
    return false;
  }
};

bool is_multiplicative(const LatinSquare& l1, const LatinSquare& l2,
                       const std::vector<int>& phi) {
  const int n = l1.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (phi[l1.at(x, y)] != l2.at(phi[x], phi[y])) return false;
  return true;
}

}  // namespace

SearchResult<std::vector<int>> for_each_quasigroup_iso(
    const LatinSquare& l1, const LatinSquare& l2,
    const std::function<bool(const std::vector<int>&)>& accept, uint64_t seed, int trials,
    Budget budget) {
  const int n = l1.order();
  if (l2.order() != n) throw Error(errc::order_mismatch, "orders differ");
  if (n == 1) {
    std::vector<int> id{0};
    if (accept(id)) return SearchResult<std::vector<int>>::found(id);
    return SearchResult<std::vector<int>>::absent();
  }
  auto a = cube::find_cube_sequence(l1, seed, trials);
  ImageSearch search(l1, l2, a.elements, budget.node_limit);
  std::optional<std::vector<int>> found;
  std::set<std::vector<int>> seen;
  search.dfs(0, [&](const std::vector<int>& phi) {
    if (!seen.insert(phi).second) return false;
    if (!is_multiplicative(l1, l2, phi)) return false;
    if (!accept(phi)) return false;
    found = phi;
    return true;
  });
  if (found) return SearchResult<std::vector<int>>::found(*found);
  if (search.capped) return SearchResult<std::vector<int>>::undecided();
  return SearchResult<std::vector<int>>::absent();
}

SearchResult<std::vector<int>> quasigroup_iso(const LatinSquare& l1, const LatinSquare& l2,
                                              uint64_t seed, int trials, Budget budget) {
  return for_each_quasigroup_iso(
      l1, l2, [](const std::vector<int>&) { return true; }, seed, trials, budget);
}

namespace {

// Principal isotope loop of l at the anchor (x0, y0): the operation
// x (+) y = R_{y0}^{-1}(x) * L_{x0}^{-1}(y) is a loop with identity x0*y0.
struct PrincipalLoop {
  LatinSquare table;
  std::vector<int> col_inv;  // R_{y0}^{-1}: value -> row
  std::vector<int> row_inv;  // L_{x0}^{-1}: value -> column
};

PrincipalLoop principal_loop(const LatinSquare& l, int x0, int y0) {
  const int n = l.order();
  std::vector<int> col_inv(n), row_inv(n);
  for (int x = 0; x < n; ++x) col_inv[l.at(x, y0)] = x;
  for (int y = 0; y < n; ++y) row_inv[l.at(x0, y)] = y;
  std::vector<int> cells(static_cast<size_t>(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      cells[static_cast<size_t>(u) * n + v] = l.at(col_inv[u], row_inv[v]);
  return {validate_latin_square_flat(n, std::move(cells)), std::move(col_inv),
          std::move(row_inv)};
}

}  // namespace

SearchResult<Isotopy> isotopy_cube(const LatinSquare& l1, const LatinSquare& l2,
                                   uint64_t seed, int trials, Budget budget) {
  const int n = l1.order();
  if (l2.order() != n) throw Error(errc::order_mismatch, "orders differ");
  if (n == 1) return SearchResult<Isotopy>::found(Isotopy::identity(1));

  // l1 and l2 are isotopic iff the principal-isotope loop of l1 at a fixed
  // anchor is isomorphic to the loop of l2 at some anchor (a0, b0). The loop
  // isomorphism gamma is found by cube-generating-sequence enumeration; the
  // remaining isotopy components are translation conjugates of gamma:
  // alpha = R2^{-1} gamma R1, beta = L2^{-1} gamma L1.
  PrincipalLoop q1 = principal_loop(l1, 0, 0);
  auto a = cube::find_cube_sequence(q1.table, seed, trials);

  bool capped = false;
  for (int a0 = 0; a0 < n; ++a0) {
    for (int b0 = 0; b0 < n; ++b0) {
      PrincipalLoop q2 = principal_loop(l2, a0, b0);
      ImageSearch search(q1.table, q2.table, a.elements, budget.node_limit);
      std::optional<std::vector<int>> gamma;
      search.dfs(0, [&](const std::vector<int>& cand) {
        if (!is_multiplicative(q1.table, q2.table, cand)) return false;
        gamma = cand;
        return true;
      });
      capped = capped || search.capped;
      if (!gamma) continue;
      std::vector<int> alpha(n), beta(n);
      for (int x = 0; x < n; ++x) alpha[x] = q2.col_inv[(*gamma)[l1.at(x, 0)]];
      for (int y = 0; y < n; ++y) beta[y] = q2.row_inv[(*gamma)[l1.at(0, y)]];
      Isotopy iso{std::move(alpha), std::move(beta), *gamma};
      if (!verify_isotopy(l1, l2, iso))
        throw Error(errc::not_found, "cube witness failed verification");
      return SearchResult<Isotopy>::found(iso);
    }
  }
  if (capped) return SearchResult<Isotopy>::undecided();
  return SearchResult<Isotopy>::absent();
}

NormalForm normalize(const LatinSquare& l, int r0, int c0) {
  const int n = l.order();
  std::vector<int> rowsrc{r0}, colsrc{c0};
  for (int r = 0; r < n; ++r)
    if (r != r0) rowsrc.push_back(r);
  for (int c = 0; c < n; ++c)
    if (c != c0) colsrc.push_back(c);
  std::vector<int> alpha1 = inverse_permutation(rowsrc);
  std::vector<int> beta = inverse_permutation(colsrc);

  // Symbol relabel making the top row read 0..n-1.
  std::vector<int> gamma(n);
  for (int j = 0; j < n; ++j) gamma[l.at(r0, colsrc[j])] = j;

  // Rows then sort by first-column value (row 0 already holds value 0).
  std::vector<int> alpha2(n);
  for (int r = 0; r < n; ++r) alpha2[alpha1[r]] = gamma[l.at(r, c0)];
  std::vector<int> alpha = compose_permutations(alpha2, alpha1);

  Isotopy iso{std::move(alpha), std::move(beta), std::move(gamma)};
  return NormalForm{apply_isotopy(l, iso), std::move(iso)};
}

SearchResult<Isotopy> for_each_isotopy(const LatinSquare& l1, const LatinSquare& l2,
                                       const std::function<bool(const Isotopy&)>& accept,
                                       uint64_t seed, int trials, Budget budget) {
  const int n = l1.order();
  if (l2.order() != n) throw Error(errc::order_mismatch, "orders differ");
  if (n == 1) {
    Isotopy id = Isotopy::identity(1);
    if (accept(id)) return SearchResult<Isotopy>::found(id);
    return SearchResult<Isotopy>::absent();
  }

  NormalForm m1 = normalize(l1, 0, 0);
  auto a = cube::find_cube_sequence(m1.square, seed, trials);

  bool any_unknown = false;
  std::optional<Isotopy> found;
  for (int r0 = 0; r0 < n && !found; ++r0) {
    for (int c0 = 0; c0 < n && !found; ++c0) {
      NormalForm nf = normalize(l2, r0, c0);
      ImageSearch search(m1.square, nf.square, a.elements, budget.node_limit);
      // l1 --P--> M1 --phi--> N <--Q-- l2; recombine into l1 -> l2.
      auto qa = inverse_permutation(nf.to_normal.alpha);
      auto qb = inverse_permutation(nf.to_normal.beta);
      auto qg = inverse_permutation(nf.to_normal.gamma);
      search.dfs(0, [&](const std::vector<int>& phi) {
        if (!is_multiplicative(m1.square, nf.square, phi)) return false;
        Isotopy out{
            compose_permutations(qa, compose_permutations(phi, m1.to_normal.alpha)),
            compose_permutations(qb, compose_permutations(phi, m1.to_normal.beta)),
            compose_permutations(qg, compose_permutations(phi, m1.to_normal.gamma))};
        if (!verify_isotopy(l1, l2, out))
          throw Error(errc::not_found, "normal-form witness failed verification");
        if (!accept(out)) return false;
        found = out;
        return true;
      });
      if (search.capped) any_unknown = true;
    }
  }
  if (found) return SearchResult<Isotopy>::found(*found);
  if (any_unknown) return SearchResult<Isotopy>::undecided();
  return SearchResult<Isotopy>::absent();
}

SearchResult<Isotopy> isotopy_normal_form(const LatinSquare& l1, const LatinSquare& l2,
                                          uint64_t seed, int trials, Budget budget) {
  return for_each_isotopy(
      l1, l2, [](const Isotopy&) { return true; }, seed, trials, budget);
}

SearchResult<Isotopy> isotopy(const LatinSquare& l1, const LatinSquare& l2, Method method,
                              uint64_t seed, int trials, Budget budget) {
  switch (method) {
    case Method::cube: return isotopy_cube(l1, l2, seed, trials, budget);
    case Method::normal: return isotopy_normal_form(l1, l2, seed, trials, budget);
    case Method::both: {
      auto r1 = isotopy_normal_form(l1, l2, seed, trials, budget);
      auto r2 = isotopy_cube(l1, l2, seed, trials, budget);
      if (r1.verdict != r2.verdict &&
          r1.verdict != Verdict::unknown && r2.verdict != Verdict::unknown)
        throw Error(errc::not_found, "methods disagree");
      if (r1.yes()) return r1;
      if (r2.yes()) return r2;
      if (r1.no() || r2.no()) return SearchResult<Isotopy>::absent();
      return SearchResult<Isotopy>::undecided();
    }
  }
  throw Error(errc::unknown_spec, "bad method");
}

std::vector<LatinSquare> conjugates(const LatinSquare& l) {
  const int n = l.order();
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<LatinSquare> out;
  for (const auto& p : perms) {
    std::vector<int> cells(static_cast<size_t>(n) * n, -1);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        int t[3] = {r, c, l.at(r, c)};
        cells[static_cast<size_t>(t[p[0]]) * n + t[p[1]]] = t[p[2]];
      }
    out.push_back(validate_latin_square_flat(n, std::move(cells)));
  }
  return out;
}

MainClassResult main_class_equivalent(const LatinSquare& l1, const LatinSquare& l2,
                                      Method method, uint64_t seed, int trials,
                                      Budget budget) {
  if (l1.order() != l2.order()) throw Error(errc::order_mismatch, "orders differ");
  auto conj = conjugates(l1);
  bool any_unknown = false;
  for (size_t i = 0; i < conj.size(); ++i) {
    auto r = isotopy(conj[i], l2, method, seed, trials, budget);
    if (r.yes()) return MainClassResult{Verdict::yes, static_cast<int>(i), r.witness};
    if (r.unknown()) any_unknown = true;
  }
  return MainClassResult{any_unknown ? Verdict::unknown : Verdict::no, -1, std::nullopt};
}

}  // namespace iso
}  // namespace isokit
