#include "isokit/designs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace isokit {
namespace designs {

namespace {

void require_sts(const SteinerDesign& d) {
  if (d.t() != 2 || d.k() != 3)
    throw Error(errc::not_sts, "expected a Steiner triple system");
}

// True iff phi maps the block list of d1 exactly onto that of d2.
bool blocks_preserved(const SteinerDesign& d1, const SteinerDesign& d2,
                      const std::vector<int>& phi) {
  std::set<std::vector<int>> target(d2.blocks().begin(), d2.blocks().end());
  for (const auto& b : d1.blocks()) {
    std::vector<int> img;
    img.reserve(b.size());
    for (int p : b) img.push_back(phi[p]);
    std::sort(img.begin(), img.end());
    if (!target.count(img)) return false;
  }
  return true;
}

}  // namespace

LatinSquare sts_to_quasigroup(const SteinerDesign& d) {
  require_sts(d);
  const int n = d.v();
  std::vector<int> cells(static_cast<size_t>(n) * n, -1);
  auto put = [&](int a, int b, int c) { cells[static_cast<size_t>(a) * n + b] = c; };
  for (int x = 0; x < n; ++x) put(x, x, x);
  for (const auto& blk : d.blocks()) {
    int a = blk[0], b = blk[1], c = blk[2];
    put(a, b, c);
    put(b, a, c);
    put(a, c, b);
    put(c, a, b);
    put(b, c, a);
    put(c, b, a);
  }
  return validate_latin_square_flat(n, std::move(cells));
}

SearchResult<std::vector<int>> sts_iso(const SteinerDesign& d1, const SteinerDesign& d2,
                                       uint64_t seed, int trials, iso::Budget budget) {
  require_sts(d1);
  require_sts(d2);
  if (d1.v() != d2.v()) throw Error(errc::size_mismatch, "point counts differ");
  auto q1 = sts_to_quasigroup(d1);
  auto q2 = sts_to_quasigroup(d2);
  return iso::for_each_quasigroup_iso(
      q1, q2, [&](const std::vector<int>& phi) { return blocks_preserved(d1, d2, phi); },
      seed, trials, budget);
}

DerivedDesign derived_design(const SteinerDesign& d, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) >= d.t())
    throw Error(errc::too_large, "derived point set must have fewer than t points");
  std::set<int> aset;
  for (int p : a) {
    if (p < 0 || p >= d.v()) throw Error(errc::point_out_of_range, "point out of range");
    if (!aset.insert(p).second)
      throw Error(errc::point_out_of_range, "repeated point in derived set");
  }
  std::vector<int> point_map;  // new -> old, ascending
  std::vector<int> old_to_new(d.v(), -1);
  for (int p = 0; p < d.v(); ++p) {
    if (aset.count(p)) continue;
    old_to_new[p] = static_cast<int>(point_map.size());
    point_map.push_back(p);
  }
  std::vector<std::vector<int>> blocks;
  for (const auto& b : d.blocks()) {
    size_t inside = 0;
    for (int p : b) inside += aset.count(p);
    if (inside != aset.size()) continue;
    std::vector<int> nb;
    for (int p : b)
      if (!aset.count(p)) nb.push_back(old_to_new[p]);
    blocks.push_back(std::move(nb));
  }
  const int na = static_cast<int>(a.size());
  auto derived = validate_steiner_design(d.v() - na, d.t() - na, d.k() - na, std::move(blocks));
  return DerivedDesign{std::move(derived), std::move(point_map)};
}

SearchResult<std::vector<int>> steiner_t_iso(const SteinerDesign& d1,
                                             const SteinerDesign& d2, uint64_t seed,
                                             int trials, iso::Budget budget) {
  if (d1.v() != d2.v() || d1.t() != d2.t() || d1.k() != d2.k())
    throw Error(errc::size_mismatch, "designs have different (t, k, v)");
  const int t = d1.t();
  if (d1.k() - (t - 2) != 3)
    throw Error(errc::unsupported_derived_block_size,
                "derived design must be an STS (require k = t + 1)");
  if (t == 2) return sts_iso(d1, d2, seed, trials, budget);

  const int v = d1.v();
  std::vector<int> a(t - 2);
  std::iota(a.begin(), a.end(), 0);
  DerivedDesign da = derived_design(d1, a);
  auto qa = sts_to_quasigroup(da.design);

  // Ordered tuples B over d2's points; the lift maps a_i -> b_i and follows
  // the derived isomorphism elsewhere.
  std::vector<int> b(t - 2, -1);
  std::vector<char> used(v, 0);
  bool any_unknown = false;
  std::optional<std::vector<int>> result;

  std::function<void(int)> rec = [&](int depth) {
    if (result) return;
    if (depth == t - 2) {
      DerivedDesign db;
      try {
        db = derived_design(d2, b);
      } catch (const Error&) {
        return;  // this B does not leave a Steiner design behind
      }
      auto sub = iso::for_each_quasigroup_iso(
          qa, sts_to_quasigroup(db.design),
          [&](const std::vector<int>& psi) {
            if (!blocks_preserved(da.design, db.design, psi)) return false;
            std::vector<int> full(v, -1);
            for (int i = 0; i < t - 2; ++i) full[a[i]] = b[i];
            for (size_t np = 0; np < da.point_map.size(); ++np)
              full[da.point_map[np]] = db.point_map[psi[np]];
            if (!is_permutation(full)) return false;
            if (!blocks_preserved(d1, d2, full)) return false;
            result = full;
            return true;
          },
          seed, trials, budget);
      if (sub.unknown()) any_unknown = true;
      return;
    }
    for (int p = 0; p < v && !result; ++p) {
      if (used[p]) continue;
      used[p] = 1;
      b[depth] = p;
      rec(depth + 1);
      used[p] = 0;
    }
  };
  rec(0);

  if (result) return SearchResult<std::vector<int>>::found(*result);
  if (any_unknown) return SearchResult<std::vector<int>>::undecided();
  return SearchResult<std::vector<int>>::absent();
}

namespace {

// Point at the intersection of class-a line i and class-b line j.
std::vector<int> intersection_table(const Net& net, int ca, int cb) {
  const int n = net.order();
  const auto& classes = net.classes();
  std::vector<int> line_of_b(static_cast<size_t>(n) * n, -1);
  for (int j = 0; j < n; ++j)
    for (int p : classes[cb][j]) line_of_b[p] = j;
  std::vector<int> point_of(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i)
    for (int p : classes[ca][i])
      point_of[static_cast<size_t>(i) * n + line_of_b[p]] = p;
  return point_of;
}

// Latin square of a degree-3 subnet: rows = lines of class a, columns =
// class b, symbol = the class-c line through the row/column intersection.
LatinSquare subnet_square(const Net& net, int ca, int cb, int cc) {
  const int n = net.order();
  const auto& classes = net.classes();
  std::vector<int> line_of_c(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i)
    for (int p : classes[cc][i]) line_of_c[p] = i;
  auto pts = intersection_table(net, ca, cb);
  std::vector<int> cells(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cells[static_cast<size_t>(i) * n + j] = line_of_c[pts[static_cast<size_t>(i) * n + j]];
  return validate_latin_square_flat(n, std::move(cells));
}

bool lines_preserved(const Net& n1, const Net& n2, const std::vector<int>& phi) {
  std::set<std::vector<int>> target;
  for (auto& l : n2.all_lines()) target.insert(l);
  for (auto& l : n1.all_lines()) {
    std::vector<int> img;
    img.reserve(l.size());
    for (int p : l) img.push_back(phi[p]);
    std::sort(img.begin(), img.end());
    if (!target.count(img)) return false;
  }
  return true;
}

}  // namespace

SearchResult<std::vector<int>> net_iso(const Net& n1, const Net& n2, uint64_t seed,
                                       int trials, iso::Budget budget) {
  if (n1.order() != n2.order() || n1.degree() != n2.degree())
    throw Error(errc::param_mismatch, "nets have different (n, k)");
  const int n = n1.order(), k = n1.degree();
  const int np = n * n;

  if (k <= 2) {
    // The pair (k, n) determines the net uniquely; build a witness from
    // class/line coordinates.
    std::vector<int> phi(np, -1);
    if (k == 0) {
      std::iota(phi.begin(), phi.end(), 0);
    } else if (k == 1) {
      const auto &c1 = n1.classes()[0], &c2 = n2.classes()[0];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) phi[c1[i][j]] = c2[i][j];
    } else {
      auto t1 = intersection_table(n1, 0, 1);
      auto t2 = intersection_table(n2, 0, 1);
      for (int cell = 0; cell < np; ++cell) phi[t1[cell]] = t2[cell];
    }
    if (!is_permutation(phi) || !lines_preserved(n1, n2, phi))
      throw Error(errc::malformed_net, "low-degree net witness failed verification");
    return SearchResult<std::vector<int>>::found(phi);
  }

  LatinSquare l1 = subnet_square(n1, 0, 1, 2);
  auto pts1 = intersection_table(n1, 0, 1);

  bool any_unknown = false;
  std::optional<std::vector<int>> result;
  for (int ca = 0; ca < k && !result; ++ca) {
    for (int cb = 0; cb < k && !result; ++cb) {
      if (cb == ca) continue;
      for (int cc = 0; cc < k && !result; ++cc) {
        if (cc == ca || cc == cb) continue;
        LatinSquare l2 = subnet_square(n2, ca, cb, cc);
        auto pts2 = intersection_table(n2, ca, cb);
        auto r = iso::for_each_isotopy(
            l1, l2,
            [&](const Isotopy& iso) {
              std::vector<int> phi(np, -1);
              for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                  phi[pts1[static_cast<size_t>(i) * n + j]] =
                      pts2[static_cast<size_t>(iso.alpha[i]) * n + iso.beta[j]];
              if (!is_permutation(phi)) return false;
              if (!lines_preserved(n1, n2, phi)) return false;
              result = phi;
              return true;
            },
            seed, trials, budget);
        if (r.unknown()) any_unknown = true;
      }
    }
  }
  if (result) return SearchResult<std::vector<int>>::found(*result);
  if (any_unknown) return SearchResult<std::vector<int>>::undecided();
  return SearchResult<std::vector<int>>::absent();
}

SteinerDesign affine_to_projective(const Net& net) {
  const int n = net.order(), k = net.degree();
  if (k != n + 1) throw Error(errc::not_affine_plane, "affine plane requires k = n + 1");
  const int np = n * n;
  std::vector<std::vector<int>> blocks;
  std::vector<int> infinity;
  for (int c = 0; c < k; ++c) {
    int pc = np + c;  // new point for parallel class c
    infinity.push_back(pc);
    for (auto line : net.classes()[c]) {
      line.push_back(pc);
      blocks.push_back(std::move(line));
    }
  }
  blocks.push_back(std::move(infinity));
  return validate_steiner_design(np + n + 1, 2, n + 1, std::move(blocks));
}

Net projective_to_affine(const SteinerDesign& d, int line) {
  const int q = d.k() - 1;
  if (d.t() != 2 || q < 1 || d.v() != q * q + q + 1)
    throw Error(errc::not_projective_plane, "expected a Steiner (2, q+1, q^2+q+1)-design");
  if (line < 0 || line >= d.block_count())
    throw Error(errc::point_out_of_range, "line index out of range");

  const auto& removed = d.blocks()[line];
  std::set<int> removed_set(removed.begin(), removed.end());
  std::vector<int> old_to_new(d.v(), -1);
  int next = 0;
  for (int p = 0; p < d.v(); ++p)
    if (!removed_set.count(p)) old_to_new[p] = next++;

  // Lines through a removed point form one parallel class.
  std::vector<std::vector<std::vector<int>>> classes(removed.size());
  for (int bi = 0; bi < d.block_count(); ++bi) {
    if (bi == line) continue;
    const auto& b = d.blocks()[bi];
    std::vector<int> kept;
    int hit = -1;
    for (int p : b) {
      if (removed_set.count(p)) {
        if (hit >= 0) throw Error(errc::not_projective_plane, "two lines share two points");
        hit = static_cast<int>(std::lower_bound(removed.begin(), removed.end(), p) -
                               removed.begin());
      } else {
        kept.push_back(old_to_new[p]);
      }
    }
    if (hit < 0) throw Error(errc::not_projective_plane, "line misses the removed line");
    classes[hit].push_back(std::move(kept));
  }
  return validate_net(q, q + 1, std::move(classes));
}

}  // namespace designs
}  // namespace isokit
