#include "isokit/gen.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>

namespace isokit {
namespace gen {
namespace {

constexpr int kMaxGroupOrder = 64;

LatinSquare cyclic_square(int n) {
  std::vector<int> cells(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) cells[static_cast<size_t>(r) * n + c] = (r + c) % n;
  return validate_latin_square_flat(n, std::move(cells));
}

LatinSquare product_of_cyclics(const std::vector<int>& factors) {
  long order = 1;
  for (int f : factors) {
    if (f < 1) throw Error(errc::unknown_spec, "cyclic factor must be positive");
    order *= f;
  }
  if (order < 1 || order > kMaxGroupOrder)
    throw Error(errc::unknown_spec, "group order exceeds 64");
  const int n = static_cast<int>(order);
  // Mixed-radix componentwise addition.
  auto add = [&](int a, int b) {
    int out = 0, mult = 1;
    for (int f : factors) {
      int da = a % f, db = b % f;
      out += ((da + db) % f) * mult;
      a /= f;
      b /= f;
      mult *= f;
    }
    return out;
  };
  std::vector<int> cells(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) cells[static_cast<size_t>(r) * n + c] = add(r, c);
  return validate_latin_square_flat(n, std::move(cells));
}

LatinSquare dihedral4() {
  // Elements r^i s^j, index = i + 4j.
  auto mul = [](int a, int b) {
    int ia = a % 4, ja = a / 4, ib = b % 4, jb = b / 4;
    int i = ja == 0 ? (ia + ib) % 4 : ((ia - ib) % 4 + 4) % 4;
    int j = (ja + jb) % 2;
    return i + 4 * j;
  };
  std::vector<int> cells(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) cells[static_cast<size_t>(a) * 8 + b] = mul(a, b);
  return validate_latin_square_flat(8, std::move(cells));
}

LatinSquare quaternion8() {
  // Order: 1, -1, i, -i, j, -j, k, -k; index = 2*unit + sign.
  // unit table over {1, i, j, k} with sign of the product.
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{+1, +1, +1, +1},
                                 {+1, -1, +1, -1},
                                 {+1, -1, -1, +1},
                                 {+1, +1, -1, -1}};
  auto mul = [](int a, int b) {
    int ua = a / 2, sa = a % 2 ? -1 : 1;
    int ub = b / 2, sb = b % 2 ? -1 : 1;
    int u = unit[ua][ub];
    int s = sa * sb * sign[ua][ub];
    return 2 * u + (s < 0 ? 1 : 0);
  };
  std::vector<int> cells(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) cells[static_cast<size_t>(a) * 8 + b] = mul(a, b);
  return validate_latin_square_flat(8, std::move(cells));
}

}  // namespace

LatinSquare group_square(const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "D4") return dihedral4();
  if (s == "Q8") return quaternion8();
  // Zn or ZaxZbx... (case-sensitive Z; 'x' separator)
  std::vector<int> factors;
  size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'Z') throw Error(errc::unknown_spec, "unknown group spec: " + spec);
    ++pos;
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw Error(errc::unknown_spec, "unknown group spec: " + spec);
    factors.push_back(std::stoi(s.substr(start, pos - start)));
    if (pos < s.size()) {
      if (s[pos] != 'x') throw Error(errc::unknown_spec, "unknown group spec: " + spec);
      ++pos;
    }
  }
  if (factors.empty()) throw Error(errc::unknown_spec, "unknown group spec: " + spec);
  return product_of_cyclics(factors);
}

LatinSquare random_latin_square(int n, uint64_t seed) {
  if (n < 1 || n > 64) throw Error(errc::too_large, "order must be in [1, 64]");
  if (n == 1) return validate_latin_square_flat(1, {0});

  // Incidence cube f(r, c, s) of the current (possibly improper) square.
  // Proper states have all entries in {0,1}; an improper state has exactly
  // one -1 entry. Each accepted move updates a 2x2x2 subcube.
  std::vector<int8_t> f(static_cast<size_t>(n) * n * n, 0);
  auto fi = [n](int r, int c, int s) {
    return (static_cast<size_t>(r) * n + c) * n + s;
  };
  {
    LatinSquare start = cyclic_square(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) f[fi(r, c, start.at(r, c))] = 1;
  }

  std::mt19937_64 rng(seed);
  auto rnd = [&](int m) { return static_cast<int>(rng() % m); };

  long proper_steps = 10L * n * n * n;
  bool improper = false;
  int nr = 0, nc = 0, ns = 0;  // the -1 cell while improper

  auto pick_positive = [&](auto&& get) {
    // Picks a random index with f > 0 along one cube line (1 or 2 exist).
    int found[2], cnt = 0;
    for (int i = 0; i < n; ++i)
      if (get(i) > 0) {
        if (cnt < 2) found[cnt] = i;
        ++cnt;
      }
    return found[cnt > 1 ? rnd(2) : 0];
  };

  for (long step = 0; step < proper_steps;) {
    int x, y, z, x2, y2, z2;
    if (!improper) {
      // Choose a zero cell of the cube: random (r, c) and symbol != current.
      x = rnd(n);
      y = rnd(n);
      int cur = -1;
      for (int s = 0; s < n; ++s)
        if (f[fi(x, y, s)] == 1) { cur = s; break; }
      z = rnd(n - 1);
      if (z >= cur) ++z;
      z2 = cur;
      x2 = -1;
      for (int r = 0; r < n; ++r)
        if (f[fi(r, y, z)] == 1) { x2 = r; break; }
      y2 = -1;
      for (int c = 0; c < n; ++c)
        if (f[fi(x, c, z)] == 1) { y2 = c; break; }
    } else {
      x = nr; y = nc; z = ns;
      x2 = pick_positive([&](int r) { return f[fi(r, y, z)]; });
      y2 = pick_positive([&](int c) { return f[fi(x, c, z)]; });
      z2 = pick_positive([&](int s) { return f[fi(x, y, s)]; });
    }
    f[fi(x, y, z)] += 1;
    f[fi(x, y2, z2)] += 1;
    f[fi(x2, y, z2)] += 1;
    f[fi(x2, y2, z)] += 1;
    f[fi(x, y, z2)] -= 1;
    f[fi(x, y2, z)] -= 1;
    f[fi(x2, y, z)] -= 1;
    f[fi(x2, y2, z2)] -= 1;
    if (f[fi(x2, y2, z2)] < 0) {
      improper = true;
      nr = x2; nc = y2; ns = z2;
    } else {
      improper = false;
      ++step;
    }
  }
  // The walk ends in a proper state; read the square back off.
  std::vector<int> cells(static_cast<size_t>(n) * n, -1);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int s = 0; s < n; ++s)
        if (f[fi(r, c, s)] == 1) cells[static_cast<size_t>(r) * n + c] = s;
  return validate_latin_square_flat(n, std::move(cells));
}

SteinerDesign sts(int v) {
  if (v < 3 || (v % 6 != 1 && v % 6 != 3) || v > 99)
    throw Error(errc::inadmissible_order, "STS order must be 1 or 3 (mod 6), 3 <= v <= 99");
  std::vector<std::vector<int>> blocks;
  if (v % 6 == 3) {
    // Bose: points Z_m x {0,1,2} with m = v/3 odd; idempotent commutative
    // quasigroup i*j = (i+j)(m+1)/2 mod m.
    const int m = v / 3;
    auto pt = [m](int i, int layer) { return layer * m + i; };
    auto q = [m](int i, int j) { return static_cast<int>((static_cast<long>(i + j) * ((m + 1) / 2)) % m); };
    for (int i = 0; i < m; ++i) blocks.push_back({pt(i, 0), pt(i, 1), pt(i, 2)});
    for (int l = 0; l < 3; ++l)
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          blocks.push_back({pt(i, l), pt(j, l), pt(q(i, j), (l + 1) % 3)});
  } else {
    // Skolem: points {inf} u Z_2t x {0,1,2} with v = 6t+1; half-idempotent
    // commutative quasigroup a*b = sigma(a+b mod 2t), sigma(2i) = i,
    // sigma(2i+1) = t + i.
    const int t = v / 6;
    const int m = 2 * t;
    auto pt = [m](int i, int layer) { return layer * m + i; };
    const int inf = 3 * m;
    auto sigma = [t](int x) { return x % 2 == 0 ? x / 2 : t + (x - 1) / 2; };
    auto q = [&](int a, int b) { return sigma((a + b) % m); };
    for (int i = 0; i < t; ++i) blocks.push_back({pt(i, 0), pt(i, 1), pt(i, 2)});
    for (int l = 0; l < 3; ++l)
      for (int i = 0; i < t; ++i)
        blocks.push_back({inf, pt(t + i, l), pt(i, (l + 1) % 3)});
    for (int l = 0; l < 3; ++l)
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
          blocks.push_back({pt(a, l), pt(b, l), pt(q(a, b), (l + 1) % 3)});
  }
  return validate_steiner_design(v, 2, 3, std::move(blocks));
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; static_cast<long>(d) * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

Net affine_plane(int q) {
  if (!is_prime(q) || q > 13) throw Error(errc::not_prime, "q must be prime, q <= 13");
  auto pt = [q](int x, int y) { return x * q + y; };
  std::vector<std::vector<std::vector<int>>> classes;
  for (int m = 0; m < q; ++m) {
    std::vector<std::vector<int>> cls;
    for (int b = 0; b < q; ++b) {
      std::vector<int> line;
      for (int x = 0; x < q; ++x) line.push_back(pt(x, (m * x + b) % q));
      cls.push_back(std::move(line));
    }
    classes.push_back(std::move(cls));
  }
  std::vector<std::vector<int>> vertical;
  for (int b = 0; b < q; ++b) {
    std::vector<int> line;
    for (int y = 0; y < q; ++y) line.push_back(pt(b, y));
    vertical.push_back(std::move(line));
  }
  classes.push_back(std::move(vertical));
  return validate_net(q, q + 1, std::move(classes));
}

SteinerDesign s348() {
  std::vector<std::vector<int>> blocks;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int c = b + 1; c < 8; ++c) {
        int d = a ^ b ^ c;
        if (d > c) blocks.push_back({a, b, c, d});
      }
  return validate_steiner_design(8, 3, 4, std::move(blocks));
}

Graph paley_conference(int q) {
  if (!is_prime(q) || q % 4 != 1 || q > 101)
    throw Error(errc::inadmissible_order, "q must be prime, q = 1 (mod 4), q <= 101");
  std::vector<char> residue(q, 0);
  for (int x = 1; x < q; ++x) residue[static_cast<long>(x) * x % q] = 1;
  Graph g(q);
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v)
      if (residue[(v - u) % q]) g.add_edge(u, v);
  return g;
}

std::vector<LatinSquare> all_latin_squares(int n, bool column_major) {
  if (n < 1 || n > 4) throw Error(errc::too_large, "exhaustive enumeration only for n <= 4");
  std::vector<LatinSquare> out;
  std::vector<int> cells(static_cast<size_t>(n) * n, -1);
  // Cell fill order decides the backtracking shape; both orders must agree.
  std::vector<std::pair<int, int>> order;
  if (column_major) {
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < n; ++r) order.emplace_back(r, c);
  } else {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) order.emplace_back(r, c);
  }
  auto at = [&](int r, int c) -> int& { return cells[static_cast<size_t>(r) * n + c]; };
  auto ok = [&](int r, int c, int s) {
    for (int i = 0; i < n; ++i) {
      if (at(r, i) == s || at(i, c) == s) return false;
    }
    return true;
  };
  size_t pos = 0;
  std::vector<int> trial(order.size(), -1);
  while (true) {
    if (pos == order.size()) {
      out.push_back(validate_latin_square_flat(n, cells));
      if (pos == 0) break;
      --pos;
      continue;
    }
    auto [r, c] = order[pos];
    int s = trial[pos] + 1;
    if (trial[pos] >= 0) at(r, c) = -1;
    while (s < n && !ok(r, c, s)) ++s;
    if (s == n) {
      trial[pos] = -1;
      if (pos == 0) break;
      --pos;
      continue;
    }
    trial[pos] = s;
    at(r, c) = s;
    ++pos;
  }
  return out;
}

}  // namespace gen
}  // namespace isokit
