#include "isokit/cube.hpp"

#include <algorithm>
#include <random>

namespace isokit {
namespace cube {

int ceil_log2(int n) {
  int k = 0;
  while ((1L << k) < n) ++k;
  return k;
}

int default_cap(int n) { return 2 * ceil_log2(n) + 4; }
int max_cap(int n) { return 4 * ceil_log2(n); }

int eval_word(const LatinSquare& l, const std::vector<int>& word) {
  std::vector<int> level(word);
  while (level.size() > 1) {
    std::vector<int> next;
    next.reserve((level.size() + 1) / 2);
    size_t i = 0;
    for (; i + 1 < level.size(); i += 2) next.push_back(l.at(level[i], level[i + 1]));
    if (i < level.size()) next.push_back(level[i]);
    level.swap(next);
  }
  return level[0];
}

int cube_eval(const LatinSquare& l, const CubeSequence& s, const std::vector<uint8_t>& e) {
  if (static_cast<int>(e.size()) != s.k())
    throw Error(errc::length_mismatch, "exponent vector length != k");
  std::vector<int> word;
  word.reserve(s.elements.size());
  word.push_back(s.elements[0]);
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i]) word.push_back(s.elements[i + 1]);
  return eval_word(l, word);
}

namespace {

// Evaluates all 2^k words; out[mask] = value for the exponent vector whose
// bit i is (mask >> i) & 1.
std::vector<int> all_words(const LatinSquare& l, const CubeSequence& s) {
  const int k = s.k();
  std::vector<int> out(1L << k);
  std::vector<int> word;
  for (long mask = 0; mask < (1L << k); ++mask) {
    word.clear();
    word.push_back(s.elements[0]);
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) word.push_back(s.elements[i + 1]);
    out[mask] = eval_word(l, word);
  }
  return out;
}

void check_cap(const CubeSequence& s, int n, int cap) {
  int limit = cap >= 0 ? cap : default_cap(n);
  if (s.k() > limit)
    throw Error(errc::cap_exceeded, "sequence exponent count " + std::to_string(s.k()) +
                                        " exceeds cap " + std::to_string(limit));
}

}  // namespace

std::set<int> cube_set(const LatinSquare& l, const CubeSequence& s, int cap) {
  for (int x : s.elements)
    if (x < 0 || x >= l.order())
      throw Error(errc::symbol_out_of_range, "sequence element out of range");
  check_cap(s, l.order(), cap);
  auto words = all_words(l, s);
  return {words.begin(), words.end()};
}

CubeSequence find_cube_sequence(const LatinSquare& l, uint64_t seed, int trials) {
  const int n = l.order();
  const int cap = max_cap(n);
  if (n == 1) return CubeSequence{{0}};

  auto coverage = [&](const CubeSequence& s) {
    return static_cast<int>(cube_set(l, s, cap).size());
  };

  std::optional<CubeSequence> best;
  auto consider = [&](const CubeSequence& s) {
    if (!best || s.elements.size() < best->elements.size() ||
        (s.elements.size() == best->elements.size() && s.elements < best->elements))
      best = s;
  };

  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    CubeSequence s{{static_cast<int>(rng() % n)}};
    int cov = 1;
    while (cov < n && s.k() < cap) {
      int best_sym = 0, best_cov = -1;
      for (int sym = 0; sym < n; ++sym) {
        CubeSequence ext = s;
        ext.elements.push_back(sym);
        int c = coverage(ext);
        if (c > best_cov) {
          best_cov = c;
          best_sym = sym;
        }
      }
      s.elements.push_back(best_sym);
      cov = best_cov;
    }
    if (cov == n) consider(s);
  }
  if (best) return *best;

  if (n <= 6) {
    // Exhaustive fallback: sequences in length order, lexicographic within
    // a length; first hit is the shortest lexicographically-least CGS.
    for (int len = 1; len <= cap + 1; ++len) {
      std::vector<int> elems(len, 0);
      while (true) {
        CubeSequence s{elems};
        if (coverage(s) == n) return s;
        int i = len - 1;
        while (i >= 0 && elems[i] == n - 1) --i;
        if (i < 0) break;
        ++elems[i];
        std::fill(elems.begin() + i + 1, elems.end(), 0);
      }
    }
  }
  throw Error(errc::not_found, "no cube generating sequence found in " +
                                   std::to_string(trials) + " trials");
}

bool is_bijection_relation(const std::vector<std::pair<int, int>>& pairs, int size_a,
                           int size_b) {
  if (size_a != size_b) return false;
  std::vector<int> image(size_a, -1);
  std::vector<char> hit(size_b, 0);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= size_a || b < 0 || b >= size_b) return false;
    if (image[a] >= 0 && image[a] != b) return false;  // not single-valued
    image[a] = b;
    hit[b] = 1;
  }
  for (int a = 0; a < size_a; ++a)
    if (image[a] < 0) return false;  // not total
  for (int b = 0; b < size_b; ++b)
    if (!hit[b]) return false;  // not surjective
  return true;
}

std::optional<CubeMap> extend_cube_map(const LatinSquare& l1, const LatinSquare& l2,
                                       const CubeSequence& s, const CubeSequence& t,
                                       int cap) {
  if (s.elements.size() != t.elements.size())
    throw Error(errc::length_mismatch, "sequences must have equal length");
  const int n = l1.order();
  if (l2.order() != n) throw Error(errc::order_mismatch, "orders differ");
  check_cap(s, n, cap);

  auto ws = all_words(l1, s);
  auto wt = all_words(l2, t);
  if (std::set<int>(ws.begin(), ws.end()).size() != static_cast<size_t>(n))
    throw Error(errc::not_generating, "left sequence does not generate");
  if (std::set<int>(wt.begin(), wt.end()).size() != static_cast<size_t>(n))
    throw Error(errc::not_generating, "right sequence does not generate");

  std::vector<int> table(n, -1);
  std::vector<char> hit(n, 0);
  std::vector<std::vector<int>> witness(n);
  const int k = s.k();
  for (long mask = 0; mask < static_cast<long>(ws.size()); ++mask) {
    int g = ws[mask], h = wt[mask];
    if (table[g] >= 0 && table[g] != h) return std::nullopt;
    if (table[g] < 0) {
      table[g] = h;
      hit[h] = 1;
      witness[g].resize(k);
      for (int i = 0; i < k; ++i) witness[g][i] = mask >> i & 1;
    }
  }
  for (int b = 0; b < n; ++b)
    if (!hit[b]) return std::nullopt;
  return CubeMap{std::move(table), std::move(witness)};
}

}  // namespace cube
}  // namespace isokit
