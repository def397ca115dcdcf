#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isokit/common.hpp"

namespace isokit {

// Order-n multiplication table of a quasigroup. Symbols are 0-indexed;
// cell (r, c) holds the product r*c. Immutable after validation.
class LatinSquare {
 public:
  LatinSquare() = default;

  int order() const { return n_; }
  int at(int r, int c) const { return cells_[static_cast<size_t>(r) * n_ + c]; }
  const std::vector<int>& cells() const { return cells_; }

  std::vector<int> row(int r) const;
  std::vector<int> column(int c) const;

  bool operator==(const LatinSquare& other) const {
    return n_ == other.n_ && cells_ == other.cells_;
  }

  friend LatinSquare validate_latin_square(const std::vector<std::vector<int>>& cells);
  friend LatinSquare validate_latin_square_flat(int n, std::vector<int> cells);

 private:
  int n_ = 0;
  std::vector<int> cells_;  // row-major, size n*n
};

// Throws Error{not_square, symbol_out_of_range, row_repeats, column_repeats}
// naming the offending row/column via Error::index().
LatinSquare validate_latin_square(const std::vector<std::vector<int>>& cells);
LatinSquare validate_latin_square_flat(int n, std::vector<int> cells);

// Simple undirected graph, adjacency-matrix backed (desk-scale sizes).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {}

  int order() const { return n_; }
  bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v] != 0; }

  void add_edge(int u, int v);

  int degree(int u) const;
  std::vector<int> neighbors(int u) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
  long edge_count() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  int n_ = 0;
  std::vector<uint8_t> adj_;
};

struct SrgParams {
  long n = 0;
  long k = 0;
  long lambda = 0;
  long mu = 0;

  // k(k - lambda - 1) = (n - k - 1) mu
  bool feasible() const { return k * (k - lambda - 1) == (n - k - 1) * mu; }

  bool operator==(const SrgParams& o) const {
    return n == o.n && k == o.k && lambda == o.lambda && mu == o.mu;
  }
  bool operator!=(const SrgParams& o) const { return !(*this == o); }
};

// Returns (n, k, lambda, mu) if g is strongly regular; absent otherwise.
// Complete and empty graphs return absent (lambda resp. mu is vacuous).
std::optional<SrgParams> srg_check(const Graph& g);

// Parameters of the complement graph: (n, n-k-1, n-2-2k+mu, n-2k+lambda).
// Throws Error{complement_infeasible} if any component would be negative.
SrgParams srg_complement_params(const SrgParams& p);

// Steiner (t, k, v)-design: every t-subset of points lies in exactly one
// block. Blocks are stored sorted (each ascending, list lexicographic).
class SteinerDesign {
 public:
  SteinerDesign() = default;

  int v() const { return v_; }
  int t() const { return t_; }
  int k() const { return k_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  bool operator==(const SteinerDesign& o) const {
    return v_ == o.v_ && t_ == o.t_ && k_ == o.k_ && blocks_ == o.blocks_;
  }

  friend SteinerDesign validate_steiner_design(int v, int t, int k,
                                               std::vector<std::vector<int>> blocks);

 private:
  int v_ = 0, t_ = 0, k_ = 0;
  std::vector<std::vector<int>> blocks_;
};

// Throws Error{not_sts} (with detail) when the Steiner property fails.
SteinerDesign validate_steiner_design(int v, int t, int k,
                                      std::vector<std::vector<int>> blocks);

// Net of order n, degree k: n^2 points in k parallel classes of n disjoint
// lines; lines from distinct classes meet in exactly one point.
class Net {
 public:
  Net() = default;

  int order() const { return n_; }
  int degree() const { return k_; }
  // classes()[c] is a list of n lines, each a sorted list of n points.
  const std::vector<std::vector<std::vector<int>>>& classes() const { return classes_; }

  std::vector<std::vector<int>> all_lines() const;

  bool operator==(const Net& o) const {
    return n_ == o.n_ && k_ == o.k_ && classes_ == o.classes_;
  }

  friend Net validate_net(int n, int k, std::vector<std::vector<std::vector<int>>> classes);

 private:
  int n_ = 0, k_ = 0;
  std::vector<std::vector<std::vector<int>>> classes_;
};

// Throws Error{malformed_net} with detail on the violated condition.
Net validate_net(int n, int k, std::vector<std::vector<std::vector<int>>> classes);

// Groups a bare line list into parallel classes (two lines are classmates
// iff disjoint) and validates the result.
Net net_from_lines(int n, int k, const std::vector<std::vector<int>>& lines);

// Triple of bijections (alpha, beta, gamma) on {0..n-1}.
struct Isotopy {
  std::vector<int> alpha, beta, gamma;

  int order() const { return static_cast<int>(alpha.size()); }
  static Isotopy identity(int n);
};

bool is_permutation(const std::vector<int>& p);

// Homotopy condition over all n^2 pairs: alpha(a) beta(b) = gamma(ab),
// i.e. L2[alpha(a)][beta(b)] == gamma(L1[a][b]).
bool verify_isotopy(const LatinSquare& l1, const LatinSquare& l2, const Isotopy& iso);

// Applies an isotopy: result[alpha(r)][beta(c)] = gamma(L[r][c]).
LatinSquare apply_isotopy(const LatinSquare& l, const Isotopy& iso);

std::vector<int> inverse_permutation(const std::vector<int>& p);
std::vector<int> compose_permutations(const std::vector<int>& outer,
                                      const std::vector<int>& inner);  // outer(inner(x))

}  // namespace isokit
