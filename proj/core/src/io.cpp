#include "isokit/io.hpp"

#include <fstream>
#include <sstream>

namespace isokit {
namespace {

// Line-oriented tokenizer that tracks line numbers for error reporting.
class LineReader {
 public:
  explicit LineReader(const std::string& text) : in_(text) {}

  // Reads the next line and splits it into exactly `count` integers.
  std::vector<long> ints(size_t count, const char* what) {
    std::string line;
    while (true) {
      if (!std::getline(in_, line))
        throw Error(errc::parse, std::string("line ") + std::to_string(line_no_ + 1) +
                                     ": missing (" + what + ")", line_no_ + 1);
      ++line_no_;
      if (line.find_first_not_of(" \t\r") != std::string::npos) break;
      // blank lines are not part of any format
      throw Error(errc::parse, "line " + std::to_string(line_no_) + ": blank line", line_no_);
    }
    std::istringstream ls(line);
    std::vector<long> out;
    long x;
    while (ls >> x) out.push_back(x);
    std::string rest;
    if (ls.fail() && !ls.eof()) {
      throw Error(errc::parse, "line " + std::to_string(line_no_) + ": non-numeric token", line_no_);
    }
    ls.clear();
    if (ls >> rest)
      throw Error(errc::parse, "line " + std::to_string(line_no_) + ": trailing token", line_no_);
    if (out.size() != count)
      throw Error(errc::parse, "line " + std::to_string(line_no_) + ": expected " +
                                   std::to_string(count) + " values (" + what + "), got " +
                                   std::to_string(out.size()), line_no_);
    return out;
  }

  void expect_end() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw Error(errc::parse, "line " + std::to_string(line_no_) + ": trailing content", line_no_);
    }
  }

 private:
  std::istringstream in_;
  int line_no_ = 0;
};

int checked_int(long x, long lo, long hi, const char* what) {
  if (x < lo || x > hi)
    throw Error(errc::parse, std::string(what) + " out of range: " + std::to_string(x));
  return static_cast<int>(x);
}

}  // namespace

LatinSquare parse_latin_square(const std::string& text) {
  LineReader r(text);
  int n = checked_int(r.ints(1, "order")[0], 1, 4096, "order");
  std::vector<int> cells;
  cells.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    auto row = r.ints(n, "row");
    for (long x : row) cells.push_back(checked_int(x, 0, n - 1, "symbol"));
  }
  r.expect_end();
  return validate_latin_square_flat(n, std::move(cells));
}

std::string serialize(const LatinSquare& l) {
  std::ostringstream out;
  out << l.order() << "\n";
  for (int r = 0; r < l.order(); ++r) {
    for (int c = 0; c < l.order(); ++c) out << (c ? " " : "") << l.at(r, c);
    out << "\n";
  }
  return out.str();
}

Graph parse_graph(const std::string& text) {
  LineReader r(text);
  auto head = r.ints(2, "n m");
  int n = checked_int(head[0], 0, 100000, "vertex count");
  long m = head[1];
  if (m < 0) throw Error(errc::parse, "negative edge count");
  Graph g(n);
  for (long i = 0; i < m; ++i) {
    auto e = r.ints(2, "edge");
    int u = checked_int(e[0], 0, n - 1, "vertex");
    int v = checked_int(e[1], 0, n - 1, "vertex");
    if (u >= v) throw Error(errc::parse, "edge must satisfy u < v");
    if (g.adjacent(u, v)) throw Error(errc::parse, "duplicate edge");
    g.add_edge(u, v);
  }
  r.expect_end();
  return g;
}

std::string serialize(const Graph& g) {
  auto es = g.edges();
  std::ostringstream out;
  out << g.order() << " " << es.size() << "\n";
  for (auto [u, v] : es) out << u << " " << v << "\n";
  return out.str();
}

SteinerDesign parse_design(const std::string& text) {
  LineReader r(text);
  auto head = r.ints(4, "v t k b");
  int v = checked_int(head[0], 1, 100000, "point count");
  int t = checked_int(head[1], 1, v, "strength");
  int k = checked_int(head[2], t, v, "block size");
  long b = head[3];
  if (b < 0) throw Error(errc::parse, "negative block count");
  std::vector<std::vector<int>> blocks;
  blocks.reserve(b);
  for (long i = 0; i < b; ++i) {
    auto line = r.ints(k, "block");
    std::vector<int> blk;
    for (long x : line) blk.push_back(checked_int(x, 0, v - 1, "point"));
    for (size_t j = 1; j < blk.size(); ++j)
      if (blk[j - 1] >= blk[j]) throw Error(errc::parse, "block points must ascend");
    blocks.push_back(std::move(blk));
  }
  r.expect_end();
  return validate_steiner_design(v, t, k, std::move(blocks));
}

std::string serialize(const SteinerDesign& d) {
  std::ostringstream out;
  out << d.v() << " " << d.t() << " " << d.k() << " " << d.block_count() << "\n";
  for (const auto& b : d.blocks()) {
    for (size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
    out << "\n";
  }
  return out.str();
}

Net parse_net(const std::string& text) {
  LineReader r(text);
  auto head = r.ints(2, "n k");
  int n = checked_int(head[0], 1, 4096, "order");
  int k = checked_int(head[1], 0, n + 1, "degree");
  std::vector<std::vector<std::vector<int>>> classes(k);
  for (long i = 0; i < static_cast<long>(k) * n; ++i) {
    auto line = r.ints(1 + n, "line");
    int cls = checked_int(line[0], 0, k - 1, "class id");
    std::vector<int> pts;
    for (int j = 1; j <= n; ++j) pts.push_back(checked_int(line[j], 0, n * n - 1, "point"));
    classes[cls].push_back(std::move(pts));
  }
  r.expect_end();
  return validate_net(n, k, std::move(classes));
}

std::string serialize(const Net& net) {
  std::ostringstream out;
  out << net.order() << " " << net.degree() << "\n";
  for (int c = 0; c < net.degree(); ++c) {
    for (const auto& line : net.classes()[c]) {
      out << c;
      for (int p : line) out << " " << p;
      out << "\n";
    }
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(errc::io, "cannot write " + path);
  out << content;
}

}  // namespace isokit
