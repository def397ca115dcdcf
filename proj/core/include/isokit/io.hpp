#pragma once

#include <string>

#include "isokit/structures.hpp"

namespace isokit {

// Text formats (ASCII, newline-terminated, no comments):
//   Latin square: line 1 = n; lines 2..n+1 = n space-separated symbols.
//   Graph:        line 1 = "n m"; then m lines "u v" (0-indexed, u < v).
//   Design:       line 1 = "v t k b"; then b lines of k ascending points.
//   Net:          line 1 = "n k"; then k*n lines "c p1 ... pn".
// Parsers are strict: wrong token counts, trailing content, or out-of-range
// values raise Error{parse} carrying the 1-based line number; all parsed
// objects are re-validated.

LatinSquare parse_latin_square(const std::string& text);
std::string serialize(const LatinSquare& l);

Graph parse_graph(const std::string& text);
std::string serialize(const Graph& g);

SteinerDesign parse_design(const std::string& text);
std::string serialize(const SteinerDesign& d);

Net parse_net(const std::string& text);
std::string serialize(const Net& net);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace isokit
