#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace isokit {

// Structured error codes. Every throwing operation in the library reports
// one of these so callers (and tests) can dispatch without string matching.
enum class errc {
  not_square,
  symbol_out_of_range,
  row_repeats,
  column_repeats,
  parse,
  complement_infeasible,
  cap_exceeded,
  length_mismatch,
  not_generating,
  not_found,
  order_mismatch,
  not_sts,
  size_mismatch,
  too_large,
  point_out_of_range,
  unsupported_derived_block_size,
  param_mismatch,
  malformed_net,
  not_affine_plane,
  not_projective_plane,
  not_lsg,
  not_net_graph,
  not_block_graph,
  precondition_violated,
  not_conference_graph,
  inadmissible_order,
  not_prime,
  unknown_spec,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg, long index = -1)
      : std::runtime_error(msg), code_(code), index_(index) {}

  errc code() const { return code_; }
  // Auxiliary index: offending row/column, parse line number, recovery step.
  long index() const { return index_; }

 private:
  errc code_;
  long index_;
};

// Three-valued search outcome. Randomized searches cannot certify absence;
// `no` is only produced by a completed exhaustive enumeration.
enum class Verdict { yes, no, unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "unknown";
  }
}

template <typename W>
struct SearchResult {
  Verdict verdict = Verdict::unknown;
  std::optional<W> witness;

  bool yes() const { return verdict == Verdict::yes; }
  bool no() const { return verdict == Verdict::no; }
  bool unknown() const { return verdict == Verdict::unknown; }

  static SearchResult found(W w) { return {Verdict::yes, std::move(w)}; }
  static SearchResult absent() { return {Verdict::no, std::nullopt}; }
  static SearchResult undecided() { return {Verdict::unknown, std::nullopt}; }
};

}  // namespace isokit
