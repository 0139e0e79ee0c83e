#pragma once

#include <stdexcept>
#include <string>

namespace treelap {

enum class Errc {
  // tree construction / queries
  not_a_tree,
  non_positive_weight,
  bad_vertex_id,
  same_vertex,
  // matrix arithmetic
  not_square,
  not_symmetric,
  dimension_mismatch,
  index_out_of_range,
  singular,
  singular_sstar,
  // configuration and I/O
  bad_config,
  parse_error,
  io_error,
  // partition / certificate machinery
  inconsistent_chain,
  bad_certificate_domain,
  tie_detected,
  // a theorem-guaranteed condition failed: implementation bug, not user error
  internal_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace treelap
