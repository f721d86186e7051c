#pragma once

#include <stdexcept>
#include <string>

namespace linkgap {

enum class Errc {
  mixed_dimension,
  duplicate_vertex_in_simplex,
  index_out_of_range,
  not_a_simplex,
  link_empty,
  not_disjoint,
  join_not_a_simplex,
  cap_exceeded,
  not_a_bijection,
  invalid_action,
  not_invariant,
  inconsistent_relations,
  singular,
  dimension_mismatch,
  degree_mismatch,
  degree_overflow,
  degree_underflow,
  disconnected_link,
  empty_link,
  isolated_vertex,
  too_large,
  parse_error,
  schema_error,
  unknown_vertex,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace linkgap
