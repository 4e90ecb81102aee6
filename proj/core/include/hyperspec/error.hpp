#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperspec {

enum class ErrorCode {
  parse,
  validation,
  unknown_vertex,
  empty_query,
  empty_hypergraph,
  no_edges,
  disconnected_input,
  malformed_cut,
  malformed_spec,
  duplicate_index,
  bad_index,
  bad_params,
  infeasible_params,
  not_a_graph,
  not_uniform,
  mismatched_uniformity,
  size_cap_exceeded,
  dimension_cap_exceeded,
  not_isolated,
  not_a_weak_cut,
  not_regular_uniform,
  convergence_failure,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// front ends can map it onto exit statuses without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hyperspec
