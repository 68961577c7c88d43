#pragma once

#include <stdexcept>
#include <string>

namespace matroid {

// Machine-readable failure categories. Every deliberate throw in the library
// goes through fail() with one of these, so callers (notably the CLI) can
// distinguish usage errors from internal bugs.
enum class Errc {
  axiom_violation,
  empty_family,
  unknown_element,
  overlap,
  label_collision,
  degenerate_basepoint,
  too_small,
  not_a_2_separation,
  degenerate_element,
  rank_zero,
  not_circuit_hyperplane,
  bad_choice,
  not_connected,
  bad_edge,
  bad_n,
  unknown_name,
  cap_exceeded,
  unsupported_n,
  bad_size,
  precondition_failed,
  parse_error,
  internal,
};

class MatroidError : public std::runtime_error {
 public:
  MatroidError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw MatroidError(code, message);
}

}  // namespace matroid
