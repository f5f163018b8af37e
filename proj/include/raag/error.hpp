#pragma once

#include <cstddef>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace raag {

enum class ErrorKind {
  duplicate_vertex,
  unknown_endpoint,
  explicit_self_loop,
  invalid_name,
  unknown_vertex,
  not_a_hom,
  mismatched_ends,
  search_space_too_large,
  unknown_generator,
  zero_exponent,
  syntax_error,
  graph_mismatch,
  not_a_homomorphism,
  base_mismatch,
  not_a_coalgebra,
  budget_exhausted,
  invalid_input,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::duplicate_vertex: return "DuplicateVertex";
    case ErrorKind::unknown_endpoint: return "UnknownEndpoint";
    case ErrorKind::explicit_self_loop: return "ExplicitSelfLoop";
    case ErrorKind::invalid_name: return "InvalidName";
    case ErrorKind::unknown_vertex: return "UnknownVertex";
    case ErrorKind::not_a_hom: return "NotAHom";
    case ErrorKind::mismatched_ends: return "MismatchedEnds";
    case ErrorKind::search_space_too_large: return "SearchSpaceTooLarge";
    case ErrorKind::unknown_generator: return "UnknownGenerator";
    case ErrorKind::zero_exponent: return "ZeroExponent";
    case ErrorKind::syntax_error: return "SyntaxError";
    case ErrorKind::graph_mismatch: return "GraphMismatch";
    case ErrorKind::not_a_homomorphism: return "NotAHomomorphism";
    case ErrorKind::base_mismatch: return "BaseMismatch";
    case ErrorKind::not_a_coalgebra: return "NotACoalgebra";
    case ErrorKind::budget_exhausted: return "BudgetExhausted";
    case ErrorKind::invalid_input: return "InvalidInput";
  }
  return "Unknown";
}

/// Every failure raised by the library. The message is prefixed with the
/// kind name, e.g. "UnknownGenerator: e".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class BudgetExhausted : public Error {
 public:
  BudgetExhausted(std::size_t found, std::size_t wanted)
      : Error(ErrorKind::budget_exhausted,
              "found " + std::to_string(found) + " of "
                  + std::to_string(wanted)),
        found_(found),
        wanted_(wanted) {}

  std::size_t found() const noexcept { return found_; }
  std::size_t wanted() const noexcept { return wanted_; }

 private:
  std::size_t found_;
  std::size_t wanted_;
};

// Non-fatal diagnostics (e.g. identity symbols in AC words) go through this
// hook. Defaults to standard error.
inline std::function<void(std::string_view)>& warning_handler() {
  static std::function<void(std::string_view)> handler
      = [](std::string_view msg) { std::clog << "warning: " << msg << '\n'; };
  return handler;
}

inline void warn(std::string_view msg) {
  if (auto const& h = warning_handler()) {
    h(msg);
  }
}

}  // namespace raag
