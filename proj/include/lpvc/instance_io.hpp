#pragma once

// Text formats for graph instances.
//
// EDGELIST: a header line "n m" followed by m lines "u v" with 0-based ids.
// DIMACS:   "c" comment lines, one "p edge n m" line, then m lines "e u v"
//           with 1-based ids (converted to 0-based labels on input).
// Blank lines are ignored in both formats.

#include <stdexcept>
#include <string>
#include <string_view>

#include "lpvc/graph.hpp"

namespace lpvc {

enum class InstanceFormat { EdgeList, Dimacs };

/// Malformed syntax. `line` is 1-based (0 when the problem is at end of input).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed syntax describing something that is not a simple graph.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::size_t line, const std::string& what);
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// DIMACS when the first meaningful line starts with "c" or "p", else EDGELIST.
[[nodiscard]] InstanceFormat detect_format(std::string_view text);

[[nodiscard]] Graph parse_instance(std::string_view text, InstanceFormat format);
[[nodiscard]] Graph parse_instance(std::string_view text);

/// Both writers need labels 0..n-1; throws std::invalid_argument otherwise.
[[nodiscard]] std::string emit_edgelist(const Graph& g);
[[nodiscard]] std::string emit_dimacs(const Graph& g);
[[nodiscard]] std::string emit_instance(const Graph& g, InstanceFormat format);

}  // namespace lpvc
