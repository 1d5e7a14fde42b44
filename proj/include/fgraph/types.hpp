#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace fgraph {

using vertex_t = std::int32_t;
using edge_t = std::int64_t;
using weight_t = std::int64_t;
using distance_t = std::int64_t;

// Frontier items hold either vertex ids or edge ids.
using item_t = std::int64_t;

inline constexpr distance_t kInfDistance = std::numeric_limits<distance_t>::max() / 2;
inline constexpr std::int32_t kInfDepth = std::numeric_limits<std::int32_t>::max();
inline constexpr vertex_t kNoVertex = -1;

enum class FrontierKind { Vertex, Edge };

enum class Direction { Push, Pull, Auto };

// Thrown when a graph cannot be constructed from its inputs.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown for malformed Matrix Market input; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Thrown when an API or CLI is called with arguments that violate its contract.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const char* to_string(FrontierKind kind);
const char* to_string(Direction direction);

}  // namespace fgraph
