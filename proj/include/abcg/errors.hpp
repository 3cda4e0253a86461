#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace abcg {

// Malformed textual input. `line`/`col` are 1-based; line 0 means "unknown".
struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_ = 0, int col_ = 0)
      : std::runtime_error(msg), line(line_), col(col_) {}
};

// A computation exceeded its configured step budget.
struct ResourceError : std::runtime_error {
  std::int64_t steps;
  explicit ResourceError(std::int64_t steps_)
      : std::runtime_error("step budget exceeded after " +
                           std::to_string(steps_) + " reduction steps"),
        steps(steps_) {}
};

}  // namespace abcg
