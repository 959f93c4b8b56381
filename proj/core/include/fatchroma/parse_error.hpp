#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fatchroma {

/// Malformed external input. `position` is a byte offset for single-line
/// formats (graph6) and a 1-based line number for line-oriented ones
/// (DIMACS, coloring files).
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

} // namespace fatchroma
