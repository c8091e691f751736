#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "lapgirth/graph.hpp"

namespace lapgirth {

// Raised for malformed graph6 input; position() is the byte offset of the
// first offending character.
class Graph6Error : public std::invalid_argument {
 public:
  Graph6Error(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// graph6: size header (63+n, or '~' plus three bytes for 63..64), then the
// upper triangle in column-major order (0,1),(0,2),(1,2),(0,3),... packed
// six bits per byte offset by 63, zero padded. A trailing newline is
// accepted; any padding bit that is set is rejected.
Graph from_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

}  // namespace lapgirth
