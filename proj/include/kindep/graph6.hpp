#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kindep/graph.hpp"

namespace kindep {

/// Thrown on malformed graph6 input; `offset()` is the byte position of the
/// first offending character.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(std::string message, std::size_t offset)
        : std::runtime_error(message + " at byte " + std::to_string(offset)),
          message_(std::move(message)),
          offset_(offset) {}
    const std::string& message() const { return message_; }
    std::size_t offset() const { return offset_; }

private:
    std::string message_;
    std::size_t offset_;
};

inline constexpr std::string_view kGraph6Header = ">>graph6<<";
inline constexpr std::size_t kGraph6MaxOrder = 1'000'000;

/// Canonical graph6 text (no header, no newline).
std::string graph6_encode(const Graph& g);

/// Parses one graph6 record. An optional ">>graph6<<" prefix is stripped.
/// Padding bits must be zero; nothing may follow the edge bytes.
Graph graph6_decode(std::string_view text);

/// One graph per non-empty line; trailing '\r' is ignored.
std::vector<Graph> graph6_decode_lines(std::string_view text);

}  // namespace kindep
