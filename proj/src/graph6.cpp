#include "kindep/graph6.hpp"

#include <cstdint>

namespace kindep {

namespace {

constexpr int kBias = 63;
constexpr unsigned char kLongForm = 126;

void append_order(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kLongForm));
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out.push_back(static_cast<char>(kLongForm));
        out.push_back(static_cast<char>(kLongForm));
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
}

unsigned sextet(std::string_view text, std::size_t pos, std::size_t base) {
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > 126) throw Graph6Error("byte outside the printable range 63..126", base + pos);
    return c - kBias;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kGraph6MaxOrder) throw std::invalid_argument("graph too large for graph6 encoding");
    std::string out;
    append_order(out, n);
    unsigned accumulator = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            accumulator = (accumulator << 1) | (g.has_edge(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(accumulator + kBias));
                accumulator = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((accumulator << (6 - filled)) + kBias));
    return out;
}

Graph graph6_decode(std::string_view text) {
    std::size_t base = 0;
    if (text.starts_with(kGraph6Header)) {
        base = kGraph6Header.size();
        text.remove_prefix(kGraph6Header.size());
    }
    if (text.empty()) throw Graph6Error("missing order field", base);

    std::size_t n = 0;
    std::size_t pos = 0;
    if (static_cast<unsigned char>(text[0]) != kLongForm) {
        n = sextet(text, 0, base);
        pos = 1;
    } else {
        const bool eight_byte = text.size() > 1 && static_cast<unsigned char>(text[1]) == kLongForm;
        const std::size_t start = eight_byte ? 2 : 1;
        const std::size_t digits = eight_byte ? 6 : 3;
        if (text.size() < start + digits) throw Graph6Error("truncated order field", base + text.size());
        for (std::size_t i = 0; i < digits; ++i) n = (n << 6) | sextet(text, start + i, base);
        const std::size_t lower = eight_byte ? 258048 : 63;
        if (n < lower) throw Graph6Error("non-canonical order field", base);
        if (n > kGraph6MaxOrder) throw Graph6Error("order " + std::to_string(n) + " exceeds supported maximum", base);
        pos = start + digits;
    }

    const std::uint64_t bits = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
    const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() < pos + bytes) throw Graph6Error("truncated edge data", base + text.size());
    if (text.size() > pos + bytes) throw Graph6Error("trailing data after edge bytes", base + pos + bytes);

    std::vector<Edge> edges;
    std::uint64_t bit = 0;
    Vertex i = 0;
    Vertex j = 1;
    for (std::size_t b = 0; b < bytes; ++b) {
        const unsigned value = sextet(text, pos + b, base);
        for (int shift = 5; shift >= 0; --shift, ++bit) {
            const bool set = (value >> shift) & 1u;
            if (bit >= bits) {
                if (set) throw Graph6Error("non-zero padding bit", base + pos + b);
                continue;
            }
            if (set) edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph(n, edges);
}

std::vector<Graph> graph6_decode_lines(std::string_view text) {
    std::vector<Graph> out;
    std::size_t offset = 0;
    while (offset < text.size()) {
        std::size_t end = text.find('\n', offset);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(offset, end - offset);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) {
            try {
                out.push_back(graph6_decode(line));
            } catch (const Graph6Error& e) {
                throw Graph6Error("record " + std::to_string(out.size() + 1) + ": " + e.message(),
                                  offset + e.offset());
            }
        }
        offset = end + 1;
    }
    return out;
}

}  // namespace kindep
