#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "kindep/graph.hpp"

namespace kindep {

/// Hop count or "unreachable".
///
/// Unreachable orders after every finite distance, so `d > k` is true for it
/// for every k, and it absorbs addition.
class Distance {
public:
    constexpr Distance() = default;
    constexpr explicit Distance(std::uint32_t hops) : hops_(hops) {}

    static constexpr Distance unreachable() { return Distance(kUnreachable); }

    constexpr bool finite() const { return hops_ != kUnreachable; }
    constexpr std::uint32_t hops() const { return hops_; }
    constexpr bool within(std::uint32_t k) const { return finite() && hops_ <= k; }

    friend constexpr auto operator<=>(Distance, Distance) = default;

    friend constexpr Distance operator+(Distance a, Distance b) {
        if (!a.finite() || !b.finite()) return unreachable();
        return Distance(a.hops_ + b.hops_);
    }

    std::string to_string() const { return finite() ? std::to_string(hops_) : "inf"; }

private:
    static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t hops_ = 0;
};

/// Dense n x n matrix of distances, row-major.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, Distance::unreachable()) {}

    std::size_t order() const { return n_; }

    Distance operator()(Vertex u, Vertex v) const { return data_[index(u, v)]; }
    Distance& operator()(Vertex u, Vertex v) { return data_[index(u, v)]; }
    Distance at(Vertex u, Vertex v) const;

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    std::size_t index(Vertex u, Vertex v) const { return std::size_t{u} * n_ + v; }

    std::size_t n_ = 0;
    std::vector<Distance> data_;
};

/// Single-source BFS. When `limit` is given, vertices farther than `limit`
/// are reported unreachable.
std::vector<Distance> bfs_from(const Graph& g, Vertex source,
                               std::uint32_t limit = std::numeric_limits<std::uint32_t>::max());

DistanceMatrix bfs_distances(const Graph& g);

}  // namespace kindep
