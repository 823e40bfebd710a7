#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "kindep/distance.hpp"
#include "kindep/graph.hpp"

namespace kindep {

enum class ProductKind { cartesian, tensor, strong, lexicographic };

inline constexpr std::array<ProductKind, 4> kAllProductKinds{
    ProductKind::cartesian, ProductKind::tensor, ProductKind::strong, ProductKind::lexicographic};

std::string_view to_string(ProductKind kind);
std::optional<ProductKind> parse_product_kind(std::string_view name);

/// A product vertex (u1, u2). It is stored in the product graph at index
/// u1 * n2 + u2.
struct VertexPair {
    Vertex first = 0;
    Vertex second = 0;
    friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

inline Vertex flatten(VertexPair p, std::size_t n2) {
    return static_cast<Vertex>(p.first * n2 + p.second);
}
inline VertexPair unflatten(Vertex v, std::size_t n2) {
    return {static_cast<Vertex>(v / n2), static_cast<Vertex>(v % n2)};
}

Graph product(ProductKind kind, const Graph& g1, const Graph& g2);

/// Shortest even and odd walk lengths between every pair.
///
/// A walk of length L >= 1 can be lengthened to L + 2 by retracing its last
/// edge, and so can the empty walk at a vertex with a neighbour. The only
/// walk that cannot grow is the empty walk at an isolated vertex, which is
/// why isolated vertices are tracked separately.
struct ParityDistances {
    DistanceMatrix even;
    DistanceMatrix odd;
    std::vector<bool> isolated;

    std::size_t order() const { return isolated.size(); }
};

ParityDistances parity_distances(const Graph& g);

std::vector<std::size_t> degree_table(const Graph& g);

// Closed-form distances in a product, from the factor distance data.
// Coordinates out of range throw std::out_of_range.

Distance cartesian_distance(const DistanceMatrix& d1, const DistanceMatrix& d2, VertexPair u, VertexPair v);
Distance strong_distance(const DistanceMatrix& d1, const DistanceMatrix& d2, VertexPair u, VertexPair v);
Distance tensor_distance(const ParityDistances& p1, const ParityDistances& p2, VertexPair u, VertexPair v);
Distance lexicographic_distance(const DistanceMatrix& d1, std::span<const std::size_t> degrees1,
                                const DistanceMatrix& d2, VertexPair u, VertexPair v);

/// Full distance matrix of product(kind, g1, g2) assembled from the
/// closed-form oracles, in the same row-major labelling.
DistanceMatrix product_distances(ProductKind kind, const Graph& g1, const Graph& g2);

}  // namespace kindep
