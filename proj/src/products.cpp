#include "kindep/products.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kindep {

namespace {

constexpr std::string_view product_symbol(ProductKind kind) {
    switch (kind) {
    case ProductKind::cartesian: return " [] ";
    case ProductKind::tensor: return " x ";
    case ProductKind::strong: return " [x] ";
    case ProductKind::lexicographic: return " . ";
    }
    return " ? ";
}

void check_pair(std::size_t n1, std::size_t n2, VertexPair p) {
    if (p.first >= n1 || p.second >= n2) throw std::out_of_range("product vertex coordinate out of range");
}

}  // namespace

std::string_view to_string(ProductKind kind) {
    switch (kind) {
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::tensor: return "tensor";
    case ProductKind::strong: return "strong";
    case ProductKind::lexicographic: return "lexicographic";
    }
    return "unknown";
}

std::optional<ProductKind> parse_product_kind(std::string_view name) {
    for (auto kind : kAllProductKinds) {
        if (to_string(kind) == name) return kind;
    }
    if (name == "direct" || name == "kronecker") return ProductKind::tensor;
    if (name == "lex") return ProductKind::lexicographic;
    return std::nullopt;
}

Graph product(ProductKind kind, const Graph& g1, const Graph& g2) {
    const std::size_t n1 = g1.order();
    const std::size_t n2 = g2.order();
    const bool cartesian_edges = kind != ProductKind::tensor;
    const bool tensor_edges = kind == ProductKind::tensor || kind == ProductKind::strong;
    std::vector<Edge> edges;
    for (Vertex u1 = 0; u1 < n1; ++u1) {
        for (Vertex u2 = 0; u2 < n2; ++u2) {
            const Vertex u = flatten({u1, u2}, n2);
            auto add = [&](Vertex v1, Vertex v2) {
                const Vertex v = flatten({v1, v2}, n2);
                if (u < v) edges.emplace_back(u, v);
            };
            if (cartesian_edges) {
                for (Vertex w2 : g2.neighbors(u2)) add(u1, w2);
            }
            if (kind == ProductKind::lexicographic) {
                for (Vertex w1 : g1.neighbors(u1)) {
                    for (Vertex w2 = 0; w2 < n2; ++w2) add(w1, w2);
                }
                continue;
            }
            if (cartesian_edges) {
                for (Vertex w1 : g1.neighbors(u1)) add(w1, u2);
            }
            if (tensor_edges) {
                for (Vertex w1 : g1.neighbors(u1)) {
                    for (Vertex w2 : g2.neighbors(u2)) add(w1, w2);
                }
            }
        }
    }
    std::string label;
    if (!g1.label().empty() || !g2.label().empty()) {
        label = g1.label() + std::string(product_symbol(kind)) + g2.label();
    }
    return Graph(n1 * n2, edges, label);
}

ParityDistances parity_distances(const Graph& g) {
    const std::size_t n = g.order();
    ParityDistances out{DistanceMatrix(n), DistanceMatrix(n), std::vector<bool>(n)};
    // BFS over the two-layer graph whose states are (vertex, parity of walk length).
    std::vector<Distance> layer(2 * n);
    std::vector<std::size_t> queue;
    for (Vertex source = 0; source < n; ++source) {
        out.isolated[source] = g.degree(source) == 0;
        std::fill(layer.begin(), layer.end(), Distance::unreachable());
        queue.assign(1, 2 * std::size_t{source});
        layer[2 * source] = Distance(0);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t state = queue[head];
            const auto v = static_cast<Vertex>(state / 2);
            const std::size_t flipped = 1 - state % 2;
            const Distance next(layer[state].hops() + 1);
            for (Vertex w : g.neighbors(v)) {
                const std::size_t target = 2 * std::size_t{w} + flipped;
                if (!layer[target].finite()) {
                    layer[target] = next;
                    queue.push_back(target);
                }
            }
        }
        for (Vertex v = 0; v < n; ++v) {
            out.even(source, v) = layer[2 * v];
            out.odd(source, v) = layer[2 * v + 1];
        }
    }
    return out;
}

std::vector<std::size_t> degree_table(const Graph& g) {
    std::vector<std::size_t> out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) out[v] = g.degree(v);
    return out;
}

Distance cartesian_distance(const DistanceMatrix& d1, const DistanceMatrix& d2, VertexPair u, VertexPair v) {
    check_pair(d1.order(), d2.order(), u);
    check_pair(d1.order(), d2.order(), v);
    return d1(u.first, v.first) + d2(u.second, v.second);
}

Distance strong_distance(const DistanceMatrix& d1, const DistanceMatrix& d2, VertexPair u, VertexPair v) {
    check_pair(d1.order(), d2.order(), u);
    check_pair(d1.order(), d2.order(), v);
    return std::max(d1(u.first, v.first), d2(u.second, v.second));
}

Distance tensor_distance(const ParityDistances& p1, const ParityDistances& p2, VertexPair u, VertexPair v) {
    check_pair(p1.order(), p2.order(), u);
    check_pair(p1.order(), p2.order(), v);
    if (u == v) return Distance(0);
    // A coordinate that stays on an isolated vertex only admits the empty walk.
    const bool frozen1 = u.first == v.first && p1.isolated[u.first];
    const bool frozen2 = u.second == v.second && p2.isolated[u.second];
    if (frozen1 || frozen2) return Distance::unreachable();
    const Distance even = std::max(p1.even(u.first, v.first), p2.even(u.second, v.second));
    const Distance odd = std::max(p1.odd(u.first, v.first), p2.odd(u.second, v.second));
    return std::min(even, odd);
}

Distance lexicographic_distance(const DistanceMatrix& d1, std::span<const std::size_t> degrees1,
                                const DistanceMatrix& d2, VertexPair u, VertexPair v) {
    check_pair(d1.order(), d2.order(), u);
    check_pair(d1.order(), d2.order(), v);
    if (degrees1.size() != d1.order()) throw std::invalid_argument("degree table does not match first factor");
    if (u.first != v.first) return d1(u.first, v.first);
    const Distance inner = d2(u.second, v.second);
    if (degrees1[u.first] == 0) return inner;
    return std::min(inner, Distance(2));
}

DistanceMatrix product_distances(ProductKind kind, const Graph& g1, const Graph& g2) {
    const std::size_t n1 = g1.order();
    const std::size_t n2 = g2.order();
    DistanceMatrix out(n1 * n2);
    const auto d1 = bfs_distances(g1);
    const auto d2 = bfs_distances(g2);
    ParityDistances p1, p2;
    std::vector<std::size_t> degrees1;
    if (kind == ProductKind::tensor) {
        p1 = parity_distances(g1);
        p2 = parity_distances(g2);
    }
    if (kind == ProductKind::lexicographic) degrees1 = degree_table(g1);
    for (Vertex a = 0; a < n1 * n2; ++a) {
        for (Vertex b = 0; b < n1 * n2; ++b) {
            const auto u = unflatten(a, n2);
            const auto v = unflatten(b, n2);
            switch (kind) {
            case ProductKind::cartesian: out(a, b) = cartesian_distance(d1, d2, u, v); break;
            case ProductKind::strong: out(a, b) = strong_distance(d1, d2, u, v); break;
            case ProductKind::tensor: out(a, b) = tensor_distance(p1, p2, u, v); break;
            case ProductKind::lexicographic: out(a, b) = lexicographic_distance(d1, degrees1, d2, u, v); break;
            }
        }
    }
    return out;
}

}  // namespace kindep
