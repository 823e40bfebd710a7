#include <stdexcept>
#include <vector>

#include "corpus.hpp"
#include "doctest.h"
#include "kindep/distance.hpp"
#include "kindep/products.hpp"

using namespace kindep;
using kindep::testing::named_corpus;
using kindep::testing::random_corpus;

namespace {

// Edge sets straight from the pairwise definitions, O((n1 n2)^2).
Graph definitional_product(ProductKind kind, const Graph& g1, const Graph& g2) {
    const std::size_t n2 = g2.order();
    const std::size_t n = g1.order() * n2;
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            const auto u = unflatten(a, n2);
            const auto v = unflatten(b, n2);
            const bool e1 = g1.has_edge(u.first, v.first);
            const bool e2 = g2.has_edge(u.second, v.second);
            const bool same1 = u.first == v.first;
            const bool same2 = u.second == v.second;
            const bool cart = (same1 && e2) || (same2 && e1);
            const bool tensor = e1 && e2;
            bool edge = false;
            switch (kind) {
            case ProductKind::cartesian: edge = cart; break;
            case ProductKind::tensor: edge = tensor; break;
            case ProductKind::strong: edge = cart || tensor; break;
            case ProductKind::lexicographic: edge = e1 || (same1 && e2); break;
            }
            if (edge) edges.emplace_back(a, b);
        }
    }
    return Graph(n, edges);
}

// Walk-length reachability by repeated boolean multiplication of the
// adjacency matrix; lengths up to 2n + 1 decide both parities.
struct WalkOracle {
    std::size_t n;
    std::vector<std::vector<std::vector<bool>>> by_length;  // [L][u][v]

    explicit WalkOracle(const Graph& g) : n(g.order()) {
        const std::size_t max_len = 2 * n + 2;
        by_length.assign(max_len + 1, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)));
        for (Vertex v = 0; v < n; ++v) by_length[0][v][v] = true;
        for (std::size_t L = 1; L <= max_len; ++L) {
            for (Vertex u = 0; u < n; ++u) {
                for (Vertex w = 0; w < n; ++w) {
                    if (!by_length[L - 1][u][w]) continue;
                    for (Vertex v : g.neighbors(w)) by_length[L][u][v] = true;
                }
            }
        }
    }

    Distance shortest(Vertex u, Vertex v, unsigned parity) const {
        for (std::size_t L = parity; L < by_length.size(); L += 2) {
            if (by_length[L][u][v]) return Distance(static_cast<std::uint32_t>(L));
        }
        return Distance::unreachable();
    }
};

Graph transpose_labels(const Graph& g, std::size_t n1, std::size_t n2) {
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) {
        const auto u = unflatten(a, n2);
        const auto v = unflatten(b, n2);
        edges.emplace_back(flatten({u.second, u.first}, n1), flatten({v.second, v.first}, n1));
    }
    return Graph(g.order(), edges);
}

bool edge_subset(const Graph& a, const Graph& b) {
    for (auto [u, v] : a.edges()) {
        if (!b.has_edge(u, v)) return false;
    }
    return true;
}

std::vector<std::pair<Graph, Graph>> factor_pairs(std::uint64_t seed, std::size_t count, std::size_t n_max) {
    const auto left = random_corpus(seed, count, n_max);
    const auto right = random_corpus(seed + 1000, count, n_max);
    std::vector<std::pair<Graph, Graph>> out;
    for (std::size_t i = 0; i < count; ++i) out.emplace_back(left[i], right[i]);
    const auto named = named_corpus();
    for (std::size_t i = 0; i < named.size(); i += 3) {
        for (std::size_t j = 1; j < named.size(); j += 4) out.emplace_back(named[i], named[j]);
    }
    return out;
}

const Graph k1 = make_named(Family::complete, 1);
const Graph k2 = make_named(Family::complete, 2);
const Graph p2 = make_named(Family::path, 2);
const Graph p3 = make_named(Family::path, 3);
const Graph p4 = make_named(Family::path, 4);
const Graph c3 = make_named(Family::cycle, 3);
const Graph two_k1 = make_named(Family::edgeless, 2);

}  // namespace

TEST_CASE("product kind names") {
    for (auto kind : kAllProductKinds) CHECK(parse_product_kind(to_string(kind)) == kind);
    CHECK(parse_product_kind("direct") == ProductKind::tensor);
    CHECK_FALSE(parse_product_kind("modular").has_value());
}

TEST_CASE("product examples") {
    const auto tensor = product(ProductKind::tensor, p2, p3);
    CHECK(tensor.order() == 6);
    CHECK(components(tensor).size() == 2);

    CHECK(product(ProductKind::strong, k2, k2) == make_named(Family::complete, 4));

    const auto ladder = product(ProductKind::cartesian, k2, p4);
    CHECK(ladder.order() == 8);
    CHECK(ladder.size() == 10);
    CHECK(definitional_product(ProductKind::cartesian, k2, p4).size() == 10);

    // Complete bipartite between the fibres {0,1} and {2,3}: a 4-cycle.
    const auto lex = product(ProductKind::lexicographic, k2, two_k1);
    CHECK(lex.edges() == std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    for (Vertex v = 0; v < 4; ++v) CHECK(lex.degree(v) == 2);

    for (auto kind : kAllProductKinds) {
        // K1 has no loop, so the tensor product with it is edgeless.
        const auto expected = kind == ProductKind::tensor ? make_named(Family::edgeless, 4) : p4;
        CHECK(product(kind, k1, p4) == expected);
    }
    CHECK(product(ProductKind::cartesian, Graph(0), p4).order() == 0);
}

TEST_CASE("products match the pairwise definitions") {
    for (const auto& [g1, g2] : factor_pairs(21, 80, 6)) {
        for (auto kind : kAllProductKinds) CHECK(product(kind, g1, g2) == definitional_product(kind, g1, g2));
    }
}

TEST_CASE("edge-set relations between products") {
    for (const auto& [g1, g2] : factor_pairs(22, 100, 7)) {
        const auto cart = product(ProductKind::cartesian, g1, g2);
        const auto tensor = product(ProductKind::tensor, g1, g2);
        const auto strong = product(ProductKind::strong, g1, g2);
        const auto lex = product(ProductKind::lexicographic, g1, g2);
        CHECK(strong.size() == cart.size() + tensor.size());
        CHECK(edge_subset(cart, strong));
        CHECK(edge_subset(tensor, strong));
        CHECK(edge_subset(strong, lex));
        std::vector<Edge> merged = cart.edges();
        for (auto e : tensor.edges()) merged.push_back(e);
        CHECK(strong == Graph(strong.order(), merged));
    }
}

TEST_CASE("commutativity up to transposed labels") {
    for (const auto& [g1, g2] : factor_pairs(23, 60, 6)) {
        for (auto kind : {ProductKind::cartesian, ProductKind::tensor, ProductKind::strong}) {
            CHECK(transpose_labels(product(kind, g1, g2), g1.order(), g2.order()) == product(kind, g2, g1));
        }
    }
    // Lexicographic is not commutative.
    CHECK(transpose_labels(product(ProductKind::lexicographic, k2, two_k1), 2, 2) !=
          product(ProductKind::lexicographic, two_k1, k2));
}

TEST_CASE("strong power identity under the shared labelling") {
    for (const auto& [g1, g2] : factor_pairs(24, 60, 6)) {
        for (std::uint32_t k = 1; k <= 4; ++k) {
            CHECK(product(ProductKind::strong, power(g1, k), power(g2, k)) ==
                  power(product(ProductKind::strong, g1, g2), k));
        }
    }
}

TEST_CASE("cartesian and strong closed forms") {
    const auto d_k2 = bfs_distances(k2);
    const auto d_p4 = bfs_distances(p4);
    CHECK(cartesian_distance(d_k2, d_p4, {0, 0}, {1, 2}) == Distance(3));
    CHECK(cartesian_distance(d_k2, d_p4, {1, 3}, {1, 3}) == Distance(0));
    const auto d_2k1 = bfs_distances(two_k1);
    CHECK_FALSE(cartesian_distance(d_k2, d_2k1, {0, 0}, {0, 1}).finite());
    CHECK_THROWS_AS(cartesian_distance(d_k2, d_p4, {2, 0}, {0, 0}), std::out_of_range);

    CHECK(strong_distance(d_k2, d_p4, {0, 0}, {1, 3}) == Distance(3));
    CHECK(strong_distance(d_k2, d_p4, {1, 1}, {1, 1}) == Distance(0));
    const auto bfs = bfs_distances(product(ProductKind::strong, p4, p4));
    CHECK(bfs(flatten({0, 0}, 4), flatten({3, 1}, 4)) == Distance(3));
    CHECK(strong_distance(d_p4, d_p4, {0, 0}, {3, 1}) == Distance(3));
}

TEST_CASE("parity distances") {
    const auto p = parity_distances(p2);
    CHECK(p.odd(0, 1) == Distance(1));
    CHECK_FALSE(p.even(0, 1).finite());
    CHECK(p.even(0, 0) == Distance(0));
    CHECK_FALSE(p.odd(0, 0).finite());

    const auto t = parity_distances(c3);
    CHECK(t.even(0, 1) == Distance(2));
    CHECK(t.odd(0, 1) == Distance(1));
    CHECK(t.odd(0, 0) == Distance(3));

    const auto iso = parity_distances(two_k1);
    CHECK(iso.isolated[0]);
    CHECK_FALSE(p.isolated[0]);
}

TEST_CASE("parity distances agree with walk enumeration") {
    auto corpus = random_corpus(25, 120, 8);
    for (const auto& g : named_corpus()) corpus.push_back(g);
    for (const auto& g : corpus) {
        const auto p = parity_distances(g);
        const WalkOracle walks(g);
        for (Vertex u = 0; u < g.order(); ++u) {
            for (Vertex v = 0; v < g.order(); ++v) {
                CHECK(p.even(u, v) == walks.shortest(u, v, 0));
                CHECK(p.odd(u, v) == walks.shortest(u, v, 1));
                if (p.even(u, v).finite()) CHECK(p.even(u, v).hops() % 2 == 0);
                if (p.odd(u, v).finite()) CHECK(p.odd(u, v).hops() % 2 == 1);
                // Lengthening by two, except for the empty walk at an isolated vertex.
                for (auto d : {p.even(u, v), p.odd(u, v)}) {
                    if (!d.finite() || d.hops() + 2 >= walks.by_length.size()) continue;
                    const bool stuck = u == v && g.degree(u) == 0;
                    CHECK(walks.by_length[d.hops() + 2][u][v] == !stuck);
                }
            }
        }
    }
}

TEST_CASE("tensor closed form") {
    const auto pp2 = parity_distances(p2);
    const auto pp3 = parity_distances(p3);
    CHECK(tensor_distance(pp2, pp3, {0, 0}, {0, 2}) == Distance(2));
    CHECK_FALSE(tensor_distance(pp2, pp3, {0, 0}, {0, 1}).finite());
    CHECK(tensor_distance(pp2, pp3, {1, 2}, {1, 2}) == Distance(0));

    const auto bfs = bfs_distances(product(ProductKind::tensor, p2, p3));
    CHECK(bfs(flatten({0, 0}, 3), flatten({0, 2}, 3)) == Distance(2));
    CHECK_FALSE(bfs(flatten({0, 0}, 3), flatten({0, 1}, 3)).finite());

    // An isolated first coordinate freezes the walk: the common length 2 of
    // the parity tables is not realisable.
    const auto pk1 = parity_distances(k1);
    CHECK_FALSE(tensor_distance(pk1, pp3, {0, 0}, {0, 2}).finite());
}

TEST_CASE("lexicographic closed form") {
    const auto d_k2 = bfs_distances(k2);
    const auto d_2k1 = bfs_distances(two_k1);
    const auto deg_k2 = degree_table(k2);
    CHECK(lexicographic_distance(d_k2, deg_k2, d_2k1, {0, 0}, {0, 1}) == Distance(2));
    CHECK(lexicographic_distance(d_k2, deg_k2, d_2k1, {1, 1}, {1, 1}) == Distance(0));

    const std::vector<Graph> parts{k2, k1};
    const auto g1 = disjoint_union(parts);
    const auto d1 = bfs_distances(g1);
    const auto d_p4 = bfs_distances(p4);
    CHECK(lexicographic_distance(d1, degree_table(g1), d_p4, {2, 0}, {2, 3}) == Distance(3));
    const auto bfs = bfs_distances(product(ProductKind::lexicographic, g1, p4));
    CHECK(bfs(flatten({2, 0}, 4), flatten({2, 3}, 4)) == Distance(3));

    CHECK_THROWS_AS(lexicographic_distance(d_k2, degree_table(p4), d_p4, {0, 0}, {0, 1}), std::invalid_argument);
}

TEST_CASE("closed forms equal BFS on the product") {
    for (const auto& [g1, g2] : factor_pairs(26, 120, 7)) {
        for (auto kind : kAllProductKinds) {
            CHECK(product_distances(kind, g1, g2) == bfs_distances(product(kind, g1, g2)));
        }
    }
}

TEST_CASE("tensor distance is at least the coordinate maximum") {
    for (const auto& [g1, g2] : factor_pairs(27, 80, 7)) {
        const auto d1 = bfs_distances(g1);
        const auto d2 = bfs_distances(g2);
        const auto tensor = product_distances(ProductKind::tensor, g1, g2);
        const std::size_t n2 = g2.order();
        for (Vertex a = 0; a < tensor.order(); ++a) {
            for (Vertex b = 0; b < tensor.order(); ++b) {
                const auto u = unflatten(a, n2);
                const auto v = unflatten(b, n2);
                CHECK(tensor(a, b) >= std::max(d1(u.first, v.first), d2(u.second, v.second)));
            }
        }
    }
}
