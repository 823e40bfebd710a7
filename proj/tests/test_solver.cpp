#include <bit>

#include "corpus.hpp"
#include "doctest.h"
#include "kindep/distance.hpp"
#include "kindep/products.hpp"
#include "kindep/solver.hpp"

using namespace kindep;
using kindep::testing::random_corpus;

namespace {

Graph petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, 5 + (i + 2) % 5);
    }
    return Graph(10, edges, "Petersen");
}

Graph k33() {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < 3; ++a) {
        for (Vertex b = 3; b < 6; ++b) edges.emplace_back(a, b);
    }
    return Graph(6, edges);
}

// Largest independent subset over all 2^n masks.
std::size_t subset_scan_alpha(const Graph& g) {
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << g.order()); ++mask) {
        bool ok = true;
        for (auto [u, v] : g.edges()) {
            if (((mask >> u) & 1u) && ((mask >> v) & 1u)) ok = false;
        }
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
    }
    return best;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (Vertex u : s.members()) {
        for (Vertex v : s.members()) {
            if (g.has_edge(u, v)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("maximum independent set examples") {
    CHECK(max_independent_set(make_named(Family::cycle, 5)).alpha == 2);
    for (std::size_t n = 1; n <= 7; ++n) CHECK(max_independent_set(make_named(Family::complete, n)).alpha == 1);

    const auto pg = petersen();
    CHECK(subset_scan_alpha(pg) == 4);
    CHECK(max_independent_set(pg).alpha == 4);

    const auto edgeless = max_independent_set(make_named(Family::edgeless, 6));
    CHECK(edgeless.alpha == 6);
    CHECK(edgeless.witness.size() == 6);

    const auto empty = max_independent_set(Graph(0));
    CHECK(empty.alpha == 0);
    CHECK(empty.witness.empty());
}

TEST_CASE("witness is deterministic") {
    const auto g = make_named(Family::path, 7);
    const auto a = max_independent_set(g);
    const auto b = max_independent_set(g);
    CHECK(a.witness == b.witness);
    CHECK(a.alpha == 4);
    CHECK(a.witness == VertexSet(7, {0, 2, 4, 6}));
}

TEST_CASE("k-independence number examples") {
    for (std::uint32_t k : {2u, 4u}) CHECK(k_independence_number(make_named(Family::path, k + 2), k).alpha == 2);
    for (std::uint32_t k : {1u, 2u, 3u}) {
        CHECK(k_independence_number(make_named(Family::cycle, 2 * k + 1), k).alpha == 1);
    }
    const auto k2 = make_named(Family::complete, 2);
    CHECK(k_independence_number(product(ProductKind::cartesian, k2, k2), 2).alpha == 1);

    const auto p4 = k_independence_number(make_named(Family::path, 4), 2);
    CHECK(p4.witness == VertexSet(4, {0, 3}));
    CHECK_THROWS_AS(k_independence_number(k2, 0), std::invalid_argument);
}

TEST_CASE("brute-force oracle") {
    CHECK(brute_force_alpha(make_named(Family::edgeless, 5)).alpha == 5);
    CHECK(brute_force_alpha(k33()).alpha == 3);
    CHECK(brute_force_alpha(petersen()).alpha == 4);
    CHECK(brute_force_alpha(Graph(0)).alpha == 0);
    CHECK_THROWS_AS(brute_force_alpha(make_named(Family::path, 21)), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_alpha(make_named(Family::path, 5), 31), std::invalid_argument);
    CHECK(brute_force_alpha(make_named(Family::path, 21), 21).alpha == 11);
}

TEST_CASE("branch and bound agrees with the brute-force oracle") {
    const auto corpus = random_corpus(31, 500, 14);
    for (const auto& g : corpus) {
        const auto fast = max_independent_set(g);
        const auto slow = brute_force_alpha(g);
        CHECK(fast.alpha == slow.alpha);
        CHECK(fast.witness.size() == fast.alpha);
        CHECK(is_independent(g, fast.witness));
        CHECK(is_k_independent(g, fast.witness, 1));
        CHECK(is_independent(g, slow.witness));
        CHECK(slow.witness.size() == slow.alpha);
    }
}

TEST_CASE("alpha_k witnesses, monotonicity and additivity") {
    const auto corpus = random_corpus(32, 120, 10);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& g = corpus[i];
        std::size_t previous = g.order() + 1;
        for (std::uint32_t k = 1; k <= 5; ++k) {
            const auto r = k_independence_number(g, k);
            CHECK(is_k_independent(g, r.witness, k));
            CHECK(r.alpha <= previous);
            previous = r.alpha;
        }
        const auto& h = corpus[(i + 1) % corpus.size()];
        const std::vector<Graph> parts{g, h};
        for (std::uint32_t k = 1; k <= 3; ++k) {
            CHECK(k_independence_number(disjoint_union(parts), k).alpha ==
                  k_independence_number(g, k).alpha + k_independence_number(h, k).alpha);
        }
    }
}

TEST_CASE("enumerating maximum k-independent sets") {
    const auto p4 = make_named(Family::path, 4);
    // Only {0,3} among the six pairs of P4 is more than two apart.
    std::vector<VertexSet> far_pairs;
    const auto d = bfs_distances(p4);
    for (Vertex u = 0; u < 4; ++u) {
        for (Vertex v = u + 1; v < 4; ++v) {
            if (!d(u, v).within(2)) far_pairs.emplace_back(4, std::vector<Vertex>{u, v});
        }
    }
    const auto sets = enumerate_maximum_k_independent_sets(p4, 2);
    CHECK(sets.alpha == 2);
    CHECK(sets.sets == far_pairs);
    CHECK_FALSE(sets.truncated);

    const auto k5 = enumerate_maximum_k_independent_sets(make_named(Family::complete, 5), 1);
    CHECK(k5.sets.size() == 5);
    for (const auto& s : k5.sets) CHECK(s.size() == 1);

    for (std::uint32_t k = 1; k <= 3; ++k) {
        const auto e = enumerate_maximum_k_independent_sets(make_named(Family::edgeless, 3), k);
        REQUIRE(e.sets.size() == 1);
        CHECK(e.sets[0] == VertexSet(3, {0, 1, 2}));
    }

    const auto capped = enumerate_maximum_k_independent_sets(make_named(Family::complete, 5), 1, 3);
    CHECK(capped.sets.size() == 3);
    CHECK(capped.truncated);
    const auto exact_cap = enumerate_maximum_k_independent_sets(make_named(Family::complete, 5), 1, 5);
    CHECK_FALSE(exact_cap.truncated);
}

TEST_CASE("enumeration finds every maximum set") {
    for (const auto& g : random_corpus(33, 80, 10)) {
        const auto found = enumerate_maximum_k_independent_sets(g, 1);
        std::size_t expected = 0;
        for (std::uint32_t mask = 0; mask < (1u << g.order()); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != found.alpha) continue;
            bool ok = true;
            for (auto [u, v] : g.edges()) {
                if (((mask >> u) & 1u) && ((mask >> v) & 1u)) ok = false;
            }
            expected += ok ? 1 : 0;
        }
        CHECK(found.sets.size() == expected);
        for (const auto& s : found.sets) CHECK(is_independent(g, s));
    }
}

TEST_CASE("is_k_independent") {
    const auto c5 = make_named(Family::cycle, 5);
    const VertexSet s(5, {0, 2});
    CHECK(is_k_independent(c5, s, 1));
    CHECK_FALSE(is_k_independent(c5, s, 2));
    for (std::uint32_t k = 1; k <= 4; ++k) {
        CHECK(is_k_independent(c5, VertexSet(5), k));
        CHECK(is_k_independent(c5, VertexSet(5, {3}), k));
    }
    const auto ladder = product(ProductKind::cartesian, make_named(Family::complete, 2), c5);
    CHECK(is_k_independent(ladder, VertexSet(10, {flatten({0, 0}, 5), flatten({1, 2}, 5)}), 2));

    const auto two = make_named(Family::edgeless, 2);
    CHECK(is_k_independent(two, VertexSet(2, {0, 1}), 100));
    CHECK_THROWS_AS(is_k_independent(c5, VertexSet(4, {0}), 1), std::invalid_argument);
}

TEST_CASE("deadline") {
    Deadline expired = Deadline::after(std::chrono::milliseconds(0));
    CHECK(expired.expired());
    CHECK_FALSE(Deadline::never().expired());
    CHECK_NOTHROW(max_independent_set(erdos_renyi(120, 0.1, std::uint64_t{5}), Deadline::never()));
    const auto big = erdos_renyi(120, 0.1, std::uint64_t{5});
    CHECK_THROWS_AS(max_independent_set(big, expired), SolveTimeout);
}
