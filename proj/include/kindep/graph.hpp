#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kindep {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Neighbor lists are kept sorted, so two graphs
/// compare equal exactly when they have the same order and the same labeled
/// edge set. The label is a report tag and takes no part in equality.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n, std::string label = {});

    /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
    /// Duplicate edges (in either orientation) are merged.
    Graph(std::size_t n, std::span<const Edge> edges, std::string label = {});

    std::size_t order() const { return adjacency_.size(); }
    std::size_t size() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    bool has_edge(Vertex u, Vertex v) const;

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    const std::string& label() const { return label_; }
    Graph with_label(std::string label) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
    std::string label_;
};

/// A subset of {0..n-1}; members are kept sorted and unique.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe) {}
    VertexSet(std::size_t universe, std::vector<Vertex> members);

    void insert(Vertex v);
    bool contains(Vertex v) const;

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    std::size_t universe() const { return universe_; }
    std::span<const Vertex> members() const { return members_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<Vertex> members_;
};

std::string to_string(const VertexSet& s);

enum class Family { path, cycle, complete, star, edgeless };

/// Conventional members of the named families. `size` is the vertex count
/// (so `star` of size 4 is K_{1,3}, centre at 0). Cycles need size >= 3.
Graph make_named(Family family, std::size_t size);

Graph disjoint_union(std::span<const Graph> parts);

/// Connected components ordered by their smallest member.
std::vector<VertexSet> components(const Graph& g);

std::size_t isolated_count(const Graph& g);

/// k-th power: same vertices, u ~ v iff 1 <= dist(u, v) <= k. Rejects k = 0.
Graph power(const Graph& g, std::uint32_t k);

/// Number of unordered pairs that are an edge in exactly one of the graphs.
/// Both graphs must have the same order.
std::size_t edge_symmetric_difference(const Graph& a, const Graph& b);

}  // namespace kindep
