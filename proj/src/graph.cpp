#include "kindep/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "kindep/distance.hpp"

namespace kindep {

Graph::Graph(std::size_t n, std::string label) : adjacency_(n), label_(std::move(label)) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges, std::string label)
    : adjacency_(n), label_(std::move(label)) {
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                        ") has an endpoint outside [0, " + std::to_string(n) + ")");
        }
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        edge_count_ += list.size();
    }
    edge_count_ /= 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= order() || v >= order()) return false;
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::with_label(std::string label) const {
    Graph copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

VertexSet::VertexSet(std::size_t universe, std::vector<Vertex> members)
    : universe_(universe), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.back() >= universe_) {
        throw std::invalid_argument("vertex " + std::to_string(members_.back()) +
                                    " outside [0, " + std::to_string(universe_) + ")");
    }
}

void VertexSet::insert(Vertex v) {
    if (v >= universe_) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " outside [0, " +
                                    std::to_string(universe_) + ")");
    }
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) members_.insert(it, v);
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::string to_string(const VertexSet& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (Vertex v : s.members()) {
        if (!first) out << ',';
        out << v;
        first = false;
    }
    out << '}';
    return out.str();
}

Graph make_named(Family family, std::size_t size) {
    if (size < 1) throw std::invalid_argument("named graph size must be at least 1");
    const auto n = static_cast<Vertex>(size);
    std::vector<Edge> edges;
    std::string label;
    switch (family) {
    case Family::path:
        for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
        label = "P" + std::to_string(n);
        break;
    case Family::cycle:
        if (size < 3) {
            throw std::invalid_argument("cycle needs at least 3 vertices, got " + std::to_string(size));
        }
        for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
        label = "C" + std::to_string(n);
        break;
    case Family::complete:
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        }
        label = "K" + std::to_string(n);
        break;
    case Family::star:
        for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
        label = "K1," + std::to_string(n - 1);
        break;
    case Family::edgeless:
        label = std::to_string(n) + "K1";
        break;
    }
    return Graph(size, edges, label);
}

Graph disjoint_union(std::span<const Graph> parts) {
    std::size_t n = 0;
    std::vector<Edge> edges;
    std::string label;
    for (const auto& part : parts) {
        const auto offset = static_cast<Vertex>(n);
        for (auto [u, v] : part.edges()) edges.emplace_back(u + offset, v + offset);
        n += part.order();
        if (!label.empty()) label += "+";
        label += part.label().empty() ? "G" : part.label();
    }
    return Graph(n, edges, label);
}

std::vector<VertexSet> components(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<Vertex> members;
        seen[root] = true;
        stack.push_back(root);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        out.emplace_back(n, std::move(members));
    }
    return out;
}

std::size_t isolated_count(const Graph& g) {
    std::size_t count = 0;
    for (Vertex v = 0; v < g.order(); ++v) count += g.degree(v) == 0 ? 1 : 0;
    return count;
}

Graph power(const Graph& g, std::uint32_t k) {
    if (k == 0) throw std::invalid_argument("graph power requires k >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
        const auto dist = bfs_from(g, u, k);
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (dist[v].finite()) edges.emplace_back(u, v);
        }
    }
    std::string label = g.label().empty() ? std::string{} : "(" + g.label() + ")^" + std::to_string(k);
    return Graph(g.order(), edges, label);
}

std::size_t edge_symmetric_difference(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) throw std::invalid_argument("graphs differ in order");
    std::size_t count = 0;
    std::vector<Vertex> diff;
    for (Vertex v = 0; v < a.order(); ++v) {
        diff.clear();
        auto na = a.neighbors(v);
        auto nb = b.neighbors(v);
        std::set_symmetric_difference(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(diff));
        count += diff.size();
    }
    return count / 2;
}

}  // namespace kindep
