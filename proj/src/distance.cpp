#include "kindep/distance.hpp"

#include <stdexcept>

namespace kindep {

Distance DistanceMatrix::at(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) throw std::out_of_range("distance query outside the matrix");
    return (*this)(u, v);
}

std::vector<Distance> bfs_from(const Graph& g, Vertex source, std::uint32_t limit) {
    std::vector<Distance> dist(g.order(), Distance::unreachable());
    if (source >= g.order()) throw std::out_of_range("BFS source outside the graph");
    std::vector<Vertex> frontier{source};
    std::vector<Vertex> next;
    dist[source] = Distance(0);
    for (std::uint32_t depth = 1; !frontier.empty() && depth <= limit; ++depth) {
        next.clear();
        for (Vertex v : frontier) {
            for (Vertex w : g.neighbors(v)) {
                if (!dist[w].finite()) {
                    dist[w] = Distance(depth);
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
        if (depth == limit) break;
    }
    return dist;
}

DistanceMatrix bfs_distances(const Graph& g) {
    DistanceMatrix out(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        const auto row = bfs_from(g, u);
        for (Vertex v = 0; v < g.order(); ++v) out(u, v) = row[v];
    }
    return out;
}

}  // namespace kindep
