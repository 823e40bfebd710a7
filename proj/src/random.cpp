#include "kindep/random.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace kindep {

Rng derive_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

double unit_uniform(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below needs a positive bound");
    // Rejection keeps the draw unbiased and the sequence platform independent.
    const std::uint64_t limit = Rng::max() - Rng::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

Graph erdos_renyi(std::size_t n, double p, Rng& rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (unit_uniform(rng) < p) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges, "G(" + std::to_string(n) + "," + std::to_string(p).substr(0, 4) + ")");
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    Rng rng(seed);
    return erdos_renyi(n, p, rng);
}

}  // namespace kindep
