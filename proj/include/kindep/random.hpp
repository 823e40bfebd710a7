#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "kindep/graph.hpp"

namespace kindep {

using Rng = std::mt19937_64;

/// Independent stream for item `index` of a run seeded with `seed`.
Rng derive_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform in [0, 1) from the top 53 bits of one draw.
double unit_uniform(Rng& rng);

/// Uniform in [0, bound); bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// G(n, p): each of the n(n-1)/2 pairs, visited as (0,1), (0,2), ..., is an
/// edge with probability p. Rejects p outside [0, 1].
Graph erdos_renyi(std::size_t n, double p, Rng& rng);

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

}  // namespace kindep
