#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "kindep/graph.hpp"

namespace kindep {

/// Wall-clock budget for a search. Default-constructed deadlines never expire.
class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;
    static Deadline never() { return {}; }
    static Deadline after(std::chrono::milliseconds budget) { return Deadline(Clock::now() + budget); }

    bool expired() const { return limited_ && Clock::now() >= at_; }

private:
    explicit Deadline(Clock::time_point at) : limited_(true), at_(at) {}
    bool limited_ = false;
    Clock::time_point at_{};
};

class SolveTimeout : public std::runtime_error {
public:
    SolveTimeout() : std::runtime_error("solver deadline exceeded") {}
};

struct SolveResult {
    std::size_t alpha = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
};

/// Exact independence number by branch and bound.
///
/// Branches on a vertex of maximum degree among the remaining candidates
/// (lowest index on ties), taking it first, and prunes with a greedy clique
/// cover of the candidates. The witness is deterministic.
/// Throws SolveTimeout when the deadline passes.
SolveResult max_independent_set(const Graph& g, const Deadline& deadline = Deadline::never());

/// alpha_k(g) = alpha(g^k); the witness is pairwise more than k apart in g.
SolveResult k_independence_number(const Graph& g, std::uint32_t k, const Deadline& deadline = Deadline::never());

/// Exhaustive include/exclude search with only the trivial "cannot catch up"
/// cut. Rejects graphs with more than `size_cap` vertices (cap at most 30).
SolveResult brute_force_alpha(const Graph& g, std::size_t size_cap = 20);

/// Calls `visit` once for every maximum independent set of `g`, in search
/// order, until it returns false. Returns true when the search was exhausted.
bool for_each_maximum_independent_set(const Graph& g, const std::function<bool(const VertexSet&)>& visit,
                                      const Deadline& deadline = Deadline::never());

struct MaximumSets {
    std::size_t alpha = 0;
    std::vector<VertexSet> sets;
    bool truncated = false;
};

MaximumSets enumerate_maximum_k_independent_sets(const Graph& g, std::uint32_t k,
                                                 std::size_t count_cap = 1'000'000,
                                                 const Deadline& deadline = Deadline::never());

/// True iff every two distinct members are more than k apart (different
/// components count as infinitely far apart).
bool is_k_independent(const Graph& g, const VertexSet& s, std::uint32_t k);

}  // namespace kindep
