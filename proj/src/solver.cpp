#include "kindep/solver.hpp"

#include <stdexcept>
#include <string>

#include "bitset.hpp"
#include "kindep/distance.hpp"

namespace kindep {

namespace {

using detail::Bitset;

void require_positive_k(std::uint32_t k) {
    if (k == 0) throw std::invalid_argument("k-independence requires k >= 1");
}

struct StopEnumeration {};

class BranchAndBound {
public:
    explicit BranchAndBound(const Graph& g, const Deadline& deadline) : n_(g.order()), deadline_(deadline) {
        adjacency_.assign(n_, Bitset(n_));
        for (Vertex v = 0; v < n_; ++v) {
            for (Vertex w : g.neighbors(v)) adjacency_[v].set(w);
        }
    }

    SolveResult maximum() {
        best_size_ = 0;
        best_ = Bitset(n_);
        run();
        SolveResult out;
        out.alpha = best_size_;
        out.witness = to_vertex_set(best_);
        out.nodes_explored = nodes_;
        return out;
    }

    // Visits every independent set of exactly `target` vertices; target must
    // be the independence number for these to be the maximum sets.
    bool enumerate(std::size_t target, const std::function<bool(const VertexSet&)>& visit) {
        collect_ = true;
        best_size_ = target;
        visit_ = &visit;
        try {
            run();
        } catch (const StopEnumeration&) {
            return false;
        }
        return true;
    }

private:
    void run() {
        Bitset candidates(n_);
        candidates.set_all();
        Bitset chosen(n_);
        expand(candidates, chosen, 0);
    }

    VertexSet to_vertex_set(const Bitset& bits) const {
        std::vector<Vertex> members;
        bits.for_each([&](std::size_t v) { members.push_back(static_cast<Vertex>(v)); });
        return VertexSet(n_, std::move(members));
    }

    void record(const Bitset& chosen, std::size_t size) {
        if (collect_) {
            if (size == best_size_ && !(*visit_)(to_vertex_set(chosen))) throw StopEnumeration{};
            return;
        }
        if (size > best_size_) {
            best_size_ = size;
            best_ = chosen;
        }
    }

    // Greedy partition of the candidates into cliques; its size bounds how
    // many of them an independent set can take.
    std::size_t clique_cover(const Bitset& candidates) {
        cover_.clear();
        candidates.for_each([&](std::size_t v) {
            for (auto& common : cover_) {
                if (common.test(v)) {
                    common &= adjacency_[v];
                    return;
                }
            }
            cover_.push_back(adjacency_[v]);
        });
        return cover_.size();
    }

    bool cannot_reach(std::size_t reachable) const {
        return collect_ ? reachable < best_size_ : reachable <= best_size_;
    }

    void expand(const Bitset& candidates, Bitset& chosen, std::size_t size) {
        if ((++nodes_ & 1023u) == 1 && deadline_.expired()) throw SolveTimeout();
        if (candidates.none()) {
            record(chosen, size);
            return;
        }
        if (cannot_reach(size + candidates.count())) return;
        if (cannot_reach(size + clique_cover(candidates))) return;

        std::size_t pick = n_;
        std::size_t pick_degree = 0;
        candidates.for_each([&](std::size_t v) {
            const std::size_t d = adjacency_[v].count_and(candidates);
            if (pick == n_ || d > pick_degree) {
                pick = v;
                pick_degree = d;
            }
        });

        if (pick_degree == 0) {
            // Every remaining candidate is isolated among the candidates.
            Bitset all = chosen;
            all |= candidates;
            record(all, size + candidates.count());
            return;
        }

        Bitset with = candidates;
        with.subtract(adjacency_[pick]);
        with.reset(pick);
        chosen.set(pick);
        expand(with, chosen, size + 1);
        chosen.reset(pick);

        Bitset without = candidates;
        without.reset(pick);
        expand(without, chosen, size);
    }

    std::size_t n_;
    const Deadline& deadline_;
    std::vector<Bitset> adjacency_;
    std::vector<Bitset> cover_;
    std::size_t best_size_ = 0;
    Bitset best_;
    std::uint64_t nodes_ = 0;
    bool collect_ = false;
    const std::function<bool(const VertexSet&)>* visit_ = nullptr;
};

}  // namespace

SolveResult max_independent_set(const Graph& g, const Deadline& deadline) {
    return BranchAndBound(g, deadline).maximum();
}

SolveResult k_independence_number(const Graph& g, std::uint32_t k, const Deadline& deadline) {
    require_positive_k(k);
    return max_independent_set(k == 1 ? g : power(g, k), deadline);
}

SolveResult brute_force_alpha(const Graph& g, std::size_t size_cap) {
    const std::size_t n = g.order();
    if (size_cap > 30) throw std::invalid_argument("brute-force size cap must be at most 30");
    if (n > size_cap) {
        throw std::invalid_argument("brute-force oracle limited to " + std::to_string(size_cap) +
                                    " vertices, got " + std::to_string(n));
    }
    std::vector<std::uint32_t> neighbors(n, 0);
    for (auto [u, v] : g.edges()) {
        neighbors[u] |= 1u << v;
        neighbors[v] |= 1u << u;
    }
    std::uint32_t best_mask = 0;
    std::size_t best = 0;
    std::uint64_t nodes = 0;
    auto search = [&](auto&& self, std::size_t i, std::uint32_t mask, std::size_t size) -> void {
        ++nodes;
        if (i < n && size + (n - i) <= best) return;
        if (i == n) {
            if (size > best) {
                best = size;
                best_mask = mask;
            }
            return;
        }
        if ((neighbors[i] & mask) == 0) self(self, i + 1, mask | (1u << i), size + 1);
        self(self, i + 1, mask, size);
    };
    search(search, 0, 0, 0);

    SolveResult out;
    out.alpha = best;
    out.witness = VertexSet(n);
    for (Vertex v = 0; v < n; ++v) {
        if ((best_mask >> v) & 1u) out.witness.insert(v);
    }
    out.nodes_explored = nodes;
    return out;
}

bool for_each_maximum_independent_set(const Graph& g, const std::function<bool(const VertexSet&)>& visit,
                                      const Deadline& deadline) {
    const std::size_t alpha = max_independent_set(g, deadline).alpha;
    return BranchAndBound(g, deadline).enumerate(alpha, visit);
}

MaximumSets enumerate_maximum_k_independent_sets(const Graph& g, std::uint32_t k, std::size_t count_cap,
                                                 const Deadline& deadline) {
    require_positive_k(k);
    const Graph target = k == 1 ? g : power(g, k);
    MaximumSets out;
    out.alpha = max_independent_set(target, deadline).alpha;
    const bool exhausted = BranchAndBound(target, deadline).enumerate(out.alpha, [&](const VertexSet& s) {
        if (out.sets.size() == count_cap) return false;
        out.sets.push_back(s);
        return true;
    });
    out.truncated = !exhausted;
    return out;
}

bool is_k_independent(const Graph& g, const VertexSet& s, std::uint32_t k) {
    require_positive_k(k);
    if (s.universe() != g.order()) throw std::invalid_argument("vertex set universe does not match graph order");
    for (Vertex u : s.members()) {
        const auto dist = bfs_from(g, u, k);
        for (Vertex v : s.members()) {
            if (v != u && dist[v].finite()) return false;
        }
    }
    return true;
}

}  // namespace kindep
