#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kindep/graph.hpp"
#include "kindep/products.hpp"
#include "kindep/solver.hpp"

namespace kindep {

enum class Relation { equal, less_equal, greater_equal };

std::string_view to_string(Relation r);

/// One evaluated relation `lhs <relation> rhs`.
///
/// `gap` is the slack of the relation: zero when tight, positive when it holds
/// strictly, negative when violated (for `equal` it is rhs - lhs).
/// Unasserted comparisons are recorded but take no part in the verdict.
struct Comparison {
    std::string name;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    Relation relation = Relation::equal;
    bool asserted = true;

    bool holds() const;
    std::int64_t gap() const;
};

enum class Verdict { pass, fail, inconclusive, skipped };

std::string_view to_string(Verdict v);

/// What the caller expects of a check, beyond its verdict.
struct Expectation {
    enum class Truth { must_hold, must_fail, none };
    enum class Shape { tight, strict, violated };

    struct OnComparison {
        std::string name;
        std::optional<Shape> shape;
        std::optional<std::int64_t> lhs;
    };

    Truth truth = Truth::must_hold;
    std::vector<OnComparison> comparisons;
};

struct InstanceInfo {
    std::string g1_name;
    std::string g2_name;
    std::string g1_graph6;
    std::string g2_graph6;
};

struct Observation {
    std::string name;
    std::int64_t value = 0;
};

struct CheckReport {
    std::string theorem_id;
    InstanceInfo instance;
    std::optional<ProductKind> kind;
    std::uint32_t k = 1;
    std::vector<Comparison> comparisons;
    std::vector<Observation> observations;
    bool holds = false;
    Verdict verdict = Verdict::fail;
    Expectation expectation;
    std::string note;
    double elapsed_ms = 0.0;

    /// First comparison; lhs, rhs and gap of the report refer to it.
    const Comparison& primary() const { return comparisons.at(0); }
    std::int64_t lhs() const { return primary().lhs; }
    std::int64_t rhs() const { return primary().rhs; }
    std::int64_t gap() const { return primary().gap(); }

    const Comparison* find(std::string_view name) const;

    /// holds recomputed from the asserted comparisons.
    bool recomputed_holds() const;

    /// Verdict is conclusive and matches every part of the expectation.
    bool expectation_met() const;
};

struct CheckOptions {
    Deadline deadline;
    std::size_t enumeration_cap = 1'000'000;
};

// Every check recomputes both sides with the exact solver. A SolveTimeout is
// turned into a `skipped` verdict.

CheckReport check_strong_power_identity(const Graph& g1, const Graph& g2, std::uint32_t k,
                                        const CheckOptions& options = {});
CheckReport check_power_identity(ProductKind kind, const Graph& g1, const Graph& g2, std::uint32_t k,
                                 const CheckOptions& options = {});
CheckReport check_strong_alpha_equiv(const Graph& g1, const Graph& g2, std::uint32_t k,
                                     const CheckOptions& options = {});
CheckReport check_strong_lower(const Graph& g1, const Graph& g2, std::uint32_t k, const CheckOptions& options = {});
CheckReport check_cartesian_bounds(const Graph& g1, const Graph& g2, std::uint32_t k,
                                   const CheckOptions& options = {});
CheckReport check_vizing_k1(const Graph& g1, const Graph& g2, const CheckOptions& options = {});
CheckReport check_cartesian_rect_characterization(const Graph& g1, const Graph& g2, std::uint32_t k,
                                                  const CheckOptions& options = {});
CheckReport check_tensor_lower(const Graph& g1, const Graph& g2, std::uint32_t k, const CheckOptions& options = {});
/// Requires k >= 2 and a non-empty second factor.
CheckReport check_lexicographic_formula(const Graph& g1, const Graph& g2, std::uint32_t k,
                                        const CheckOptions& options = {});
CheckReport check_geller_stahl_k1(const Graph& g1, const Graph& g2, const CheckOptions& options = {});
CheckReport check_product_ordering(const Graph& g1, const Graph& g2, std::uint32_t k,
                                   const CheckOptions& options = {});
CheckReport check_disjoint_union_additivity(const Graph& g1, const Graph& g2, std::uint32_t k,
                                            const CheckOptions& options = {});

}  // namespace kindep
