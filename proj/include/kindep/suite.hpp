#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kindep/verifier.hpp"

namespace kindep {

inline constexpr std::array<std::string_view, 12> kTheoremIds{
    "strong-power-identity",  "power-identity",      "strong-alpha-equiv",
    "strong-lower",           "cartesian-bounds",    "vizing-k1",
    "cartesian-rect-characterization", "tensor-lower", "lexicographic-formula",
    "geller-stahl-k1",        "product-ordering",    "disjoint-union-additivity"};

/// Seeded Erdos-Renyi factor pairs. Instance i draws everything from
/// derive_rng(seed, i), so results do not depend on evaluation order.
struct RandomCorpus {
    std::uint64_t seed = 1;
    std::size_t trials = 0;
    std::size_t n_min = 1;
    std::size_t n_max = 7;
    std::vector<double> p_list{0.2, 0.5, 0.8};
    std::vector<std::uint32_t> k_list{1, 2, 3};
    /// Odd-numbered instances get one or two isolated vertices in the first factor.
    bool force_isolated = false;
    /// The enumeration-backed characterization check only runs when both
    /// factors have at most this many vertices.
    std::size_t characterization_n_max = 5;
};

struct CorpusSpec {
    bool paper_fixed = false;
    std::optional<RandomCorpus> random;
};

struct SuiteOptions {
    std::size_t jobs = 1;
    std::chrono::milliseconds budget{10'000};
    std::size_t enumeration_cap = 1'000'000;
};

struct TheoremSummary {
    std::string theorem_id;
    std::size_t trials = 0;
    std::size_t passes = 0;
    std::size_t skipped = 0;
    std::size_t inconclusive = 0;
    std::optional<std::int64_t> max_gap;
    std::string worst_instance_graph6;
};

struct SuiteResult {
    std::vector<CheckReport> reports;
    std::vector<TheoremSummary> summary;

    /// Every conclusive report met its expectation. Skipped and inconclusive
    /// reports only count against the run when `strict` is set.
    bool all_expectations_met(bool strict = false) const;
};

/// Throws std::invalid_argument for an unknown theorem id in `theorem_filter`
/// (an empty filter selects every theorem).
SuiteResult run_suite(const CorpusSpec& corpus, const std::vector<std::string>& theorem_filter,
                      const SuiteOptions& options = {});

std::vector<TheoremSummary> summarize(const std::vector<CheckReport>& reports);

/// One JSON object per line. Timings are omitted unless requested so that a
/// fixed seed reproduces the stream byte for byte.
void write_jsonl(std::ostream& out, const std::vector<CheckReport>& reports, bool include_timings = false);
std::string to_json_line(const CheckReport& report, bool include_timings = false);

/// Header: theorem_id,trials,passes,max_gap,worst_instance_graph6
void write_csv_summary(std::ostream& out, const std::vector<TheoremSummary>& summary);

}  // namespace kindep
