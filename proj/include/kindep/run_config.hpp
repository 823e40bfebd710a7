#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kindep/suite.hpp"

namespace kindep {

/// Settings for `verify`. Flags override the config file, which overrides
/// these defaults.
struct RunConfig {
    std::uint64_t seed = 1;
    std::size_t trials = 0;
    std::size_t n_max = 7;
    std::vector<double> p_list{0.2, 0.5, 0.8};
    std::vector<std::uint32_t> k_list{1, 2, 3};
    /// Corpus names ("paper-fixed", "random") and/or theorem ids.
    std::vector<std::string> suites;
    std::size_t jobs = 1;
    std::string json_out;
    std::string csv_out;
    bool strict = false;
    bool force_isolated = false;
    bool timings = false;
    std::size_t budget_ms = 10'000;
};

/// Flat `key = value` lines; '#' starts a comment. Throws
/// std::invalid_argument naming the line on malformed input.
std::map<std::string, std::string> parse_key_values(std::string_view text);

/// Assigns every key not listed in `explicit_keys`. Keys use the long flag
/// names without dashes (seed, trials, n-max, p, k, suite, jobs, json, csv,
/// strict, force-isolated, timings, budget-ms). Lists are comma separated.
void apply_key_values(RunConfig& config, const std::map<std::string, std::string>& values,
                      const std::set<std::string>& explicit_keys);

/// Throws std::invalid_argument when a cap is zero or a probability is
/// outside [0, 1].
void validate(const RunConfig& config);

/// Splits `suites` into the corpus to run and the theorem filter. With no
/// corpus named, the random corpus is used.
CorpusSpec corpus_of(const RunConfig& config, std::vector<std::string>& theorem_filter);

}  // namespace kindep
