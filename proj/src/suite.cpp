#include "kindep/suite.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "kindep/random.hpp"

namespace kindep {

namespace {

using Shape = Expectation::Shape;
using Truth = Expectation::Truth;
using CheckFn = std::function<CheckReport(const CheckOptions&)>;

struct FixedCase {
    std::string theorem_id;
    CheckFn run;
    Truth truth = Truth::must_hold;
    std::vector<Expectation::OnComparison> comparisons;
};

Graph path(std::size_t n) { return make_named(Family::path, n); }
Graph cycle(std::size_t n) { return make_named(Family::cycle, n); }
Graph complete(std::size_t n) { return make_named(Family::complete, n); }
Graph star(std::size_t n) { return make_named(Family::star, n); }
Graph edgeless(std::size_t n) { return make_named(Family::edgeless, n); }

std::vector<FixedCase> paper_fixed_cases() {
    std::vector<FixedCase> cases;
    auto add = [&](std::string id, CheckFn fn, Truth truth = Truth::must_hold,
                   std::vector<Expectation::OnComparison> comparisons = {}) {
        cases.push_back({std::move(id), std::move(fn), truth, std::move(comparisons)});
    };

    add("strong-power-identity",
        [](const CheckOptions& o) { return check_strong_power_identity(complete(2), path(4), 2, o); });

    // The identity fails for the other three products at (K2, P4, k = 2).
    for (auto kind : kAllProductKinds) {
        add("power-identity",
            [kind](const CheckOptions& o) { return check_power_identity(kind, complete(2), path(4), 2, o); },
            kind == ProductKind::strong ? Truth::must_hold : Truth::must_fail);
    }

    add("strong-alpha-equiv",
        [](const CheckOptions& o) { return check_strong_alpha_equiv(complete(2), complete(2), 2, o); },
        Truth::must_hold, {{"alpha-of-power-product", std::nullopt, 1}});
    add("strong-alpha-equiv",
        [](const CheckOptions& o) { return check_strong_alpha_equiv(path(4), path(4), 2, o); });

    // Complete factors make the strong lower bound tight for every k > 1.
    for (std::size_t m = 2; m <= 4; ++m) {
        for (std::uint32_t k = 2; k <= 3; ++k) {
            add("strong-lower",
                [m, k](const CheckOptions& o) { return check_strong_lower(complete(m), complete(m), k, o); },
                Truth::must_hold, {{"strong-lower", Shape::tight, 1}});
        }
    }

    add("cartesian-bounds", [](const CheckOptions& o) { return check_cartesian_bounds(path(4), path(4), 2, o); },
        Truth::must_hold, {{"cartesian-lower", Shape::tight, 4}});
    add("cartesian-bounds", [](const CheckOptions& o) { return check_cartesian_bounds(path(6), path(6), 4, o); },
        Truth::must_hold, {{"cartesian-lower", Shape::tight, 4}});
    for (std::uint32_t k = 1; k <= 3; ++k) {
        add("cartesian-bounds",
            [k](const CheckOptions& o) { return check_cartesian_bounds(complete(2), cycle(2 * k + 1), k, o); },
            Truth::must_hold, {{"cartesian-upper", Shape::tight, 2}});
    }
    add("cartesian-bounds",
        [](const CheckOptions& o) { return check_cartesian_bounds(complete(2), complete(2), 2, o); },
        Truth::must_hold, {{"cartesian-upper", Shape::strict, 1}});

    add("vizing-k1", [](const CheckOptions& o) { return check_vizing_k1(complete(3), complete(4), o); },
        Truth::must_hold, {{"vizing-lower", Shape::tight, 3}, {"vizing-upper", Shape::tight, 3}});

    add("cartesian-rect-characterization",
        [](const CheckOptions& o) { return check_cartesian_rect_characterization(path(4), path(4), 2, o); },
        Truth::must_hold, {{"tight-iff-closed", std::nullopt, 1}});
    add("cartesian-rect-characterization",
        [](const CheckOptions& o) { return check_cartesian_rect_characterization(complete(2), cycle(5), 2, o); },
        Truth::must_hold, {{"tight-iff-closed", std::nullopt, 0}});

    add("tensor-lower", [](const CheckOptions& o) { return check_tensor_lower(path(4), path(4), 2, o); },
        Truth::must_hold, {{"tensor-lower", Shape::tight, 4}});
    add("tensor-lower", [](const CheckOptions& o) { return check_tensor_lower(path(6), path(6), 4, o); },
        Truth::must_hold, {{"tensor-lower", Shape::tight, 4}});
    add("tensor-lower", [](const CheckOptions& o) { return check_tensor_lower(path(2), path(3), 1, o); });

    add("lexicographic-formula",
        [](const CheckOptions& o) { return check_lexicographic_formula(complete(2), edgeless(2), 2, o); },
        Truth::must_hold, {{"lexicographic-formula", std::nullopt, 1}});
    add("lexicographic-formula",
        [](const CheckOptions& o) {
            const std::vector<Graph> parts{complete(2), edgeless(1)};
            return check_lexicographic_formula(disjoint_union(parts), path(4), 2, o);
        },
        Truth::must_hold, {{"lexicographic-formula", std::nullopt, 3}});

    add("geller-stahl-k1", [](const CheckOptions& o) { return check_geller_stahl_k1(cycle(5), cycle(5), o); },
        Truth::must_hold, {{"geller-stahl", std::nullopt, 4}});

    add("product-ordering", [](const CheckOptions& o) { return check_product_ordering(path(3), star(4), 2, o); },
        Truth::must_hold, {{"cartesian-le-tensor", Shape::violated, std::nullopt}});
    add("product-ordering",
        [](const CheckOptions& o) { return check_product_ordering(complete(2), complete(2), 1, o); });

    add("disjoint-union-additivity",
        [](const CheckOptions& o) { return check_disjoint_union_additivity(path(4), cycle(5), 2, o); });
    return cases;
}

struct Unit {
    std::function<std::vector<CheckReport>()> run;
};

std::vector<CheckReport> run_random_instance(const RandomCorpus& corpus, std::size_t index,
                                             const std::vector<std::string>& selected, const SuiteOptions& options) {
    Rng rng = derive_rng(corpus.seed, index);
    const std::size_t span = corpus.n_max - corpus.n_min + 1;
    const std::size_t n1 = corpus.n_min + uniform_below(rng, span);
    const std::size_t n2 = corpus.n_min + uniform_below(rng, span);
    const double p = corpus.p_list[uniform_below(rng, corpus.p_list.size())];
    const std::uint32_t k = corpus.k_list[uniform_below(rng, corpus.k_list.size())];

    Graph g1;
    if (corpus.force_isolated && index % 2 == 1) {
        const std::size_t extra = std::min<std::size_t>(n1, 1 + uniform_below(rng, 2));
        const std::vector<Graph> parts{erdos_renyi(n1 - extra, p, rng), edgeless(extra)};
        g1 = disjoint_union(parts);
    } else {
        g1 = erdos_renyi(n1, p, rng);
    }
    Graph g2 = erdos_renyi(n2, p, rng);
    const std::string tag = "r" + std::to_string(index);
    g1 = g1.with_label(tag + ".1");
    g2 = g2.with_label(tag + ".2");

    auto opts = [&] {
        CheckOptions o;
        o.deadline = Deadline::after(options.budget);
        o.enumeration_cap = options.enumeration_cap;
        return o;
    };

    std::vector<CheckReport> out;
    for (const auto& id : selected) {
        if (id == "strong-power-identity") {
            out.push_back(check_strong_power_identity(g1, g2, k, opts()));
        } else if (id == "power-identity") {
            for (auto kind : kAllProductKinds) out.push_back(check_power_identity(kind, g1, g2, k, opts()));
        } else if (id == "strong-alpha-equiv") {
            out.push_back(check_strong_alpha_equiv(g1, g2, k, opts()));
        } else if (id == "strong-lower") {
            out.push_back(check_strong_lower(g1, g2, k, opts()));
        } else if (id == "cartesian-bounds") {
            out.push_back(check_cartesian_bounds(g1, g2, k, opts()));
        } else if (id == "vizing-k1") {
            out.push_back(check_vizing_k1(g1, g2, opts()));
        } else if (id == "cartesian-rect-characterization") {
            if (n1 <= corpus.characterization_n_max && n2 <= corpus.characterization_n_max) {
                out.push_back(check_cartesian_rect_characterization(g1, g2, k, opts()));
            }
        } else if (id == "tensor-lower") {
            out.push_back(check_tensor_lower(g1, g2, k, opts()));
        } else if (id == "lexicographic-formula") {
            if (k >= 2) out.push_back(check_lexicographic_formula(g1, g2, k, opts()));
        } else if (id == "geller-stahl-k1") {
            out.push_back(check_geller_stahl_k1(g1, g2, opts()));
        } else if (id == "product-ordering") {
            out.push_back(check_product_ordering(g1, g2, k, opts()));
        } else if (id == "disjoint-union-additivity") {
            out.push_back(check_disjoint_union_additivity(g1, g2, k, opts()));
        }
    }
    return out;
}

void validate(const RandomCorpus& corpus) {
    if (corpus.n_min < 1 || corpus.n_max < corpus.n_min) throw std::invalid_argument("need 1 <= n_min <= n_max");
    if (corpus.p_list.empty()) throw std::invalid_argument("edge probability list is empty");
    for (double p : corpus.p_list) {
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability outside [0, 1]");
    }
    if (corpus.k_list.empty()) throw std::invalid_argument("k list is empty");
    for (auto k : corpus.k_list) {
        if (k == 0) throw std::invalid_argument("k values must be positive");
    }
}

bool selected_contains(const std::vector<std::string>& selected, std::string_view id) {
    return std::find(selected.begin(), selected.end(), id) != selected.end();
}

}  // namespace

bool SuiteResult::all_expectations_met(bool strict) const {
    return std::all_of(reports.begin(), reports.end(), [&](const CheckReport& r) {
        if (r.verdict == Verdict::skipped || r.verdict == Verdict::inconclusive) return !strict;
        return r.expectation_met();
    });
}

SuiteResult run_suite(const CorpusSpec& corpus, const std::vector<std::string>& theorem_filter,
                      const SuiteOptions& options) {
    for (const auto& id : theorem_filter) {
        if (std::find(kTheoremIds.begin(), kTheoremIds.end(), id) == kTheoremIds.end()) {
            throw std::invalid_argument("unknown theorem id '" + id + "'");
        }
    }
    const auto wanted = [&](std::string_view id) {
        return theorem_filter.empty() || selected_contains(theorem_filter, id);
    };

    std::vector<Unit> units;
    if (corpus.paper_fixed) {
        for (auto& c : paper_fixed_cases()) {
            if (!wanted(c.theorem_id)) continue;
            units.push_back({[c, &options] {
                CheckOptions o;
                o.deadline = Deadline::after(options.budget);
                o.enumeration_cap = options.enumeration_cap;
                CheckReport report = c.run(o);
                report.expectation.truth = c.truth;
                report.expectation.comparisons = c.comparisons;
                return std::vector<CheckReport>{std::move(report)};
            }});
        }
    }
    if (corpus.random) {
        const RandomCorpus& rc = *corpus.random;
        validate(rc);
        // Power identities only hold for the strong product, so the random
        // corpus runs them only on request.
        std::vector<std::string> selected;
        for (auto id : kTheoremIds) {
            if (id == "power-identity" ? selected_contains(theorem_filter, id) : wanted(id)) {
                selected.emplace_back(id);
            }
        }
        for (std::size_t i = 0; i < rc.trials; ++i) {
            units.push_back({[&rc, i, selected, &options] { return run_random_instance(rc, i, selected, options); }});
        }
    }

    std::vector<std::vector<CheckReport>> slots(units.size());
    const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, units.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < units.size(); i = next++) slots[i] = units[i].run();
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }

    SuiteResult result;
    for (auto& slot : slots) {
        for (auto& r : slot) result.reports.push_back(std::move(r));
    }
    result.summary = summarize(result.reports);
    return result;
}

std::vector<TheoremSummary> summarize(const std::vector<CheckReport>& reports) {
    std::vector<TheoremSummary> out;
    for (auto id : kTheoremIds) {
        TheoremSummary s;
        s.theorem_id = std::string(id);
        const CheckReport* worst = nullptr;
        bool worst_is_failure = false;
        for (const auto& r : reports) {
            if (r.theorem_id != id) continue;
            ++s.trials;
            if (r.verdict == Verdict::skipped) {
                ++s.skipped;
                continue;
            }
            if (r.verdict == Verdict::inconclusive) {
                ++s.inconclusive;
                continue;
            }
            const bool met = r.expectation_met();
            if (met) ++s.passes;
            const auto gap = r.gap();
            if (!s.max_gap || gap > *s.max_gap) s.max_gap = gap;
            if (!met && !worst_is_failure) {
                worst = &r;
                worst_is_failure = true;
            } else if (!worst_is_failure && (worst == nullptr || gap > worst->gap())) {
                worst = &r;
            }
        }
        if (s.trials == 0) continue;
        if (worst != nullptr) s.worst_instance_graph6 = worst->instance.g1_graph6 + ";" + worst->instance.g2_graph6;
        out.push_back(std::move(s));
    }
    return out;
}

std::string to_json_line(const CheckReport& r, bool include_timings) {
    nlohmann::ordered_json j;
    j["theorem_id"] = r.theorem_id;
    j["kind"] = r.kind ? nlohmann::ordered_json(std::string(to_string(*r.kind))) : nlohmann::ordered_json(nullptr);
    j["k"] = r.k;
    j["instance"] = {{"g1", r.instance.g1_name},
                     {"g2", r.instance.g2_name},
                     {"g1_graph6", r.instance.g1_graph6},
                     {"g2_graph6", r.instance.g2_graph6}};
    if (r.comparisons.empty()) {
        j["lhs"] = nullptr;
        j["rhs"] = nullptr;
        j["gap"] = nullptr;
    } else {
        j["lhs"] = r.lhs();
        j["rhs"] = r.rhs();
        j["gap"] = r.gap();
    }
    j["holds"] = r.holds;
    j["verdict"] = std::string(to_string(r.verdict));
    switch (r.expectation.truth) {
    case Truth::must_hold: j["expected"] = "hold"; break;
    case Truth::must_fail: j["expected"] = "fail"; break;
    case Truth::none: j["expected"] = "none"; break;
    }
    j["expectation_met"] = r.expectation_met();
    auto comparisons = nlohmann::ordered_json::array();
    for (const auto& c : r.comparisons) {
        comparisons.push_back({{"name", c.name},
                               {"lhs", c.lhs},
                               {"relation", std::string(to_string(c.relation))},
                               {"rhs", c.rhs},
                               {"gap", c.gap()},
                               {"holds", c.holds()},
                               {"asserted", c.asserted}});
    }
    j["comparisons"] = std::move(comparisons);
    auto observations = nlohmann::ordered_json::object();
    for (const auto& o : r.observations) observations[o.name] = o.value;
    j["observations"] = std::move(observations);
    if (!r.note.empty()) j["note"] = r.note;
    if (include_timings) j["elapsed_ms"] = r.elapsed_ms;
    return j.dump();
}

void write_jsonl(std::ostream& out, const std::vector<CheckReport>& reports, bool include_timings) {
    for (const auto& r : reports) out << to_json_line(r, include_timings) << '\n';
}

void write_csv_summary(std::ostream& out, const std::vector<TheoremSummary>& summary) {
    out << "theorem_id,trials,passes,max_gap,worst_instance_graph6\n";
    for (const auto& s : summary) {
        out << s.theorem_id << ',' << s.trials << ',' << s.passes << ',';
        if (s.max_gap) out << *s.max_gap;
        out << ',' << s.worst_instance_graph6 << '\n';
    }
}

}  // namespace kindep
