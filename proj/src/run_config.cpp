#include "kindep/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace kindep {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(std::string_view s) {
    std::vector<std::string> out;
    while (true) {
        const auto comma = s.find(',');
        const auto item = trim(s.substr(0, comma));
        if (!item.empty()) out.emplace_back(item);
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

template <typename T>
T parse_number(const std::string& key, std::string_view text) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw std::invalid_argument("invalid value '" + std::string(text) + "' for " + key);
    }
    return value;
}

double parse_probability(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) throw std::invalid_argument("invalid value '" + text + "' for " + key);
    return value;
}

bool parse_bool(const std::string& key, std::string_view text) {
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw std::invalid_argument("invalid boolean '" + std::string(text) + "' for " + key);
}

}  // namespace

std::map<std::string, std::string> parse_key_values(std::string_view text) {
    std::map<std::string, std::string> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto newline = text.find('\n');
        std::string_view line = text.substr(0, newline);
        text.remove_prefix(newline == std::string_view::npos ? text.size() : newline + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key=value");
        }
        const auto key = trim(line.substr(0, eq));
        if (key.empty()) throw std::invalid_argument("config line " + std::to_string(line_no) + ": empty key");
        out[std::string(key)] = std::string(trim(line.substr(eq + 1)));
    }
    return out;
}

void apply_key_values(RunConfig& config, const std::map<std::string, std::string>& values,
                      const std::set<std::string>& explicit_keys) {
    for (const auto& [key, value] : values) {
        const bool overridden = explicit_keys.contains(key);
        auto set = [&](auto&& assign) {
            if (!overridden) assign();
        };
        if (key == "seed") {
            const auto v = parse_number<std::uint64_t>(key, value);
            set([&] { config.seed = v; });
        } else if (key == "trials") {
            const auto v = parse_number<std::size_t>(key, value);
            set([&] { config.trials = v; });
        } else if (key == "n-max") {
            const auto v = parse_number<std::size_t>(key, value);
            set([&] { config.n_max = v; });
        } else if (key == "jobs") {
            const auto v = parse_number<std::size_t>(key, value);
            set([&] { config.jobs = v; });
        } else if (key == "budget-ms") {
            const auto v = parse_number<std::size_t>(key, value);
            set([&] { config.budget_ms = v; });
        } else if (key == "p") {
            std::vector<double> v;
            for (const auto& item : split_list(value)) v.push_back(parse_probability(key, item));
            set([&] { config.p_list = v; });
        } else if (key == "k") {
            std::vector<std::uint32_t> v;
            for (const auto& item : split_list(value)) v.push_back(parse_number<std::uint32_t>(key, item));
            set([&] { config.k_list = v; });
        } else if (key == "suite") {
            auto v = split_list(value);
            set([&] { config.suites = v; });
        } else if (key == "json") {
            set([&] { config.json_out = value; });
        } else if (key == "csv") {
            set([&] { config.csv_out = value; });
        } else if (key == "strict") {
            const bool v = parse_bool(key, value);
            set([&] { config.strict = v; });
        } else if (key == "force-isolated") {
            const bool v = parse_bool(key, value);
            set([&] { config.force_isolated = v; });
        } else if (key == "timings") {
            const bool v = parse_bool(key, value);
            set([&] { config.timings = v; });
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
}

void validate(const RunConfig& config) {
    if (config.n_max == 0) throw std::invalid_argument("n-max must be positive");
    if (config.jobs == 0) throw std::invalid_argument("jobs must be positive");
    if (config.budget_ms == 0) throw std::invalid_argument("budget-ms must be positive");
    if (config.p_list.empty()) throw std::invalid_argument("p list is empty");
    for (double p : config.p_list) {
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability outside [0, 1]");
    }
    if (config.k_list.empty()) throw std::invalid_argument("k list is empty");
    for (auto k : config.k_list) {
        if (k == 0) throw std::invalid_argument("k values must be positive");
    }
}

CorpusSpec corpus_of(const RunConfig& config, std::vector<std::string>& theorem_filter) {
    CorpusSpec corpus;
    bool random = false;
    theorem_filter.clear();
    for (const auto& name : config.suites) {
        if (name == "paper-fixed") {
            corpus.paper_fixed = true;
        } else if (name == "random") {
            random = true;
        } else {
            theorem_filter.push_back(name);
        }
    }
    if (!corpus.paper_fixed) random = true;
    if (random) {
        RandomCorpus rc;
        rc.seed = config.seed;
        rc.trials = config.trials;
        rc.n_max = config.n_max;
        rc.p_list = config.p_list;
        rc.k_list = config.k_list;
        rc.force_isolated = config.force_isolated;
        corpus.random = rc;
    }
    return corpus;
}

}  // namespace kindep
