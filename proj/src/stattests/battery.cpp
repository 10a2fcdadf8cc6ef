#include "xg/stattests/battery.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace xg::stats {

BatteryConfig BatteryConfig::quick() {
    BatteryConfig c;
    c.monobit_bits = 1'000'000;
    c.runs_bits = 1'000'000;
    c.rank_matrices = 1'000;
    c.lc_block_length = 500;
    c.lc_blocks = 200;
    c.birthday_rounds = 8;
    return c;
}

namespace {

std::string trim(const std::string& s) {
    auto first = s.find_first_not_of(" \t\r");
    auto last = s.find_last_not_of(" \t\r");
    return first == std::string::npos ? "" : s.substr(first, last - first + 1);
}

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "on" || v == "1") return true;
    if (v == "false" || v == "off" || v == "0") return false;
    throw std::invalid_argument("expected boolean, got '" + v + "'");
}

} // namespace

BatteryConfig BatteryConfig::parse(std::istream& in) {
    BatteryConfig c;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("battery config line is not key = value: " + line);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "monobit.enabled") c.run_monobit = parse_bool(value);
        else if (key == "monobit.bits") c.monobit_bits = std::stoull(value);
        else if (key == "runs.enabled") c.run_runs = parse_bool(value);
        else if (key == "runs.bits") c.runs_bits = std::stoull(value);
        else if (key == "matrix_rank.enabled") c.run_matrix_rank = parse_bool(value);
        else if (key == "matrix_rank.matrices") c.rank_matrices = std::stoull(value);
        else if (key == "linear_complexity.enabled") c.run_linear_complexity = parse_bool(value);
        else if (key == "linear_complexity.block_length")
            c.lc_block_length = static_cast<unsigned>(std::stoul(value));
        else if (key == "linear_complexity.blocks") c.lc_blocks = std::stoull(value);
        else if (key == "birthday.enabled") c.run_birthday = parse_bool(value);
        else if (key == "birthday.draws") c.birthday_draws = std::stoull(value);
        else if (key == "birthday.bits") c.birthday_bits = static_cast<unsigned>(std::stoul(value));
        else if (key == "birthday.rounds") c.birthday_rounds = static_cast<unsigned>(std::stoul(value));
        else throw std::invalid_argument("unknown battery config key: " + key);
    }
    return c;
}

BatteryReport run_battery(WordSource& source, const BatteryConfig& config,
                          const std::string& generator_id,
                          const std::string& params_display, std::uint64_t seed) {
    BatteryReport report;
    report.generator_id = generator_id;
    report.params_display = params_display;
    report.seed = seed;

    if (config.run_monobit) {
        BitSource bits(source);
        report.tests.push_back(monobit(bits, config.monobit_bits));
    }
    if (config.run_runs) {
        BitSource bits(source);
        report.tests.push_back(runs_test(bits, config.runs_bits));
    }
    if (config.run_matrix_rank) {
        BitSource bits(source);
        report.tests.push_back(matrix_rank_test(bits, config.rank_matrices));
    }
    if (config.run_linear_complexity) {
        BitSource bits(source);
        report.tests.push_back(
            linear_complexity_test(bits, config.lc_block_length, config.lc_blocks));
    }
    if (config.run_birthday) {
        report.tests.push_back(birthday_spacings(source, config.birthday_draws,
                                                 config.birthday_bits,
                                                 config.birthday_rounds));
    }

    report.num_tests = static_cast<unsigned>(report.tests.size());
    report.overall = Verdict::pass;
    for (const auto& t : report.tests) {
        if (t.verdict == Verdict::fail)
            report.overall = Verdict::fail;
        else if (t.verdict == Verdict::suspect && report.overall != Verdict::fail)
            report.overall = Verdict::suspect;
    }
    return report;
}

std::string to_json(const BatteryReport& report) {
    nlohmann::json j;
    j["generator"] = report.generator_id;
    j["params"] = report.params_display;
    j["seed"] = report.seed;
    j["num_tests"] = report.num_tests;
    j["overall"] = to_string(report.overall);
    j["tests"] = nlohmann::json::array();
    for (const auto& t : report.tests) {
        j["tests"].push_back({{"name", t.test_name},
                              {"n", t.n_consumed},
                              {"statistic", t.statistic},
                              {"p", t.p_value},
                              {"verdict", to_string(t.verdict)}});
    }
    return j.dump(2);
}

} // namespace xg::stats
