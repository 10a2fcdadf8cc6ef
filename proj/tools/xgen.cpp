// xgen: generate streams, run the test battery, benchmark, and inspect
// parameters for the xorgens family and its baselines.
//
// Exit codes:
//   0  success / battery pass        3  battery fail
//   2  battery suspect              64  unknown generator
//  65  lanes or blocks out of range 66  I/O error
//  67  invalid arguments or config

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <thread>

#include <CLI11.hpp>

#include "xg/bench.hpp"
#include "xg/parallel.hpp"
#include "xg/registry.hpp"
#include "xg/stattests/battery.hpp"
#include "xg/stream.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_suspect = 2;
constexpr int exit_fail = 3;
constexpr int exit_unknown_generator = 64;
constexpr int exit_lane_range = 65;
constexpr int exit_io = 66;
constexpr int exit_bad_args = 67;

struct OutputTarget {
    std::ostream* stream = &std::cout;
    std::ofstream file;

    int open(const std::string& path) {
        if (path.empty() || path == "-")
            return exit_ok;
        file.open(path, std::ios::binary);
        if (!file) {
            std::cerr << "xgen: cannot open output file: " << path << "\n";
            return exit_io;
        }
        stream = &file;
        return exit_ok;
    }
};

void emit_word(std::ostream& out, std::uint64_t word, unsigned bits,
               const std::string& format) {
    if (format == "raw-le") {
        char bytes[8];
        for (unsigned i = 0; i < bits / 8; ++i)
            bytes[i] = static_cast<char>((word >> (8 * i)) & 0xff);
        out.write(bytes, bits / 8);
    } else if (format == "hex") {
        char buf[20];
        std::snprintf(buf, sizeof buf, "%0*llx", static_cast<int>(bits / 4),
                      static_cast<unsigned long long>(word));
        out << buf << '\n';
    } else { // u32-lines: decimal word per line
        out << word << '\n';
    }
}

int cmd_gen(const std::string& generator, std::uint64_t seed, std::uint64_t count,
            const std::string& format, const std::string& output, unsigned blocks,
            unsigned lanes) {
    const xg::GeneratorInfo* info;
    try {
        info = &xg::find_generator(generator);
    } catch (const std::invalid_argument& e) {
        std::cerr << "xgen: " << e.what() << "\n";
        return exit_unknown_generator;
    }

    OutputTarget target;
    if (int rc = target.open(output))
        return rc;
    std::ostream& out = *target.stream;

    if (blocks > 1 || lanes > 1) {
        if (!info->params || !info->weyl_combined) {
            std::cerr << "xgen: --blocks/--lanes apply only to xorgens generators\n";
            return exit_bad_args;
        }
        if (count % blocks != 0) {
            std::cerr << "xgen: --count must be divisible by --blocks\n";
            return exit_bad_args;
        }
        try {
            xg::BlockEnsemble ensemble(*info->params, seed, blocks, lanes);
            auto result = ensemble.generate(count / blocks);
            for (const auto& block : result)
                for (std::uint64_t word : block)
                    emit_word(out, word, info->params->w, format);
        } catch (const std::out_of_range& e) {
            std::cerr << "xgen: " << e.what() << "\n";
            return exit_lane_range;
        }
    } else {
        auto source = xg::make_source(*info, seed);
        const unsigned bits = source->word_bits();
        for (std::uint64_t i = 0; i < count; ++i)
            emit_word(out, source->next(), bits, format);
    }
    out.flush();
    if (!out) {
        std::cerr << "xgen: write error\n";
        return exit_io;
    }
    return exit_ok;
}

std::string params_display(const xg::GeneratorInfo& info) {
    if (!info.params)
        return info.id;
    const auto& p = *info.params;
    std::string s = "(r,s,a,b,c,d)=(" + std::to_string(p.r) + "," + std::to_string(p.s) +
                    "," + std::to_string(p.a) + "," + std::to_string(p.b) + "," +
                    std::to_string(p.c) + "," + std::to_string(p.d) +
                    ") w=" + std::to_string(p.w);
    if (info.weyl_combined)
        s += " gamma=" + std::to_string(p.gamma) + " omega=" + std::to_string(p.omega);
    else
        s += " (no Weyl stage)";
    return s;
}

int cmd_test(const std::string& generator, std::uint64_t seed,
             const std::string& config_path, const std::string& input_path,
             const std::string& output) {
    xg::stats::BatteryConfig config = xg::stats::BatteryConfig::defaults();
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "xgen: cannot open battery config: " << config_path << "\n";
            return exit_io;
        }
        try {
            config = xg::stats::BatteryConfig::parse(in);
        } catch (const std::exception& e) {
            std::cerr << "xgen: bad battery config: " << e.what() << "\n";
            return exit_bad_args;
        }
    }

    xg::stats::BatteryReport report;
    try {
        if (!input_path.empty()) {
            std::ifstream in(input_path, std::ios::binary);
            if (!in) {
                std::cerr << "xgen: cannot open input file: " << input_path << "\n";
                return exit_io;
            }
            xg::FileWordSource source(in);
            report = xg::stats::run_battery(source, config, "file:" + input_path,
                                            "32-bit little-endian words", 0);
        } else {
            const xg::GeneratorInfo* info;
            try {
                info = &xg::find_generator(generator);
            } catch (const std::invalid_argument& e) {
                std::cerr << "xgen: " << e.what() << "\n";
                return exit_unknown_generator;
            }
            auto source = xg::make_source(*info, seed);
            report = xg::stats::run_battery(*source, config, info->id,
                                            params_display(*info), seed);
        }
    } catch (const std::runtime_error& e) {
        std::cerr << "xgen: " << e.what() << "\n";
        return exit_io;
    } catch (const std::invalid_argument& e) {
        std::cerr << "xgen: " << e.what() << "\n";
        return exit_bad_args;
    }

    OutputTarget target;
    if (int rc = target.open(output))
        return rc;
    *target.stream << xg::stats::to_json(report) << "\n";
    target.stream->flush();

    switch (report.overall) {
    case xg::stats::Verdict::fail: return exit_fail;
    case xg::stats::Verdict::suspect: return exit_suspect;
    default: return exit_ok;
    }
}

int cmd_bench(const std::string& generator, std::uint64_t count, unsigned trials,
              unsigned blocks, bool as_json) {
    const xg::GeneratorInfo* info;
    try {
        info = &xg::find_generator(generator);
    } catch (const std::invalid_argument& e) {
        std::cerr << "xgen: " << e.what() << "\n";
        return exit_unknown_generator;
    }
    try {
        xg::ThroughputReport report;
        if (blocks > 1) {
            if (!info->params || !info->weyl_combined) {
                std::cerr << "xgen: --blocks applies only to xorgens generators\n";
                return exit_bad_args;
            }
            xg::BlockEnsemble ensemble(*info->params, 0, blocks,
                                       xg::lane_bound(*info->params));
            report = xg::measure_ensemble_throughput(
                ensemble, info->id + " x" + std::to_string(blocks), count, trials);
        } else {
            auto source = xg::make_source(*info, 0);
            report = xg::measure_throughput(*source, info->id, count, trials);
        }
        if (as_json) {
            std::cout << xg::to_json(report) << "\n";
        } else {
            std::printf("%s: mean %.3e RN/s (min %.3e, max %.3e, cv %.2f%%, sink %016llx)\n",
                        report.generator_id.c_str(), report.mean, report.min, report.max,
                        100.0 * report.coefficient_of_variation,
                        static_cast<unsigned long long>(report.sink));
        }
    } catch (const std::out_of_range& e) {
        std::cerr << "xgen: " << e.what() << "\n";
        return exit_lane_range;
    } catch (const std::invalid_argument& e) {
        std::cerr << "xgen: " << e.what() << "\n";
        return exit_bad_args;
    }
    return exit_ok;
}

int cmd_params(const std::string& generator) {
    const xg::GeneratorInfo* info;
    try {
        info = &xg::find_generator(generator);
    } catch (const std::invalid_argument& e) {
        std::cerr << "xgen: " << e.what() << "\n";
        return exit_unknown_generator;
    }
    std::cout << "generator:    " << info->id << "\n";
    if (info->params) {
        const auto& p = *info->params;
        std::cout << "r,s:          " << p.r << "," << p.s << "\n"
                  << "a,b,c,d:      " << p.a << "," << p.b << "," << p.c << "," << p.d
                  << "\n"
                  << "word bits:    " << p.w << "\n";
        if (info->weyl_combined)
            std::cout << "gamma:        " << p.gamma << "\n"
                      << "omega:        " << p.omega << "\n";
        std::cout << "lane bound:   " << xg::lane_bound(p) << "\n";
    }
    std::cout << "state words:  " << info->state_words << "\n"
              << "period:       " << info->period_display << "\n"
              << "period note:  " << info->period_note << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"xorgens family generators, statistical battery and benchmark"};
    app.require_subcommand(1);

    std::string generator = "xorgensgp32";
    std::uint64_t seed = 0; // legal default; seeding handles it
    std::uint64_t count = 0;
    std::string format = "hex";
    std::string output;
    std::string config_path;
    std::string input_path;
    unsigned blocks = 1;
    unsigned lanes = 1;
    unsigned trials = 5;
    bool as_json = false;

    auto* gen = app.add_subcommand("gen", "emit a stream of words");
    gen->add_option("--generator,-g", generator, "generator id")->capture_default_str();
    gen->add_option("--seed", seed, "64-bit seed")->capture_default_str();
    gen->add_option("--count", count, "number of words")->required();
    gen->add_option("--format", format, "raw-le | hex | u32-lines")
        ->check(CLI::IsMember({"raw-le", "hex", "u32-lines"}))
        ->capture_default_str();
    gen->add_option("--output,-o", output, "output path (default stdout)");
    gen->add_option("--blocks", blocks, "parallel blocks (block-major output)")
        ->capture_default_str();
    gen->add_option("--lanes", lanes, "batch lanes within each block")
        ->capture_default_str();

    auto* test = app.add_subcommand("test", "run the statistical battery");
    test->add_option("--generator,-g", generator, "generator id")->capture_default_str();
    test->add_option("--seed", seed, "64-bit seed")->capture_default_str();
    test->add_option("--config", config_path, "battery config file (key = value)");
    test->add_option("--input", input_path,
                     "test a raw-le 32-bit word file instead of a generator");
    test->add_option("--output,-o", output, "write the JSON report here");

    auto* bench = app.add_subcommand("bench", "measure throughput (RN/s)");
    bench->add_option("--generator,-g", generator, "generator id")->capture_default_str();
    bench->add_option("--count", count, "words per trial")->default_val(100'000'000);
    bench->add_option("--trials", trials, "measured trials (one warm-up extra)")
        ->capture_default_str();
    bench->add_option("--blocks", blocks, "ensemble block count (0/1 = serial)")
        ->capture_default_str();
    bench->add_flag("--json", as_json, "emit the report as JSON");

    auto* params = app.add_subcommand("params", "print a generator's parameter table");
    params->add_option("generator", generator, "generator id")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_bad_args;
    }

    if (gen->parsed())
        return cmd_gen(generator, seed, count, format, output, blocks, lanes);
    if (test->parsed())
        return cmd_test(generator, seed, config_path, input_path, output);
    if (bench->parsed())
        return cmd_bench(generator, count, trials, blocks, as_json);
    return cmd_params(generator);
}
