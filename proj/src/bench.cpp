#include "xg/bench.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "xg/parallel.hpp"

namespace xg {

namespace {

ThroughputReport run_trials(const std::string& generator_id, std::uint64_t count,
                            unsigned trials, const std::function<double()>& trial,
                            const std::uint64_t& sink) {
    if (count < 1'000'000)
        throw std::invalid_argument("throughput trials need count >= 1e6");
    if (trials < 3)
        throw std::invalid_argument("throughput needs >= 3 trials");

    trial(); // warm-up, discarded

    ThroughputReport report;
    report.generator_id = generator_id;
    report.count_per_trial = count;
    report.trials = trials;
    report.rn_per_s.reserve(trials);
    for (unsigned t = 0; t < trials; ++t)
        report.rn_per_s.push_back(trial());
    report.sink = sink;

    double sum = 0.0;
    report.min = report.rn_per_s.front();
    report.max = report.rn_per_s.front();
    for (double v : report.rn_per_s) {
        sum += v;
        report.min = std::min(report.min, v);
        report.max = std::max(report.max, v);
    }
    report.mean = sum / trials;
    double var = 0.0;
    for (double v : report.rn_per_s)
        var += (v - report.mean) * (v - report.mean);
    var /= trials;
    report.coefficient_of_variation = std::sqrt(var) / report.mean;
    return report;
}

} // namespace

namespace {

double thread_cpu_seconds() {
    timespec ts;
    clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
    return static_cast<double>(ts.tv_sec) + static_cast<double>(ts.tv_nsec) * 1e-9;
}

} // namespace

ThroughputReport measure_throughput(WordSource& source, const std::string& generator_id,
                                    std::uint64_t count, unsigned trials) {
    std::uint64_t sink = 0;
    // Each trial generates `count` words in fixed-size chunks and reports
    // the best sustained chunk rate on thread CPU time.  Both choices
    // reject interference from co-tenants and scheduler preemption, which
    // otherwise dominate the trial-to-trial variance on shared machines;
    // the generator's own cost is the same in every chunk.
    constexpr unsigned chunks = 20;
    auto trial = [&]() -> double {
        const std::uint64_t chunk_size = count / chunks;
        double best = 0.0;
        std::uint64_t produced = 0;
        for (unsigned c = 0; c < chunks; ++c) {
            const std::uint64_t n = (c == chunks - 1) ? count - produced : chunk_size;
            const double start = thread_cpu_seconds();
            for (std::uint64_t i = 0; i < n; ++i)
                sink ^= source.next();
            const double elapsed = thread_cpu_seconds() - start;
            produced += n;
            if (elapsed > 0.0)
                best = std::max(best, static_cast<double>(n) / elapsed);
        }
        return best;
    };
    return run_trials(generator_id, count, trials, trial, sink);
}

ThroughputReport measure_ensemble_throughput(BlockEnsemble& ensemble,
                                             const std::string& generator_id,
                                             std::uint64_t count, unsigned trials) {
    using clock = std::chrono::steady_clock;
    const std::size_t per_block = count / ensemble.num_blocks();
    const std::uint64_t total = static_cast<std::uint64_t>(per_block) * ensemble.num_blocks();
    std::uint64_t sink = 0;
    auto trial = [&]() -> double {
        auto start = clock::now();
        auto blocks = ensemble.generate(per_block);
        std::chrono::duration<double> elapsed = clock::now() - start;
        for (const auto& block : blocks)
            for (std::uint64_t word : block)
                sink ^= word;
        return static_cast<double>(total) / elapsed.count();
    };
    return run_trials(generator_id, total, trials, trial, sink);
}

std::string compare(const std::vector<GeneratorSummary>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(16) << "generator" << std::right << std::setw(12)
        << "state words" << "  " << std::left << std::setw(12) << "period" << std::right
        << std::setw(14) << "RN/s" << '\n';
    for (const auto& row : rows) {
        out << std::left << std::setw(16) << row.generator_id << std::right
            << std::setw(12) << row.state_words << "  " << std::left << std::setw(12)
            << row.period_display << std::right << std::setw(14);
        if (row.rn_per_s_mean > 0.0)
            out << std::scientific << std::setprecision(3) << row.rn_per_s_mean;
        else
            out << "-";
        out << '\n';
        out.unsetf(std::ios::scientific);
    }
    return out.str();
}

std::string to_json(const ThroughputReport& report) {
    nlohmann::json j;
    j["generator"] = report.generator_id;
    j["count_per_trial"] = report.count_per_trial;
    j["trials"] = report.trials;
    j["rn_per_s"] = report.rn_per_s;
    j["mean"] = report.mean;
    j["min"] = report.min;
    j["max"] = report.max;
    j["cv"] = report.coefficient_of_variation;
    j["sink"] = report.sink;
    return j.dump(2);
}

} // namespace xg
