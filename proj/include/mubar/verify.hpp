#pragma once

#include "mubar/report.hpp"

#include <chrono>
#include <string>
#include <thread>
#include <vector>

namespace mubar {

/// Outcome of a batch sweep. Content is deterministic for a fixed corpus,
/// independent of the worker count; only wall_seconds varies between runs.
struct VerificationSummary {
    int n_min = 0;
    int n_max = 0;
    long long max_a = 0;
    std::size_t total = 0;
    std::size_t passed = 0;

    struct Failure {
        std::string seifert;
        std::vector<std::string> verdicts;
    };
    std::vector<Failure> failures;
    double wall_seconds = 0.0;
};

/// Verifies every sphere with n_min <= n <= n_max and multiplicities up to
/// max_a, distributing spheres over `jobs` workers. A failed verdict (or an
/// internal inconsistency) is collected, never thrown; results are merged in
/// corpus order.
inline VerificationSummary run_verification(int n_min, int n_max, long long max_a,
                                            unsigned jobs = 1) {
    if (n_max < n_min)
        throw input_error("run_verification: n range is empty");
    const auto start = std::chrono::steady_clock::now();

    std::vector<SeifertData> corpus;
    for (int n = n_min; n <= n_max; ++n)
        enumerate_corpus(n, max_a, [&](const SeifertData& y) { corpus.push_back(y); });

    if (jobs == 0) jobs = 1;
    std::vector<std::vector<std::string>> failed(corpus.size());
    std::vector<char> ok(corpus.size(), 0);

    auto worker = [&](unsigned id) {
        for (std::size_t i = id; i < corpus.size(); i += jobs) {
            try {
                const InvariantReport r = verify_main_theorem(corpus[i]);
                if (r.all_pass())
                    ok[i] = 1;
                else
                    failed[i] = r.failed_verdicts();
            } catch (const std::exception& e) {
                failed[i] = {std::string("exception: ") + e.what()};
            }
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    VerificationSummary s;
    s.n_min = n_min;
    s.n_max = n_max;
    s.max_a = max_a;
    s.total = corpus.size();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (ok[i])
            ++s.passed;
        else
            s.failures.push_back({corpus[i].name(), failed[i]});
    }
    s.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return s;
}

} // namespace mubar
