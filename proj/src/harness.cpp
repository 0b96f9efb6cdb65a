#include "timebin/harness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "timebin/rng.hpp"

namespace timebin {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Verification uses its own streams so it never correlates with experiments
// sharing the same root seed.
constexpr std::uint64_t kVerifyQubitStream[2] = {10, 12};    // Reject, Correct
constexpr std::uint64_t kVerifyChannelStream[2] = {11, 13};

TrialRecord run_trial(const ExperimentConfig& cfg, std::uint64_t i) {
    Qubit q = cfg.fixed_qubit;
    if (cfg.qubit_source == QubitSource::HaarRandom) {
        auto eng = engine_at(derive_seed(cfg.seed, kQubitStream), i);
        q = haar_qubit(eng);
    }
    const ChannelParams p = sample_channel(cfg.channel, i);

    PhotonState received = apply_channel(alice_encode(q), p, kLineMode);
    if (!cfg.pre_decode_elements.empty()) {
        const int modes =
            cfg.protocol == Protocol::Correct ? kCorrectionModeCount : kRejectionModeCount;
        received = received.with_mode_count(modes);
        for (const ElementSpec& spec : cfg.pre_decode_elements) {
            received = apply_element(received, spec);
        }
    }

    TrialRecord r;
    r.theta = p.theta;
    r.phi = p.phi;
    r.chi = p.chi;
    if (cfg.protocol == Protocol::Reject) {
        const RejectionOutcome o = bob_decode_reject(received, q);
        r.p_main = o.accept_probability;
        r.p_alt = o.early_probability;
        r.p_late = o.late_probability;
        r.fidelity_main = o.fidelity_accepted;
        r.fidelity_alt = kNaN;
    } else {
        const CorrectionOutcome o = bob_decode_correct(received, q);
        r.p_main = o.port1_probability;
        r.p_alt = o.port2_probability;
        r.p_late = 0.0;
        r.fidelity_main = o.fidelity_port1;
        r.fidelity_alt = o.fidelity_port2;
    }

    if (cfg.bernoulli_sampling) {
        auto eng = engine_at(derive_seed(cfg.seed, kBernoulliStream), i);
        const double u = uniform01(eng);
        if (u < r.p_main) {
            r.p_main = 1.0;
            r.p_alt = 0.0;
            r.p_late = 0.0;
            r.fidelity_alt = kNaN;
        } else if (u < r.p_main + r.p_alt) {
            const double f_alt = r.fidelity_alt;
            r.p_main = 0.0;
            r.p_alt = 1.0;
            r.p_late = 0.0;
            r.fidelity_main = kNaN;
            r.fidelity_alt = cfg.protocol == Protocol::Correct ? f_alt : kNaN;
        } else {
            r.p_main = 0.0;
            r.p_alt = 0.0;
            r.p_late = 1.0;
            r.fidelity_main = kNaN;
            r.fidelity_alt = kNaN;
        }
    }
    return r;
}

Aggregates compute_aggregates(const std::vector<TrialRecord>& records) {
    Aggregates agg;
    const double n = static_cast<double>(records.size());
    double sum_main = 0.0, sum_alt = 0.0, sum_late = 0.0;
    for (const TrialRecord& r : records) {
        sum_main += r.p_main;
        sum_alt += r.p_alt;
        sum_late += r.p_late;
    }
    agg.mean_p_main = sum_main / n;
    agg.mean_p_alt = sum_alt / n;
    agg.mean_p_late = sum_late / n;

    double ss = 0.0;
    for (const TrialRecord& r : records) {
        const double d = r.p_main - agg.mean_p_main;
        ss += d * d;
    }
    agg.variance_p_main = ss / n;

    double fidelity_sum = 0.0;
    double fidelity_min = std::numeric_limits<double>::infinity();
    std::uint64_t defined = 0;
    for (const TrialRecord& r : records) {
        for (double f : {r.fidelity_main, r.fidelity_alt}) {
            if (!std::isnan(f)) {
                fidelity_sum += f;
                fidelity_min = std::min(fidelity_min, f);
                ++defined;
            }
        }
    }
    agg.fidelity_defined = defined;
    agg.mean_fidelity = defined > 0 ? fidelity_sum / static_cast<double>(defined) : kNaN;
    agg.min_fidelity = defined > 0 ? fidelity_min : kNaN;
    return agg;
}

}  // namespace

RunReport run_experiment(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) {
        throw ConfigError("trials must be >= 1");
    }
    if (cfg.qubit_source == QubitSource::Fixed &&
        std::abs(cfg.fixed_qubit.norm_squared() - 1.0) > 1e-9) {
        throw ConfigError("fixed qubit is not normalized");
    }
    (void)sample_channel(cfg.channel, 0);  // rejects an invalid sampler up front

    RunReport report;
    report.config = cfg;
    report.trials.resize(cfg.trials);

    std::uint64_t workers = cfg.threads > 0 ? static_cast<std::uint64_t>(cfg.threads)
                                            : std::thread::hardware_concurrency();
    workers = std::clamp<std::uint64_t>(workers, 1, cfg.trials);

    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
        try {
            for (std::uint64_t i = lo; i < hi; ++i) {
                report.trials[i] = run_trial(cfg, i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) {
                first_error = std::current_exception();
            }
        }
    };

    if (workers == 1) {
        run_range(0, cfg.trials);
    } else {
        const std::uint64_t chunk = (cfg.trials + workers - 1) / workers;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::uint64_t t = 0; t < workers; ++t) {
            const std::uint64_t lo = t * chunk;
            const std::uint64_t hi = std::min(cfg.trials, lo + chunk);
            if (lo >= hi) {
                break;
            }
            pool.emplace_back(run_range, lo, hi);
        }
        for (std::thread& th : pool) {
            th.join();
        }
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }

    report.aggregates = compute_aggregates(report.trials);
    return report;
}

VerifyResult run_verification(std::uint64_t samples, std::uint64_t seed, double fault_epsilon) {
    if (samples < 1) {
        throw ConfigError("verification sample count must be >= 1");
    }
    VerifyResult result;
    result.samples = samples;
    for (int which : {0, 1}) {
        const Protocol protocol = which == 0 ? Protocol::Reject : Protocol::Correct;
        const std::uint64_t qubit_seed = derive_seed(seed, kVerifyQubitStream[which]);
        const ChannelSampler sampler =
            ChannelSampler::uniform_theta(derive_seed(seed, kVerifyChannelStream[which]));
        double worst = 0.0;
        for (std::uint64_t i = 0; i < samples; ++i) {
            auto eng = engine_at(qubit_seed, i);
            const Qubit q = haar_qubit(eng);
            const ChannelParams p = sample_channel(sampler, i);
            DenseCircuit circuit = build_dense_circuit(protocol, p);
            if (fault_epsilon != 0.0) {
                circuit.unitary(0, 0) += fault_epsilon;
            }
            worst = std::max(worst, max_deviation(circuit, q));
        }
        (which == 0 ? result.max_deviation_reject : result.max_deviation_correct) = worst;
    }
    result.pass = result.max_deviation_reject < kOracleTolerance &&
                  result.max_deviation_correct < kOracleTolerance;
    return result;
}

}  // namespace timebin
