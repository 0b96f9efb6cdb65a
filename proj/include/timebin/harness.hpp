#pragma once

#include <cstdint>
#include <vector>

#include "timebin/channel.hpp"
#include "timebin/dense_oracle.hpp"
#include "timebin/elements.hpp"
#include "timebin/protocols.hpp"

namespace timebin {

enum class QubitSource { Fixed, HaarRandom };

// Stream indices for derive_seed(root_seed, stream). Trial i draws its
// qubit from engine_at(derive_seed(seed, kQubitStream), i); the channel
// sampler's own seed should be derive_seed(seed, kChannelStream) when the
// experiment is built from a config file.
inline constexpr std::uint64_t kQubitStream = 0;
inline constexpr std::uint64_t kChannelStream = 1;
inline constexpr std::uint64_t kBernoulliStream = 2;

struct ExperimentConfig {
    Protocol protocol = Protocol::Reject;
    std::uint64_t trials = 1;
    QubitSource qubit_source = QubitSource::Fixed;
    Qubit fixed_qubit{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
    ChannelSampler channel;
    std::uint64_t seed = 0;
    // Worker threads; 0 means hardware concurrency. Never changes results.
    int threads = 0;
    // When set, each trial records one sampled detection event (0/1
    // indicator columns) instead of exact probabilities. Off by default:
    // the protocols' claims are about exact amplitudes.
    bool bernoulli_sampling = false;
    // Extra line optics applied after the channel, before Bob's decoder.
    std::vector<ElementSpec> pre_decode_elements;
};

// One trial. For Reject: p_main/p_alt/p_late are the accept/early/late
// probabilities and fidelity_main the accepted-branch fidelity
// (fidelity_alt is NaN). For Correct: p_main/p_alt are the port 1/port 2
// probabilities (p_late is 0) and fidelity_main/fidelity_alt the two port
// fidelities. NaN marks a fidelity with no probability behind it.
struct TrialRecord {
    double theta = 0.0;
    double phi = 0.0;
    double chi = 0.0;
    double p_main = 0.0;
    double p_alt = 0.0;
    double p_late = 0.0;
    double fidelity_main = 0.0;
    double fidelity_alt = 0.0;
};

struct Aggregates {
    double mean_p_main = 0.0;
    double variance_p_main = 0.0;  // population variance
    double mean_p_alt = 0.0;
    double mean_p_late = 0.0;
    double mean_fidelity = 0.0;  // over every defined fidelity entry
    double min_fidelity = 0.0;
    std::uint64_t fidelity_defined = 0;
};

struct RunReport {
    ExperimentConfig config;
    std::vector<TrialRecord> trials;
    Aggregates aggregates;
};

// Runs cfg.trials independent (qubit, channel) draws through the chosen
// protocol. Deterministic given cfg.seed and the sampler seed; the thread
// count affects wall time only.
RunReport run_experiment(const ExperimentConfig& cfg);

struct VerifyResult {
    std::uint64_t samples = 0;
    double max_deviation_reject = 0.0;
    double max_deviation_correct = 0.0;
    bool pass = false;
};

// Compares sparse propagation against the dense circuit product over
// `samples` Haar-random qubits and uniform channel draws per protocol.
// fault_epsilon, when nonzero, perturbs one entry of each dense unitary --
// a self-test hook proving the gate actually trips on a broken circuit.
VerifyResult run_verification(std::uint64_t samples, std::uint64_t seed,
                              double fault_epsilon = 0.0);

}  // namespace timebin
