#pragma once

#include <optional>
#include <string>
#include <vector>

#include "timebin/harness.hpp"

namespace timebin {

// All floating-point output uses %.17g: round-trip exact, byte deterministic.
std::string fmt17(double v);

// Canonical state serialization: one record per occupied basis mode, in
// canonical order, e.g.
//   [{"spatial":0,"pol":"H","delay":0,"re":0.6,"im":0}, ...]
std::string state_json(const PhotonState& s);

std::string rejection_outcome_json(const RejectionOutcome& o);
std::string correction_outcome_json(const CorrectionOutcome& o);

// theta sweep at fixed phi, chi and qubit: exact probabilities per grid
// point, grid inclusive of both endpoints (steps == 1 means theta_start).
struct SweepConfig {
    Protocol protocol = Protocol::Reject;
    double theta_start = 0.0;
    double theta_stop = 0.0;
    int steps = 0;
    double phi = 0.0;
    double chi = 0.0;
    Qubit qubit{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
};

struct SweepRow {
    double theta = 0.0;
    double p_main = 0.0;
    double p_alt = 0.0;
    double p_late = 0.0;
    double fidelity_main = 0.0;
    double fidelity_alt = 0.0;
};

std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

struct VerifyConfig {
    std::uint64_t samples = 0;
    double fault_epsilon = 0.0;
};

// Parsed config file. Sections are optional; each subcommand requires its
// own. The experiment section's protocol, seed and threads are filled in by
// make_experiment from the subcommand, top-level fields and CLI overrides.
struct CliConfig {
    int schema_version = 1;
    std::uint64_t seed = 0;
    int threads = 0;
    std::optional<ExperimentConfig> experiment;
    std::optional<SweepConfig> sweep;
    std::optional<VerifyConfig> verify;
};

// Strict parsing: unknown fields are errors, every diagnostic names the
// offending field. Throws ConfigError.
CliConfig parse_config(const std::string& json_text);

// Throws IoError when the file cannot be read, ConfigError on bad content.
CliConfig load_config_file(const std::string& path);

// Applies CLI overrides and derives the channel sampler's stream seed from
// the effective root seed. Throws ConfigError when the experiment section
// is missing.
ExperimentConfig make_experiment(const CliConfig& cfg, Protocol protocol,
                                 std::optional<std::uint64_t> seed_override,
                                 std::optional<std::uint64_t> trials_override);

// Report writers. Byte deterministic for a given report; the echoed config
// covers every result-affecting field (thread count is execution detail and
// deliberately not echoed).
std::string report_json(const RunReport& report, const std::string& command);
std::string trials_csv(const RunReport& report);
std::string sweep_report_json(const SweepConfig& cfg, std::uint64_t seed, std::size_t rows);
std::string sweep_csv(const std::vector<SweepRow>& rows);

void write_file(const std::string& path, const std::string& content);  // IoError on failure

}  // namespace timebin
