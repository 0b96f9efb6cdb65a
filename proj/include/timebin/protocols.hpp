#pragma once

#include "timebin/channel.hpp"
#include "timebin/elements.hpp"
#include "timebin/state.hpp"

namespace timebin {

// Spatial mode labels shared by the two protocol circuits. The rejection
// circuit lives entirely on the line; the correction circuit adds Bob's
// balanced-interferometer arms and the two output ports.
inline constexpr int kLineMode = 0;
inline constexpr int kArmHMode = 1;
inline constexpr int kArmVMode = 2;
inline constexpr int kOutput1Mode = 3;
inline constexpr int kOutput2Mode = 4;

inline constexpr int kRejectionModeCount = 1;
inline constexpr int kCorrectionModeCount = 5;

// Largest delay either protocol can produce: twice through a long path.
inline constexpr int kMaxProtocolDelay = 2;

// Fidelities are reported only when the branch carries this much probability.
inline constexpr double kFidelityProbabilityFloor = 1e-12;

// Decoded rejection run. The accepted (on-time, delay 1) branch is kept
// unnormalized so accept_probability is exactly its squared norm; early and
// late are the SS and LL error branches. fidelity_accepted is NaN when the
// accepted branch carries no probability.
struct RejectionOutcome {
    PhotonState accepted_state;
    double accept_probability = 0.0;
    double early_probability = 0.0;
    double late_probability = 0.0;
    double fidelity_accepted = 0.0;
};

// Decoded correction run. Both on-time branches (delay 1 at outputs 1 and 2)
// are kept unnormalized; there is no discard branch, so the two
// probabilities sum to 1 for a normalized input.
struct CorrectionOutcome {
    PhotonState port1_state;
    PhotonState port2_state;
    double port1_probability = 0.0;
    double port2_probability = 0.0;
    double fidelity_port1 = 0.0;
    double fidelity_port2 = 0.0;
};

// Alice's encoder: qubit -> unbalanced interferometer -> Pockels cell gated
// on bin 1. Produces alpha at (line, H, 0) plus beta at (line, H, 1).
PhotonState alice_encode(const Qubit& q);

// Bob's element pipelines without the final time projection. Inputs must
// live on the line mode with occupied bins inside {0, 1} (BinRangeError
// otherwise). The rejection decoder is Pockels cell gated on bin 0,
// unbalanced interferometer, half-wave plate. The correction decoder is
// Pockels cell gated on bin 0, the balanced interferometer with arm cells
// gated on bins 0 (H) and 1 (V), then an unbalanced interferometer and a
// half-wave plate on each output port.
PhotonState reject_decoder_state(const PhotonState& received);
PhotonState correct_decoder_state(const PhotonState& received);

// Decode and project. `reference` is the ground-truth qubit the reported
// fidelities are measured against (the simulator knows it; Bob does not).
RejectionOutcome bob_decode_reject(const PhotonState& received, const Qubit& reference);
CorrectionOutcome bob_decode_correct(const PhotonState& received, const Qubit& reference);

// End-to-end convenience: encode, apply the channel unitary, decode.
RejectionOutcome run_rejection(const Qubit& q, const ChannelParams& p);
CorrectionOutcome run_correction(const Qubit& q, const ChannelParams& p);

}  // namespace timebin
