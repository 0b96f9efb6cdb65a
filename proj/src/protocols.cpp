#include "timebin/protocols.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace timebin {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_received(const PhotonState& s) {
    for (const auto& [m, a] : s.amplitudes()) {
        if (m.spatial != kLineMode) {
            throw std::invalid_argument("received state must live on the line mode");
        }
        if (m.delay > 1) {
            throw BinRangeError("received state occupies bin " + std::to_string(m.delay) +
                                "; decoder input must stay inside bins {0, 1}");
        }
    }
}

double branch_fidelity(const PhotonState& branch, double probability, const Qubit& reference,
                       int spatial) {
    if (probability <= kFidelityProbabilityFloor) {
        return kNaN;
    }
    return branch.fidelity_with_qubit(reference, spatial, 1);
}

}  // namespace

PhotonState alice_encode(const Qubit& q) {
    PhotonState s = make_qubit_state(q, kLineMode, kRejectionModeCount);
    s = apply_unbalanced_interferometer(s, kLineMode);
    return apply_pockels(s, kLineMode, ActivationWindow{1});
}

PhotonState reject_decoder_state(const PhotonState& received) {
    require_received(received);
    PhotonState s = apply_pockels(received, kLineMode, ActivationWindow{0});
    s = apply_unbalanced_interferometer(s, kLineMode);
    return apply_hwp(s, kLineMode);
}

PhotonState correct_decoder_state(const PhotonState& received) {
    require_received(received);
    PhotonState s = received.with_mode_count(kCorrectionModeCount);
    s = apply_pockels(s, kLineMode, ActivationWindow{0});
    s = apply_balanced_interferometer_fig2(s, kLineMode, kOutput1Mode, kOutput2Mode,
                                           ActivationWindow{0}, ActivationWindow{1});
    for (int port : {kOutput1Mode, kOutput2Mode}) {
        s = apply_unbalanced_interferometer(s, port);
        s = apply_hwp(s, port);
    }
    return s;
}

RejectionOutcome bob_decode_reject(const PhotonState& received, const Qubit& reference) {
    const PhotonState decoded = reject_decoder_state(received);
    RejectionOutcome out;
    auto [early, p_early] = decoded.project_time_bin(0);
    auto [on_time, p_on_time] = decoded.project_time_bin(1);
    auto [late, p_late] = decoded.project_time_bin(2);
    out.accepted_state = std::move(on_time);
    out.accept_probability = p_on_time;
    out.early_probability = p_early;
    out.late_probability = p_late;
    out.fidelity_accepted = branch_fidelity(out.accepted_state, p_on_time, reference, kLineMode);
    return out;
}

CorrectionOutcome bob_decode_correct(const PhotonState& received, const Qubit& reference) {
    const PhotonState decoded = correct_decoder_state(received);
    CorrectionOutcome out;
    out.port1_state = decoded.restricted(kOutput1Mode, 1);
    out.port2_state = decoded.restricted(kOutput2Mode, 1);
    out.port1_probability = out.port1_state.norm_squared();
    out.port2_probability = out.port2_state.norm_squared();
    out.fidelity_port1 =
        branch_fidelity(out.port1_state, out.port1_probability, reference, kOutput1Mode);
    out.fidelity_port2 =
        branch_fidelity(out.port2_state, out.port2_probability, reference, kOutput2Mode);
    return out;
}

RejectionOutcome run_rejection(const Qubit& q, const ChannelParams& p) {
    return bob_decode_reject(apply_channel(alice_encode(q), p, kLineMode), q);
}

CorrectionOutcome run_correction(const Qubit& q, const ChannelParams& p) {
    return bob_decode_correct(apply_channel(alice_encode(q), p, kLineMode), q);
}

}  // namespace timebin
