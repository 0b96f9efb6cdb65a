#include "timebin/state.hpp"

#include <cmath>
#include <string>

namespace timebin {

namespace {

std::string mode_range_message(int spatial, int mode_count) {
    return "spatial mode " + std::to_string(spatial) + " outside declared set [0, " +
           std::to_string(mode_count) + ")";
}

}  // namespace

PhotonState::PhotonState(Amplitudes amplitudes, int mode_count, bool normalized)
    : amplitudes_(std::move(amplitudes)), mode_count_(mode_count), normalized_(normalized) {
    if (mode_count_ < 1) {
        throw UnknownModeError("mode_count must be >= 1");
    }
    for (auto it = amplitudes_.begin(); it != amplitudes_.end();) {
        const BasisMode& m = it->first;
        if (m.spatial < 0 || m.spatial >= mode_count_) {
            throw UnknownModeError(mode_range_message(m.spatial, mode_count_));
        }
        if (m.delay < 0) {
            throw OutOfRangeError("time-bin delay must be nonnegative");
        }
        if (std::abs(it->second) < kAmplitudeEpsilon) {
            it = amplitudes_.erase(it);
        } else {
            ++it;
        }
    }
    const double n2 = norm_squared();
    if (normalized_) {
        if (std::abs(n2 - 1.0) > 1e-9) {
            throw NormalizationError("state marked normalized has squared norm " +
                                     std::to_string(n2));
        }
    } else if (n2 > 1.0 + 1e-12) {
        throw NormalizationError("branch squared norm " + std::to_string(n2) + " exceeds 1");
    }
}

Complex PhotonState::amplitude(const BasisMode& m) const {
    auto it = amplitudes_.find(m);
    return it == amplitudes_.end() ? Complex{0.0, 0.0} : it->second;
}

double PhotonState::norm_squared() const {
    double n2 = 0.0;
    for (const auto& [mode, amp] : amplitudes_) {
        n2 += std::norm(amp);
    }
    return n2;
}

std::pair<PhotonState, double> PhotonState::project_time_bin(int delay) const {
    Amplitudes branch;
    for (const auto& [mode, amp] : amplitudes_) {
        if (mode.delay == delay) {
            branch.emplace(mode, amp);
        }
    }
    PhotonState state(std::move(branch), mode_count_, false);
    const double probability = state.norm_squared();
    return {std::move(state), probability};
}

PhotonState PhotonState::restricted(int spatial, int delay) const {
    require_mode(spatial);
    Amplitudes branch;
    for (const auto& [mode, amp] : amplitudes_) {
        if (mode.spatial == spatial && mode.delay == delay) {
            branch.emplace(mode, amp);
        }
    }
    return PhotonState(std::move(branch), mode_count_, false);
}

double PhotonState::fidelity_with_qubit(const Qubit& q, int spatial, int delay) const {
    require_mode(spatial);
    const Complex a_h = amplitude({spatial, Polarization::H, delay});
    const Complex a_v = amplitude({spatial, Polarization::V, delay});
    const double n2 = std::norm(a_h) + std::norm(a_v);
    if (std::sqrt(n2) < 1e-12) {
        throw EmptyBranchError("empty branch at spatial " + std::to_string(spatial) +
                               ", bin " + std::to_string(delay));
    }
    const Complex overlap = std::conj(q.alpha) * a_h + std::conj(q.beta) * a_v;
    return std::norm(overlap) / n2;
}

PhotonState PhotonState::renormalized() const {
    const double n2 = norm_squared();
    if (n2 <= 1e-12) {
        throw EmptyBranchError("cannot renormalize a branch with squared norm " +
                               std::to_string(n2));
    }
    const double scale = 1.0 / std::sqrt(n2);
    Amplitudes scaled;
    for (const auto& [mode, amp] : amplitudes_) {
        scaled.emplace(mode, amp * scale);
    }
    return PhotonState(std::move(scaled), mode_count_, true);
}

PhotonState PhotonState::with_mode_count(int mode_count) const {
    return PhotonState(amplitudes_, mode_count, normalized_);
}

std::set<int> PhotonState::occupied_bins() const {
    std::set<int> bins;
    for (const auto& [mode, amp] : amplitudes_) {
        bins.insert(mode.delay);
    }
    return bins;
}

void PhotonState::require_mode(int mode) const {
    if (mode < 0 || mode >= mode_count_) {
        throw UnknownModeError(mode_range_message(mode, mode_count_));
    }
}

PhotonState make_qubit_state(const Qubit& q, int home, int mode_count) {
    if (std::abs(q.norm_squared() - 1.0) > 1e-9) {
        throw NormalizationError("qubit squared norm " + std::to_string(q.norm_squared()) +
                                 " deviates from 1 by more than 1e-9");
    }
    PhotonState::Amplitudes amps;
    amps.emplace(BasisMode{home, Polarization::H, 0}, q.alpha);
    amps.emplace(BasisMode{home, Polarization::V, 0}, q.beta);
    return PhotonState(std::move(amps), mode_count, true);
}

}  // namespace timebin
