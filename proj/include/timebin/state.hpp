#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <utility>

#include "timebin/errors.hpp"

namespace timebin {

using Complex = std::complex<double>;

// Stored amplitudes with magnitude below this are pruned.
inline constexpr double kAmplitudeEpsilon = 1e-15;

enum class Polarization : std::uint8_t { H = 0, V = 1 };

inline Polarization flipped(Polarization p) {
    return p == Polarization::H ? Polarization::V : Polarization::H;
}

// One occupied optical mode: spatial rail x polarization x time-bin delay.
// The delay counts long-path traversals; one unit is the S/L path difference.
struct BasisMode {
    int spatial = 0;
    Polarization pol = Polarization::H;
    int delay = 0;

    friend bool operator==(const BasisMode&, const BasisMode&) = default;

    // Canonical order: spatial ascending, then delay, then H before V.
    friend std::strong_ordering operator<=>(const BasisMode& a, const BasisMode& b) {
        if (auto c = a.spatial <=> b.spatial; c != std::strong_ordering::equal) return c;
        if (auto c = a.delay <=> b.delay; c != std::strong_ordering::equal) return c;
        return static_cast<int>(a.pol) <=> static_cast<int>(b.pol);
    }
};

// A polarization qubit alpha|H> + beta|V>.
struct Qubit {
    Complex alpha{1.0, 0.0};
    Complex beta{0.0, 0.0};

    double norm_squared() const { return std::norm(alpha) + std::norm(beta); }
};

// Sparse single-photon wavefunction: a map from BasisMode to complex
// amplitude over a declared set of spatial modes {0, ..., mode_count-1}.
// Values are immutable after construction; every operation returns a new
// state. A state is either normalized (squared norm 1) or an unnormalized
// post-selection branch (squared norm <= 1), tracked by a flag.
class PhotonState {
public:
    using Amplitudes = std::map<BasisMode, Complex>;

    PhotonState() = default;  // empty branch over one declared mode

    PhotonState(Amplitudes amplitudes, int mode_count, bool normalized);

    const Amplitudes& amplitudes() const { return amplitudes_; }
    int mode_count() const { return mode_count_; }
    bool is_normalized() const { return normalized_; }
    bool empty() const { return amplitudes_.empty(); }

    // Amplitude at `m`, zero if unoccupied.
    Complex amplitude(const BasisMode& m) const;

    double norm_squared() const;

    // Unnormalized restriction to one time-bin (all spatial modes and
    // polarizations) together with its probability, the branch's squared
    // norm. An unoccupied bin yields an empty branch with probability 0.
    std::pair<PhotonState, double> project_time_bin(int delay) const;

    // Unnormalized restriction to a single (spatial, delay) cell.
    PhotonState restricted(int spatial, int delay) const;

    // |<q|s_cell>|^2 on the renormalized (spatial, delay) restriction.
    // Invariant under any global phase of the branch. Throws
    // EmptyBranchError when the restriction's norm is below 1e-12.
    double fidelity_with_qubit(const Qubit& q, int spatial, int delay) const;

    // Scales to unit norm. Throws EmptyBranchError when the squared norm
    // is at or below 1e-12.
    PhotonState renormalized() const;

    // Same amplitudes over a different declared mode set; every occupied
    // spatial mode must still fit.
    PhotonState with_mode_count(int mode_count) const;

    std::set<int> occupied_bins() const;

    // Throws UnknownModeError unless 0 <= mode < mode_count().
    void require_mode(int mode) const;

private:
    Amplitudes amplitudes_;
    int mode_count_ = 1;
    bool normalized_ = false;
};

// State with amplitude q.alpha at (home, H, 0) and q.beta at (home, V, 0).
// Throws NormalizationError when |alpha|^2 + |beta|^2 deviates from 1 by
// more than 1e-9.
PhotonState make_qubit_state(const Qubit& q, int home = 0, int mode_count = 1);

}  // namespace timebin
