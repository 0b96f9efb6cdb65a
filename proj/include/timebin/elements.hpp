#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "timebin/state.hpp"

namespace timebin {

// The time-bins during which a gated element (Pockels cell, time gate) is
// active. May be empty (always off) or cover every occupied bin (always on).
struct ActivationWindow {
    std::set<int> active_bins;

    ActivationWindow() = default;
    ActivationWindow(std::initializer_list<int> bins) : active_bins(bins) {}
    explicit ActivationWindow(std::set<int> bins) : active_bins(std::move(bins)) {}

    bool contains(int delay) const { return active_bins.count(delay) != 0; }
    bool empty() const { return active_bins.empty(); }
};

enum class ArrivalClass { TooEarly, OnTime, TooLate };

// Arrival-time classification for the two-interferometer protocols:
// delay 0 -> TooEarly (SS), 1 -> OnTime (SL or LS), 2 -> TooLate (LL).
// Throws OutOfRangeError outside {0, 1, 2}.
ArrivalClass classify_arrival(int delay);

// Half-wave plate: swaps the H and V amplitudes of every time-bin on `mode`.
PhotonState apply_hwp(const PhotonState& s, int mode);

// Pockels cell: swaps H and V on `mode` for bins inside the window only.
PhotonState apply_pockels(const PhotonState& s, int mode, const ActivationWindow& window);

// Unbalanced polarization interferometer: V-polarized amplitudes on `mode`
// gain one unit of delay (the long path); H keeps its delay (short path).
// Routing is phase-free.
PhotonState apply_unbalanced_interferometer(const PhotonState& s, int mode);

// Polarizing beam splitter as the ideal four-port device: H amplitudes swap
// between rails `in_mode` and `out_h`, V amplitudes between `in_mode` and
// `out_v`. On states whose output rails are empty this is plain
// transmit/reflect routing.
PhotonState apply_pbs(const PhotonState& s, int in_mode, int out_h, int out_v);

// Balanced polarization interferometer with one gated Pockels cell per arm:
// split (H -> arm H, V -> arm V, no delay difference), cell in arm H fires
// on window_h and in arm V on window_v, then the recombining PBS routes
// unflipped amplitudes to out1 and flipped ones to out2. The output carries
// no amplitude on in_mode; out1/out2 must be empty on input.
PhotonState apply_balanced_interferometer_fig2(const PhotonState& s, int in_mode, int out1,
                                               int out2, const ActivationWindow& window_h,
                                               const ActivationWindow& window_v);

// Time gate: post-selection keeping only amplitudes whose delay lies in
// `keep`. Returns an unnormalized branch; not norm-preserving.
PhotonState apply_time_gate(const PhotonState& s, const ActivationWindow& keep);

enum class ElementKind {
    PBS,
    UnbalancedInterferometer,
    BalancedInterferometerFig2,
    HWP,
    PockelsCell,
    TimeGate,
};

// One optical element as written in a circuit description: the kind, the
// spatial modes it touches (in circuit-file order), and activation windows.
// window_v is used only by BalancedInterferometerFig2 (its V-arm cell);
// window doubles as the H-arm cell there and as the kept bins for TimeGate.
struct ElementSpec {
    ElementKind kind = ElementKind::HWP;
    std::vector<int> modes;
    ActivationWindow window;
    ActivationWindow window_v;
};

// Dispatches to the element operation above. Throws ConfigError when the
// mode list arity does not match the kind.
PhotonState apply_element(const PhotonState& s, const ElementSpec& spec);

std::string element_kind_name(ElementKind kind);
ElementKind element_kind_from_name(const std::string& name);  // ConfigError on unknown names

}  // namespace timebin
