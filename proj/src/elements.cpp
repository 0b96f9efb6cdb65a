#include "timebin/elements.hpp"

#include <stdexcept>

namespace timebin {

namespace {

PhotonState rebuild(const PhotonState& s, PhotonState::Amplitudes amps) {
    return PhotonState(std::move(amps), s.mode_count(), s.is_normalized());
}

void require_distinct(std::initializer_list<int> modes) {
    std::set<int> seen;
    for (int m : modes) {
        if (!seen.insert(m).second) {
            throw std::invalid_argument("element target modes must be distinct");
        }
    }
}

}  // namespace

ArrivalClass classify_arrival(int delay) {
    switch (delay) {
        case 0:
            return ArrivalClass::TooEarly;
        case 1:
            return ArrivalClass::OnTime;
        case 2:
            return ArrivalClass::TooLate;
        default:
            throw OutOfRangeError("arrival delay " + std::to_string(delay) +
                                  " outside protocol range {0, 1, 2}");
    }
}

PhotonState apply_hwp(const PhotonState& s, int mode) {
    s.require_mode(mode);
    PhotonState::Amplitudes out;
    for (const auto& [m, a] : s.amplitudes()) {
        BasisMode key = m;
        if (m.spatial == mode) {
            key.pol = flipped(m.pol);
        }
        out.emplace(key, a);
    }
    return rebuild(s, std::move(out));
}

PhotonState apply_pockels(const PhotonState& s, int mode, const ActivationWindow& window) {
    s.require_mode(mode);
    PhotonState::Amplitudes out;
    for (const auto& [m, a] : s.amplitudes()) {
        BasisMode key = m;
        if (m.spatial == mode && window.contains(m.delay)) {
            key.pol = flipped(m.pol);
        }
        out.emplace(key, a);
    }
    return rebuild(s, std::move(out));
}

PhotonState apply_unbalanced_interferometer(const PhotonState& s, int mode) {
    s.require_mode(mode);
    PhotonState::Amplitudes out;
    for (const auto& [m, a] : s.amplitudes()) {
        BasisMode key = m;
        if (m.spatial == mode && m.pol == Polarization::V) {
            key.delay += 1;
        }
        out.emplace(key, a);
    }
    return rebuild(s, std::move(out));
}

PhotonState apply_pbs(const PhotonState& s, int in_mode, int out_h, int out_v) {
    s.require_mode(in_mode);
    s.require_mode(out_h);
    s.require_mode(out_v);
    require_distinct({in_mode, out_h, out_v});
    PhotonState::Amplitudes out;
    for (const auto& [m, a] : s.amplitudes()) {
        BasisMode key = m;
        const int partner = m.pol == Polarization::H ? out_h : out_v;
        if (m.spatial == in_mode) {
            key.spatial = partner;
        } else if (m.spatial == partner) {
            key.spatial = in_mode;
        }
        out.emplace(key, a);
    }
    return rebuild(s, std::move(out));
}

PhotonState apply_balanced_interferometer_fig2(const PhotonState& s, int in_mode, int out1,
                                               int out2, const ActivationWindow& window_h,
                                               const ActivationWindow& window_v) {
    s.require_mode(in_mode);
    s.require_mode(out1);
    s.require_mode(out2);
    require_distinct({in_mode, out1, out2});
    PhotonState::Amplitudes out;
    for (const auto& [m, a] : s.amplitudes()) {
        BasisMode key = m;
        if (m.spatial == in_mode) {
            if (m.pol == Polarization::H) {
                // H arm; the cell flips it onto the V output of the recombiner
                const bool fired = window_h.contains(m.delay);
                key.spatial = fired ? out2 : out1;
                key.pol = fired ? Polarization::V : Polarization::H;
            } else {
                const bool fired = window_v.contains(m.delay);
                key.spatial = fired ? out2 : out1;
                key.pol = fired ? Polarization::H : Polarization::V;
            }
        }
        out[key] += a;
    }
    return rebuild(s, std::move(out));
}

PhotonState apply_time_gate(const PhotonState& s, const ActivationWindow& keep) {
    PhotonState::Amplitudes out;
    for (const auto& [m, a] : s.amplitudes()) {
        if (keep.contains(m.delay)) {
            out.emplace(m, a);
        }
    }
    return PhotonState(std::move(out), s.mode_count(), false);
}

namespace {

void require_arity(const ElementSpec& spec, std::size_t n) {
    if (spec.modes.size() != n) {
        throw ConfigError(element_kind_name(spec.kind) + " takes exactly " + std::to_string(n) +
                          " mode(s), got " + std::to_string(spec.modes.size()));
    }
}

}  // namespace

PhotonState apply_element(const PhotonState& s, const ElementSpec& spec) {
    switch (spec.kind) {
        case ElementKind::PBS:
            require_arity(spec, 3);
            return apply_pbs(s, spec.modes[0], spec.modes[1], spec.modes[2]);
        case ElementKind::UnbalancedInterferometer:
            require_arity(spec, 1);
            return apply_unbalanced_interferometer(s, spec.modes[0]);
        case ElementKind::BalancedInterferometerFig2:
            require_arity(spec, 3);
            return apply_balanced_interferometer_fig2(s, spec.modes[0], spec.modes[1],
                                                      spec.modes[2], spec.window, spec.window_v);
        case ElementKind::HWP:
            require_arity(spec, 1);
            return apply_hwp(s, spec.modes[0]);
        case ElementKind::PockelsCell:
            require_arity(spec, 1);
            return apply_pockels(s, spec.modes[0], spec.window);
        case ElementKind::TimeGate:
            require_arity(spec, 0);
            return apply_time_gate(s, spec.window);
    }
    throw ConfigError("unknown element kind");
}

std::string element_kind_name(ElementKind kind) {
    switch (kind) {
        case ElementKind::PBS:
            return "pbs";
        case ElementKind::UnbalancedInterferometer:
            return "unbalanced_interferometer";
        case ElementKind::BalancedInterferometerFig2:
            return "balanced_interferometer_fig2";
        case ElementKind::HWP:
            return "hwp";
        case ElementKind::PockelsCell:
            return "pockels_cell";
        case ElementKind::TimeGate:
            return "time_gate";
    }
    return "unknown";
}

ElementKind element_kind_from_name(const std::string& name) {
    if (name == "pbs") return ElementKind::PBS;
    if (name == "unbalanced_interferometer") return ElementKind::UnbalancedInterferometer;
    if (name == "balanced_interferometer_fig2") return ElementKind::BalancedInterferometerFig2;
    if (name == "hwp") return ElementKind::HWP;
    if (name == "pockels_cell") return ElementKind::PockelsCell;
    if (name == "time_gate") return ElementKind::TimeGate;
    throw ConfigError("unknown element kind \"" + name + "\"");
}

}  // namespace timebin
