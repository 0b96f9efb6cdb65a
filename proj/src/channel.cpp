#include "timebin/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "timebin/rng.hpp"

namespace timebin {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double x) {
    double w = std::fmod(x, kTwoPi);
    if (w < 0.0) {
        w += kTwoPi;
    }
    if (w >= kTwoPi) {
        w = 0.0;
    }
    return w;
}

void require_theta_max(double theta_max) {
    if (!(theta_max > 0.0) || theta_max > std::numbers::pi / 2.0) {
        throw ConfigError("theta_max must satisfy 0 < theta_max <= pi/2, got " +
                          std::to_string(theta_max));
    }
}

}  // namespace

ChannelParams ChannelParams::wrapped() const {
    return {wrap_angle(theta), wrap_angle(phi), wrap_angle(chi)};
}

Mat2 channel_matrix(const ChannelParams& p) {
    const double ct = std::cos(p.theta);
    const double st = std::sin(p.theta);
    const Complex ephi = std::polar(1.0, p.phi);
    const Complex echi = std::polar(1.0, p.chi);
    return Mat2{{{ephi * ct, -std::conj(echi) * st},
                 {echi * st, std::conj(ephi) * ct}}};
}

PhotonState apply_channel(const PhotonState& s, const ChannelParams& p, int mode) {
    s.require_mode(mode);
    const Mat2 u = channel_matrix(p);
    PhotonState::Amplitudes out;
    for (const auto& [m, a] : s.amplitudes()) {
        if (m.spatial != mode) {
            out.emplace(m, a);
            continue;
        }
        if (m.pol == Polarization::H) {
            out[{mode, Polarization::H, m.delay}] += u[0][0] * a;
            out[{mode, Polarization::V, m.delay}] += u[1][0] * a;
        } else {
            out[{mode, Polarization::H, m.delay}] += u[0][1] * a;
            out[{mode, Polarization::V, m.delay}] += u[1][1] * a;
        }
    }
    return PhotonState(std::move(out), s.mode_count(), s.is_normalized());
}

ChannelSampler ChannelSampler::fixed_params(const ChannelParams& p) {
    ChannelSampler sampler;
    sampler.kind = ChannelDistribution::Fixed;
    sampler.fixed = p;
    return sampler;
}

ChannelSampler ChannelSampler::uniform_theta(std::uint64_t seed) {
    ChannelSampler sampler;
    sampler.kind = ChannelDistribution::UniformTheta;
    sampler.seed = seed;
    return sampler;
}

ChannelSampler ChannelSampler::small_theta(double theta_max, std::uint64_t seed) {
    require_theta_max(theta_max);
    ChannelSampler sampler;
    sampler.kind = ChannelDistribution::SmallTheta;
    sampler.theta_max = theta_max;
    sampler.seed = seed;
    return sampler;
}

ChannelParams sample_channel(const ChannelSampler& sampler, std::uint64_t draw_index) {
    switch (sampler.kind) {
        case ChannelDistribution::Fixed:
            return sampler.fixed;
        case ChannelDistribution::UniformTheta: {
            auto eng = engine_at(sampler.seed, draw_index);
            ChannelParams p;
            p.theta = uniform(eng, 0.0, kTwoPi);
            p.phi = uniform(eng, 0.0, kTwoPi);
            p.chi = uniform(eng, 0.0, kTwoPi);
            return p;
        }
        case ChannelDistribution::SmallTheta: {
            require_theta_max(sampler.theta_max);
            auto eng = engine_at(sampler.seed, draw_index);
            ChannelParams p;
            p.theta = uniform(eng, 0.0, sampler.theta_max);
            p.phi = uniform(eng, 0.0, kTwoPi);
            p.chi = uniform(eng, 0.0, kTwoPi);
            return p;
        }
    }
    throw ConfigError("unknown channel distribution");
}

}  // namespace timebin
