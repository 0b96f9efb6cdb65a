#pragma once

#include <array>
#include <cstdint>

#include "timebin/state.hpp"

namespace timebin {

// Angles of the channel unitary. theta sets the error weight; phi and chi
// are phases that cannot corrupt the decoded qubit.
struct ChannelParams {
    double theta = 0.0;
    double phi = 0.0;
    double chi = 0.0;

    // Same physical parameters with every angle wrapped into [0, 2*pi).
    ChannelParams wrapped() const;
};

using Mat2 = std::array<std::array<Complex, 2>, 2>;

// The channel unitary
//   [ e^{i phi} cos t   -e^{-i chi} sin t ]
//   [ e^{i chi} sin t    e^{-i phi} cos t ]
// with columns the images of H and V. Unitary with unit determinant.
Mat2 channel_matrix(const ChannelParams& p);

// Applies the channel unitary to the (H, V) amplitude pair of every
// time-bin on `mode`, the same parameters for all bins. Other spatial
// modes are untouched; the norm is preserved.
PhotonState apply_channel(const PhotonState& s, const ChannelParams& p, int mode);

enum class ChannelDistribution { Fixed, UniformTheta, SmallTheta };

// A distribution over channel parameters. Draws are a pure function of
// (seed, draw index), so trials can run in any order or thread layout.
//   Fixed        - always the stored parameters (no randomness).
//   UniformTheta - theta, phi, chi independent uniform on [0, 2*pi).
//   SmallTheta   - theta uniform on [0, theta_max), phi and chi uniform
//                  on [0, 2*pi); requires 0 < theta_max <= pi/2.
struct ChannelSampler {
    ChannelDistribution kind = ChannelDistribution::Fixed;
    ChannelParams fixed;
    double theta_max = 0.0;
    std::uint64_t seed = 0;

    static ChannelSampler fixed_params(const ChannelParams& p);
    static ChannelSampler uniform_theta(std::uint64_t seed);
    static ChannelSampler small_theta(double theta_max, std::uint64_t seed);
};

// Draw order per index: theta, phi, chi. Throws ConfigError for an invalid
// theta_max on a SmallTheta sampler.
ChannelParams sample_channel(const ChannelSampler& sampler, std::uint64_t draw_index);

}  // namespace timebin
