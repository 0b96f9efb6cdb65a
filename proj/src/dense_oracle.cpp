#include "timebin/dense_oracle.hpp"

#include <cmath>
#include <complex>
#include <initializer_list>
#include <utility>

namespace timebin {

namespace {

using Eigen::MatrixXcd;

MatrixXcd swaps(int dim, std::initializer_list<std::pair<int, int>> pairs) {
    MatrixXcd m = MatrixXcd::Identity(dim, dim);
    for (const auto& [i, j] : pairs) {
        m(i, i) = 0.0;
        m(j, j) = 0.0;
        m(i, j) = 1.0;
        m(j, i) = 1.0;
    }
    return m;
}

// V amplitudes on `mode` advance one delay slot (cyclically); H stays put.
MatrixXcd unbalanced_matrix(const DenseCircuit& c, int mode) {
    MatrixXcd m = MatrixXcd::Zero(c.dim(), c.dim());
    for (int s = 0; s < c.mode_count; ++s) {
        for (int d = 0; d < c.n_delays; ++d) {
            const int h = c.index(s, Polarization::H, d);
            m(h, h) = 1.0;
            const int v = c.index(s, Polarization::V, d);
            const int shifted = s == mode ? c.index(s, Polarization::V, (d + 1) % c.n_delays) : v;
            m(shifted, v) = 1.0;
        }
    }
    return m;
}

MatrixXcd pockels_matrix(const DenseCircuit& c, int mode, std::initializer_list<int> window) {
    MatrixXcd m = MatrixXcd::Identity(c.dim(), c.dim());
    for (int d : window) {
        const int h = c.index(mode, Polarization::H, d);
        const int v = c.index(mode, Polarization::V, d);
        m(h, h) = m(v, v) = 0.0;
        m(h, v) = m(v, h) = 1.0;
    }
    return m;
}

MatrixXcd hwp_matrix(const DenseCircuit& c, int mode) {
    MatrixXcd m = MatrixXcd::Identity(c.dim(), c.dim());
    for (int d = 0; d < c.n_delays; ++d) {
        const int h = c.index(mode, Polarization::H, d);
        const int v = c.index(mode, Polarization::V, d);
        m(h, h) = m(v, v) = 0.0;
        m(h, v) = m(v, h) = 1.0;
    }
    return m;
}

// The channel rotation written directly from its defining form, not taken
// from channel_matrix(), so the two comparison routes stay independent.
MatrixXcd channel_block_matrix(const DenseCircuit& c, int mode, const ChannelParams& p) {
    const double ct = std::cos(p.theta);
    const double st = std::sin(p.theta);
    const std::complex<double> ephi = std::exp(std::complex<double>(0.0, p.phi));
    const std::complex<double> echi = std::exp(std::complex<double>(0.0, p.chi));
    MatrixXcd m = MatrixXcd::Identity(c.dim(), c.dim());
    for (int d = 0; d < c.n_delays; ++d) {
        const int h = c.index(mode, Polarization::H, d);
        const int v = c.index(mode, Polarization::V, d);
        m(h, h) = ephi * ct;
        m(h, v) = -std::conj(echi) * st;
        m(v, h) = echi * st;
        m(v, v) = std::conj(ephi) * ct;
    }
    return m;
}

// Splitting PBS of Bob's balanced interferometer: line H <-> arm H (H pol),
// line V <-> arm V (V pol).
MatrixXcd pbs_split_matrix(const DenseCircuit& c) {
    MatrixXcd m = MatrixXcd::Identity(c.dim(), c.dim());
    for (int d = 0; d < c.n_delays; ++d) {
        MatrixXcd step = swaps(
            c.dim(),
            {{c.index(kLineMode, Polarization::H, d), c.index(kArmHMode, Polarization::H, d)},
             {c.index(kLineMode, Polarization::V, d), c.index(kArmVMode, Polarization::V, d)}});
        m = step * m;
    }
    return m;
}

// Recombining PBS: unflipped amplitudes exit port 1, flipped ones port 2.
MatrixXcd pbs_recombine_matrix(const DenseCircuit& c) {
    MatrixXcd m = MatrixXcd::Identity(c.dim(), c.dim());
    for (int d = 0; d < c.n_delays; ++d) {
        MatrixXcd step = swaps(
            c.dim(),
            {{c.index(kArmHMode, Polarization::H, d), c.index(kOutput1Mode, Polarization::H, d)},
             {c.index(kArmHMode, Polarization::V, d), c.index(kOutput2Mode, Polarization::V, d)},
             {c.index(kArmVMode, Polarization::V, d), c.index(kOutput1Mode, Polarization::V, d)},
             {c.index(kArmVMode, Polarization::H, d), c.index(kOutput2Mode, Polarization::H, d)}});
        m = step * m;
    }
    return m;
}

}  // namespace

int DenseCircuit::index(int spatial, Polarization pol, int delay) const {
    return spatial * (2 * n_delays) + delay * 2 + static_cast<int>(pol);
}

DenseCircuit build_dense_circuit(Protocol protocol, const ChannelParams& p) {
    DenseCircuit c;
    c.protocol = protocol;
    c.params = p;
    c.mode_count = protocol == Protocol::Reject ? kRejectionModeCount : kCorrectionModeCount;

    // Alice's encoder and the channel.
    c.elements.push_back(unbalanced_matrix(c, kLineMode));
    c.elements.push_back(pockels_matrix(c, kLineMode, {1}));
    c.elements.push_back(channel_block_matrix(c, kLineMode, p));
    // Bob's decoder.
    c.elements.push_back(pockels_matrix(c, kLineMode, {0}));
    if (protocol == Protocol::Reject) {
        c.elements.push_back(unbalanced_matrix(c, kLineMode));
        c.elements.push_back(hwp_matrix(c, kLineMode));
    } else {
        c.elements.push_back(pbs_split_matrix(c));
        c.elements.push_back(pockels_matrix(c, kArmHMode, {0}));
        c.elements.push_back(pockels_matrix(c, kArmVMode, {1}));
        c.elements.push_back(pbs_recombine_matrix(c));
        c.elements.push_back(unbalanced_matrix(c, kOutput1Mode));
        c.elements.push_back(unbalanced_matrix(c, kOutput2Mode));
        c.elements.push_back(hwp_matrix(c, kOutput1Mode));
        c.elements.push_back(hwp_matrix(c, kOutput2Mode));
    }

    c.unitary = MatrixXcd::Identity(c.dim(), c.dim());
    for (const MatrixXcd& element : c.elements) {
        c.unitary = element * c.unitary;
    }
    return c;
}

Eigen::VectorXcd dense_input_vector(const DenseCircuit& c, const Qubit& q) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(c.dim());
    v(c.index(kLineMode, Polarization::H, 0)) = q.alpha;
    v(c.index(kLineMode, Polarization::V, 0)) = q.beta;
    return v;
}

Eigen::VectorXcd dense_vector_of_state(const DenseCircuit& c, const PhotonState& s) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(c.dim());
    for (const auto& [m, a] : s.amplitudes()) {
        if (m.spatial >= c.mode_count) {
            throw UnknownModeError("state occupies a mode outside the dense basis");
        }
        if (m.delay >= c.n_delays) {
            throw OutOfRangeError("state occupies a delay outside the dense basis");
        }
        v(c.index(m.spatial, m.pol, m.delay)) = a;
    }
    return v;
}

double max_deviation(const DenseCircuit& circuit, const Qubit& q) {
    const PhotonState received = apply_channel(alice_encode(q), circuit.params, kLineMode);
    const PhotonState sparse = circuit.protocol == Protocol::Reject
                                   ? reject_decoder_state(received)
                                   : correct_decoder_state(received);
    const Eigen::VectorXcd dense = circuit.unitary * dense_input_vector(circuit, q);
    return (dense_vector_of_state(circuit, sparse) - dense).cwiseAbs().maxCoeff();
}

double oracle_compare(Protocol protocol, const Qubit& q, const ChannelParams& p) {
    return max_deviation(build_dense_circuit(protocol, p), q);
}

}  // namespace timebin
