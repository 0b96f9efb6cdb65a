#pragma once

#include <Eigen/Dense>
#include <vector>

#include "timebin/channel.hpp"
#include "timebin/protocols.hpp"

namespace timebin {

enum class Protocol { Reject, Correct };

// Full-basis matrix model of one protocol circuit, built element by element
// from explicit permutation and rotation matrices. It shares no code with
// the sparse propagation path, which makes it an independent cross-check.
//
// Basis index: spatial * (2 * n_delays) + delay * 2 + pol, the canonical
// BasisMode order. Delay shifts are cyclic over the 3 delay slots so every
// element matrix is exactly unitary; protocol states never occupy the top
// slot before a shift, so the cyclic and true shifts act identically there.
struct DenseCircuit {
    Protocol protocol = Protocol::Reject;
    ChannelParams params;
    int mode_count = 1;
    int n_delays = 3;
    std::vector<Eigen::MatrixXcd> elements;  // in application order
    Eigen::MatrixXcd unitary;                // ordered product, last element leftmost

    int dim() const { return mode_count * 2 * n_delays; }
    int index(int spatial, Polarization pol, int delay) const;
};

// Both circuits start from the bare qubit: Alice's encoder elements are the
// first entries, followed by the channel block and Bob's decoder elements.
DenseCircuit build_dense_circuit(Protocol protocol, const ChannelParams& p);

// The bare qubit placed at (line, H/V, delay 0).
Eigen::VectorXcd dense_input_vector(const DenseCircuit& c, const Qubit& q);

// Sparse state written into the circuit's basis.
Eigen::VectorXcd dense_vector_of_state(const DenseCircuit& c, const PhotonState& s);

// Max elementwise |sparse - dense| between the sparse pipeline output for
// (q, circuit.params) and circuit.unitary applied to the bare qubit.
double max_deviation(const DenseCircuit& circuit, const Qubit& q);

// Convenience: build the circuit for (protocol, p) and compare.
double oracle_compare(Protocol protocol, const Qubit& q, const ChannelParams& p);

// Agreement threshold used by the verification gate.
inline constexpr double kOracleTolerance = 1e-12;

}  // namespace timebin
