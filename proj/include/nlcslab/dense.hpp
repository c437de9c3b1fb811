#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "nlcslab/pauli.hpp"

namespace nlcs {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

namespace dense {

/// Qubit 0 is the most significant bit of the computational-basis index.
CMat kron(const CMat& a, const CMat& b);

CMat pauli_matrix_1q(char letter);
CMat pauli_matrix(const Pauli& p);
/// |out> = P |in>, O(2^n) bit-twiddled application.
CVec apply_pauli(const Pauli& p, const CVec& in);

CMat gate_matrix_1q(const CliffordGate& g);
CVec apply_gate(const CliffordGate& g, std::size_t n, const CVec& in);
CVec apply_circuit(const CliffordCircuit& c, const CVec& in);
CMat circuit_unitary(const CliffordCircuit& c);

/// e^{-i theta Y} = [[cos, -sin], [sin, cos]].
CMat rotation_y(double theta);
/// |out> = e^{i theta P} |in> = (cos(theta) I + i sin(theta) P) |in>.
CVec apply_pauli_rotation(double theta, const Pauli& p, const CVec& in);

/// Reduced density matrix of |psi> on the (sorted) kept qubits.
CMat partial_trace(const CVec& psi, std::size_t n,
                   const std::vector<std::size_t>& keep);
CMat partial_trace(const CMat& rho, std::size_t n,
                   const std::vector<std::size_t>& keep);

/// U (op on `support`) U† embedding as an expectation: <psi| Op_support |psi>.
std::complex<double> expectation_on(const CVec& psi, std::size_t n,
                                    const std::vector<std::size_t>& support,
                                    const CMat& op);

CVec basis_state(std::size_t n, std::size_t index);

}  // namespace dense
}  // namespace nlcs
