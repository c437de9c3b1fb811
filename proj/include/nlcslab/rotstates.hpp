#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "nlcslab/hamiltonian.hpp"
#include "nlcslab/stabilizer.hpp"

namespace nlcs {

struct PauliRotation {
  double theta = 0;
  Pauli p;  // Hermitian; gate = e^{i theta P}
};

/// State prepared as prod_j e^{i theta_j P_j} |phi> with |phi> a pure
/// stabilizer state; rotations are stored in application order
/// (rotations[0] acts first).
struct RotatedCliffordState {
  StabilizerGroup base;
  std::vector<PauliRotation> rotations;

  std::size_t t() const { return rotations.size(); }
};

using PrepGate = std::variant<CliffordGate, PauliRotation>;

/// Lemma B.6 normal form: pushes every Clifford gate rightward through the
/// rotations (conjugating their Paulis) and absorbs it into the base
/// stabilizer state. Rotations on a negative Hermitian Pauli are normalized
/// to the positive representative by flipping theta.
RotatedCliffordState normal_form(std::size_t n,
                                 const std::vector<PrepGate>& gates);

CVec state_to_dense(const RotatedCliffordState& s,
                    std::size_t cutoff = kDefaultDenseCutoff);

/// Lemma B.7: reduced density matrix on A of e^{i theta P} |phi_G>,
///   psi_A = 2^{-|A|} sum_{g in G_A} (cos^2 g + sin^2 P_A g P_A)
///         + 2^{-|A|} i sin cos sum_{g' in G_{A,P}} [P_A, g'].
CMat reduced_state_one_rotation(const StabilizerGroup& g, double theta,
                                const Pauli& p,
                                const std::vector<std::size_t>& qubits,
                                std::size_t cutoff = kDefaultDenseCutoff);

/// Energy under the rotated all-Z Hamiltonian H~0 at theta = pi/8.
/// t <= 1 uses the Lemma B.7 formula per qubit (any n); t >= 2 needs
/// n <= cutoff for the dense path.
double energy_zero_rotated(const RotatedCliffordState& s,
                           std::size_t cutoff = kDefaultDenseCutoff);

struct OneRotationBoundReport {
  std::size_t n = 0;
  std::size_t trials = 0;
  double bound = 0;        // (1 - 1/n) sin^2(pi/8)
  double min_energy = 0;   // over sampled one-rotation states
  std::size_t violations = 0;
  bool obstruction_ok = true;  // "at most one qubit" property on every sample
  bool saturating_ok = false;  // crafted instance within 1e-9 of the bound
};

/// Lemma B.8 randomized verification plus the crafted saturating instance
/// (base |0...0>, P = Y_0, theta = pi/8, i.e. D† on one qubit).
OneRotationBoundReport verify_one_rotation_bound(std::size_t n,
                                                 std::size_t trials,
                                                 std::uint64_t seed);

struct ConjectureScanReport {
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t samples = 0;
  const char* theta_policy = "uniform+grid";
  double min_energy = 0;
  double bound = 0;  // (1 - t/n) sin^2(pi/8)
  double margin = 0; // min_energy - bound
  std::size_t violations = 0;  // reported, never asserted
};

/// Conjecture B.3 evidence: random bases and Paulis, theta from a uniform
/// draw or the adversarial grid {+-pi/8, +-pi/4}, plus one crafted
/// bound-saturating sample per cell.
ConjectureScanReport conjecture_scan(std::size_t n, std::size_t t,
                                     std::size_t samples, std::uint64_t seed,
                                     std::size_t cutoff = kDefaultDenseCutoff);

}  // namespace nlcs
