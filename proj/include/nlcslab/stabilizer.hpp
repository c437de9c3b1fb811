#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "nlcslab/dense.hpp"
#include "nlcslab/f2.hpp"
#include "nlcslab/pauli.hpp"
#include "nlcslab/rng.hpp"

namespace nlcs {

/// Stabilizer group: k <= n independent, pairwise-commuting Hermitian Pauli
/// generators, stored in a canonical form (reduced echelon over the
/// symplectic check matrix, phases carried exactly through the row ops).
/// Two groups generate the same subgroup iff their canonical forms compare
/// equal. Immutable after construction.
class StabilizerGroup {
 public:
  /// Validates (Hermitian, commuting, independent, -I absent) and
  /// canonicalizes. Throws std::invalid_argument on invalid generators.
  static StabilizerGroup from_generators(std::size_t n,
                                         std::vector<Pauli> generators);
  /// stab(|0...0>) = <Z_1, ..., Z_n>.
  static StabilizerGroup zero_state(std::size_t n);

  std::size_t num_qubits() const { return n_; }
  std::size_t rank() const { return gens_.size(); }
  bool full_rank() const { return gens_.size() == n_; }
  const std::vector<Pauli>& generators() const { return gens_; }

  /// k x 2n check matrix, columns x_0..x_{n-1}, z_0..z_{n-1}.
  BinaryMatrix check_matrix() const;

  /// All 2^k group elements with exact phases (intended for small k).
  std::vector<Pauli> elements() const;

  /// The group element whose letters match `xz` (2n-bit check row), with its
  /// exact phase. Throws if xz is not in the row span.
  Pauli element_for(const BitVec& xz) const;
  bool letters_in_group(const BitVec& xz) const;

  StabilizerGroup conjugated(const CliffordCircuit& c) const;

  bool operator==(const StabilizerGroup& o) const {
    return n_ == o.n_ && gens_ == o.gens_;
  }
  bool operator<(const StabilizerGroup& o) const;

  /// Text form: one generator per line in the Pauli text format.
  static StabilizerGroup read(std::istream& in, std::size_t expected_n = 0);
  void write(std::ostream& out) const;

 private:
  StabilizerGroup(std::size_t n, std::vector<Pauli> canonical_gens)
      : n_(n), gens_(std::move(canonical_gens)) {}

  std::size_t n_ = 0;
  std::vector<Pauli> gens_;
};

/// Convex combination of pure stabilizer states.
struct MixedStabilizerState {
  std::vector<std::pair<double, StabilizerGroup>> terms;
};

inline constexpr std::size_t kDefaultEnumCutoff = 5;
inline constexpr std::size_t kDefaultDenseCutoff = 12;

/// All pure stabilizer states on k qubits, one canonical representative
/// each, in deterministic sorted order. Count = 2^k prod_{i=1..k} (2^i + 1).
/// Throws std::length_error above the cutoff.
std::vector<StabilizerGroup> enumerate_pure_states(
    std::size_t k, std::size_t cutoff = kDefaultEnumCutoff);

/// Unit state vector of a full-rank group; global phase fixed so the first
/// nonzero amplitude is real positive. Throws std::length_error over cutoff.
CVec to_dense(const StabilizerGroup& g,
              std::size_t cutoff = kDefaultDenseCutoff);
/// (1/|G|) sum_{g in G} g — the projector onto the code space.
CMat code_projector(const StabilizerGroup& g,
                    std::size_t cutoff = kDefaultDenseCutoff);
/// Dense density matrix of a mixed stabilizer state.
CMat mixed_to_dense(const MixedStabilizerState& s,
                    std::size_t cutoff = kDefaultDenseCutoff);

/// |<zeta|xi>| for two full-rank groups: exactly 0 or 2^{-m/2}.
double overlap_magnitude(const StabilizerGroup& g1, const StabilizerGroup& g2);

/// The set { g_A : g in G, g_j = P_j (letters) for all j outside A },
/// restricted to the sorted qubit subset A with carried phases.
/// P = identity yields the subgroup G_A.
std::vector<Pauli> subgroup_on(const StabilizerGroup& g,
                               const std::vector<std::size_t>& qubits,
                               const Pauli& p);

/// Reduced state of a full-rank group on the sorted subset A, as the uniform
/// mixture of 2^r logical basis states of the code stabilized by G_A.
MixedStabilizerState reduced_state(const StabilizerGroup& g,
                                   const std::vector<std::size_t>& qubits);

CliffordCircuit random_clifford_circuit(std::size_t n, std::size_t num_gates,
                                        CounterRng& rng);
StabilizerGroup random_stabilizer_group(std::size_t n, CounterRng& rng);
/// Random Hermitian Pauli with +/- sign.
Pauli random_hermitian_pauli(std::size_t n, CounterRng& rng);

}  // namespace nlcs
