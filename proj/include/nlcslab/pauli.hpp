#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nlcslab/f2.hpp"

namespace nlcs {

/// n-qubit Pauli operator in symplectic form:
///   operator = i^phase_exp * prod_j X^{x_j} Z^{z_j},
/// with the per-qubit XZ ordering fixed as X to the left of Z.
/// Y is represented as x=1, z=1, phase_exp=1 (Y = i X Z).
class Pauli {
 public:
  Pauli() = default;
  explicit Pauli(std::size_t n) : n_(n), x_(n), z_(n), phase_(0) {}
  Pauli(std::size_t n, BitVec x, BitVec z, unsigned phase_exp);

  static Pauli identity(std::size_t n) { return Pauli(n); }
  /// Single-letter operator: letter in {'I','X','Y','Z'} at qubit q.
  static Pauli single(std::size_t n, std::size_t q, char letter);
  /// Parse "[sign]LETTERS" with sign in {+,-,+i,-i} and letters over IXYZ.
  static Pauli parse(const std::string& text);

  std::size_t num_qubits() const { return n_; }
  const BitVec& x() const { return x_; }
  const BitVec& z() const { return z_; }
  unsigned phase_exp() const { return phase_; }

  bool x_bit(std::size_t q) const { return x_.get(q); }
  bool z_bit(std::size_t q) const { return z_.get(q); }
  /// Letter at qubit q, ignoring the global phase.
  char letter(std::size_t q) const;

  std::size_t weight() const;
  std::vector<std::size_t> support() const;
  bool is_identity_letters() const { return !x_.any() && !z_.any(); }
  bool is_hermitian() const;
  bool is_x_type() const { return !z_.any(); }
  bool is_z_type() const { return !x_.any(); }

  Pauli operator*(const Pauli& o) const;
  bool commutes_with(const Pauli& o) const;

  Pauli with_phase(unsigned phase_exp) const;
  /// Hermitian representative with positive sign (phase_exp = |x&z| mod 4).
  Pauli positive_hermitian() const;

  /// Restriction to the listed qubits, carrying the full phase of this
  /// operator relative to phase-free letters on the dropped qubits.
  Pauli restricted(const std::vector<std::size_t>& qubits) const;

  std::string to_string() const;

  bool operator==(const Pauli& o) const {
    return n_ == o.n_ && phase_ == o.phase_ && x_ == o.x_ && z_ == o.z_;
  }
  bool operator<(const Pauli& o) const;

 private:
  std::size_t n_ = 0;
  BitVec x_, z_;
  unsigned phase_ = 0;  // exponent of i, mod 4
};

struct CliffordGate {
  enum class Kind { H, S, CNOT };
  Kind kind;
  std::size_t q0 = 0;
  std::size_t q1 = 0;  // CNOT target; unused otherwise

  static CliffordGate hadamard(std::size_t q) { return {Kind::H, q, 0}; }
  static CliffordGate phase(std::size_t q) { return {Kind::S, q, 0}; }
  static CliffordGate cnot(std::size_t c, std::size_t t) {
    return {Kind::CNOT, c, t};
  }
};

struct CliffordCircuit {
  std::size_t n = 0;
  std::vector<CliffordGate> gates;  // applied in list order

  void validate() const;
};

/// g P g† for a single elementary gate, exact phase tracking.
Pauli conjugate(const CliffordGate& g, const Pauli& p);
/// C P C† where C = gates.back() * ... * gates.front().
Pauli conjugate(const CliffordCircuit& c, const Pauli& p);

}  // namespace nlcs
