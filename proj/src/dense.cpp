#include "nlcslab/dense.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace nlcs::dense {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};

std::complex<double> i_power(unsigned e) {
  switch (e & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}
}  // namespace

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMat pauli_matrix_1q(char letter) {
  CMat m(2, 2);
  switch (letter) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -kI, kI, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli_matrix_1q: bad letter");
  }
  return m;
}

CMat pauli_matrix(const Pauli& p) {
  std::size_t n = p.num_qubits();
  CMat out = CMat::Identity(1, 1);
  std::size_t y = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (p.letter(q) == 'Y') ++y;
    out = kron(out, pauli_matrix_1q(p.letter(q)));
  }
  // letters product = i^y * X^x Z^z; the operator is i^{phase} X^x Z^z.
  out *= i_power(p.phase_exp() + 4 - (y & 3));
  return out;
}

CVec apply_pauli(const Pauli& p, const CVec& in) {
  std::size_t n = p.num_qubits();
  std::size_t dim = std::size_t{1} << n;
  if (static_cast<std::size_t>(in.size()) != dim) {
    throw std::invalid_argument("apply_pauli: dimension mismatch");
  }
  // Bit masks with qubit 0 as most significant bit.
  std::size_t xmask = 0, zmask = 0;
  for (std::size_t q = 0; q < n; ++q) {
    std::size_t bit = std::size_t{1} << (n - 1 - q);
    if (p.x_bit(q)) xmask |= bit;
    if (p.z_bit(q)) zmask |= bit;
  }
  std::complex<double> global = i_power(p.phase_exp());
  CVec out(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    // i^p X^x Z^z |idx> = i^p (-1)^{z.idx} |idx ^ x>
    std::size_t tgt = idx ^ xmask;
    double sign = (std::popcount(idx & zmask) & 1) ? -1.0 : 1.0;
    out(tgt) = global * sign * in(idx);
  }
  return out;
}

CMat gate_matrix_1q(const CliffordGate& g) {
  CMat m(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case CliffordGate::Kind::H: m << s, s, s, -s; break;
    case CliffordGate::Kind::S: m << 1, 0, 0, kI; break;
    default: throw std::invalid_argument("gate_matrix_1q: not single-qubit");
  }
  return m;
}

CVec apply_gate(const CliffordGate& g, std::size_t n, const CVec& in) {
  std::size_t dim = std::size_t{1} << n;
  CVec out = in;
  if (g.kind == CliffordGate::Kind::CNOT) {
    std::size_t cbit = std::size_t{1} << (n - 1 - g.q0);
    std::size_t tbit = std::size_t{1} << (n - 1 - g.q1);
    for (std::size_t idx = 0; idx < dim; ++idx) {
      if (idx & cbit) out(idx) = in(idx ^ tbit);
    }
    return out;
  }
  CMat u = gate_matrix_1q(g);
  std::size_t qbit = std::size_t{1} << (n - 1 - g.q0);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    if (idx & qbit) continue;
    auto a = in(idx);
    auto b = in(idx | qbit);
    out(idx) = u(0, 0) * a + u(0, 1) * b;
    out(idx | qbit) = u(1, 0) * a + u(1, 1) * b;
  }
  return out;
}

CVec apply_circuit(const CliffordCircuit& c, const CVec& in) {
  CVec v = in;
  for (const auto& g : c.gates) {
    v = apply_gate(g, c.n, v);
  }
  return v;
}

CMat circuit_unitary(const CliffordCircuit& c) {
  std::size_t dim = std::size_t{1} << c.n;
  CMat u(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    CVec e = CVec::Zero(dim);
    e(col) = 1.0;
    u.col(col) = apply_circuit(c, e);
  }
  return u;
}

CMat rotation_y(double theta) {
  CMat m(2, 2);
  m << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return m;
}

CVec apply_pauli_rotation(double theta, const Pauli& p, const CVec& in) {
  CVec pv = apply_pauli(p, in);
  return std::cos(theta) * in + kI * std::sin(theta) * pv;
}

CMat partial_trace(const CVec& psi, std::size_t n,
                   const std::vector<std::size_t>& keep) {
  std::size_t a = keep.size();
  std::size_t dim_a = std::size_t{1} << a;
  std::vector<std::size_t> drop;
  for (std::size_t q = 0; q < n; ++q) {
    bool kept = false;
    for (auto k : keep) kept = kept || (k == q);
    if (!kept) drop.push_back(q);
  }
  std::size_t dim_d = std::size_t{1} << drop.size();
  auto compose = [&](std::size_t ia, std::size_t id) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < a; ++i) {
      if ((ia >> (a - 1 - i)) & 1) idx |= std::size_t{1} << (n - 1 - keep[i]);
    }
    for (std::size_t i = 0; i < drop.size(); ++i) {
      if ((id >> (drop.size() - 1 - i)) & 1) {
        idx |= std::size_t{1} << (n - 1 - drop[i]);
      }
    }
    return idx;
  };
  CMat rho = CMat::Zero(dim_a, dim_a);
  for (std::size_t ia = 0; ia < dim_a; ++ia) {
    for (std::size_t ja = 0; ja < dim_a; ++ja) {
      std::complex<double> acc = 0;
      for (std::size_t id = 0; id < dim_d; ++id) {
        acc += psi(compose(ia, id)) * std::conj(psi(compose(ja, id)));
      }
      rho(ia, ja) = acc;
    }
  }
  return rho;
}

CMat partial_trace(const CMat& rho, std::size_t n,
                   const std::vector<std::size_t>& keep) {
  std::size_t a = keep.size();
  std::size_t dim_a = std::size_t{1} << a;
  std::vector<std::size_t> drop;
  for (std::size_t q = 0; q < n; ++q) {
    bool kept = false;
    for (auto k : keep) kept = kept || (k == q);
    if (!kept) drop.push_back(q);
  }
  std::size_t dim_d = std::size_t{1} << drop.size();
  auto compose = [&](std::size_t ia, std::size_t id) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < a; ++i) {
      if ((ia >> (a - 1 - i)) & 1) idx |= std::size_t{1} << (n - 1 - keep[i]);
    }
    for (std::size_t i = 0; i < drop.size(); ++i) {
      if ((id >> (drop.size() - 1 - i)) & 1) {
        idx |= std::size_t{1} << (n - 1 - drop[i]);
      }
    }
    return idx;
  };
  CMat out = CMat::Zero(dim_a, dim_a);
  for (std::size_t ia = 0; ia < dim_a; ++ia) {
    for (std::size_t ja = 0; ja < dim_a; ++ja) {
      std::complex<double> acc = 0;
      for (std::size_t id = 0; id < dim_d; ++id) {
        acc += rho(compose(ia, id), compose(ja, id));
      }
      out(ia, ja) = acc;
    }
  }
  return out;
}

std::complex<double> expectation_on(const CVec& psi, std::size_t n,
                                    const std::vector<std::size_t>& support,
                                    const CMat& op) {
  CMat rho = partial_trace(psi, n, support);
  return (rho * op).trace();
}

CVec basis_state(std::size_t n, std::size_t index) {
  CVec v = CVec::Zero(std::size_t{1} << n);
  v(index) = 1.0;
  return v;
}

}  // namespace nlcs::dense
