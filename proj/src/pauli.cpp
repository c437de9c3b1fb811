#include "nlcslab/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace nlcs {

namespace {

std::size_t count_y(const BitVec& x, const BitVec& z) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.get(i) && z.get(i)) ++c;
  }
  return c;
}

}  // namespace

Pauli::Pauli(std::size_t n, BitVec x, BitVec z, unsigned phase_exp)
    : n_(n), x_(std::move(x)), z_(std::move(z)), phase_(phase_exp & 3) {
  if (x_.size() != n_ || z_.size() != n_) {
    throw std::invalid_argument("Pauli: bit-vector length mismatch");
  }
}

Pauli Pauli::single(std::size_t n, std::size_t q, char letter) {
  Pauli p(n);
  switch (letter) {
    case 'I':
      break;
    case 'X':
      p.x_.set(q, true);
      break;
    case 'Z':
      p.z_.set(q, true);
      break;
    case 'Y':
      p.x_.set(q, true);
      p.z_.set(q, true);
      p.phase_ = 1;
      break;
    default:
      throw std::invalid_argument("Pauli::single: unknown letter");
  }
  return p;
}

Pauli Pauli::parse(const std::string& text) {
  std::size_t pos = 0;
  unsigned sign_exp = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') sign_exp = 2;
    ++pos;
    if (pos < text.size() && text[pos] == 'i') {
      sign_exp += 1;
      ++pos;
    }
  }
  std::string letters = text.substr(pos);
  if (letters.empty()) {
    throw std::invalid_argument("Pauli::parse: empty operator");
  }
  Pauli p(letters.size());
  std::size_t y = 0;
  for (std::size_t q = 0; q < letters.size(); ++q) {
    switch (letters[q]) {
      case 'I':
        break;
      case 'X':
        p.x_.set(q, true);
        break;
      case 'Z':
        p.z_.set(q, true);
        break;
      case 'Y':
        p.x_.set(q, true);
        p.z_.set(q, true);
        ++y;
        break;
      default:
        throw std::invalid_argument("Pauli::parse: invalid letter '" +
                                    std::string(1, letters[q]) + "'");
    }
  }
  p.phase_ = (sign_exp + y) & 3;
  return p;
}

char Pauli::letter(std::size_t q) const {
  bool x = x_.get(q), z = z_.get(q);
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::size_t Pauli::weight() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (x_.get(i) || z_.get(i)) ++c;
  }
  return c;
}

std::vector<std::size_t> Pauli::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < n_; ++i) {
    if (x_.get(i) || z_.get(i)) s.push_back(i);
  }
  return s;
}

bool Pauli::is_hermitian() const {
  return ((phase_ ^ count_y(x_, z_)) & 1) == 0;
}

Pauli Pauli::operator*(const Pauli& o) const {
  if (n_ != o.n_) {
    throw std::invalid_argument("Pauli multiply: qubit count mismatch");
  }
  // Z^{z1} X^{x2} = (-1)^{z1.x2} X^{x2} Z^{z1} per qubit.
  std::size_t swaps = 0;
  for (std::size_t w = 0; w < z_.words().size(); ++w) {
    swaps += static_cast<std::size_t>(
        std::popcount(z_.words()[w] & o.x_.words()[w]));
  }
  Pauli out(n_);
  out.x_ = x_ ^ o.x_;
  out.z_ = z_ ^ o.z_;
  out.phase_ = (phase_ + o.phase_ + 2 * (swaps & 1)) & 3;
  return out;
}

bool Pauli::commutes_with(const Pauli& o) const {
  if (n_ != o.n_) {
    throw std::invalid_argument("Pauli commutes: qubit count mismatch");
  }
  return (BitVec::dot(x_, o.z_) ^ BitVec::dot(z_, o.x_)) == 0;
}

Pauli Pauli::with_phase(unsigned phase_exp) const {
  Pauli out = *this;
  out.phase_ = phase_exp & 3;
  return out;
}

Pauli Pauli::positive_hermitian() const {
  return with_phase(static_cast<unsigned>(count_y(x_, z_)) & 3);
}

Pauli Pauli::restricted(const std::vector<std::size_t>& qubits) const {
  Pauli out(qubits.size());
  std::size_t y_kept = 0;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    std::size_t q = qubits[i];
    out.x_.set(i, x_.get(q));
    out.z_.set(i, z_.get(q));
    if (x_.get(q) && z_.get(q)) ++y_kept;
  }
  // Dropped letters are read as phase-free Paulis; a dropped Y = iXZ carries
  // an i which must be removed from the restriction's phase.
  std::size_t y_dropped = count_y(x_, z_) - y_kept;
  out.phase_ = (phase_ + 4 - (y_dropped & 3)) & 3;
  return out;
}

std::string Pauli::to_string() const {
  static const char* signs[4] = {"", "+i", "-", "-i"};
  unsigned sign_exp = (phase_ + 4 - (count_y(x_, z_) & 3)) & 3;
  std::string s = signs[sign_exp];
  for (std::size_t q = 0; q < n_; ++q) {
    s += letter(q);
  }
  return s;
}

bool Pauli::operator<(const Pauli& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  if (!(x_ == o.x_)) return x_ < o.x_;
  if (!(z_ == o.z_)) return z_ < o.z_;
  return phase_ < o.phase_;
}

void CliffordCircuit::validate() const {
  for (const auto& g : gates) {
    bool ok = g.q0 < n;
    if (g.kind == CliffordGate::Kind::CNOT) {
      ok = ok && g.q1 < n && g.q0 != g.q1;
    }
    if (!ok) {
      throw std::invalid_argument("CliffordCircuit: gate qubit out of range");
    }
  }
}

Pauli conjugate(const CliffordGate& g, const Pauli& p) {
  Pauli out = p;
  BitVec x = p.x();
  BitVec z = p.z();
  unsigned phase = p.phase_exp();
  switch (g.kind) {
    case CliffordGate::Kind::H: {
      //  H X H = Z, H Z H = X, H Y H = -Y.
      bool xb = x.get(g.q0), zb = z.get(g.q0);
      x.set(g.q0, zb);
      z.set(g.q0, xb);
      if (xb && zb) phase = (phase + 2) & 3;
      break;
    }
    case CliffordGate::Kind::S: {
      // S X S† = iXZ, S Z S† = Z.
      if (x.get(g.q0)) {
        z.flip(g.q0);
        phase = (phase + 1) & 3;
      }
      break;
    }
    case CliffordGate::Kind::CNOT: {
      // X_c -> X_c X_t, Z_t -> Z_c Z_t. In the X-before-Z product form the
      // reordering introduces no sign (all crossings are on distinct qubits).
      bool xc = x.get(g.q0), zc = z.get(g.q0);
      bool xt = x.get(g.q1), zt = z.get(g.q1);
      x.set(g.q1, xt ^ xc);
      z.set(g.q0, zc ^ zt);
      break;
    }
  }
  return Pauli(p.num_qubits(), x, z, phase);
}

Pauli conjugate(const CliffordCircuit& c, const Pauli& p) {
  if (c.n != p.num_qubits()) {
    throw std::invalid_argument("conjugate: qubit count mismatch");
  }
  Pauli out = p;
  for (const auto& g : c.gates) {
    out = conjugate(g, out);
  }
  return out;
}

}  // namespace nlcs
