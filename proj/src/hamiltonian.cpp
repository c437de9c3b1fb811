#include "nlcslab/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace nlcs {

double sin2_pi8() {
  double s = std::sin(kPi / 8);
  return s * s;
}

std::size_t CssHamiltonian::locality() const {
  std::size_t k = 0;
  for (const auto& t : terms) k = std::max(k, t.weight());
  return k;
}

CssHamiltonian CssHamiltonian::from_css_pair(const CssCodePair& c,
                                             double theta,
                                             bool allow_violations) {
  if (c.css_violations != 0 && !allow_violations) {
    throw std::invalid_argument(
        "from_css_pair: CSS condition violated (" +
        std::to_string(c.css_violations) + " anticommuting pairs)");
  }
  std::size_t n = c.h_x.cols() ? c.h_x.cols() : c.h_z.cols();
  CssHamiltonian h;
  h.n = n;
  h.theta = theta;
  for (std::size_t i = 0; i < c.h_x.rows(); ++i) {
    h.terms.push_back(Pauli(n, c.h_x.row(i), BitVec(n), 0));
  }
  for (std::size_t i = 0; i < c.h_z.rows(); ++i) {
    h.terms.push_back(Pauli(n, BitVec(n), c.h_z.row(i), 0));
  }
  return h;
}

CssHamiltonian CssHamiltonian::h0(std::size_t n, double theta) {
  CssHamiltonian h;
  h.n = n;
  h.theta = theta;
  for (std::size_t q = 0; q < n; ++q) {
    h.terms.push_back(Pauli::single(n, q, 'Z'));
  }
  return h;
}

CssHamiltonian CssHamiltonian::read(std::istream& in) {
  CssHamiltonian h;
  std::string header;
  if (!std::getline(in, header)) {
    throw std::runtime_error("hamiltonian file: missing header");
  }
  std::istringstream hs(header);
  if (!(hs >> h.n >> h.theta)) {
    throw std::runtime_error("hamiltonian file: bad header '" + header + "'");
  }
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Pauli p = Pauli::parse(line);
    if (p.num_qubits() != h.n) {
      throw std::runtime_error("hamiltonian file: line " +
                               std::to_string(lineno) + ": term on " +
                               std::to_string(p.num_qubits()) +
                               " qubits, expected " + std::to_string(h.n));
    }
    if (!p.is_hermitian()) {
      throw std::runtime_error("hamiltonian file: line " +
                               std::to_string(lineno) +
                               ": non-Hermitian term");
    }
    h.terms.push_back(std::move(p));
  }
  return h;
}

void CssHamiltonian::write(std::ostream& out) const {
  auto old = out.precision(17);
  out << n << ' ' << theta << '\n';
  out.precision(old);
  for (const auto& t : terms) {
    out << t.to_string() << '\n';
  }
}

double pairwise_sum(std::vector<double> values) {
  if (values.empty()) return 0.0;
  while (values.size() > 1) {
    std::size_t half = (values.size() + 1) / 2;
    for (std::size_t i = 0; 2 * i + 1 < values.size(); ++i) {
      values[i] = values[2 * i] + values[2 * i + 1];
    }
    if (values.size() % 2 == 1) {
      values[half - 1] = values.back();
    }
    values.resize(half);
  }
  return values[0];
}

namespace {

CMat kron_power(const CMat& a, std::size_t k) {
  CMat out = CMat::Identity(1, 1);
  for (std::size_t i = 0; i < k; ++i) out = dense::kron(out, a);
  return out;
}

}  // namespace

CMat rotated_local_term(const Pauli& s, double theta, std::size_t cutoff) {
  std::size_t k = s.weight();
  if (k > cutoff) {
    throw std::length_error("rotated_local_term: weight exceeds cutoff");
  }
  if (k == 0) {
    // (I - (+/-)I)/2 is 0 or I on a trivial support; treat as 1x1.
    k = 1;
  }
  Pauli local = s.restricted(s.weight() ? s.support()
                                        : std::vector<std::size_t>{0});
  std::size_t dim = std::size_t{1} << k;
  CMat proj =
      0.5 * (CMat::Identity(dim, dim) - dense::pauli_matrix(local));
  CMat dk = kron_power(dense::rotation_y(theta), k);
  return dk.adjoint() * proj * dk;
}

double energy_dense(const CVec& psi, const CssHamiltonian& h) {
  if (std::abs(psi.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("energy_dense: state not normalized");
  }
  if (h.terms.empty()) return 0.0;
  std::size_t n = h.n;
  std::vector<double> energies;
  energies.reserve(h.terms.size());
  for (const auto& t : h.terms) {
    auto support = t.weight() ? t.support() : std::vector<std::size_t>{0};
    CMat rho = dense::partial_trace(psi, n, support);
    CMat term = rotated_local_term(t, h.theta);
    energies.push_back((rho * term).trace().real());
  }
  return pairwise_sum(std::move(energies)) /
         static_cast<double>(h.terms.size());
}

double energy_stabilizer(const StabilizerGroup& g, const CssHamiltonian& h,
                         std::size_t cutoff) {
  if (h.terms.empty()) return 0.0;
  std::vector<double> energies;
  energies.reserve(h.terms.size());
  for (const auto& t : h.terms) {
    if (t.weight() > cutoff) {
      throw std::length_error("energy_stabilizer: term weight over cutoff");
    }
    auto support = t.weight() ? t.support() : std::vector<std::size_t>{0};
    CMat rho = mixed_to_dense(reduced_state(g, support), cutoff);
    CMat term = rotated_local_term(t, h.theta, cutoff);
    energies.push_back((rho * term).trace().real());
  }
  return pairwise_sum(std::move(energies)) /
         static_cast<double>(h.terms.size());
}

double energy_stabilizer(const MixedStabilizerState& s,
                         const CssHamiltonian& h, std::size_t cutoff) {
  double e = 0;
  for (const auto& [w, g] : s.terms) {
    e += w * energy_stabilizer(g, h, cutoff);
  }
  return e;
}

CMat hamiltonian_matrix(const CssHamiltonian& h, std::size_t cutoff) {
  if (h.n > cutoff) {
    throw std::length_error("hamiltonian_matrix: n exceeds dense cutoff");
  }
  std::size_t dim = std::size_t{1} << h.n;
  CMat sum = CMat::Zero(dim, dim);
  for (const auto& t : h.terms) {
    sum += 0.5 * (CMat::Identity(dim, dim) - dense::pauli_matrix(t));
  }
  if (!h.terms.empty()) sum /= static_cast<double>(h.terms.size());
  CMat dn = kron_power(dense::rotation_y(h.theta), h.n);
  return dn.adjoint() * sum * dn;
}

MinEnergyResult min_energy_over_stabilizers(const CssHamiltonian& h,
                                            std::size_t enum_cutoff) {
  auto states = enumerate_pure_states(h.n, enum_cutoff);
  bool dense_path = h.n <= kDefaultDenseCutoff;
  CMat hmat;
  if (dense_path) hmat = hamiltonian_matrix(h);
  MinEnergyResult best{0.0, states.front()};
  bool first = true;
  for (const auto& s : states) {
    double e;
    if (dense_path) {
      CVec psi = to_dense(s);
      e = (psi.adjoint() * hmat * psi)(0).real();
    } else {
      e = energy_stabilizer(s, h);
    }
    // States arrive in sorted canonical order, so strict improvement keeps
    // the lexicographically smallest argmin.
    if (first || e < best.value) {
      best.value = e;
      best.argmin = s;
      first = false;
    }
  }
  return best;
}

std::vector<LocalBoundRow> local_bound_table(std::size_t k_max, double theta,
                                             std::size_t enum_cutoff) {
  std::vector<LocalBoundRow> table;
  for (std::size_t k = 1; k <= k_max; ++k) {
    auto states = enumerate_pure_states(k, enum_cutoff);
    for (char type : {'X', 'Z'}) {
      BitVec bits(k);
      for (std::size_t q = 0; q < k; ++q) bits.set(q, true);
      Pauli bar = type == 'X' ? Pauli(k, bits, BitVec(k), 0)
                              : Pauli(k, BitVec(k), bits, 0);
      CMat term = rotated_local_term(bar, theta);
      double best = 2.0;
      for (const auto& s : states) {
        CVec psi = to_dense(s);
        best = std::min(best, (psi.adjoint() * term * psi)(0).real());
      }
      table.push_back({k, type, best});
    }
  }
  return table;
}

NlcsCertificate nlcs_certificate(const CssHamiltonian& h) {
  if (std::abs(h.theta - kPi / 8) > 1e-12) {
    throw std::invalid_argument("nlcs_certificate: requires theta = pi/8");
  }
  NlcsCertificate cert;
  cert.alpha.den = h.terms.size();
  for (const auto& t : h.terms) {
    if (!t.is_x_type() && !t.is_z_type()) {
      throw std::invalid_argument("nlcs_certificate: term " + t.to_string() +
                                  " mixes X and Z letters (not CSS)");
    }
    if (t.weight() % 2 == 1) ++cert.alpha.num;
  }
  cert.epsilon = cert.alpha.value() * sin2_pi8();
  return cert;
}

namespace {

Eigen::VectorXd sorted_spectrum(const CMat& m) {
  Eigen::SelfAdjointEigenSolver<CMat> solver(m);
  return solver.eigenvalues();  // already ascending
}

}  // namespace

bool spectrum_conjugation_check(const CssHamiltonian& h, const CMat& unitary,
                                double tol, std::size_t cutoff) {
  CMat hm = hamiltonian_matrix(h, cutoff);
  CMat conj = unitary.adjoint() * hm * unitary;
  Eigen::VectorXd a = sorted_spectrum(hm);
  Eigen::VectorXd b = sorted_spectrum(conj);
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

bool spectrum_conjugation_check(const CssHamiltonian& h,
                                const CliffordCircuit& c, double tol,
                                std::size_t cutoff) {
  return spectrum_conjugation_check(h, dense::circuit_unitary(c), tol, cutoff);
}

}  // namespace nlcs
