#include "nlcslab/rotstates.hpp"

#include <cmath>
#include <stdexcept>

namespace nlcs {

namespace {

PauliRotation normalized(PauliRotation r) {
  if (!r.p.is_hermitian()) {
    throw std::invalid_argument("rotation Pauli must be Hermitian");
  }
  // -P rotations fold into the positive representative: e^{i theta (-P)} =
  // e^{i (-theta) P}.
  if (r.p.phase_exp() != r.p.positive_hermitian().phase_exp()) {
    r.p = r.p.positive_hermitian();
    r.theta = -r.theta;
  }
  return r;
}

}  // namespace

RotatedCliffordState normal_form(std::size_t n,
                                 const std::vector<PrepGate>& gates) {
  RotatedCliffordState s{StabilizerGroup::zero_state(n), {}};
  for (const auto& gate : gates) {
    if (const auto* c = std::get_if<CliffordGate>(&gate)) {
      CliffordCircuit one{n, {*c}};
      // Move the Clifford past every pending rotation:
      //   C e^{i theta P} = e^{i theta C P C†} C.
      for (auto& r : s.rotations) {
        r.p = conjugate(*c, r.p);
        r = normalized(std::move(r));
      }
      s.base = s.base.conjugated(one);
    } else {
      const auto& r = std::get<PauliRotation>(gate);
      if (r.p.num_qubits() != n) {
        throw std::invalid_argument("normal_form: rotation qubit mismatch");
      }
      s.rotations.push_back(normalized(r));
    }
  }
  return s;
}

CVec state_to_dense(const RotatedCliffordState& s, std::size_t cutoff) {
  CVec psi = to_dense(s.base, cutoff);
  for (const auto& r : s.rotations) {
    psi = dense::apply_pauli_rotation(r.theta, r.p, psi);
  }
  return psi;
}

CMat reduced_state_one_rotation(const StabilizerGroup& g, double theta,
                                const Pauli& p,
                                const std::vector<std::size_t>& qubits,
                                std::size_t cutoff) {
  if (qubits.size() > cutoff) {
    throw std::length_error("reduced_state_one_rotation: |A| over cutoff");
  }
  std::size_t a = qubits.size();
  std::size_t dim = std::size_t{1} << a;
  double c = std::cos(theta), s = std::sin(theta);
  CMat pa = dense::pauli_matrix(p.restricted(qubits));
  CMat sum = CMat::Zero(dim, dim);
  for (const auto& ghat : subgroup_on(g, qubits, Pauli::identity(g.num_qubits()))) {
    CMat m = dense::pauli_matrix(ghat);
    sum += c * c * m + s * s * pa * m * pa;
  }
  for (const auto& gp : subgroup_on(g, qubits, p)) {
    CMat m = dense::pauli_matrix(gp);
    sum += std::complex<double>(0, s * c) * (pa * m - m * pa);
  }
  return sum / static_cast<double>(dim);
}

double energy_zero_rotated(const RotatedCliffordState& s, std::size_t cutoff) {
  std::size_t n = s.base.num_qubits();
  CssHamiltonian h0 = CssHamiltonian::h0(n, kPi / 8);
  if (s.t() >= 2) {
    if (n > cutoff) {
      throw std::length_error(
          "energy_zero_rotated: t >= 2 requires n <= dense cutoff");
    }
    return energy_dense(state_to_dense(s, cutoff), h0);
  }
  std::vector<double> energies;
  energies.reserve(n);
  CMat term = rotated_local_term(Pauli::single(1, 0, 'Z'), kPi / 8);
  for (std::size_t q = 0; q < n; ++q) {
    CMat rho = s.t() == 0
                   ? mixed_to_dense(reduced_state(s.base, {q}))
                   : reduced_state_one_rotation(s.base, s.rotations[0].theta,
                                                s.rotations[0].p, {q});
    energies.push_back((rho * term).trace().real());
  }
  return pairwise_sum(std::move(energies)) / static_cast<double>(n);
}

namespace {

/// Lemma B.8 proof obstruction: qubit i can have zero term energy only when
/// P_i = Y, Z_i is in the group, and some g in G has g_i = Z with g matching
/// P everywhere else. The proof shows at most one such i can exist.
std::size_t obstruction_count(const StabilizerGroup& g, const Pauli& p) {
  std::size_t n = g.num_qubits();
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (p.letter(i) != 'Y') continue;
    BitVec zi(2 * n);
    zi.set(n + i, true);
    if (!g.letters_in_group(zi)) continue;
    BitVec v(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
      if (q == i) continue;
      v.set(q, p.x_bit(q));
      v.set(n + q, p.z_bit(q));
    }
    v.set(n + i, true);  // Z at i, P's letters elsewhere
    if (g.letters_in_group(v)) ++count;
  }
  return count;
}

}  // namespace

OneRotationBoundReport verify_one_rotation_bound(std::size_t n,
                                                 std::size_t trials,
                                                 std::uint64_t seed) {
  OneRotationBoundReport rep;
  rep.n = n;
  rep.trials = trials;
  rep.bound = (1.0 - 1.0 / static_cast<double>(n)) * sin2_pi8();
  rep.min_energy = 1.0;
  for (std::size_t t = 0; t < trials; ++t) {
    CounterRng rng(seed, t + 1);
    StabilizerGroup base = random_stabilizer_group(n, rng);
    Pauli p = random_hermitian_pauli(n, rng);
    double theta = (rng.uniform() - 0.5) * 2 * kPi;
    RotatedCliffordState s{base, {{theta, p}}};
    double e = energy_zero_rotated(s);
    rep.min_energy = std::min(rep.min_energy, e);
    if (e < rep.bound - 1e-9) ++rep.violations;
    if (obstruction_count(base, p) > 1) rep.obstruction_ok = false;
  }
  // Crafted saturating instance: e^{i(pi/8)Y} = D† applied to one qubit of
  // |0...0> zeroes that term and leaves sin^2(pi/8) on the rest.
  RotatedCliffordState crafted{StabilizerGroup::zero_state(n),
                               {{kPi / 8, Pauli::single(n, 0, 'Y')}}};
  double e = energy_zero_rotated(crafted);
  rep.min_energy = std::min(rep.min_energy, e);
  rep.saturating_ok = std::abs(e - rep.bound) <= 1e-9;
  return rep;
}

ConjectureScanReport conjecture_scan(std::size_t n, std::size_t t,
                                     std::size_t samples, std::uint64_t seed,
                                     std::size_t cutoff) {
  if (n > cutoff) {
    throw std::length_error("conjecture_scan: n over dense cutoff");
  }
  static const double kGrid[4] = {kPi / 8, -kPi / 8, kPi / 4, -kPi / 4};
  ConjectureScanReport rep;
  rep.n = n;
  rep.t = t;
  rep.samples = samples;
  rep.bound = (1.0 - static_cast<double>(t) / n) * sin2_pi8();
  rep.min_energy = 1.0;
  auto record = [&](double e) {
    rep.min_energy = std::min(rep.min_energy, e);
    if (e < rep.bound - 1e-9) ++rep.violations;
  };
  for (std::size_t i = 0; i < samples; ++i) {
    CounterRng rng(seed, i + 1);
    RotatedCliffordState s{random_stabilizer_group(n, rng), {}};
    for (std::size_t j = 0; j < t; ++j) {
      Pauli p = random_hermitian_pauli(n, rng);
      // Alternate between uniform theta and the adversarial grid: undoing
      // the Hamiltonian's D gates is the paper's intuition for minimizers.
      double theta = (i % 2 == 0) ? (rng.uniform() - 0.5) * 2 * kPi
                                  : kGrid[rng.below(4)];
      s.rotations.push_back({theta, p.positive_hermitian()});
    }
    record(energy_zero_rotated(s, cutoff));
  }
  // Crafted saturating sample: D† on the first t qubits of |0...0>.
  RotatedCliffordState crafted{StabilizerGroup::zero_state(n), {}};
  for (std::size_t j = 0; j < t; ++j) {
    crafted.rotations.push_back({kPi / 8, Pauli::single(n, j, 'Y')});
  }
  record(energy_zero_rotated(crafted, cutoff));
  rep.margin = rep.min_energy - rep.bound;
  return rep;
}

}  // namespace nlcs
