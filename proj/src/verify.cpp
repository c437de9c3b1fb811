#include "nlcslab/verify.hpp"

#include <cmath>
#include <string>

#include "nlcslab/codes.hpp"
#include "nlcslab/hamiltonian.hpp"
#include "nlcslab/rotstates.hpp"

namespace nlcs {

namespace {

void check_eq(std::vector<CheckResult>& out, std::string name, double observed,
              double expected, double tol) {
  out.push_back({std::move(name), observed, expected, tol,
                 std::abs(observed - expected) <= tol});
}

void check_le(std::vector<CheckResult>& out, std::string name, double observed,
              double bound, double tol) {
  out.push_back({std::move(name), observed, bound, tol,
                 observed <= bound + tol});
}

void check_ge(std::vector<CheckResult>& out, std::string name, double observed,
              double bound, double tol) {
  out.push_back({std::move(name), observed, bound, tol,
                 observed >= bound - tol});
}

CMat kron_pow(const CMat& a, std::size_t k) {
  CMat out = CMat::Identity(1, 1);
  for (std::size_t i = 0; i < k; ++i) out = dense::kron(out, a);
  return out;
}

CMat hadamard() {
  CMat h(2, 2);
  double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return h;
}

Pauli bar_term(std::size_t k, char type) {
  BitVec bits(k);
  for (std::size_t q = 0; q < k; ++q) bits.set(q, true);
  return type == 'X' ? Pauli(k, bits, BitVec(k), 0)
                     : Pauli(k, BitVec(k), bits, 0);
}

Pauli random_odd_css_term(std::size_t n, CounterRng& rng) {
  BitVec bits(n);
  std::size_t w = 1 + 2 * rng.below((n + 1) / 2);  // odd weight <= n
  std::vector<std::size_t> pool;
  for (std::size_t q = 0; q < n; ++q) pool.push_back(q);
  for (std::size_t j = 0; j < w; ++j) {
    std::size_t pick = rng.below(pool.size());
    bits.set(pool[pick], true);
    pool.erase(pool.begin() + pick);
  }
  return rng.coin() ? Pauli(n, bits, BitVec(n), 0)
                    : Pauli(n, BitVec(n), bits, 0);
}

}  // namespace

std::vector<CheckResult> run_all_checks(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const double s2 = sin2_pi8();
  const double c2 = 1.0 - s2;

  // --- Lemma B.2: the six single-qubit energies under H~0. ---
  {
    auto h1 = CssHamiltonian::h0(1, kPi / 8);
    const char* gens[6] = {"Z", "-Z", "X", "-X", "Y", "-Y"};
    const char* names[6] = {"0", "1", "plus", "minus", "yplus", "yminus"};
    const double want[6] = {s2, c2, c2, s2, 0.5, 0.5};
    for (int i = 0; i < 6; ++i) {
      auto g = StabilizerGroup::from_generators(1, {Pauli::parse(gens[i])});
      check_eq(out, std::string("lemma_B2.energy.") + names[i],
               energy_stabilizer(g, h1), want[i], 1e-12);
    }
  }

  // --- Claim 3.2: rotated projector identities, k <= 6. ---
  {
    CMat x = dense::pauli_matrix_1q('X');
    CMat h = hadamard();
    CMat mxhx = -(x * h * x);
    for (std::size_t k = 1; k <= 6; ++k) {
      std::size_t dim = std::size_t{1} << k;
      CMat wx = 0.5 * (CMat::Identity(dim, dim) - kron_pow(h, k));
      CMat wz = 0.5 * (CMat::Identity(dim, dim) - kron_pow(mxhx, k));
      check_le(out, "claim_3.2.xbar.k" + std::to_string(k),
               (rotated_local_term(bar_term(k, 'X'), kPi / 8) - wx).norm(),
               0.0, 1e-13);
      check_le(out, "claim_3.2.zbar.k" + std::to_string(k),
               (rotated_local_term(bar_term(k, 'Z'), kPi / 8) - wz).norm(),
               0.0, 1e-13);
    }
  }

  // --- Enumeration counts (backs every exhaustive claim below). ---
  {
    const std::size_t want[4] = {6, 60, 1080, 36720};
    for (std::size_t k = 1; k <= 4; ++k) {
      check_eq(out, "enumeration.count.k" + std::to_string(k),
               static_cast<double>(enumerate_pure_states(k, opt.enum_cutoff).size()),
               static_cast<double>(want[k - 1]), 0.0);
    }
  }

  // --- Fact 3.3: overlap geometry, exhaustive over 60 x 60 pairs. ---
  {
    auto states = enumerate_pure_states(2, opt.enum_cutoff);
    double max_non_unit = 0.0;
    double worst_grid_dev = 0.0;
    for (const auto& a : states) {
      for (const auto& b : states) {
        double ov = overlap_magnitude(a, b);
        if (std::abs(ov - 1.0) > 1e-12) max_non_unit = std::max(max_non_unit, ov);
        // ov must sit on {0} U {2^{-m/2}}.
        double dev = ov;
        for (int m = 0; m <= 8; ++m) {
          dev = std::min(dev, std::abs(ov - std::pow(2.0, -0.5 * m)));
        }
        worst_grid_dev = std::max(worst_grid_dev, dev);
      }
    }
    check_le(out, "fact_3.3.max_non_unit_overlap", max_non_unit,
             1.0 / std::sqrt(2.0), 1e-12);
    check_le(out, "fact_3.3.overlap_on_grid", worst_grid_dev, 0.0, 1e-12);
  }

  // --- Lemmas 3.3 / 3.4: local bound table, k <= 4. ---
  {
    auto table = local_bound_table(4, kPi / 8, opt.enum_cutoff);
    for (const auto& row : table) {
      double want = row.k % 2 == 1 ? s2 : 0.0;
      check_eq(out,
               std::string("lemma_3.4.min_energy.") + row.type + "bar.k" +
                   std::to_string(row.k),
               row.min_energy, want, 1e-12);
    }
    // Lemma 3.3 odd case: max |<eta|H^{(x)k}|eta>| = 1/sqrt(2) at k in {1,3}.
    for (std::size_t k : {std::size_t{1}, std::size_t{3}}) {
      CMat hk = kron_pow(hadamard(), k);
      double best = 0.0;
      for (const auto& st : enumerate_pure_states(k, opt.enum_cutoff)) {
        CVec psi = to_dense(st);
        best = std::max(best, std::abs((psi.adjoint() * hk * psi)(0)));
      }
      check_eq(out, "lemma_3.3.max_hadamard_overlap.k" + std::to_string(k),
               best, 1.0 / std::sqrt(2.0), 1e-12);
    }
  }

  // --- Lemma 3.5: random stabilizer states vs single odd terms. ---
  {
    CounterRng rng(opt.seed, 0x35);
    double min_e = 1.0;
    for (std::size_t t = 0; t < opt.sample_trials; ++t) {
      std::size_t n = 2 + rng.below(5);  // up to 6 qubits
      auto g = random_stabilizer_group(n, rng);
      CssHamiltonian h{n, {random_odd_css_term(n, rng)}, kPi / 8};
      min_e = std::min(min_e, energy_stabilizer(g, h, opt.dense_cutoff));
    }
    check_ge(out, "lemma_3.5.odd_term_floor", min_e, s2, 1e-12);
  }

  // --- Theorem 3.1 spot checks at n = 3. ---
  {
    CounterRng rng(opt.seed, 0x31);
    for (int inst = 0; inst < 2; ++inst) {
      CssHamiltonian h;
      h.n = 3;
      h.theta = kPi / 8;
      for (int i = 0; i < 4; ++i) h.terms.push_back(random_odd_css_term(3, rng));
      auto cert = nlcs_certificate(h);
      auto min = min_energy_over_stabilizers(h, opt.enum_cutoff);
      check_ge(out, "theorem_3.1.instance" + std::to_string(inst) +
                        ".min_ge_alpha_sin2",
               min.value, cert.epsilon, 1e-12);
    }
  }

  // --- Claim 2.1 / Fact A.2: reduced states vs dense partial traces. ---
  {
    CounterRng rng(opt.seed, 0x21);
    double worst = 0.0;
    for (std::size_t t = 0; t < opt.sample_trials / 4; ++t) {
      std::size_t n = 2 + rng.below(4);
      auto g = random_stabilizer_group(n, rng);
      std::vector<std::size_t> keep;
      for (std::size_t q = 0; q < n; ++q) {
        if (rng.coin()) keep.push_back(q);
      }
      if (keep.empty() || keep.size() == n) continue;
      CMat fast = mixed_to_dense(reduced_state(g, keep), opt.dense_cutoff);
      CMat slow = dense::partial_trace(to_dense(g, opt.dense_cutoff), n, keep);
      worst = std::max(worst, (fast - slow).norm());
    }
    check_le(out, "claim_2.1.reduced_state_vs_partial_trace", worst, 0.0,
             1e-10);
  }

  // --- Lemma 4.1: Tanner lift preserves the odd-row fraction exactly. ---
  {
    CounterRng rng(opt.seed, 0x41);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
      auto g = RegularGraph::random(8, 3, rng);
      auto h = sample_random_matrix(2, 3, rng.next());
      worst = std::max(worst,
                       std::abs(odd_row_fraction(tanner_lift(g, h)).value() -
                                odd_row_fraction(h).value()));
    }
    check_le(out, "lemma_4.1.lift_preserves_odd_fraction", worst, 0.0, 0.0);
  }

  // --- Lemma 4.2: random-matrix Monte Carlo vs analytic bounds. ---
  {
    auto rep = verify_random_code_lemma(2, 8, opt.mc_trials, opt.seed);
    double sigma = std::sqrt(rep.odd_row_bound * (1 - rep.odd_row_bound) /
                             opt.mc_trials);
    check_eq(out, "lemma_4.2.odd_row_freq.r2d8", rep.odd_row_freq,
             rep.odd_row_bound, 3 * sigma);
    double sb = rep.ones_in_span_bound;
    check_le(out, "lemma_4.2.ones_in_span_freq.r2d8", rep.ones_in_span_freq,
             sb, 3 * std::sqrt(sb * (1 - sb) / opt.mc_trials));
    auto rep3 = verify_random_code_lemma(3, 8, opt.mc_trials, opt.seed + 1);
    double sigma3 = std::sqrt(rep3.odd_row_bound * (1 - rep3.odd_row_bound) /
                              opt.mc_trials);
    check_eq(out, "lemma_4.2.odd_row_freq.r3d8", rep3.odd_row_freq,
             rep3.odd_row_bound, 3 * sigma3);
  }

  // --- Corollary 4.3: odd kernel vector => all-odd generator reachable. ---
  {
    CounterRng rng(opt.seed, 0x43);
    std::size_t failures = 0;
    for (std::size_t t = 0; t < opt.sample_trials; ++t) {
      auto h = sample_random_matrix(2 + rng.below(3), 6, rng.next());
      auto gen = dual_parity_check(h);
      if (gen.rows() == 0) continue;
      bool gen_has_odd = false;
      for (std::size_t i = 0; i < gen.rows(); ++i) {
        gen_has_odd |= gen.row(i).popcount() % 2 == 1;
      }
      if (!gen_has_odd) continue;  // no odd kernel vector exists
      auto oddgen = odd_weight_transform(gen);
      for (std::size_t i = 0; i < oddgen.rows(); ++i) {
        if (oddgen.row(i).popcount() % 2 == 0) ++failures;
      }
    }
    check_eq(out, "corollary_4.3.all_rows_odd_after_transform",
             static_cast<double>(failures), 0.0, 0.0);
  }

  // --- Claim 4.4 pipeline: quantum Tanner assembly odd fractions. ---
  {
    CounterRng rng(opt.seed, 0x44);
    auto g = RegularGraph::random(6, 4, rng);
    // Odd-weight local rows need odd x odd tensor factors.
    BinaryMatrix h0(1, 2, {1, 0});
    BinaryMatrix h1(1, 2, {0, 1});
    auto pair = assemble_quantum_tanner(g, h0, h1);
    auto local_x = BinaryMatrix::tensor(h0, dual_parity_check(h1));
    bool any_odd = false;
    for (std::size_t i = 0; i < local_x.rows(); ++i) {
      any_odd |= local_x.row(i).popcount() % 2 == 1;
    }
    if (any_odd) local_x = odd_weight_transform(local_x);
    check_eq(out, "claim_4.4.lift_odd_fraction_matches_local",
             odd_row_fraction(pair.h_x).value(),
             odd_row_fraction(local_x).value(), 0.0);
    check_ge(out, "claim_4.4.alpha_positive",
             odd_row_fraction(pair.h_x).value(), 1e-9, 0.0);
  }

  // --- Lemma 2.2 core: spectra invariant under Clifford conjugation. ---
  {
    CounterRng rng(opt.seed, 0x22);
    bool all_ok = true;
    for (int t = 0; t < 10; ++t) {
      CssHamiltonian h;
      h.n = 3;
      h.theta = kPi / 8;
      for (int i = 0; i < 3; ++i) h.terms.push_back(random_odd_css_term(3, rng));
      auto c = random_clifford_circuit(3, 12, rng);
      all_ok = all_ok && spectrum_conjugation_check(h, c, 1e-9, opt.dense_cutoff);
    }
    check_eq(out, "lemma_2.2.spectrum_invariance", all_ok ? 1.0 : 0.0, 1.0,
             0.0);
  }

  // --- Lemma B.6: normal form preserves the prepared state. ---
  {
    CounterRng rng(opt.seed, 0xB6);
    double min_fid = 1.0;
    for (std::size_t t = 0; t < opt.sample_trials / 4; ++t) {
      std::size_t n = 2 + rng.below(4);
      std::vector<PrepGate> gates;
      std::size_t rots = rng.below(3);
      for (int i = 0; i < 12; ++i) {
        if (rots > 0 && rng.below(4) == 0) {
          --rots;
          gates.push_back(PauliRotation{(rng.uniform() - 0.5) * 2 * kPi,
                                        random_hermitian_pauli(n, rng)});
        } else {
          std::size_t a = rng.below(n);
          switch (rng.below(3)) {
            case 0: gates.push_back(CliffordGate::hadamard(a)); break;
            case 1: gates.push_back(CliffordGate::phase(a)); break;
            default: {
              if (n < 2) { gates.push_back(CliffordGate::hadamard(a)); break; }
              std::size_t b = rng.below(n - 1);
              gates.push_back(CliffordGate::cnot(a, b >= a ? b + 1 : b));
            }
          }
        }
      }
      auto nf = normal_form(n, gates);
      CVec direct = dense::basis_state(n, 0);
      for (const auto& ggate : gates) {
        if (const auto* cg = std::get_if<CliffordGate>(&ggate)) {
          direct = dense::apply_gate(*cg, n, direct);
        } else {
          const auto& r = std::get<PauliRotation>(ggate);
          direct = dense::apply_pauli_rotation(r.theta, r.p, direct);
        }
      }
      min_fid = std::min(min_fid,
                         std::abs(direct.dot(state_to_dense(nf, opt.dense_cutoff))));
    }
    check_ge(out, "lemma_B6.normal_form_fidelity", min_fid, 1.0, 1e-10);
  }

  // --- Lemma B.7: single-rotation reduced states vs dense oracle. ---
  {
    CounterRng rng(opt.seed, 0xB7);
    double worst = 0.0;
    for (std::size_t t = 0; t < opt.sample_trials / 4; ++t) {
      std::size_t n = 2 + rng.below(3);
      auto g = random_stabilizer_group(n, rng);
      auto p = random_hermitian_pauli(n, rng);
      double theta = (rng.uniform() - 0.5) * 2 * kPi;
      std::vector<std::size_t> keep;
      for (std::size_t q = 0; q < n; ++q) {
        if (rng.coin()) keep.push_back(q);
      }
      if (keep.empty()) keep.push_back(0);
      CVec psi = dense::apply_pauli_rotation(theta, p,
                                             to_dense(g, opt.dense_cutoff));
      CMat fast = reduced_state_one_rotation(g, theta, p, keep,
                                             opt.dense_cutoff);
      worst = std::max(worst,
                       (fast - dense::partial_trace(psi, n, keep)).norm());
    }
    check_le(out, "lemma_B7.reduced_state_formula", worst, 0.0, 1e-10);
  }

  // --- Lemma B.8: one-rotation energy bound. ---
  {
    auto rep = verify_one_rotation_bound(4, opt.sample_trials, opt.seed + 0xB8);
    check_eq(out, "lemma_B8.violations", static_cast<double>(rep.violations),
             0.0, 0.0);
    check_eq(out, "lemma_B8.obstruction_unique", rep.obstruction_ok ? 1.0 : 0.0,
             1.0, 0.0);
    check_eq(out, "lemma_B8.saturating_instance", rep.saturating_ok ? 1.0 : 0.0,
             1.0, 0.0);
    check_ge(out, "lemma_B8.min_energy", rep.min_energy, rep.bound, 1e-9);
  }

  // --- Conjecture B.3 quick cells (evidence only, but violations fail). ---
  {
    for (std::size_t t = 0; t <= 3; ++t) {
      auto rep = conjecture_scan(3, t, opt.sample_trials / 2, opt.seed + t,
                                 opt.dense_cutoff);
      check_eq(out, "conjecture_B3.violations.n3.t" + std::to_string(t),
               static_cast<double>(rep.violations), 0.0, 0.0);
    }
  }

  return out;
}

}  // namespace nlcs
