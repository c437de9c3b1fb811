// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria mirror the shipped verification surface end to end,
// including the runtime budgets.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "nlcslab/codes.hpp"
#include "nlcslab/hamiltonian.hpp"
#include "nlcslab/rotstates.hpp"

using namespace nlcs;

namespace {

int failures = 0;

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(
             clock::now().time_since_epoch())
      .count();
}

void report(int criterion, bool pass, const char* what, double ms) {
  std::printf("criterion %2d: %s  %s  (%.1f ms)\n", criterion,
              pass ? "PASS" : "FAIL", what, ms);
  if (!pass) ++failures;
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

Pauli bar(std::size_t k, char type) {
  BitVec bits(k);
  for (std::size_t q = 0; q < k; ++q) bits.set(q, true);
  return type == 'X' ? Pauli(k, bits, BitVec(k), 0)
                     : Pauli(k, BitVec(k), bits, 0);
}

// 1. Lemma B.2 single-qubit energy table.
void criterion1() {
  auto h = CssHamiltonian::h0(1, kPi / 8);
  const char* gens[6] = {"Z", "-Z", "X", "-X", "Y", "-Y"};
  double want[6] = {sin2_pi8(), 1 - sin2_pi8(), 1 - sin2_pi8(),
                    sin2_pi8(), 0.5, 0.5};
  double t0 = now_ms();
  bool ok = true;
  for (int i = 0; i < 6; ++i) {
    auto g = StabilizerGroup::from_generators(1, {Pauli::parse(gens[i])});
    ok = ok && std::abs(energy_stabilizer(g, h) - want[i]) <= 1e-12;
  }
  double ms = now_ms() - t0;
  report(1, ok && ms < 1.0, "Lemma B.2 six single-qubit energies", ms);
}

// 2. Lemmas 3.3-3.4 local bound table, k <= 4, with runtime budgets.
void criterion2() {
  double t0 = now_ms();
  bool ok = true;
  double ms3 = 0, ms4 = 0;
  for (std::size_t k = 1; k <= 4; ++k) {
    double tk = now_ms();
    auto rows = local_bound_table(k, kPi / 8);
    double dt = now_ms() - tk;
    if (k == 3) ms3 = dt;
    if (k == 4) ms4 = dt;
    // local_bound_table recomputes 1..k; take the last two rows for this k.
    for (auto it = rows.end() - 2; it != rows.end(); ++it) {
      double want = k % 2 == 1 ? sin2_pi8() : 0.0;
      ok = ok && std::abs(it->min_energy - want) <= 1e-12;
    }
  }
  ok = ok && ms3 < 1000.0 && ms4 < 30000.0;
  report(2, ok, "Lemmas 3.3-3.4 exhaustive local minima k<=4",
         now_ms() - t0);
}

// 3. Fact 3.3 overlap geometry over all 60 x 60 two-qubit pairs.
void criterion3() {
  double t0 = now_ms();
  auto states = enumerate_pure_states(2);
  bool ok = states.size() == 60;
  for (const auto& a : states) {
    for (const auto& b : states) {
      double ov = overlap_magnitude(a, b);
      if (std::abs(ov - 1.0) <= 1e-12) continue;
      ok = ok && ov <= 1.0 / std::sqrt(2.0) + 1e-12;
      bool on_grid = ov <= 1e-12;
      for (int m = 1; m <= 8 && !on_grid; ++m) {
        on_grid = std::abs(ov - std::pow(2.0, -0.5 * m)) <= 1e-12;
      }
      ok = ok && on_grid;
    }
  }
  double ms = now_ms() - t0;
  report(3, ok && ms < 5000.0, "Fact 3.3 overlap gap and 2^{-m/2} grid", ms);
}

// 4. Claim 3.2 rotated projector identities, k <= 6.
void criterion4() {
  double t0 = now_ms();
  CMat x = dense::pauli_matrix_1q('X');
  CMat h = hadamard();
  CMat mxhx = -(x * h * x);
  bool ok = true;
  for (std::size_t k = 1; k <= 6; ++k) {
    std::size_t dim = std::size_t{1} << k;
    CMat wx = 0.5 * (CMat::Identity(dim, dim) - kron_pow(h, k));
    CMat wz = 0.5 * (CMat::Identity(dim, dim) - kron_pow(mxhx, k));
    ok = ok && (rotated_local_term(bar(k, 'X'), kPi / 8) - wx).norm() <= 1e-13;
    ok = ok && (rotated_local_term(bar(k, 'Z'), kPi / 8) - wz).norm() <= 1e-13;
  }
  report(4, ok, "Claim 3.2 projector identities k<=6", now_ms() - t0);
}

// 5. Claim 2.1 / Fact A.2: all 1080 three-qubit states, all 6 proper subsets.
void criterion5() {
  double t0 = now_ms();
  auto states = enumerate_pure_states(3);
  std::vector<std::vector<std::size_t>> subsets = {{0}, {1}, {2},
                                                   {0, 1}, {0, 2}, {1, 2}};
  bool ok = states.size() == 1080;
  for (const auto& g : states) {
    CVec psi = to_dense(g);
    for (const auto& a : subsets) {
      CMat fast = mixed_to_dense(reduced_state(g, a));
      CMat slow = dense::partial_trace(psi, 3, a);
      if ((fast - slow).norm() > 1e-10) ok = false;
    }
  }
  double ms = now_ms() - t0;
  report(5, ok && ms < 60000.0,
         "Claim 2.1 reduced states vs partial trace (1080 x 6)", ms);
}

// 6. Theorem 3.1: 100 random odd-weight CSS term sets on n = 4.
void criterion6() {
  double t0 = now_ms();
  auto states = enumerate_pure_states(4);
  std::size_t dim = 16;
  CMat v(dim, states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    v.col(i) = to_dense(states[i]);
  }
  CounterRng rng(106, 0);
  bool ok = states.size() == 36720;
  for (int inst = 0; inst < 100; ++inst) {
    CssHamiltonian h;
    h.n = 4;
    h.theta = kPi / 8;
    std::size_t m = 2 + rng.below(4);
    for (std::size_t i = 0; i < m; ++i) {
      BitVec bits(4);
      std::size_t w = rng.coin() ? 1 : 3;
      std::vector<std::size_t> pool = {0, 1, 2, 3};
      for (std::size_t j = 0; j < w; ++j) {
        std::size_t pick = rng.below(pool.size());
        bits.set(pool[pick], true);
        pool.erase(pool.begin() + pick);
      }
      h.terms.push_back(rng.coin() ? Pauli(4, bits, BitVec(4), 0)
                                   : Pauli(4, BitVec(4), bits, 0));
    }
    CMat hm = hamiltonian_matrix(h);
    Eigen::VectorXd energies =
        (v.conjugate().cwiseProduct(hm * v)).colwise().sum().real();
    double min_e = energies.minCoeff();
    ok = ok && min_e >= nlcs_certificate(h).epsilon - 1e-12;
  }
  report(6, ok, "Theorem 3.1 certificate vs exhaustive minimum (100 @ n=4)",
         now_ms() - t0);
}

// 7. Claim 4.4 proof machinery: odd transform kernels, lift fractions,
//    Lemma 4.2 Monte Carlo.
void criterion7() {
  double t0 = now_ms();
  bool ok = true;
  // Kernel preservation, widths up to 12, exhaustive kernel comparison.
  CounterRng rng(107, 0);
  for (int t = 0; t < 40; ++t) {
    std::size_t d = 2 + rng.below(11);  // up to 12 columns
    auto m = sample_random_matrix(1 + rng.below(5), d, rng.next());
    bool any_odd = false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      any_odd |= m.row(i).popcount() % 2 == 1;
    }
    if (!any_odd) continue;
    auto tm = odd_weight_transform(m);
    for (std::size_t vbits = 0; vbits < (std::size_t{1} << d); ++vbits) {
      BitVec x(d);
      for (std::size_t j = 0; j < d; ++j) x.set(j, (vbits >> j) & 1);
      if (m.mul_vec(x).any() != tm.mul_vec(x).any()) ok = false;
    }
    for (std::size_t i = 0; i < tm.rows(); ++i) {
      ok = ok && tm.row(i).popcount() % 2 == 1;
    }
  }
  // Lift preserves the odd fraction exactly (Lemma 4.1).
  for (int t = 0; t < 10; ++t) {
    auto g = RegularGraph::random(8, 3, rng);
    auto h = sample_random_matrix(2, 3, rng.next());
    ok = ok && odd_row_fraction(tanner_lift(g, h)).value() ==
                   odd_row_fraction(h).value();
  }
  // Lemma 4.2 Monte Carlo, >= 10^4 trials, 3 sigma bands.
  auto rep = verify_random_code_lemma(2, 8, 10000, 1077);
  ok = ok && rep.odd_row_pass && rep.ones_in_span_pass;
  auto rep3 = verify_random_code_lemma(3, 8, 10000, 1078);
  ok = ok && rep3.odd_row_pass && rep3.ones_in_span_pass;
  double ms = now_ms() - t0;
  report(7, ok && ms < 30000.0,
         "Claim 4.4 / Lemmas 4.1-4.2 / Corollary 4.3 pipeline", ms);
}

// 8. Lemmas B.6-B.8.
void criterion8() {
  double t0 = now_ms();
  bool ok = true;
  // B.6: 500 random circuits, n <= 6, <= 20 gates.
  CounterRng rng(108, 0);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 2 + rng.below(5);
    std::vector<PrepGate> gates;
    std::size_t len = 1 + rng.below(20);
    for (std::size_t i = 0; i < len; ++i) {
      if (rng.below(4) == 0) {
        gates.push_back(PauliRotation{(rng.uniform() - 0.5) * 2 * kPi,
                                      random_hermitian_pauli(n, rng)});
      } else {
        std::size_t a = rng.below(n);
        switch (rng.below(3)) {
          case 0: gates.push_back(CliffordGate::hadamard(a)); break;
          case 1: gates.push_back(CliffordGate::phase(a)); break;
          default: {
            std::size_t b = rng.below(n - 1);
            gates.push_back(CliffordGate::cnot(a, b >= a ? b + 1 : b));
          }
        }
      }
    }
    CVec direct = dense::basis_state(n, 0);
    for (const auto& g : gates) {
      if (const auto* c = std::get_if<CliffordGate>(&g)) {
        direct = dense::apply_gate(*c, n, direct);
      } else {
        const auto& r = std::get<PauliRotation>(g);
        direct = dense::apply_pauli_rotation(r.theta, r.p, direct);
      }
    }
    auto nf = normal_form(n, gates);
    if (std::abs(direct.dot(state_to_dense(nf))) < 1.0 - 1e-10) ok = false;
  }
  // B.7: exhaustive small grid.
  auto states = enumerate_pure_states(2);
  std::vector<Pauli> paulis;
  for (const char* s : {"XI", "YI", "ZI", "IX", "IY", "IZ", "XX", "XY", "XZ",
                        "YX", "YY", "YZ", "ZX", "ZY", "ZZ"}) {
    paulis.push_back(Pauli::parse(s));
  }
  for (const auto& g : states) {
    CVec base = to_dense(g);
    for (const auto& p : paulis) {
      for (int i = 0; i < 8; ++i) {
        double theta = -kPi + i * kPi / 4;
        CVec psi = dense::apply_pauli_rotation(theta, p, base);
        for (std::size_t q : {std::size_t{0}, std::size_t{1}}) {
          CMat fast = reduced_state_one_rotation(g, theta, p, {q});
          CMat slow = dense::partial_trace(psi, 2, {q});
          if ((fast - slow).norm() > 1e-10) ok = false;
        }
      }
    }
  }
  // B.8: 10^4 sampled one-rotation states plus the saturating instance.
  auto rep = verify_one_rotation_bound(4, 10000, 1088);
  ok = ok && rep.violations == 0 && rep.obstruction_ok && rep.saturating_ok;
  report(8, ok, "Lemmas B.6-B.8 normal form / formula / energy bound",
         now_ms() - t0);
}

// 9. Lemma 2.2 core: 50 random (H, Clifford) pairs, n <= 6.
void criterion9() {
  double t0 = now_ms();
  bool ok = true;
  CounterRng rng(109, 0);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 2 + rng.below(5);
    CssHamiltonian h;
    h.n = n;
    h.theta = kPi / 8;
    std::size_t m = 1 + rng.below(4);
    for (std::size_t i = 0; i < m; ++i) {
      h.terms.push_back(random_hermitian_pauli(n, rng).positive_hermitian());
    }
    auto c = random_clifford_circuit(n, 14, rng);
    ok = ok && spectrum_conjugation_check(h, c);
  }
  report(9, ok, "Lemma 2.2 spectrum invariance (50 pairs, n<=6)",
         now_ms() - t0);
}

// 10. Conjecture B.3 evidence over every (n <= 5, t <= n) cell.
void criterion10() {
  double t0 = now_ms();
  bool ok = true;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t t = 0; t <= n; ++t) {
      auto rep = conjecture_scan(n, t, 10000, 110 + 10 * n + t);
      if (rep.violations != 0) {
        std::printf("  needs review: n=%zu t=%zu min=%.12f bound=%.12f\n",
                    n, t, rep.min_energy, rep.bound);
        ok = false;
      }
    }
  }
  double ms = now_ms() - t0;
  report(10, ok && ms < 600000.0, "Conjecture B.3 scan (n<=5, all t)", ms);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (failures) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all 10 acceptance criteria passed\n");
  return 0;
}
