#include "nlcslab/stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

namespace nlcs {

namespace {

bool check_bit(const Pauli& p, std::size_t col) {
  std::size_t n = p.num_qubits();
  return col < n ? p.x_bit(col) : p.z_bit(col - n);
}

BitVec xz_row(const Pauli& p) {
  std::size_t n = p.num_qubits();
  BitVec row(2 * n);
  for (std::size_t q = 0; q < n; ++q) {
    if (p.x_bit(q)) row.set(q, true);
    if (p.z_bit(q)) row.set(n + q, true);
  }
  return row;
}

Pauli pauli_from_xz(std::size_t n, const BitVec& row, unsigned sign_flip) {
  BitVec x(n), z(n);
  for (std::size_t q = 0; q < n; ++q) {
    x.set(q, row.get(q));
    z.set(q, row.get(n + q));
  }
  Pauli p(n, x, z, 0);
  p = p.positive_hermitian();
  return p.with_phase(p.phase_exp() + 2 * sign_flip);
}

/// Reduced echelon form over the 2n-column check matrix with the row
/// operations mirrored as Pauli multiplications (valid for commuting rows).
std::vector<Pauli> canonical_rref(std::size_t n, std::vector<Pauli> gens) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < 2 * n && pivot_row < gens.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < gens.size() && !check_bit(gens[sel], col)) ++sel;
    if (sel == gens.size()) continue;
    std::swap(gens[sel], gens[pivot_row]);
    for (std::size_t r = 0; r < gens.size(); ++r) {
      if (r != pivot_row && check_bit(gens[r], col)) {
        gens[r] = gens[r] * gens[pivot_row];
      }
    }
    ++pivot_row;
  }
  gens.resize(pivot_row);  // dependent rows reduce to identity letters
  return gens;
}

}  // namespace

StabilizerGroup StabilizerGroup::from_generators(std::size_t n,
                                                 std::vector<Pauli> gens) {
  if (gens.size() > n) {
    throw std::invalid_argument("StabilizerGroup: more than n generators");
  }
  for (const auto& g : gens) {
    if (g.num_qubits() != n) {
      throw std::invalid_argument("StabilizerGroup: qubit count mismatch");
    }
    if (!g.is_hermitian()) {
      throw std::invalid_argument("StabilizerGroup: non-Hermitian generator " +
                                  g.to_string());
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!gens[i].commutes_with(gens[j])) {
        throw std::invalid_argument("StabilizerGroup: generators " +
                                    gens[i].to_string() + " and " +
                                    gens[j].to_string() + " anticommute");
      }
    }
  }
  std::size_t k = gens.size();
  auto canonical = canonical_rref(n, std::move(gens));
  if (canonical.size() != k) {
    throw std::invalid_argument("StabilizerGroup: dependent generators");
  }
  // Independence plus Hermitian signs rule out -I; as a belt check, no
  // canonical row may have identity letters.
  for (const auto& g : canonical) {
    if (g.is_identity_letters()) {
      throw std::invalid_argument("StabilizerGroup: +/-I generator");
    }
  }
  return StabilizerGroup(n, std::move(canonical));
}

StabilizerGroup StabilizerGroup::zero_state(std::size_t n) {
  std::vector<Pauli> gens;
  gens.reserve(n);
  for (std::size_t q = 0; q < n; ++q) {
    gens.push_back(Pauli::single(n, q, 'Z'));
  }
  return StabilizerGroup(n, std::move(gens));
}

BinaryMatrix StabilizerGroup::check_matrix() const {
  BinaryMatrix m(0, 2 * n_);
  for (const auto& g : gens_) {
    m.append_row(xz_row(g));
  }
  return m;
}

std::vector<Pauli> StabilizerGroup::elements() const {
  std::vector<Pauli> out;
  out.reserve(std::size_t{1} << gens_.size());
  out.push_back(Pauli::identity(n_));
  // Gray-code walk: each step multiplies by a single generator.
  Pauli cur = Pauli::identity(n_);
  std::size_t prev_gray = 0;
  for (std::size_t i = 1; i < (std::size_t{1} << gens_.size()); ++i) {
    std::size_t gray = i ^ (i >> 1);
    std::size_t flipped = std::countr_zero(gray ^ prev_gray);
    cur = cur * gens_[flipped];
    prev_gray = gray;
    out.push_back(cur);
  }
  return out;
}

Pauli StabilizerGroup::element_for(const BitVec& xz) const {
  BinaryMatrix a = check_matrix().transpose();  // 2n x k
  auto combo = solve_linear(a, xz);
  if (!combo) {
    throw std::invalid_argument("element_for: letters not in group");
  }
  Pauli out = Pauli::identity(n_);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (combo->get(i)) out = out * gens_[i];
  }
  return out;
}

bool StabilizerGroup::letters_in_group(const BitVec& xz) const {
  return check_matrix().in_row_span(xz);
}

StabilizerGroup StabilizerGroup::conjugated(const CliffordCircuit& c) const {
  std::vector<Pauli> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) {
    gens.push_back(conjugate(c, g));
  }
  return from_generators(n_, std::move(gens));
}

bool StabilizerGroup::operator<(const StabilizerGroup& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return std::lexicographical_compare(gens_.begin(), gens_.end(),
                                      o.gens_.begin(), o.gens_.end());
}

StabilizerGroup StabilizerGroup::read(std::istream& in,
                                      std::size_t expected_n) {
  std::vector<Pauli> gens;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    gens.push_back(Pauli::parse(line));
  }
  if (gens.empty()) {
    throw std::runtime_error("stabilizer group file: no generators");
  }
  std::size_t n = expected_n ? expected_n : gens.front().num_qubits();
  return from_generators(n, std::move(gens));
}

void StabilizerGroup::write(std::ostream& out) const {
  for (const auto& g : gens_) {
    out << g.to_string() << '\n';
  }
}

// ---------------------------------------------------------------------------
// Enumeration of pure stabilizer states.
//
// States correspond bijectively to (maximal isotropic subspace of F2^{2k},
// sign vector on the subspace's canonical generators). Subspaces are built
// level by level — extend each isotropic subspace by every commuting vector
// outside its span, deduplicating on the reduced echelon form — which makes
// the count exact and the output order deterministic.
// ---------------------------------------------------------------------------

namespace {

using Row = std::uint32_t;  // 2k bits: bits 0..k-1 = x, bits k..2k-1 = z

Row swap_halves(Row v, std::size_t k) {
  Row lo = v & ((Row{1} << k) - 1);
  return static_cast<Row>((v >> k) | (lo << k));
}

bool sym_orthogonal(Row a, Row b, std::size_t k) {
  return (std::popcount(a & swap_halves(b, k)) & 1) == 0;
}

std::vector<Row> rref_rows(std::vector<Row> rows) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < 32 && pivot_row < rows.size(); ++col) {
    Row mask = Row{1} << col;
    std::size_t sel = pivot_row;
    while (sel < rows.size() && !(rows[sel] & mask)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[pivot_row]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != pivot_row && (rows[r] & mask)) rows[r] ^= rows[pivot_row];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

bool in_span(const std::vector<Row>& rref, Row v) {
  for (Row r : rref) {
    Row pivot = r & (~r + 1);  // lowest set bit
    if (v & pivot) v ^= r;
  }
  return v == 0;
}

}  // namespace

std::vector<StabilizerGroup> enumerate_pure_states(std::size_t k,
                                                   std::size_t cutoff) {
  if (k > cutoff) {
    throw std::length_error("enumerate_pure_states: k exceeds cutoff");
  }
  if (k == 0 || k > 15) {
    throw std::invalid_argument("enumerate_pure_states: unsupported k");
  }
  std::set<std::vector<Row>> level;
  level.insert(std::vector<Row>{});
  for (std::size_t depth = 0; depth < k; ++depth) {
    std::set<std::vector<Row>> next;
    Row max_v = static_cast<Row>((std::uint64_t{1} << (2 * k)) - 1);
    for (const auto& rows : level) {
      for (Row v = 1; v <= max_v; ++v) {
        bool ok = true;
        for (Row r : rows) {
          if (!sym_orthogonal(r, v, k)) {
            ok = false;
            break;
          }
        }
        if (!ok || in_span(rows, v)) continue;
        auto ext = rows;
        ext.push_back(v);
        next.insert(rref_rows(std::move(ext)));
      }
    }
    level = std::move(next);
  }

  std::vector<StabilizerGroup> states;
  for (const auto& rows : level) {
    for (std::size_t signs = 0; signs < (std::size_t{1} << k); ++signs) {
      std::vector<Pauli> gens;
      gens.reserve(k);
      for (std::size_t i = 0; i < k; ++i) {
        BitVec row(2 * k);
        for (std::size_t b = 0; b < 2 * k; ++b) {
          row.set(b, (rows[i] >> b) & 1);
        }
        gens.push_back(pauli_from_xz(k, row, (signs >> i) & 1));
      }
      states.push_back(StabilizerGroup::from_generators(k, std::move(gens)));
    }
  }
  std::sort(states.begin(), states.end());
  return states;
}

// ---------------------------------------------------------------------------
// Dense synthesis.
// ---------------------------------------------------------------------------

CVec to_dense(const StabilizerGroup& g, std::size_t cutoff) {
  if (g.num_qubits() > cutoff) {
    throw std::length_error("to_dense: qubit count exceeds dense cutoff");
  }
  if (!g.full_rank()) {
    throw std::invalid_argument("to_dense: group is not full rank");
  }
  std::size_t dim = std::size_t{1} << g.num_qubits();
  for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
    // Deterministic pseudo-random start vector, projected onto the code line.
    CounterRng rng(0x57ab1e5eed ^ attempt, attempt);
    CVec v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      v(i) = std::complex<double>(rng.uniform() - 0.5, rng.uniform() - 0.5);
    }
    for (const auto& gen : g.generators()) {
      v = 0.5 * (v + dense::apply_pauli(gen, v));
    }
    double norm = v.norm();
    if (norm < 1e-9) continue;
    v /= norm;
    for (std::size_t i = 0; i < dim; ++i) {
      if (std::abs(v(i)) > 1e-9) {
        v *= std::conj(v(i)) / std::abs(v(i));
        break;
      }
    }
    return v;
  }
  throw std::runtime_error("to_dense: projection kept vanishing");
}

CMat code_projector(const StabilizerGroup& g, std::size_t cutoff) {
  if (g.num_qubits() > cutoff) {
    throw std::length_error("code_projector: qubit count exceeds cutoff");
  }
  std::size_t dim = std::size_t{1} << g.num_qubits();
  CMat p = CMat::Identity(dim, dim);
  for (const auto& gen : g.generators()) {
    for (std::size_t col = 0; col < dim; ++col) {
      CVec c = p.col(col);
      p.col(col) = 0.5 * (c + dense::apply_pauli(gen, c));
    }
  }
  return p;
}

CMat mixed_to_dense(const MixedStabilizerState& s, std::size_t cutoff) {
  if (s.terms.empty()) {
    throw std::invalid_argument("mixed_to_dense: empty state");
  }
  std::size_t dim = std::size_t{1} << s.terms.front().second.num_qubits();
  CMat rho = CMat::Zero(dim, dim);
  for (const auto& [w, group] : s.terms) {
    CVec psi = to_dense(group, cutoff);
    rho += w * (psi * psi.adjoint());
  }
  return rho;
}

double overlap_magnitude(const StabilizerGroup& g1,
                         const StabilizerGroup& g2) {
  if (g1.num_qubits() != g2.num_qubits()) {
    throw std::invalid_argument("overlap_magnitude: qubit count mismatch");
  }
  if (!g1.full_rank() || !g2.full_rank()) {
    throw std::invalid_argument("overlap_magnitude: rank-deficient group");
  }
  std::size_t n = g1.num_qubits();
  // Stack both check matrices; left-kernel vectors (a|b) identify common
  // letter patterns v = a.G1 = b.G2 of the two groups.
  BinaryMatrix stacked(0, 2 * n);
  for (const auto& g : g1.generators()) stacked.append_row(xz_row(g));
  for (const auto& g : g2.generators()) stacked.append_row(xz_row(g));
  BinaryMatrix left_kernel = stacked.transpose().kernel_basis();
  std::size_t dim_common = left_kernel.rows();
  for (std::size_t i = 0; i < dim_common; ++i) {
    BitVec v(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      if (left_kernel.get(i, j)) v ^= xz_row(g1.generators()[j]);
    }
    Pauli p1 = g1.element_for(v);
    Pauli p2 = g2.element_for(v);
    if (p1.phase_exp() != p2.phase_exp()) {
      return 0.0;  // sign conflict on a common element
    }
  }
  // |<zeta|xi>|^2 = 2^{dim_common - n}
  return std::pow(2.0, -0.5 * static_cast<double>(n - dim_common));
}

std::vector<Pauli> subgroup_on(const StabilizerGroup& g,
                               const std::vector<std::size_t>& qubits,
                               const Pauli& p) {
  std::size_t n = g.num_qubits();
  if (p.num_qubits() != n) {
    throw std::invalid_argument("subgroup_on: P qubit count mismatch");
  }
  std::vector<bool> in_a(n, false);
  for (auto q : qubits) in_a.at(q) = true;
  std::vector<std::size_t> outside;
  for (std::size_t q = 0; q < n; ++q) {
    if (!in_a[q]) outside.push_back(q);
  }
  std::size_t k = g.rank();
  // Combination c of generators matches P's letters outside A iff E c = b.
  BinaryMatrix e(2 * outside.size(), k);
  BitVec b(2 * outside.size());
  for (std::size_t row = 0; row < outside.size(); ++row) {
    std::size_t q = outside[row];
    for (std::size_t i = 0; i < k; ++i) {
      e.set(2 * row, i, g.generators()[i].x_bit(q));
      e.set(2 * row + 1, i, g.generators()[i].z_bit(q));
    }
    b.set(2 * row, p.x_bit(q));
    b.set(2 * row + 1, p.z_bit(q));
  }
  auto particular = solve_linear(e, b);
  if (!particular) return {};
  BinaryMatrix ker = e.kernel_basis();
  std::vector<Pauli> out;
  Pauli base = Pauli::identity(n);
  for (std::size_t i = 0; i < k; ++i) {
    if (particular->get(i)) base = base * g.generators()[i];
  }
  std::vector<Pauli> ker_elems;
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    Pauli el = Pauli::identity(n);
    for (std::size_t j = 0; j < k; ++j) {
      if (ker.get(i, j)) el = el * g.generators()[j];
    }
    ker_elems.push_back(el);
  }
  std::size_t count = std::size_t{1} << ker_elems.size();
  Pauli cur = base;
  std::size_t prev_gray = 0;
  out.push_back(cur.restricted(qubits));
  for (std::size_t i = 1; i < count; ++i) {
    std::size_t gray = i ^ (i >> 1);
    cur = cur * ker_elems[std::countr_zero(gray ^ prev_gray)];
    prev_gray = gray;
    out.push_back(cur.restricted(qubits));
  }
  std::sort(out.begin(), out.end());
  return out;
}

MixedStabilizerState reduced_state(const StabilizerGroup& g,
                                   const std::vector<std::size_t>& qubits) {
  if (!g.full_rank()) {
    throw std::invalid_argument("reduced_state: group is not full rank");
  }
  std::size_t a = qubits.size();
  auto elems = subgroup_on(g, qubits, Pauli::identity(g.num_qubits()));

  // Independent generating subset of G_A.
  BinaryMatrix span(0, 2 * a);
  std::vector<Pauli> gens_a;
  for (const auto& el : elems) {
    if (el.is_identity_letters()) continue;
    BitVec row = xz_row(el);
    if (!span.in_row_span(row)) {
      span.append_row(row);
      gens_a.push_back(el);
    }
  }
  std::size_t s = gens_a.size();

  // Complete to a full-rank group: repeatedly adjoin a vector from the
  // centralizer of the current rows that is outside their span (exists
  // whenever the isotropic span is not yet maximal).
  std::vector<Pauli> logicals;
  BinaryMatrix rows = span;
  while (s + logicals.size() < a) {
    BinaryMatrix sym_rows(0, 2 * a);
    for (std::size_t i = 0; i < rows.rows(); ++i) {
      BitVec r = rows.row(i);
      BitVec swapped(2 * a);
      for (std::size_t q = 0; q < a; ++q) {
        swapped.set(q, r.get(a + q));
        swapped.set(a + q, r.get(q));
      }
      sym_rows.append_row(swapped);
    }
    BinaryMatrix kernel = rows.rows() == 0
                              ? BinaryMatrix(2 * a, 2 * a).kernel_basis()
                              : sym_rows.kernel_basis();
    bool found = false;
    for (std::size_t i = 0; i < kernel.rows(); ++i) {
      if (!rows.in_row_span(kernel.row(i))) {
        logicals.push_back(pauli_from_xz(a, kernel.row(i), 0));
        rows.append_row(kernel.row(i));
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::logic_error("reduced_state: isotropic completion failed");
    }
  }

  std::size_t r = a - s;
  MixedStabilizerState out;
  double weight = std::pow(2.0, -static_cast<double>(r));
  for (std::size_t x = 0; x < (std::size_t{1} << r); ++x) {
    std::vector<Pauli> gens = gens_a;
    for (std::size_t i = 0; i < r; ++i) {
      unsigned flip = (x >> i) & 1;
      gens.push_back(
          logicals[i].with_phase(logicals[i].phase_exp() + 2 * flip));
    }
    out.terms.emplace_back(weight,
                           StabilizerGroup::from_generators(a, std::move(gens)));
  }
  return out;
}

CliffordCircuit random_clifford_circuit(std::size_t n, std::size_t num_gates,
                                        CounterRng& rng) {
  CliffordCircuit c;
  c.n = n;
  for (std::size_t i = 0; i < num_gates; ++i) {
    std::uint64_t kind = rng.below(n >= 2 ? 3 : 2);
    std::size_t q = rng.below(n);
    if (kind == 0) {
      c.gates.push_back(CliffordGate::hadamard(q));
    } else if (kind == 1) {
      c.gates.push_back(CliffordGate::phase(q));
    } else {
      std::size_t t = rng.below(n - 1);
      if (t >= q) ++t;
      c.gates.push_back(CliffordGate::cnot(q, t));
    }
  }
  return c;
}

StabilizerGroup random_stabilizer_group(std::size_t n, CounterRng& rng) {
  auto c = random_clifford_circuit(n, 3 * n * n + 8, rng);
  return StabilizerGroup::zero_state(n).conjugated(c);
}

Pauli random_hermitian_pauli(std::size_t n, CounterRng& rng) {
  BitVec x(n), z(n);
  for (std::size_t q = 0; q < n; ++q) {
    x.set(q, rng.coin());
    z.set(q, rng.coin());
  }
  Pauli p(n, x, z, 0);
  p = p.positive_hermitian();
  if (rng.coin()) p = p.with_phase(p.phase_exp() + 2);
  return p;
}

}  // namespace nlcs
