#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "nlcslab/f2.hpp"
#include "nlcslab/rng.hpp"

namespace nlcs {

/// Classical linear code C = ker H with a cached generator matrix
/// (H . G^T = 0, generator rows independent).
struct LinearCode {
  BinaryMatrix parity_check;
  BinaryMatrix generator;

  static LinearCode from_parity_check(BinaryMatrix h);
};

/// d-regular multigraph given by per-vertex ordered incidence lists; the
/// stored order of a vertex's edge ids IS the local bit ordering E_v used by
/// Tanner lifts.
struct RegularGraph {
  std::size_t num_vertices = 0;
  std::size_t degree = 0;
  std::vector<std::vector<std::size_t>> incidence;

  std::size_t num_edges() const { return num_vertices * degree / 2; }
  /// Throws std::invalid_argument on inconsistent incidence data.
  void validate() const;

  static RegularGraph complete(std::size_t num_vertices);
  /// Configuration model with rejection of self-loops and multi-edges.
  static RegularGraph random(std::size_t num_vertices, std::size_t degree,
                             CounterRng& rng);

  /// Line 1 = "<num_vertices> <degree>", then one line of d edge ids per
  /// vertex.
  static RegularGraph read(std::istream& in);
  void write(std::ostream& out) const;
};

struct CssCodePair {
  BinaryMatrix h_x;
  BinaryMatrix h_z;
  /// Nonzero entries of H_X . H_Z^T; zero means the CSS condition holds.
  std::size_t css_violations = 0;
};

/// Exact fraction (kept unreduced: odd rows / total rows).
struct Fraction {
  std::size_t num = 0;
  std::size_t den = 1;
  double value() const { return static_cast<double>(num) / den; }
};

/// Parity check of the dual code = generator of C = kernel basis of H.
BinaryMatrix dual_parity_check(const BinaryMatrix& h);

/// h0 (x) h1, the parity check of the dual tensor code C0 [+] C1.
BinaryMatrix dual_tensor_parity_check(const BinaryMatrix& h0,
                                      const BinaryMatrix& h1);

/// Kernel-preserving transform making every row odd: odd rows kept verbatim,
/// each even row replaced by row + (first odd row). Throws std::runtime_error
/// when every row is even.
BinaryMatrix odd_weight_transform(const BinaryMatrix& h);

/// Global parity check of the Tanner code T(G, ker h): one copy of each local
/// row per vertex, placed on that vertex's incident edge columns.
BinaryMatrix tanner_lift(const RegularGraph& g, const BinaryMatrix& h);

Fraction odd_row_fraction(const BinaryMatrix& h);

/// i.i.d. uniform entries from the counter generator; deterministic per seed.
BinaryMatrix sample_random_matrix(std::size_t r, std::size_t d,
                                  std::uint64_t seed);

struct RandomCodeLemmaReport {
  std::size_t r = 0;
  std::size_t d = 0;
  std::size_t trials = 0;
  double odd_row_freq = 0;        // empirical Pr[>= 1 odd row]
  double odd_row_bound = 0;       // 1 - (1/2)^r, exact value
  double ones_in_span_freq = 0;   // empirical Pr[all-ones in row span]
  double ones_in_span_bound = 0;  // (2^r - 1) / 2^d
  bool odd_row_pass = false;      // within 3 sigma of the exact value
  bool ones_in_span_pass = false; // freq <= bound + 3 sigma
  bool rho_warning = false;       // r/d >= 1/2
};

RandomCodeLemmaReport verify_random_code_lemma(std::size_t r, std::size_t d,
                                               std::size_t trials,
                                               std::uint64_t seed);

/// Quantum Tanner assembly: H_X = lift(g, odd(h0 (x) g1)),
/// H_Z = lift(g, odd(g0 (x) h1)) with g_i = dual_parity_check(h_i); the
/// odd transform is skipped when a local matrix has no odd row. The CSS
/// condition is measured, not enforced. Graph degree must equal d^2.
CssCodePair assemble_quantum_tanner(const RegularGraph& g,
                                    const BinaryMatrix& h0,
                                    const BinaryMatrix& h1);

}  // namespace nlcs
