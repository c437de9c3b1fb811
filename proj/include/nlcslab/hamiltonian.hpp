#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "nlcslab/codes.hpp"
#include "nlcslab/dense.hpp"
#include "nlcslab/pauli.hpp"
#include "nlcslab/stabilizer.hpp"

namespace nlcs {

inline constexpr double kPi = 3.14159265358979323846;
/// sin^2(pi/8), the single-term energy floor for odd-weight generators.
double sin2_pi8();

/// H = (1/m) sum_i Pi~_{S_i} with Pi~_S = D†^{(x)n} ((I-S)/2) D^{(x)n},
/// D = e^{-i theta Y}. theta = 0 recovers the unrotated stabilizer
/// Hamiltonian.
struct CssHamiltonian {
  std::size_t n = 0;
  std::vector<Pauli> terms;  // Hermitian; X-type or Z-type for CSS
  double theta = kPi / 8;

  std::size_t locality() const;  // max term weight

  /// One X-type term per row of H_X, one Z-type per row of H_Z. Throws
  /// unless the pair's CSS condition holds or allow_violations is set.
  static CssHamiltonian from_css_pair(const CssCodePair& c, double theta,
                                      bool allow_violations = false);

  /// The paper's H0: Z_i on every qubit, at the given rotation angle.
  static CssHamiltonian h0(std::size_t n, double theta);

  /// Header "n theta", then one Pauli term per line.
  static CssHamiltonian read(std::istream& in);
  void write(std::ostream& out) const;
};

/// Pi~ restricted to the support of S: D†^{(x)wt} ((I - S|supp)/2) D^{(x)wt}.
CMat rotated_local_term(const Pauli& s, double theta,
                        std::size_t cutoff = kDefaultDenseCutoff);

/// (1/m) sum <psi| Pi~_i |psi>, each term evaluated on its support via the
/// reduced dense state. Throws on unnormalized input.
double energy_dense(const CVec& psi, const CssHamiltonian& h);

double energy_stabilizer(const StabilizerGroup& g, const CssHamiltonian& h,
                         std::size_t cutoff = kDefaultDenseCutoff);
double energy_stabilizer(const MixedStabilizerState& s,
                         const CssHamiltonian& h,
                         std::size_t cutoff = kDefaultDenseCutoff);

struct MinEnergyResult {
  double value = 0;
  StabilizerGroup argmin;  // lexicographically smallest canonical form
};

/// Exact minimum over all pure n-qubit stabilizer states (sufficient for
/// mixed states by convexity).
MinEnergyResult min_energy_over_stabilizers(
    const CssHamiltonian& h, std::size_t enum_cutoff = kDefaultEnumCutoff);

struct LocalBoundRow {
  std::size_t k = 0;
  char type = 'X';  // X-bar or Z-bar term
  double min_energy = 0;
};

/// Exhaustive minima of <Pi~_{X-bar}> and <Pi~_{Z-bar}> over all k-qubit
/// stabilizer states, k = 1..k_max.
std::vector<LocalBoundRow> local_bound_table(
    std::size_t k_max, double theta,
    std::size_t enum_cutoff = kDefaultEnumCutoff);

struct NlcsCertificate {
  Fraction alpha;     // odd-weight fraction of the terms
  double epsilon = 0; // alpha * sin^2(pi/8)
};

/// Theorem 3.1 certificate. Throws if any term mixes X and Z letters.
NlcsCertificate nlcs_certificate(const CssHamiltonian& h);

/// Sorted spectra of H and C† H C agree within tol (Lemma 2.2 core).
bool spectrum_conjugation_check(const CssHamiltonian& h,
                                const CliffordCircuit& c, double tol = 1e-9,
                                std::size_t cutoff = kDefaultDenseCutoff);
bool spectrum_conjugation_check(const CssHamiltonian& h, const CMat& unitary,
                                double tol = 1e-9,
                                std::size_t cutoff = kDefaultDenseCutoff);

/// Full 2^n x 2^n matrix of H (dense oracle path).
CMat hamiltonian_matrix(const CssHamiltonian& h,
                        std::size_t cutoff = kDefaultDenseCutoff);

/// Deterministic pairwise summation, independent of evaluation order used by
/// callers that parallelize over terms.
double pairwise_sum(std::vector<double> values);

}  // namespace nlcs
