#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qtorus/measurement.hpp"
#include "qtorus/torus_maps.hpp"

namespace qtorus {

// Hard cap on the number of Kraus paths; this module is the brute-force
// reference and never scales past oracle size.
inline constexpr long kMaxKrausPaths = 4096;

// The K^n x K^n correlation matrix D[p;q] = (1/N) Tr(K_q^dag K_p) of the
// Kraus path operators K_p = P_{p_n} U ... P_{p_1} U. Multi-indices are
// linearized lexicographically with p_1 fastest:
// idx(p) = sum_j p_j K^{j-1} (0-based block labels). Hermitian PSD with
// Tr D = 1; its nonzero spectrum coincides with that of Omega[n].
struct GramMatrix {
  int n = 0;
  int block_count = 0;
  MatrixC d;
};

// All K^n path operators for word length n, in multi-index order.
// Built by breadth-first one-step extension K_{p.k} = P_k U K_p.
std::vector<MatrixC> kraus_paths(const QuantizedMap& u, const Partition& p, int n);

GramMatrix gram_matrix(const QuantizedMap& u, const Partition& p, int n);

// Tr D^2 (squared Frobenius norm; D is Hermitian). -ln of it is the
// oracle value for I[n].
double purity_from_gram(const GramMatrix& d);

// How far D is from the maximal-entropy-production prediction
// delta_{pq} / K^n.
struct MaxEnprReport {
  double max_deviation = 0.0;
  long row = 0;
  long col = 0;
  bool within_tol = true;
};

MaxEnprReport check_max_enpr(const GramMatrix& d, double tol = 1e-9);

// Explicit path sum rho(n) = sum_p K_p rho0 K_p^dag for an arbitrary input
// density matrix. Validates rho0 (unit trace, Hermitian, PSD within 1e-8).
MatrixC brute_force_state(const QuantizedMap& u, const Partition& p, int n,
                          const MatrixC& rho0);

// Assembles Omega[n] = sum_p (K_p (x) 1)|Psi><Psi|(K_p^dag (x) 1) explicitly.
// Independent of the ChoiState evolution path; used for cross-checks.
MatrixC brute_force_choi(const QuantizedMap& u, const Partition& p, int n);

// Eigenvalues of a Hermitian matrix that exceed cutoff, sorted descending.
std::vector<double> nonzero_spectrum(const MatrixC& hermitian, double cutoff = 1e-9);

}  // namespace qtorus
