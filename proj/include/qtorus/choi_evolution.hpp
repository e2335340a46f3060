#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "qtorus/measurement.hpp"
#include "qtorus/torus_maps.hpp"

namespace qtorus {

// Documented ceiling for system+ancilla evolution; the state is a dense
// N^2 x N^2 complex matrix (N=64 -> ~268 MB).
inline constexpr int kChoiDimCeiling = 64;

// The system+ancilla state Omega[n], an N^2 x N^2 density matrix stored with
// composite row index (a,alpha) = a*N + alpha and column index (b,beta) =
// b*N + beta, where a,b are system and alpha,beta ancilla indices.
class ChoiState {
 public:
  // The maximally entangled start |Psi><Psi| with
  // |Psi> = N^{-1/2} sum_l |l> (x) |l>: entries delta_{a,alpha}
  // delta_{b,beta} / N. Rejects N < 2 and N > kChoiDimCeiling.
  static ChoiState initial(int dim);

  int dim() const { return dim_; }
  int step_count() const { return step_count_; }
  const MatrixC& matrix() const { return matrix_; }

  std::complex<double> trace() const;
  // Tr Omega^2 as the squared Frobenius norm of the Hermitian matrix.
  double purity() const { return matrix_.squaredNorm(); }
  // I = -ln Tr Omega^2.
  double linear_entropy() const;

  // Omega <- (U (x) 1) Omega (U^dag (x) 1); two tensor contractions over the
  // system indices only, O(N^5).
  void apply_unitary_step(const QuantizedMap& u);
  void apply_unitary_step(const MatrixC& u);

  // Omega <- sum_k (P_k (x) 1) Omega (P_k (x) 1); with diagonal-block
  // projectors this zeroes every entry whose system row block differs from
  // its system column block, O(N^4), no matrix products. Increments the
  // step counter.
  void apply_measurement_step(const Partition& p);

  // Omega <- (1 (x) V) Omega (1 (x) V^dag); used by basis-independence checks.
  void apply_ancilla_unitary(const MatrixC& v);

  // Omega <- (Omega + Omega^dag)/2, suppresses floating-point drift.
  void resymmetrize();

  struct Validation {
    double hermiticity_deviation = 0.0;  // max |Omega - Omega^dag|
    double trace_deviation = 0.0;        // |Tr Omega - 1|
    double min_eigenvalue = 0.0;         // only computed when psd_checked
    bool psd_checked = false;
    bool ok(double herm_tol = 1e-12, double trace_tol = 1e-10,
            double psd_tol = 1e-8) const;
  };
  // PSD check costs an N^2-dimensional eigensolve and is only run for
  // dim <= psd_dim_limit.
  Validation validate(int psd_dim_limit = 16) const;

 private:
  ChoiState(int dim, MatrixC m) : dim_(dim), matrix_(std::move(m)) {}

  int dim_;
  int step_count_ = 0;
  MatrixC matrix_;
};

// The linear-entropy trajectory of one measured-evolution run.
struct EntropySeries {
  int dim = 0;
  MapKind kind = MapKind::cat;
  std::string partition_spec;
  int block_count = 0;
  double h_meas = 0.0;
  double ln_k = 0.0;
  // values[n] = I[n] for n = 0..n_max, recorded after the measurement
  // half-step of step n.
  std::vector<double> values;
  // bound[n] = min(n ln K, 2 ln N).
  std::vector<double> bound;
  // slope[n]: least-squares slope over the trailing window of up to
  // slope_window_points points ending at n (slope[0] = 0).
  std::vector<double> slope;
  int slope_window_points = 3;

  double saturation_bound() const { return 2.0 * std::log(static_cast<double>(dim)); }
};

// Alternates apply_unitary_step / apply_measurement_step from the maximally
// entangled start and records I[n] after each measurement. Aborts with
// InvariantViolation if the trace drifts by more than 1e-8; the state is
// re-symmetrized every 4 steps.
EntropySeries entropy_series(const QuantizedMap& u, const Partition& p, int n_max);

}  // namespace qtorus
