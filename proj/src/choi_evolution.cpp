#include "qtorus/choi_evolution.hpp"

#include <cmath>
#include <sstream>

#include "qtorus/errors.hpp"

namespace qtorus {

namespace {

// Least-squares slope of y over x = 0,1,...,m-1 (callers pass a window of
// consecutive steps).
double ls_slope(const double* y, int m) {
  if (m < 2) return 0.0;
  const double x_mean = (m - 1) / 2.0;
  double y_mean = 0.0;
  for (int i = 0; i < m; ++i) y_mean += y[i];
  y_mean /= m;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < m; ++i) {
    num += (i - x_mean) * (y[i] - y_mean);
    den += (i - x_mean) * (i - x_mean);
  }
  return num / den;
}

}  // namespace

ChoiState ChoiState::initial(int dim) {
  if (dim < 2) {
    throw ConfigError("Choi state requires N >= 2");
  }
  if (dim > kChoiDimCeiling) {
    std::ostringstream msg;
    msg << "entropy evolution is capped at N=" << kChoiDimCeiling
        << " (dense N^2 x N^2 state); requested N=" << dim;
    throw ResourceLimit(msg.str());
  }
  const long nn = static_cast<long>(dim) * dim;
  MatrixC m = MatrixC::Zero(nn, nn);
  const double v = 1.0 / dim;
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      m(static_cast<long>(a) * dim + a, static_cast<long>(b) * dim + b) = v;
    }
  }
  return ChoiState(dim, std::move(m));
}

std::complex<double> ChoiState::trace() const { return matrix_.trace(); }

double ChoiState::linear_entropy() const { return -std::log(purity()); }

void ChoiState::apply_unitary_step(const QuantizedMap& u) {
  if (u.dim() != dim_) {
    throw ConfigError("unitary dimension does not match the Choi state");
  }
  apply_unitary_step(u.matrix());
}

void ChoiState::apply_unitary_step(const MatrixC& u) {
  const int n = dim_;
  const long nn = static_cast<long>(n) * n;
  // Left factor (U (x) 1): each column of the big matrix, reshaped as the
  // N x N block Col(alpha, a), turns into Col * U^T. Column data is
  // contiguous, so the reshape is free.
  const MatrixC ut = u.transpose();
  MatrixC tmp(n, n);
  for (long c = 0; c < nn; ++c) {
    Eigen::Map<MatrixC> col(matrix_.data() + c * nn, n, n);
    tmp.noalias() = col * ut;
    col = tmp;
  }
  // Right factor (U^dag (x) 1): for each ancilla column index beta, the
  // N^2 x N slice of columns (b, beta), b = 0..N-1, maps to Slice * U^dag.
  const MatrixC ua = u.adjoint();
  MatrixC slice_tmp(nn, n);
  for (int beta = 0; beta < n; ++beta) {
    Eigen::Map<MatrixC, 0, Eigen::OuterStride<>> slice(
        matrix_.data() + static_cast<long>(beta) * nn, nn, n,
        Eigen::OuterStride<>(static_cast<long>(n) * nn));
    slice_tmp.noalias() = slice * ua;
    slice = slice_tmp;
  }
}

void ChoiState::apply_ancilla_unitary(const MatrixC& v) {
  if (v.rows() != dim_ || v.cols() != dim_) {
    throw ConfigError("ancilla unitary dimension does not match the Choi state");
  }
  const int n = dim_;
  const long nn = static_cast<long>(n) * n;
  // (1 (x) V): per column, Col(alpha, a) -> V * Col.
  MatrixC tmp(n, n);
  for (long c = 0; c < nn; ++c) {
    Eigen::Map<MatrixC> col(matrix_.data() + c * nn, n, n);
    tmp.noalias() = v * col;
    col = tmp;
  }
  // (1 (x) V^dag): columns (b, beta) for fixed b are contiguous.
  const MatrixC va = v.adjoint();
  MatrixC block_tmp(nn, n);
  for (int b = 0; b < n; ++b) {
    auto block = matrix_.middleCols(static_cast<long>(b) * n, n);
    block_tmp.noalias() = block * va;
    block = block_tmp;
  }
}

void ChoiState::apply_measurement_step(const Partition& p) {
  if (p.dim() != dim_) {
    throw ConfigError("partition dimension does not match the Choi state");
  }
  const int n = dim_;
  const long nn = static_cast<long>(n) * n;
  // Entry ((a,alpha),(b,beta)) survives iff block(a) == block(b). Because
  // the composite index is a*N+alpha, the rows with a in [lo,hi) form the
  // contiguous range [lo*N, hi*N), so the update is a handful of zero-fills.
  for (int j = 0; j < p.block_count(); ++j) {
    const long lo = static_cast<long>(p.block_begin(j)) * n;
    const long hi = static_cast<long>(p.block_end(j)) * n;
    auto cols = matrix_.middleCols(lo, hi - lo);
    if (lo > 0) cols.topRows(lo).setZero();
    if (hi < nn) cols.bottomRows(nn - hi).setZero();
  }
  ++step_count_;
}

void ChoiState::resymmetrize() {
  MatrixC adj = matrix_.adjoint();
  matrix_ = 0.5 * (matrix_ + adj);
}

bool ChoiState::Validation::ok(double herm_tol, double trace_tol, double psd_tol) const {
  if (hermiticity_deviation > herm_tol) return false;
  if (trace_deviation > trace_tol) return false;
  if (psd_checked && min_eigenvalue < -psd_tol) return false;
  return true;
}

ChoiState::Validation ChoiState::validate(int psd_dim_limit) const {
  Validation v;
  v.hermiticity_deviation = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  v.trace_deviation = std::abs(matrix_.trace() - std::complex<double>(1.0, 0.0));
  if (dim_ <= psd_dim_limit) {
    Eigen::SelfAdjointEigenSolver<MatrixC> solver(matrix_, Eigen::EigenvaluesOnly);
    v.min_eigenvalue = solver.eigenvalues().minCoeff();
    v.psd_checked = true;
  }
  return v;
}

EntropySeries entropy_series(const QuantizedMap& u, const Partition& p, int n_max) {
  if (n_max < 1) {
    throw ConfigError("entropy series needs n_max >= 1");
  }
  if (u.dim() != p.dim()) {
    throw ConfigError("map and partition dimensions differ");
  }
  EntropySeries series;
  series.dim = u.dim();
  series.kind = u.kind();
  series.partition_spec = p.spec_string();
  series.block_count = p.block_count();
  series.h_meas = p.measurement_entropy();
  series.ln_k = std::log(static_cast<double>(p.block_count()));
  const double sat = series.saturation_bound();

  ChoiState state = ChoiState::initial(u.dim());
  series.values.push_back(0.0);
  series.bound.push_back(0.0);
  for (int n = 1; n <= n_max; ++n) {
    state.apply_unitary_step(u);
    state.apply_measurement_step(p);
    if (n % 4 == 0) {
      state.resymmetrize();
    }
    const double drift = std::abs(state.trace() - std::complex<double>(1.0, 0.0));
    if (drift > 1e-8) {
      std::ostringstream msg;
      msg << "trace drift " << drift << " after step " << n << " (map "
          << to_string(u.kind()) << ", N=" << u.dim() << ", partition "
          << p.spec_string() << ")";
      throw InvariantViolation(msg.str());
    }
    series.values.push_back(state.linear_entropy());
    series.bound.push_back(std::min(n * series.ln_k, sat));
  }

  series.slope.assign(series.values.size(), 0.0);
  const int w = series.slope_window_points;
  for (int n = 1; n <= n_max; ++n) {
    const int start = std::max(0, n - (w - 1));
    series.slope[n] = ls_slope(series.values.data() + start, n - start + 1);
  }
  return series;
}

}  // namespace qtorus
