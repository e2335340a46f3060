#include "qtorus/gram_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qtorus/errors.hpp"

namespace qtorus {

namespace {

long checked_path_count(const Partition& p, int n) {
  if (n < 0) {
    throw ConfigError("path word length must be >= 0");
  }
  long count = 1;
  for (int i = 0; i < n; ++i) {
    count *= p.block_count();
    if (count > kMaxKrausPaths) {
      std::ostringstream msg;
      msg << "K^n = " << p.block_count() << "^" << n << " exceeds the oracle cap of "
          << kMaxKrausPaths << " paths";
      throw ResourceLimit(msg.str());
    }
  }
  return count;
}

void validate_density_matrix(const MatrixC& rho, int dim) {
  if (rho.rows() != dim || rho.cols() != dim) {
    throw ConfigError("input state dimension mismatch");
  }
  if (std::abs(rho.trace() - std::complex<double>(1.0, 0.0)) > 1e-8) {
    throw ConfigError("input state must have unit trace");
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-8) {
    throw ConfigError("input state must be Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<MatrixC> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-8) {
    throw ConfigError("input state must be positive semidefinite");
  }
}

}  // namespace

std::vector<MatrixC> kraus_paths(const QuantizedMap& u, const Partition& p, int n) {
  const long total = checked_path_count(p, n);
  const int dim = u.dim();
  const int blocks = p.block_count();
  if (p.dim() != dim) {
    throw ConfigError("map and partition dimensions differ");
  }

  std::vector<MatrixC> level;
  level.emplace_back(MatrixC::Identity(dim, dim));
  // Extend breadth-first: K_{p.k} = P_k U K_p. The multi-index is linearized
  // with the first letter fastest, so level l+1 slot (idx + k K^l) extends
  // level l slot idx.
  for (int step = 0; step < n; ++step) {
    const long width = static_cast<long>(level.size());
    std::vector<MatrixC> next(width * blocks);
    for (long idx = 0; idx < width; ++idx) {
      const MatrixC stepped = u.matrix() * level[idx];
      for (int k = 0; k < blocks; ++k) {
        // P_k applied on the left keeps only the block-k rows.
        MatrixC masked = MatrixC::Zero(dim, dim);
        masked.middleRows(p.block_begin(k), p.block_size(k)) =
            stepped.middleRows(p.block_begin(k), p.block_size(k));
        next[idx + static_cast<long>(k) * width] = std::move(masked);
      }
    }
    level = std::move(next);
  }
  (void)total;
  return level;
}

GramMatrix gram_matrix(const QuantizedMap& u, const Partition& p, int n) {
  const std::vector<MatrixC> paths = kraus_paths(u, p, n);
  const long count = static_cast<long>(paths.size());
  const long nn = static_cast<long>(u.dim()) * u.dim();

  // D = (1/N) M^dag M with M the matrix of vectorized path operators.
  MatrixC stacked(nn, count);
  for (long i = 0; i < count; ++i) {
    stacked.col(i) = Eigen::Map<const Eigen::VectorXcd>(paths[i].data(), nn);
  }
  GramMatrix gram;
  gram.n = n;
  gram.block_count = p.block_count();
  gram.d = (stacked.adjoint() * stacked) / static_cast<double>(u.dim());
  return gram;
}

double purity_from_gram(const GramMatrix& d) { return d.d.squaredNorm(); }

MaxEnprReport check_max_enpr(const GramMatrix& d, double tol) {
  MaxEnprReport report;
  const long count = d.d.rows();
  double target = 1.0;
  for (int i = 0; i < d.n; ++i) target /= d.block_count;
  for (long col = 0; col < count; ++col) {
    for (long row = 0; row < count; ++row) {
      const double dev = std::abs(d.d(row, col) - (row == col ? target : 0.0));
      if (dev > report.max_deviation) {
        report.max_deviation = dev;
        report.row = row;
        report.col = col;
      }
    }
  }
  report.within_tol = report.max_deviation <= tol;
  return report;
}

MatrixC brute_force_state(const QuantizedMap& u, const Partition& p, int n,
                          const MatrixC& rho0) {
  validate_density_matrix(rho0, u.dim());
  const std::vector<MatrixC> paths = kraus_paths(u, p, n);
  MatrixC out = MatrixC::Zero(u.dim(), u.dim());
  for (const MatrixC& k : paths) {
    out.noalias() += k * rho0 * k.adjoint();
  }
  return out;
}

MatrixC brute_force_choi(const QuantizedMap& u, const Partition& p, int n) {
  const int dim = u.dim();
  const long nn = static_cast<long>(dim) * dim;
  const std::vector<MatrixC> paths = kraus_paths(u, p, n);
  // Omega = (1/N) sum_p w_p w_p^dag with w_p[(x,a)] = (K_p)_{xa} and
  // composite index (x,a) = x*N + a.
  MatrixC omega = MatrixC::Zero(nn, nn);
  for (const MatrixC& k : paths) {
    const MatrixC kt = k.transpose();
    const Eigen::Map<const Eigen::VectorXcd> w(kt.data(), nn);
    omega.noalias() += w * w.adjoint();
  }
  omega /= static_cast<double>(dim);
  return omega;
}

std::vector<double> nonzero_spectrum(const MatrixC& hermitian, double cutoff) {
  Eigen::SelfAdjointEigenSolver<MatrixC> solver(hermitian, Eigen::EigenvaluesOnly);
  std::vector<double> out;
  const auto& vals = solver.eigenvalues();
  for (long i = 0; i < vals.size(); ++i) {
    if (vals[i] > cutoff) {
      out.push_back(vals[i]);
    }
  }
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

}  // namespace qtorus
