#include "qtorus/torus_maps.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "qtorus/errors.hpp"
#include "qtorus/rng.hpp"

namespace qtorus {

namespace {

constexpr double kUnitarityTol = 1e-10;

// Nonnegative residue of x mod n.
long long pos_mod(long long x, long long n) {
  long long r = x % n;
  return r < 0 ? r + n : r;
}

MatrixC build_cat(int n) {
  // U_{rk} = N^{-1/2} exp{(-2 pi i/N)(r^2 + 2k^2 - kr)}, r,k = 1..N.
  // The exponent is reduced mod N in integer arithmetic so the phase
  // argument stays small and the entries are reproducible bit for bit.
  MatrixC u(n, n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    const long long k = j + 1;
    for (int i = 0; i < n; ++i) {
      const long long r = i + 1;
      const long long e = pos_mod(r * r + 2 * k * k - k * r, n);
      const double angle = -2.0 * M_PI * static_cast<double>(e) / n;
      u(i, j) = std::polar(norm, angle);
    }
  }
  return u;
}

MatrixC build_elliptic(int n) {
  // U_{rk} = sqrt(i/N) exp{(2 pi i/N) rk}, r,k = 1..N, principal root:
  // sqrt(i) = e^{i pi/4}.
  MatrixC u(n, n);
  const std::complex<double> front =
      std::polar(1.0 / std::sqrt(static_cast<double>(n)), M_PI / 4.0);
  for (int j = 0; j < n; ++j) {
    const long long k = j + 1;
    for (int i = 0; i < n; ++i) {
      const long long r = i + 1;
      const long long e = pos_mod(r * k, n);
      u(i, j) = front * std::polar(1.0, 2.0 * M_PI * static_cast<double>(e) / n);
    }
  }
  return u;
}

MatrixC build_shift(int n) {
  // U|r> = |r+1>, |r+N> = |r>: ones on the subdiagonal plus the corner.
  MatrixC u = MatrixC::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    u((i + 1) % n, i) = 1.0;
  }
  return u;
}

MatrixC build_haar(int n, std::uint64_t seed) {
  // Ginibre matrix, then QR with the R diagonal phase absorbed into Q so
  // the distribution is exactly Haar and the result is seed-deterministic.
  Rng rng(mix_seed(seed, 0x68616172ULL));  // tag: "haar"
  MatrixC g(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      g(i, j) = std::complex<double>(rng.normal(), rng.normal());
    }
  }
  Eigen::HouseholderQR<MatrixC> qr(g);
  MatrixC q = qr.householderQ();
  MatrixC r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const std::complex<double> d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0.0) ? d / a : 1.0;
  }
  return q;
}

}  // namespace

std::string to_string(MapKind kind) {
  switch (kind) {
    case MapKind::cat: return "cat";
    case MapKind::elliptic: return "elliptic";
    case MapKind::shift: return "shift";
    case MapKind::haar: return "haar";
  }
  return "?";
}

MapKind map_kind_from_string(const std::string& name) {
  if (name == "cat") return MapKind::cat;
  if (name == "elliptic") return MapKind::elliptic;
  if (name == "shift") return MapKind::shift;
  if (name == "haar") return MapKind::haar;
  throw ConfigError("unknown map kind: " + name);
}

std::string to_string(OrbitClass c) {
  switch (c) {
    case OrbitClass::hyperbolic: return "hyperbolic";
    case OrbitClass::elliptic: return "elliptic";
    case OrbitClass::parabolic: return "parabolic";
  }
  return "?";
}

TorusAutomorphism classify_automorphism(long long t11, long long t12, long long t21,
                                        long long t22) {
  TorusAutomorphism t{t11, t12, t21, t22, OrbitClass::parabolic, 0.0};
  if (t.det() != 1) {
    std::ostringstream msg;
    msg << "not a torus automorphism: det = " << t.det() << " (must be 1)";
    throw ConfigError(msg.str());
  }
  const long long tr = t.trace();
  const long long abs_tr = tr < 0 ? -tr : tr;
  if (abs_tr > 2) {
    t.classification = OrbitClass::hyperbolic;
    const double at = static_cast<double>(abs_tr);
    // ln lambda_+ with lambda_+ the larger eigenvalue modulus.
    t.ks_entropy = std::log((at + std::sqrt(at * at - 4.0)) / 2.0);
  } else if (abs_tr < 2) {
    t.classification = OrbitClass::elliptic;
  } else {
    t.classification = OrbitClass::parabolic;
  }
  return t;
}

std::optional<TorusAutomorphism> reference_automorphism(MapKind kind) {
  switch (kind) {
    case MapKind::cat: return classify_automorphism(2, 7, 1, 4);
    case MapKind::elliptic: return classify_automorphism(0, 1, -1, 0);
    default: return std::nullopt;
  }
}

double unitarity_deviation(const MatrixC& u) {
  const long n = u.rows();
  MatrixC gram = u.adjoint() * u;
  gram -= MatrixC::Identity(n, n);
  return gram.cwiseAbs().maxCoeff();
}

QuantizedMap::QuantizedMap(MapKind kind, MatrixC matrix)
    : dim_(static_cast<int>(matrix.rows())),
      kind_(kind),
      matrix_(std::move(matrix)),
      cache_(std::make_unique<PowerCache>()) {
  if (dim_ < 2 || matrix_.cols() != dim_) {
    throw ConfigError("quantized map must be a square matrix with N >= 2");
  }
  const double dev = unitarity_deviation(matrix_);
  if (dev > kUnitarityTol) {
    std::ostringstream msg;
    msg << to_string(kind_) << " map at N=" << dim_
        << " failed the unitarity check: max |U^dag U - 1| = " << dev;
    throw InvariantViolation(msg.str());
  }
}

QuantizedMap QuantizedMap::build(MapKind kind, int dim, std::uint64_t seed) {
  if (dim < 2) {
    throw ConfigError("quantized map dimension must be >= 2");
  }
  switch (kind) {
    case MapKind::cat: return QuantizedMap(kind, build_cat(dim));
    case MapKind::elliptic: return QuantizedMap(kind, build_elliptic(dim));
    case MapKind::shift: return QuantizedMap(kind, build_shift(dim));
    case MapKind::haar: return QuantizedMap(kind, build_haar(dim, seed));
  }
  throw ConfigError("unknown map kind");
}

const MatrixC& QuantizedMap::power(long long r) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto it = cache_->powers.find(r);
  if (it != cache_->powers.end()) {
    return it->second;
  }
  MatrixC result;
  if (r == 0) {
    result = MatrixC::Identity(dim_, dim_);
  } else if (r == 1) {
    result = matrix_;
  } else if (r > 1) {
    // Repeated multiplication off the largest cached smaller power;
    // exactness over speed at the word lengths used here.
    long long base = r - 1;
    while (base > 1 && !cache_->powers.count(base)) --base;
    MatrixC acc = (base > 1) ? cache_->powers.at(base)
                             : (base == 1 ? matrix_ : MatrixC::Identity(dim_, dim_));
    for (long long i = base; i < r; ++i) {
      acc = matrix_ * acc;
    }
    result = std::move(acc);
  } else {
    // Negative power: conjugate transpose of U^{|r|}.
    long long a = -r;
    auto pos = cache_->powers.find(a);
    if (pos != cache_->powers.end()) {
      result = pos->second.adjoint();
    } else {
      MatrixC acc = matrix_;
      for (long long i = 1; i < a; ++i) {
        acc = matrix_ * acc;
      }
      cache_->powers.emplace(a, acc);
      result = acc.adjoint();
    }
  }
  auto [ins, _] = cache_->powers.emplace(r, std::move(result));
  return ins->second;
}

}  // namespace qtorus
