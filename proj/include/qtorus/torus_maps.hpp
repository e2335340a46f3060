#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace qtorus {

using MatrixC = Eigen::MatrixXcd;

enum class MapKind { cat, elliptic, shift, haar };

std::string to_string(MapKind kind);
MapKind map_kind_from_string(const std::string& name);

enum class OrbitClass { hyperbolic, elliptic, parabolic };

std::string to_string(OrbitClass c);

// A 2x2 integer torus automorphism with its dynamical classification.
// ks_entropy is in nats per step, ln(lambda_+) when hyperbolic, else 0.
struct TorusAutomorphism {
  long long t11 = 0, t12 = 0, t21 = 0, t22 = 0;
  OrbitClass classification = OrbitClass::parabolic;
  double ks_entropy = 0.0;

  long long trace() const { return t11 + t22; }
  long long det() const { return t11 * t22 - t12 * t21; }
};

// Classifies T by |Tr T|: >2 hyperbolic, <2 elliptic, ==2 parabolic.
// Throws ConfigError unless det T == 1.
TorusAutomorphism classify_automorphism(long long t11, long long t12, long long t21,
                                        long long t22);

// The classical maps whose quantizations this library ships: cat uses
// T=[[2,7],[1,4]] (ks_entropy = ln(3+2*sqrt(2))), elliptic T=[[0,1],[-1,0]].
// shift and haar have no torus automorphism attached.
std::optional<TorusAutomorphism> reference_automorphism(MapKind kind);

// An N x N unitary propagator with a cache of its integer powers.
// Immutable after construction apart from the mutex-guarded power cache,
// so instances can be shared read-only across threads.
class QuantizedMap {
 public:
  // Builds the unitary for the given kind. Matrix entries follow the
  // one-based r,k = 1..N convention of the defining formulas: storage
  // (i,j) holds the entry for r=i+1, k=j+1.
  //   cat:      U_{rk} = N^{-1/2} exp{(-2 pi i/N)(r^2 + 2k^2 - kr)}
  //   elliptic: U_{rk} = sqrt(i/N)  exp{(+2 pi i/N) rk}
  //   shift:    U|r> = |r+1>, indices mod N
  //   haar:     seeded Ginibre matrix, QR-orthonormalized, phases fixed
  // Unitarity is verified on construction (max-norm of U^dag U - 1 <= 1e-10);
  // InvariantViolation reports the deviation otherwise.
  static QuantizedMap build(MapKind kind, int dim, std::uint64_t seed = 0);

  // Wraps an externally supplied unitary (verified); kind is a provenance tag.
  QuantizedMap(MapKind kind, MatrixC matrix);

  int dim() const { return dim_; }
  MapKind kind() const { return kind_; }
  const MatrixC& matrix() const { return matrix_; }

  // U^r; r=0 gives the identity, negative r the conjugate transpose of
  // U^{|r|}. Powers are computed by repeated multiplication and cached.
  const MatrixC& power(long long r) const;

 private:
  int dim_;
  MapKind kind_;
  MatrixC matrix_;
  struct PowerCache {
    std::mutex mutex;
    std::map<long long, MatrixC> powers;
  };
  std::unique_ptr<PowerCache> cache_;
};

// Max-norm of U^dag U - 1. Used by the construction check and by tests.
double unitarity_deviation(const MatrixC& u);

}  // namespace qtorus
