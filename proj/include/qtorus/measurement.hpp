#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "qtorus/torus_maps.hpp"

namespace qtorus {

// Two conventions for the centered projector entering correlation functions:
//   uniform:   Q_k = P_k - (1/K) 1        (the printed definition)
//   traceless: Q_k = P_k - (Tr P_k/N) 1   (exactly traceless for any partition)
// They coincide on partitions with equal block sizes.
enum class Centering { uniform, traceless };

std::string to_string(Centering c);

// A partition of the basis {1..N} into K contiguous blocks
// 0 = N_0 < N_1 < ... < N_K = N defining diagonal projectors
// P_j = sum_{m in (N_{j-1}, N_j]} |m><m|. Projectors are kept as index
// ranges and never stored densely. Block indices are 0-based in this API;
// serialized output uses the one-based labels of the formulas.
class Partition {
 public:
  // Equal blocks, requires K | N.
  static Partition equal(int dim, int blocks);
  // Explicit block sizes, must be positive and sum to N.
  static Partition from_sizes(int dim, const std::vector<int>& sizes);
  // Parses the CLI grammar "equal:K" or "sizes:d1,d2,...,dK".
  static Partition parse(int dim, const std::string& spec);

  int dim() const { return dim_; }
  int block_count() const { return static_cast<int>(boundaries_.size()) - 1; }
  const std::vector<int>& boundaries() const { return boundaries_; }
  int block_begin(int j) const { return boundaries_[j]; }
  int block_end(int j) const { return boundaries_[j + 1]; }
  int block_size(int j) const { return boundaries_[j + 1] - boundaries_[j]; }
  std::vector<int> block_sizes() const;
  // Block containing 0-based basis index m.
  int block_of(int m) const;

  // Measurement entropy h(P) = -ln sum_j (Tr P_j)^2 / N^2, in nats.
  double measurement_entropy() const { return h_meas_; }

  // (1/N) Tr Q_j and (1/N) Tr Q_j^2 for the chosen centering convention.
  double centered_trace(int j, Centering c = Centering::uniform) const;
  double centered_second_moment(int j, Centering c = Centering::uniform) const;

  // Canonical spec string ("equal:4" or "sizes:2,2,4,8") for provenance.
  std::string spec_string() const;

 private:
  Partition(int dim, std::vector<int> boundaries, std::string spec);

  int dim_;
  std::vector<int> boundaries_;
  double h_meas_;
  std::string spec_;
};

enum class ProjectorSide { left, right, both };

// P_j M, M P_j or P_j M P_j as row/column masking; P_j is never materialized.
MatrixC apply_projector(const Partition& p, int j, const MatrixC& m, ProjectorSide side);

// In-place M <- M P_j (zeroes columns outside block j).
void mask_columns_inplace(const Partition& p, int j, MatrixC& m);

// In-place M <- M Q_j = M P_j - c M with c = 1/K (uniform) or d_j/N (traceless).
void centered_right_multiply_inplace(const Partition& p, int j, MatrixC& m,
                                     Centering c = Centering::uniform);

// The pinching channel M -> sum_j P_j M P_j (zeroes all blocks off the
// block diagonal).
MatrixC pinch(const Partition& p, const MatrixC& m);

// Diagnostic data for the simplifying conditions Tr P_j/N = 1/K and
// Tr U^n = 0: deviations are reported, not gated.
struct SimplifyingConditionsReport {
  std::vector<double> projector_deviation;  // |Tr P_j/N - 1/K|, j = 0..K-1
  std::vector<double> trace_ratio;          // |Tr U^n|/N, n = 1..n_max
};

SimplifyingConditionsReport verify_simplifying_conditions(const QuantizedMap& u,
                                                          const Partition& p, int n_max);

}  // namespace qtorus
