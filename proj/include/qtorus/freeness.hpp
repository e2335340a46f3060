#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qtorus/measurement.hpp"
#include "qtorus/torus_maps.hpp"

namespace qtorus {

// One term of a correlation sequence: the unitary power r (nonzero) and the
// 0-based block index k of the centered projector Q_k.
struct SequenceTerm {
  int r = 1;
  int k = 0;
};

// C[r_1..r_n; k_1..k_n] = (1/N) Tr(U^{r_1} Q_{k_1} ... U^{r_n} Q_{k_n})
// together with the sequence that produced it. |C| <= 1.
struct CorrelationSample {
  std::vector<SequenceTerm> sequence;
  std::complex<double> value{0.0, 0.0};
  double abs_value = 0.0;
  int n = 0;

  // One-based "r1:k1,r2:k2,..." form used in CSV output.
  std::string sequence_string() const;
};

// Evaluates C by accumulating an N x N product left to right; every Q factor
// is applied as column masking minus a scaled copy, never as a dense
// projector product. Throws ConfigError if any r_j = 0.
CorrelationSample correlation_value(const QuantizedMap& u, const Partition& p,
                                    const std::vector<SequenceTerm>& sequence,
                                    Centering centering = Centering::uniform);

// For each n = 1..n_max draws samples_per_n sequences with r_j uniform on
// {-r_max..-1, 1..r_max} and k_j uniform on the blocks. Each (n, sample)
// pair gets an RNG stream derived from (seed, n, sample), so results do not
// depend on evaluation order. Identical (seed, config) gives bit-identical
// samples.
std::vector<CorrelationSample> sample_correlations(const QuantizedMap& u,
                                                   const Partition& p, int n_max,
                                                   int samples_per_n, int r_max,
                                                   std::uint64_t seed,
                                                   Centering centering = Centering::uniform);

// Exhaustive scan of every sequence with n <= max_n (max_n <= 3) and
// r_j in r_set; reports the worst case per n.
struct LowOrderReport {
  struct PerOrder {
    int n = 0;
    double max_abs = 0.0;
    std::vector<SequenceTerm> argmax;
    long count = 0;
  };
  std::vector<PerOrder> orders;
};

LowOrderReport exhaustive_low_order_check(const QuantizedMap& u, const Partition& p,
                                          int max_n, const std::vector<int>& r_set,
                                          Centering centering = Centering::uniform);

// Exponential-decay fit of |C[n]| over the window n > 2 ln N / h(P):
// mean-of-ln|C[n]| ~ const - rate * n, A = 2 rate / h(P).
struct DecaySummary {
  int dim = 0;
  int block_count = 0;
  double h_meas = 0.0;
  double breaking_time = 0.0;  // 2 ln N / h(P)

  std::vector<int> ns;              // distinct n, ascending
  std::vector<double> mean_ln_abs;  // per n, mean of ln|C| (floored samples included)
  std::vector<double> median_ln_abs;
  std::vector<int> sample_counts;
  std::vector<int> floored_counts;  // samples with |C| < 1e-15, floored before log

  double rate = 0.0;
  double rate_stderr = 0.0;
  double a_constant = 0.0;  // A = 2 rate / h(P)
  double intercept = 0.0;   // fitted value of mean ln|C| at n = 0
  int fit_points = 0;

  // Fraction of n <= breaking_time whose median ln|C[n]| lies below the
  // backward extrapolation of the fitted line.
  double below_extrapolation_fraction = 0.0;
  int below_window_points = 0;

  bool degenerate = false;  // all samples in the fit window were floored

  double extrapolated_ln_abs(double n) const { return intercept - rate * n; }
};

// Requires samples at >= 4 distinct n beyond the breaking time (ConfigError
// otherwise). An all-floored window is reported as degenerate, not fitted.
DecaySummary fit_decay(const std::vector<CorrelationSample>& samples, const Partition& p,
                       int dim);

// Statistics of the variables F(m,j) = U^m P_j (and the centered variant
// U^m Q_j): first moments under the normalized trace and the exact second
// moments (1/N) Tr(X_j^dag X_j), which equal the algebraic block-size
// expressions because U^m is unitary.
struct FVariableStats {
  long long m = 0;
  int block = 0;
  double mean_abs_p = 0.0;       // |(1/N) Tr(U^m P_j)|
  double mean_abs_q = 0.0;       // |(1/N) Tr(U^m Q_j)|
  double second_moment_p = 0.0;  // d_j/N
  double second_moment_q = 0.0;  // d_j/N - 2 d_j/(NK) + 1/K^2
};

// Throws ConfigError for m = 0.
FVariableStats f_variable_stats(const QuantizedMap& u, const Partition& p, long long m,
                                int block);

}  // namespace qtorus
