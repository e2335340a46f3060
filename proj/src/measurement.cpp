#include "qtorus/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qtorus/errors.hpp"

namespace qtorus {

std::string to_string(Centering c) {
  return c == Centering::uniform ? "uniform" : "traceless";
}

Partition::Partition(int dim, std::vector<int> boundaries, std::string spec)
    : dim_(dim), boundaries_(std::move(boundaries)), spec_(std::move(spec)) {
  // h(P) = -ln sum_j d_j^2 / N^2; 0 for K=1, ln K for equal blocks.
  double sum_sq = 0.0;
  for (int j = 0; j < block_count(); ++j) {
    const double d = block_size(j);
    sum_sq += d * d;
  }
  h_meas_ = -std::log(sum_sq / (static_cast<double>(dim_) * dim_));
}

Partition Partition::equal(int dim, int blocks) {
  if (dim < 1 || blocks < 1) {
    throw ConfigError("partition requires N >= 1 and K >= 1");
  }
  if (dim % blocks != 0) {
    std::ostringstream msg;
    msg << "equal partition needs K | N, got N=" << dim << " K=" << blocks;
    throw ConfigError(msg.str());
  }
  std::vector<int> bounds(blocks + 1);
  for (int j = 0; j <= blocks; ++j) {
    bounds[j] = dim / blocks * j;
  }
  return Partition(dim, std::move(bounds), "equal:" + std::to_string(blocks));
}

Partition Partition::from_sizes(int dim, const std::vector<int>& sizes) {
  if (dim < 1 || sizes.empty()) {
    throw ConfigError("partition requires N >= 1 and at least one block");
  }
  std::vector<int> bounds;
  bounds.reserve(sizes.size() + 1);
  bounds.push_back(0);
  std::ostringstream spec;
  spec << "sizes:";
  for (size_t j = 0; j < sizes.size(); ++j) {
    if (sizes[j] <= 0) {
      throw ConfigError("partition block sizes must be positive");
    }
    bounds.push_back(bounds.back() + sizes[j]);
    spec << (j ? "," : "") << sizes[j];
  }
  if (bounds.back() != dim) {
    std::ostringstream msg;
    msg << "partition sizes sum to " << bounds.back() << ", expected N=" << dim;
    throw ConfigError(msg.str());
  }
  return Partition(dim, std::move(bounds), spec.str());
}

Partition Partition::parse(int dim, const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw ConfigError("partition spec must be 'equal:K' or 'sizes:d1,d2,...': " + spec);
  }
  const std::string head = spec.substr(0, colon);
  const std::string tail = spec.substr(colon + 1);
  try {
    if (head == "equal") {
      return equal(dim, std::stoi(tail));
    }
    if (head == "sizes") {
      std::vector<int> sizes;
      std::stringstream ss(tail);
      std::string item;
      while (std::getline(ss, item, ',')) {
        sizes.push_back(std::stoi(item));
      }
      return from_sizes(dim, sizes);
    }
  } catch (const std::invalid_argument&) {
    throw ConfigError("malformed partition spec: " + spec);
  } catch (const std::out_of_range&) {
    throw ConfigError("malformed partition spec: " + spec);
  }
  throw ConfigError("partition spec must be 'equal:K' or 'sizes:d1,d2,...': " + spec);
}

std::vector<int> Partition::block_sizes() const {
  std::vector<int> sizes(block_count());
  for (int j = 0; j < block_count(); ++j) {
    sizes[j] = block_size(j);
  }
  return sizes;
}

int Partition::block_of(int m) const {
  auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(), m);
  return static_cast<int>(it - boundaries_.begin()) - 1;
}

double Partition::centered_trace(int j, Centering c) const {
  const double dn = static_cast<double>(block_size(j)) / dim_;
  const double shift = (c == Centering::uniform) ? 1.0 / block_count() : dn;
  return dn - shift;
}

double Partition::centered_second_moment(int j, Centering c) const {
  // (1/N) Tr (P_j - c 1)^2 = d_j/N - 2 c d_j/N + c^2.
  const double dn = static_cast<double>(block_size(j)) / dim_;
  const double shift = (c == Centering::uniform) ? 1.0 / block_count() : dn;
  return dn - 2.0 * shift * dn + shift * shift;
}

std::string Partition::spec_string() const { return spec_; }

MatrixC apply_projector(const Partition& p, int j, const MatrixC& m, ProjectorSide side) {
  if (j < 0 || j >= p.block_count()) {
    throw ConfigError("projector block index out of range");
  }
  const int lo = p.block_begin(j);
  const int len = p.block_size(j);
  MatrixC out = MatrixC::Zero(m.rows(), m.cols());
  switch (side) {
    case ProjectorSide::left:
      out.middleRows(lo, len) = m.middleRows(lo, len);
      break;
    case ProjectorSide::right:
      out.middleCols(lo, len) = m.middleCols(lo, len);
      break;
    case ProjectorSide::both:
      out.block(lo, lo, len, len) = m.block(lo, lo, len, len);
      break;
  }
  return out;
}

void mask_columns_inplace(const Partition& p, int j, MatrixC& m) {
  const int lo = p.block_begin(j);
  const int hi = p.block_end(j);
  if (lo > 0) m.leftCols(lo).setZero();
  if (hi < m.cols()) m.rightCols(static_cast<int>(m.cols()) - hi).setZero();
}

void centered_right_multiply_inplace(const Partition& p, int j, MatrixC& m, Centering c) {
  // M Q_j = M P_j - shift * M: keep block-j columns, subtract the scaled copy.
  const double shift = (c == Centering::uniform)
                           ? 1.0 / p.block_count()
                           : static_cast<double>(p.block_size(j)) / p.dim();
  const int lo = p.block_begin(j);
  const int hi = p.block_end(j);
  if (lo > 0) m.leftCols(lo) *= -shift;
  m.middleCols(lo, hi - lo) *= (1.0 - shift);
  if (hi < m.cols()) m.rightCols(static_cast<int>(m.cols()) - hi) *= -shift;
}

MatrixC pinch(const Partition& p, const MatrixC& m) {
  MatrixC out = MatrixC::Zero(m.rows(), m.cols());
  for (int j = 0; j < p.block_count(); ++j) {
    const int lo = p.block_begin(j);
    const int len = p.block_size(j);
    out.block(lo, lo, len, len) = m.block(lo, lo, len, len);
  }
  return out;
}

SimplifyingConditionsReport verify_simplifying_conditions(const QuantizedMap& u,
                                                          const Partition& p, int n_max) {
  if (n_max < 1) {
    throw ConfigError("verify_simplifying_conditions needs n_max >= 1");
  }
  SimplifyingConditionsReport report;
  const double inv_k = 1.0 / p.block_count();
  for (int j = 0; j < p.block_count(); ++j) {
    report.projector_deviation.push_back(
        std::abs(static_cast<double>(p.block_size(j)) / p.dim() - inv_k));
  }
  for (int n = 1; n <= n_max; ++n) {
    report.trace_ratio.push_back(std::abs(u.power(n).trace()) / p.dim());
  }
  return report;
}

}  // namespace qtorus
