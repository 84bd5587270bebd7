#include "barygd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "barygd/rng.hpp"

namespace barygd {

namespace {

constexpr int kAssignmentLimit = 2000;

Eigen::VectorXd sorted_copy(const Eigen::VectorXd& v) {
  Eigen::VectorXd out = v;
  std::sort(out.data(), out.data() + out.size());
  return out;
}

// Both inputs sorted. Quantile functions are piecewise constant with integer
// breakpoints on the common denominator n*m, so the merge stays exact.
double quantile_w2_sorted(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const long long n = a.size();
  const long long m = b.size();
  long long pos = 0;
  long long i = 0, j = 0;
  double acc = 0.0;
  while (i < n && j < m) {
    const long long next_a = (i + 1) * m;
    const long long next_b = (j + 1) * n;
    const long long next = std::min(next_a, next_b);
    const double gap = a[i] - b[j];
    acc += gap * gap * static_cast<double>(next - pos);
    pos = next;
    if (next_a == next) ++i;
    if (next_b == next) ++j;
  }
  return std::sqrt(acc / static_cast<double>(n * m));
}

}  // namespace

double empirical_w2_1d(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("empirical_w2_1d: sample counts differ");
  }
  if (a.size() == 0) {
    throw std::invalid_argument("empirical_w2_1d: empty samples");
  }
  const Eigen::VectorXd sa = sorted_copy(a);
  const Eigen::VectorXd sb = sorted_copy(b);
  return std::sqrt((sa - sb).squaredNorm() / static_cast<double>(a.size()));
}

double quantile_w2_1d(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  if (a.size() == 0 || b.size() == 0) {
    throw std::invalid_argument("quantile_w2_1d: empty samples");
  }
  return quantile_w2_sorted(sorted_copy(a), sorted_copy(b));
}

Assignment solve_assignment(const Eigen::MatrixXd& cost) {
  if (cost.rows() != cost.cols() || cost.rows() == 0) {
    throw std::invalid_argument("assignment: cost matrix must be square");
  }
  const int n = static_cast<int>(cost.rows());
  const double inf = std::numeric_limits<double>::infinity();

  // Shortest augmenting paths with row/column potentials.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int row = 1; row <= n; ++row) {
    match[0] = row;
    int j0 = 0;
    std::vector<double> min_reduced(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = match[j0];
      int j1 = 0;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double reduced = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (reduced < min_reduced[j]) {
          min_reduced[j] = reduced;
          way[j] = j0;
        }
        if (min_reduced[j] < delta) {
          delta = min_reduced[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          min_reduced[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment result;
  result.column_of_row.assign(n, -1);
  for (int j = 1; j <= n; ++j) {
    if (match[j] != 0) result.column_of_row[match[j] - 1] = j - 1;
  }
  for (int i = 0; i < n; ++i) {
    result.total_cost += cost(i, result.column_of_row[i]);
  }
  return result;
}

double empirical_w2_assignment(const Eigen::MatrixXd& a,
                               const Eigen::MatrixXd& b) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument("empirical_w2_assignment: cloud sizes differ");
  }
  if (a.rows() != b.rows()) {
    throw std::invalid_argument("empirical_w2_assignment: dimension mismatch");
  }
  const int n = static_cast<int>(a.cols());
  if (n == 0) {
    throw std::invalid_argument("empirical_w2_assignment: empty clouds");
  }
  if (n > kAssignmentLimit) {
    throw std::invalid_argument(
        "empirical_w2_assignment: cloud larger than the exact-solver limit");
  }
  Eigen::MatrixXd cost(n, n);
  for (int i = 0; i < n; ++i) {
    cost.row(i) = (b.colwise() - a.col(i)).colwise().squaredNorm();
  }
  const Assignment assignment = solve_assignment(cost);
  return std::sqrt(std::max(0.0, assignment.total_cost / n));
}

double kendall_tau(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const long long n = x.size();
  if (n != y.size()) {
    throw std::invalid_argument("kendall_tau: sample counts differ");
  }
  if (n < 2) {
    throw std::invalid_argument("kendall_tau: needs at least two pairs");
  }
  long long concordant = 0, discordant = 0, ties_x = 0, ties_y = 0;
  for (long long i = 0; i < n; ++i) {
    for (long long j = i + 1; j < n; ++j) {
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      if (dx == 0.0) ++ties_x;
      if (dy == 0.0) ++ties_y;
      if (dx == 0.0 || dy == 0.0) continue;
      if ((dx > 0.0) == (dy > 0.0)) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  const double n0 = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  const double denom = std::sqrt((n0 - static_cast<double>(ties_x)) *
                                 (n0 - static_cast<double>(ties_y)));
  if (denom == 0.0) return 0.0;
  return static_cast<double>(concordant - discordant) / denom;
}

double kde_1d(const Eigen::VectorXd& samples, double bandwidth, double query) {
  if (samples.size() == 0) {
    throw std::invalid_argument("kde_1d: empty sample");
  }
  if (!(bandwidth > 0.0)) {
    throw std::invalid_argument("kde_1d: bandwidth must be positive");
  }
  const double inv_norm = 1.0 / std::sqrt(2.0 * M_PI);
  double acc = 0.0;
  for (long long i = 0; i < samples.size(); ++i) {
    const double z = (query - samples[i]) / bandwidth;
    acc += inv_norm * std::exp(-0.5 * z * z);
  }
  return acc / (static_cast<double>(samples.size()) * bandwidth);
}

double silverman_bandwidth(const Eigen::VectorXd& samples) {
  const long long n = samples.size();
  if (n < 2) {
    throw std::invalid_argument("silverman_bandwidth: needs at least two samples");
  }
  const double mean = samples.mean();
  const double sd =
      std::sqrt((samples.array() - mean).square().sum() / (n - 1));
  const Eigen::VectorXd sorted = sorted_copy(samples);
  const auto quantile = [&](double q) {
    const double idx = q * (n - 1);
    const long long lo = static_cast<long long>(std::floor(idx));
    const long long hi = std::min(lo + 1, n - 1);
    const double frac = idx - lo;
    return (1.0 - frac) * sorted[lo] + frac * sorted[hi];
  };
  const double iqr = quantile(0.75) - quantile(0.25);
  double spread = std::min(sd, iqr / 1.34);
  if (spread <= 0.0) spread = (sd > 0.0) ? sd : 1.0;
  return 0.9 * spread * std::pow(static_cast<double>(n), -0.2);
}

ReferenceEvaluator::ReferenceEvaluator(GaussianMeasure reference, int ref_count,
                                       std::uint64_t seed)
    : reference_(std::move(reference)) {
  if (ref_count < 1) {
    throw std::invalid_argument("reference evaluator: ref_count must be >= 1");
  }
  Rng rng(seed);
  sample_ = gaussian_sample(reference_, ref_count, rng);
  if (reference_.dim() == 1) {
    sorted_1d_ = sorted_copy(sample_.row(0).transpose());
  }
}

double ReferenceEvaluator::w2(const Eigen::MatrixXd& cloud) const {
  if (cloud.rows() != reference_.dim()) {
    throw std::invalid_argument("reference evaluator: dimension mismatch");
  }
  if (reference_.dim() == 1) {
    return quantile_w2_sorted(sorted_copy(cloud.row(0).transpose()),
                              sorted_1d_);
  }
  const int n = static_cast<int>(cloud.cols());
  const int blocks = static_cast<int>(sample_.cols()) / n;
  if (blocks < 1) {
    throw std::invalid_argument(
        "reference evaluator: reference sample smaller than the cloud");
  }
  double acc = 0.0;
  for (int b = 0; b < blocks; ++b) {
    acc += empirical_w2_assignment(cloud, sample_.middleCols(b * n, n));
  }
  return acc / blocks;
}

}  // namespace barygd
