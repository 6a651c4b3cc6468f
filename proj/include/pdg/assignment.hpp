#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

namespace pdg::assignment {

/// Row-major square matrix.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

/// Minimum-sum assignment (Kuhn-Munkres with row/column potentials), O(n^3).
/// Returns row -> column.
template <typename T>
std::vector<std::size_t> solve_min_sum(const SquareMatrix<T>& cost) {
  const std::size_t n = cost.size();
  if (n == 0) return {};
  const T inf = std::numeric_limits<T>::infinity();
  // 1-based internally; column 0 is a virtual start.
  std::vector<T> u(n + 1, T{0}), v(n + 1, T{0});
  std::vector<std::size_t> row_of(n + 1, 0), way(n + 1, 0);
  std::vector<T> minv(n + 1);
  std::vector<char> used(n + 1);

  for (std::size_t i = 1; i <= n; ++i) {
    row_of[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = row_of[j0];
      T delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const T cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      row_of[j0] = row_of[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> assignment(n);
  for (std::size_t j = 1; j <= n; ++j) assignment[row_of[j] - 1] = j - 1;
  return assignment;
}

namespace detail {

// Kuhn's augmenting path search restricted to edges with cost <= threshold.
template <typename T>
bool augment(const SquareMatrix<T>& cost, T threshold, std::size_t row, std::vector<char>& seen,
             std::vector<std::size_t>& row_of_col) {
  const std::size_t n = cost.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (seen[j] || cost(row, j) > threshold) continue;
    seen[j] = 1;
    if (row_of_col[j] == n || augment(cost, threshold, row_of_col[j], seen, row_of_col)) {
      row_of_col[j] = row;
      return true;
    }
  }
  return false;
}

template <typename T>
bool perfect_matching_below(const SquareMatrix<T>& cost, T threshold, std::vector<std::size_t>& assignment) {
  const std::size_t n = cost.size();
  std::vector<std::size_t> row_of_col(n, n);
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    if (!augment(cost, threshold, i, seen, row_of_col)) return false;
  }
  assignment.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) assignment[row_of_col[j]] = j;
  return true;
}

}  // namespace detail

/// Minimum-bottleneck assignment. Candidate thresholds are the distinct matrix
/// entries; the smallest one admitting a perfect matching is found by binary
/// search, so the optimum is always an entry of the matrix.
template <typename T>
std::vector<std::size_t> solve_min_max(const SquareMatrix<T>& cost) {
  const std::size_t n = cost.size();
  if (n == 0) return {};
  std::vector<T> thresholds = cost.data();
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  std::vector<std::size_t> best;
  std::size_t lo = 0;
  std::size_t hi = thresholds.size() - 1;
  // the largest entry always admits the complete bipartite graph
  detail::perfect_matching_below(cost, thresholds[hi], best);
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    std::vector<std::size_t> candidate;
    if (detail::perfect_matching_below(cost, thresholds[mid], candidate)) {
      hi = mid;
      best = std::move(candidate);
    } else {
      lo = mid + 1;
    }
  }
  return best;
}

}  // namespace pdg::assignment
