#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "pdg/assignment.hpp"
#include "pdg/matching.hpp"

namespace pdg::ot {

/// Nonnegative n x n matrix whose rows and columns all sum to `mass`.
struct Coupling {
  assignment::SquareMatrix<double> matrix;
  double mass = 1.0;

  std::size_t size() const { return matrix.size(); }
};

/// Largest deviation of any row or column sum from the prescribed mass.
inline double marginal_error(const Coupling& c) {
  const std::size_t n = c.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0, col = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      row += c.matrix(i, j);
      col += c.matrix(j, i);
    }
    worst = std::max({worst, std::abs(row - c.mass), std::abs(col - c.mass)});
  }
  return worst;
}

inline constexpr double kMarginalTol = 1e-9;

inline Coupling coupling_from_matching(const Matching& m, std::size_t n) {
  detail::require_permutation(m.assignment, n);
  Coupling c{assignment::SquareMatrix<double>(n, 0.0), 1.0};
  for (std::size_t i = 0; i < n; ++i) c.matrix(i, m.assignment[i]) = 1.0;
  return c;
}

/// (sum_ij |x_i - y_j|_2^p gamma_ij)^(1/p) over the augmented points.
/// Normalised by the largest cost on the coupling's support, mirroring
/// `aggregate`, so a permutation coupling reproduces the matching cost bit
/// for bit.
inline double transport_cost(const AugmentedProblem& prob, const Coupling& coupling, double p) {
  if (!(prob.params.q == ExtendedReal(2.0))) {
    throw Error(ErrorKind::ParameterDomain, "transport cost is defined for the l^2 ground norm only");
  }
  if (!(p >= 1.0) || !std::isfinite(p)) throw Error(ErrorKind::ParameterDomain, "transport cost needs finite p >= 1");
  const std::size_t n = prob.size();
  if (coupling.size() != n) {
    throw Error(ErrorKind::Structural, "coupling is " + std::to_string(coupling.size()) + "x" +
                                           std::to_string(coupling.size()) + ", problem is " + std::to_string(n));
  }
  for (double v : coupling.matrix.data()) {
    if (!(v >= 0.0)) throw Error(ErrorKind::InvalidCoupling, "coupling has a negative entry");
  }
  if (marginal_error(coupling) > kMarginalTol * std::max(1.0, coupling.mass)) {
    throw Error(ErrorKind::InvalidCoupling, "coupling marginals deviate from the uniform measure");
  }

  double largest = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (coupling.matrix(i, j) > 0.0) largest = std::max(largest, prob.ground(i, j));
    }
  }
  if (largest == 0.0) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double w = coupling.matrix(i, j);
      if (w == 0.0) continue;
      const double g = prob.ground(i, j);
      sum += (p == 1.0 ? g : std::pow(g / largest, p)) * w;
    }
  }
  return p == 1.0 ? sum : largest * std::pow(sum, 1.0 / p);
}

/// Iterative proportional fitting: alternately rescale rows and columns of a
/// positive matrix until every marginal is within `tol` of 1.
inline Coupling balance(assignment::SquareMatrix<double> m, double tol = 1e-10, std::size_t max_iter = 10000) {
  const std::size_t n = m.size();
  Coupling c{std::move(m), 1.0};
  for (std::size_t it = 0; it < max_iter; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < n; ++j) row += c.matrix(i, j);
      for (std::size_t j = 0; j < n; ++j) c.matrix(i, j) /= row;
    }
    for (std::size_t j = 0; j < n; ++j) {
      double col = 0.0;
      for (std::size_t i = 0; i < n; ++i) col += c.matrix(i, j);
      for (std::size_t i = 0; i < n; ++i) c.matrix(i, j) /= col;
    }
    if (marginal_error(c) <= tol) break;
  }
  return c;
}

struct OtReport {
  double assignment_value = 0.0;
  double coupling_min_value = 0.0;
  bool agree = false;
};

/// Compares the assignment-solver distance with the minimum transport cost
/// over all permutation couplings (the extreme points of the coupling
/// polytope, so this minimum is the infimum over all couplings).
inline OtReport verify_ot_equivalence(const Diagram& x, const Diagram& y, double p) {
  const MetricParams params{p, 2.0};
  const AugmentedProblem prob = build_augmented_problem(x, y, params);
  const std::size_t n = prob.size();
  pdg::detail::require_enumerable(n);

  OtReport r;
  r.assignment_value = distance(x, y, params).value;

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  bool first = true;
  do {
    Matching m;
    m.assignment = perm;
    const double v = transport_cost(prob, coupling_from_matching(m, n), p);
    if (first || v < r.coupling_min_value) r.coupling_min_value = v;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));

  r.agree = std::abs(r.assignment_value - r.coupling_min_value) <= 1e-9;
  return r;
}

}  // namespace pdg::ot
