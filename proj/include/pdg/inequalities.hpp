#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "pdg/error.hpp"

// Slack functions for the l^p uniform-convexity inequalities behind the
// geodesic characterisation. Each returns (larger side) - (smaller side), so a
// negative value is a violation. Sums are accumulated in long double; the
// p = 2 equality cases cancel large terms and double rounding alone would
// exceed 1e-12 at |entries| ~ 10, dimension 16.

namespace pdg::ineq {

using Real = long double;

struct VectorPair {
  std::vector<double> v;
  std::vector<double> w;

  void validate() const {
    if (v.size() != w.size()) throw Error(ErrorKind::Structural, "vector pair has unequal lengths");
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!std::isfinite(v[i]) || !std::isfinite(w[i])) {
        throw Error(ErrorKind::Structural, "vector pair has a non-finite entry");
      }
    }
  }
};

namespace detail {

/// sum |a v_i + b w_i|^p
inline Real power_sum(const VectorPair& x, Real a, Real b, Real p) {
  Real s = 0;
  for (std::size_t i = 0; i < x.v.size(); ++i) {
    const Real e = std::abs(a * static_cast<Real>(x.v[i]) + b * static_cast<Real>(x.w[i]));
    s += (p == 2 ? e * e : std::pow(e, p));
  }
  return s;
}

/// ||a v + b w||_p^2
inline Real norm_squared(const VectorPair& x, Real a, Real b, Real p) {
  const Real s = power_sum(x, a, b, p);
  return p == 2 ? s : std::pow(s, 2 / p);
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ParameterDomain, what);
}

}  // namespace detail

/// 2^(p-1) (||v||^p + ||w||^p) - ||v+w||^p - ||v-w||^p, for p >= 2.
inline double clarkson_slack(const VectorPair& x, double p) {
  x.validate();
  detail::require(p >= 2.0 && std::isfinite(p), "Clarkson's inequality needs p in [2, inf)");
  const Real pp = p;
  const Real rhs = std::pow(Real(2), pp - 1) * (detail::power_sum(x, 1, 0, pp) + detail::power_sum(x, 0, 1, pp));
  const Real lhs = detail::power_sum(x, 1, 1, pp) + detail::power_sum(x, 1, -1, pp);
  return static_cast<double>(rhs - lhs);
}

/// t||v||^p + (1-t)||w||^p - t(1-t) C ||v-w||^p - ||tv + (1-t)w||^p, for p >= 2.
inline double convexity_defect_p_slack(const VectorPair& x, double t, double p, double c) {
  x.validate();
  detail::require(t > 0.0 && t < 1.0, "t must lie in (0, 1)");
  detail::require(p >= 2.0 && std::isfinite(p), "p must lie in [2, inf)");
  detail::require(c > 0.0, "C must be positive");
  const Real tt = t, pp = p;
  const Real bound = tt * detail::power_sum(x, 1, 0, pp) + (1 - tt) * detail::power_sum(x, 0, 1, pp) -
                     tt * (1 - tt) * static_cast<Real>(c) * detail::power_sum(x, 1, -1, pp);
  return static_cast<double>(bound - detail::power_sum(x, tt, 1 - tt, pp));
}

/// Largest C for which convexity_defect_p_slack stays nonnegative on the
/// given pairs (pairs with v = w impose nothing). Informational only.
inline double empirical_defect_constant(std::span<const VectorPair> pairs, double t, double p) {
  Real best = std::numeric_limits<Real>::infinity();
  const Real tt = t, pp = p;
  for (const VectorPair& x : pairs) {
    const Real diff = detail::power_sum(x, 1, -1, pp);
    if (diff == 0) continue;
    const Real gap = tt * detail::power_sum(x, 1, 0, pp) + (1 - tt) * detail::power_sum(x, 0, 1, pp) -
                     detail::power_sum(x, tt, 1 - tt, pp);
    best = std::min(best, gap / (tt * (1 - tt) * diff));
  }
  return static_cast<double>(best);
}

/// ||v+w||^2 + ||v-w||^2 - 2||v||^2 - 2(p-1)||w||^2 (all l^p norms), for 1 < p <= 2.
inline double bcl_slack(const VectorPair& x, double p) {
  x.validate();
  detail::require(p > 1.0 && p <= 2.0, "the BCL inequality needs p in (1, 2]");
  const Real pp = p;
  const Real lhs = detail::norm_squared(x, 1, 1, pp) + detail::norm_squared(x, 1, -1, pp);
  const Real rhs = 2 * detail::norm_squared(x, 1, 0, pp) + 2 * (pp - 1) * detail::norm_squared(x, 0, 1, pp);
  return static_cast<double>(lhs - rhs);
}

/// t||v||^2 + (1-t)||w||^2 - (p-1)t(1-t)||v-w||^2 - ||tv+(1-t)w||^2, for 1 < p <= 2.
inline double convexity_defect_2_slack(const VectorPair& x, double t, double p) {
  x.validate();
  detail::require(t > 0.0 && t < 1.0, "t must lie in (0, 1)");
  detail::require(p > 1.0 && p <= 2.0, "p must lie in (1, 2]");
  const Real tt = t, pp = p;
  const Real bound = tt * detail::norm_squared(x, 1, 0, pp) + (1 - tt) * detail::norm_squared(x, 0, 1, pp) -
                     (pp - 1) * tt * (1 - tt) * detail::norm_squared(x, 1, -1, pp);
  return static_cast<double>(bound - detail::norm_squared(x, tt, 1 - tt, pp));
}

/// sum a_i^p / (t_i - t_{i-1})^(p-1) - (sum a_i)^p / (t_n - t_0)^(p-1).
inline double jensen_partition_slack(std::span<const double> a, std::span<const double> t, double p) {
  detail::require(p > 1.0 && std::isfinite(p), "p must lie in (1, inf)");
  if (t.size() != a.size() + 1) throw Error(ErrorKind::Structural, "need exactly one more time than weight");
  if (a.empty()) throw Error(ErrorKind::Structural, "need at least one weight");
  for (double ai : a) detail::require(ai >= 0.0, "weights must be nonnegative");
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1])) throw Error(ErrorKind::Structural, "times must be strictly increasing");
  }
  const Real pp = p;
  Real total = 0, rhs = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    total += a[i];
    rhs += std::pow(static_cast<Real>(a[i]), pp) /
           std::pow(static_cast<Real>(t[i + 1]) - static_cast<Real>(t[i]), pp - 1);
  }
  const Real lhs = std::pow(total, pp) / std::pow(static_cast<Real>(t.back()) - static_cast<Real>(t.front()), pp - 1);
  return static_cast<double>(rhs - lhs);
}

}  // namespace pdg::ineq
