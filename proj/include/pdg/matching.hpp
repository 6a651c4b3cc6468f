#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "pdg/assignment.hpp"
#include "pdg/diagram.hpp"
#include "pdg/error.hpp"

namespace pdg {

/// One side of the augmented problem: either a real off-diagonal point of that
/// side's diagram, or a diagonal copy standing in for a point of the other side.
struct Slot {
  enum class Kind { Real, DiagonalCopy };
  Kind kind = Kind::Real;
  std::size_t point = 0;  // index into own diagram (Real) or opposite diagram (DiagonalCopy)

  bool is_real() const { return kind == Kind::Real; }
};

/// Square assignment problem over X's points plus one diagonal copy per point
/// of Y (and symmetrically). `ground` holds unexponentiated l^q costs; `cost`
/// holds what the solvers minimise: (ground / scale)^p for finite p, ground
/// itself for p = inf.
struct AugmentedProblem {
  std::vector<Slot> left;
  std::vector<Slot> right;
  std::vector<Vec2> left_coords;   // location of each slot (projection for diagonal copies)
  std::vector<Vec2> right_coords;
  assignment::SquareMatrix<double> ground;
  assignment::SquareMatrix<double> cost;
  double scale = 1.0;
  MetricParams params;

  std::size_t real_count_left = 0;   // |X|
  std::size_t real_count_right = 0;  // |Y|

  std::size_t size() const { return left.size(); }
};

struct Matching {
  std::vector<std::size_t> assignment;  // left slot -> right slot
  std::vector<double> pair_costs;       // unexponentiated l^q cost per left slot
  double total = 0.0;
};

struct DistanceResult {
  double value = 0.0;
  Matching witness;
};

/// l^p aggregate of nonnegative costs, max for p = inf. The power sum is
/// normalised by the largest cost so large p cannot overflow.
inline double aggregate(std::span<const double> costs, ExtendedReal p) {
  double largest = 0.0;
  for (double c : costs) largest = std::max(largest, c);
  if (p.is_infinite() || largest == 0.0) return largest;
  const double pv = p.value();
  if (pv == 1.0) {
    double sum = 0.0;
    for (double c : costs) sum += c;
    return sum;
  }
  double sum = 0.0;
  for (double c : costs) sum += std::pow(c / largest, pv);
  return largest * std::pow(sum, 1.0 / pv);
}

namespace detail {

inline double slot_pair_cost(const Diagram& x, const Diagram& y, const Slot& l, const Slot& r, ExtendedReal q) {
  if (l.is_real() && r.is_real()) return ground_norm(x[l.point].coords() - y[r.point].coords(), q);
  if (l.is_real()) return diagonal_distance(x[l.point], q);
  if (r.is_real()) return diagonal_distance(y[r.point], q);
  return 0.0;
}

inline void build_slots(const Diagram& own, const Diagram& other, std::vector<Slot>& slots,
                        std::vector<Vec2>& coords) {
  for (std::size_t i = 0; i < own.size(); ++i) {
    slots.push_back({Slot::Kind::Real, i});
    coords.push_back(own[i].coords());
  }
  for (std::size_t j = 0; j < other.size(); ++j) {
    slots.push_back({Slot::Kind::DiagonalCopy, j});
    coords.push_back(diagonal_projection(other[j]));
  }
}

inline void require_permutation(std::span<const std::size_t> assignment, std::size_t n) {
  if (assignment.size() != n) {
    throw Error(ErrorKind::Structural, "matching has " + std::to_string(assignment.size()) +
                                           " slots but the augmented problem has " + std::to_string(n));
  }
  std::vector<char> hit(n, 0);
  for (std::size_t j : assignment) {
    if (j >= n || hit[j]) throw Error(ErrorKind::Structural, "matching assignment is not a permutation");
    hit[j] = 1;
  }
}

inline void require_enumerable(std::size_t n) {
  if (n > 9) {
    throw Error(ErrorKind::SizeGuard,
                "exhaustive search needs |X| + |Y| <= 9, got " + std::to_string(n));
  }
}

}  // namespace detail

inline AugmentedProblem build_augmented_problem(const Diagram& x, const Diagram& y, const MetricParams& params) {
  params.validate();
  AugmentedProblem prob;
  prob.params = params;
  prob.real_count_left = x.size();
  prob.real_count_right = y.size();
  detail::build_slots(x, y, prob.left, prob.left_coords);
  detail::build_slots(y, x, prob.right, prob.right_coords);

  const std::size_t n = prob.size();
  prob.ground = assignment::SquareMatrix<double>(n);
  double largest = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      prob.ground(i, j) = detail::slot_pair_cost(x, y, prob.left[i], prob.right[j], params.q);
      largest = std::max(largest, prob.ground(i, j));
    }
  }

  prob.cost = prob.ground;
  if (params.p.is_finite() && params.p.value() != 1.0 && largest > 0.0) {
    prob.scale = largest;
    const double pv = params.p.value();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) prob.cost(i, j) = std::pow(prob.ground(i, j) / largest, pv);
    }
  }
  return prob;
}

/// Attach pair costs and the total to a permutation of the problem's slots.
inline Matching make_matching(const AugmentedProblem& prob, std::vector<std::size_t> assignment) {
  detail::require_permutation(assignment, prob.size());
  Matching m;
  m.pair_costs.reserve(assignment.size());
  for (std::size_t i = 0; i < assignment.size(); ++i) m.pair_costs.push_back(prob.ground(i, assignment[i]));
  m.assignment = std::move(assignment);
  m.total = aggregate(m.pair_costs, prob.params.p);
  return m;
}

/// Cost of a bijection between X and Y, evaluated from the point geometry.
inline double matching_cost(const Diagram& x, const Diagram& y, std::span<const std::size_t> assignment,
                            const MetricParams& params) {
  params.validate();
  std::vector<Slot> left, right;
  std::vector<Vec2> unused;
  detail::build_slots(x, y, left, unused);
  detail::build_slots(y, x, right, unused);
  detail::require_permutation(assignment, left.size());
  std::vector<double> costs(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    costs[i] = detail::slot_pair_cost(x, y, left[i], right[assignment[i]], params.q);
  }
  return aggregate(costs, params.p);
}

inline double matching_cost(const Diagram& x, const Diagram& y, const Matching& m, const MetricParams& params) {
  return matching_cost(x, y, m.assignment, params);
}

inline Matching solve_assignment_sum(const AugmentedProblem& prob) {
  if (prob.params.p.is_infinite()) {
    throw Error(ErrorKind::WrongSolver, "p = inf needs the bottleneck solver");
  }
  return make_matching(prob, assignment::solve_min_sum(prob.cost));
}

inline Matching solve_assignment_bottleneck(const AugmentedProblem& prob) {
  if (prob.params.p.is_finite()) {
    throw Error(ErrorKind::WrongSolver, "finite p needs the sum solver");
  }
  return make_matching(prob, assignment::solve_min_max(prob.cost));
}

inline DistanceResult distance(const Diagram& x, const Diagram& y, const MetricParams& params) {
  const AugmentedProblem prob = build_augmented_problem(x, y, params);
  Matching m = params.p.is_infinite() ? solve_assignment_bottleneck(prob) : solve_assignment_sum(prob);
  const double value = m.total;
  return {value, std::move(m)};
}

/// Minimum matching cost over every permutation of the augmented slots.
inline double brute_force_distance(const Diagram& x, const Diagram& y, const MetricParams& params) {
  const std::size_t n = x.size() + y.size();
  detail::require_enumerable(n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = matching_cost(x, y, perm, params);
  while (std::next_permutation(perm.begin(), perm.end())) {
    best = std::min(best, matching_cost(x, y, perm, params));
  }
  return best;
}

/// Matched segments (source location, target location) excluding
/// diagonal-to-diagonal pairs, sorted. Two matchings with equal keys move the
/// same points to the same places.
using Segment = std::tuple<double, double, double, double>;

inline std::vector<Segment> geometric_action(const AugmentedProblem& prob, std::span<const std::size_t> assignment) {
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    const std::size_t j = assignment[i];
    const bool lr = prob.left[i].is_real();
    const bool rr = prob.right[j].is_real();
    if (!lr && !rr) continue;
    // a diagonal endpoint sits at the projection of the real partner
    const Vec2 src = lr ? prob.left_coords[i] : diagonal_projection(prob.right_coords[j]);
    const Vec2 dst = rr ? prob.right_coords[j] : diagonal_projection(prob.left_coords[i]);
    segs.emplace_back(src[0], src[1], dst[0], dst[1]);
  }
  std::sort(segs.begin(), segs.end());
  return segs;
}

inline bool same_geometric_action(const AugmentedProblem& prob, const Matching& a, const Matching& b) {
  return geometric_action(prob, a.assignment) == geometric_action(prob, b.assignment);
}

/// All optimal bijections up to geometric action (permutations that only
/// reshuffle diagonal copies among themselves, or swap coincident points, are
/// reported once).
inline std::vector<Matching> enumerate_optimal_matchings(const Diagram& x, const Diagram& y,
                                                         const MetricParams& params) {
  const AugmentedProblem prob = build_augmented_problem(x, y, params);
  const std::size_t n = prob.size();
  detail::require_enumerable(n);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = matching_cost(x, y, perm, params);
  while (std::next_permutation(perm.begin(), perm.end())) {
    best = std::min(best, matching_cost(x, y, perm, params));
  }

  std::vector<Matching> out;
  std::set<std::vector<Segment>> seen;
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (matching_cost(x, y, perm, params) > best + params.tol) continue;
    if (!seen.insert(geometric_action(prob, perm)).second) continue;
    out.push_back(make_matching(prob, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace pdg
