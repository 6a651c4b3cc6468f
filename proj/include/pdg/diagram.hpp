#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "pdg/error.hpp"
#include "pdg/extended_real.hpp"

namespace pdg {

using Vec2 = std::array<double, 2>;

inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec2 operator*(double s, const Vec2& a) { return {s * a[0], s * a[1]}; }

/// An off-diagonal point of a persistence diagram. The index only
/// distinguishes repeated copies of the same (birth, death) pair; distance
/// computations never look at it.
struct Point {
  double birth = 0.0;
  double death = 0.0;
  std::size_t index = 0;

  Vec2 coords() const { return {birth, death}; }
  bool off_diagonal() const { return death > birth; }

  friend bool operator==(const Point&, const Point&) = default;
};

/// A finite persistence diagram. The diagonal is implicit and never stored.
struct Diagram {
  std::vector<Point> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  const Point& operator[](std::size_t i) const { return points[i]; }

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

/// Throws a validation error naming the first point at or below the diagonal.
inline void validate(const Diagram& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Point& pt = d[i];
    if (!std::isfinite(pt.birth) || !std::isfinite(pt.death)) {
      throw Error(ErrorKind::Validation, "point " + std::to_string(i) + " has a non-finite coordinate");
    }
    if (!pt.off_diagonal()) {
      throw Error(ErrorKind::Validation,
                  "point " + std::to_string(i) + " (" + std::to_string(pt.birth) + ", " +
                      std::to_string(pt.death) + ") is not strictly above the diagonal");
    }
  }
}

/// Construct a diagram from (birth, death) pairs with positional indices.
inline Diagram make_diagram(std::initializer_list<Vec2> coords) {
  Diagram d;
  std::size_t i = 0;
  for (const Vec2& c : coords) d.points.push_back({c[0], c[1], i++});
  validate(d);
  return d;
}

/// Largest finite p accepted; larger outer exponents overflow double even
/// after normalisation and are better served by p = inf.
inline constexpr double kMaxFiniteP = 64.0;
inline constexpr double kDefaultTol = 1e-9;

struct MetricParams {
  ExtendedReal p = 2.0;
  ExtendedReal q = 2.0;
  double tol = kDefaultTol;

  void validate() const {
    if (p.is_finite() && !(p.value() >= 1.0)) throw Error(ErrorKind::ParameterDomain, "p must be >= 1");
    if (p.is_finite() && p.value() > kMaxFiniteP) {
      throw Error(ErrorKind::ParameterDomain, "finite p is capped at 64; use p = inf");
    }
    if (q.is_finite() && !(q.value() >= 1.0)) throw Error(ErrorKind::ParameterDomain, "q must be >= 1");
    if (!(tol > 0.0)) throw Error(ErrorKind::ParameterDomain, "tol must be > 0");
  }
};

/// The l^q norm on the plane.
inline double ground_norm(const Vec2& v, ExtendedReal q) {
  if (q.is_finite() && !(q.value() >= 1.0)) throw Error(ErrorKind::ParameterDomain, "q must be >= 1");
  const double a = std::abs(v[0]);
  const double b = std::abs(v[1]);
  if (q.is_infinite()) return std::max(a, b);
  const double qv = q.value();
  if (qv == 1.0) return a + b;
  if (qv == 2.0) return std::hypot(a, b);
  const double m = std::max(a, b);
  if (m == 0.0) return 0.0;
  // scale by the larger coordinate to keep the powers in range
  return m * std::pow(std::pow(a / m, qv) + std::pow(b / m, qv), 1.0 / qv);
}

/// Nearest diagonal point: the midpoint of the coordinates. Nearest in every
/// l^q norm, and the unique nearest point for 1 < q < inf.
inline Vec2 diagonal_projection(const Vec2& v) {
  const double mid = 0.5 * (v[0] + v[1]);
  return {mid, mid};
}
inline Vec2 diagonal_projection(const Point& pt) { return diagonal_projection(pt.coords()); }

/// l^q distance from a point to the diagonal: 2^(1/q - 1) (death - birth).
inline double diagonal_distance(const Point& pt, ExtendedReal q) {
  if (q.is_finite() && !(q.value() >= 1.0)) throw Error(ErrorKind::ParameterDomain, "q must be >= 1");
  return std::exp2(q.reciprocal() - 1.0) * (pt.death - pt.birth);
}

}  // namespace pdg
