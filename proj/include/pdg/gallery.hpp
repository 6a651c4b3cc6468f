#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pdg/curve.hpp"
#include "pdg/diagram.hpp"
#include "pdg/error.hpp"

// Explicit branching and deviant geodesics, evaluated pointwise.
//
//   mu_infty(k, j), nu_infty(k, l), omega_infty(k, j)   p = inf, any q
//   mu_one(k), nu_r_one(k, r), corner_one(k, c)         p = q = 1
//
// mu_infty / nu_infty run from {(0,k),(0,j)} (resp. {(0,k),(0,l)}) to the
// empty diagram: the k-point slides to the diagonal over [0,1] while the small
// point reaches the diagonal three times faster. omega_infty runs from
// {(0,k)} to the empty diagram with a second point that emerges from the
// diagonal, reaches (0,j) at t = 1/2 and retreats.
//
// The p = q = 1 curves start at {(0,k),(1,k-1)}. mu_one brings both points to
// (1,k) at t = 1/2 and then splits them towards (1,k+1) and (2,k). nu_r_one
// shares the first half and then moves the merged pair along the L-shaped
// path (1,k) -> (1,k+r) -> (2-r,k+r). corner_one(c) moves each point along a
// three-leg staircase with corners at distance c from (1,k).

namespace pdg::gallery {

struct Params {
  double k = 10.0;
  double j = 3.0;
  double l = 1.0;
  double r = 0.5;
  double c = 0.5;
};

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> all = {"mu_infty", "nu_infty",  "omega_infty",
                                               "mu_one",   "nu_r_one",  "corner_one"};
  return all;
}

namespace detail {

inline void require(bool ok, const std::string& name, const std::string& constraint) {
  if (!ok) throw Error(ErrorKind::ParameterDomain, name + " requires " + constraint);
}

inline void push_if_off_diagonal(Diagram& d, const Vec2& at, std::size_t trajectory) {
  if (at[1] > at[0]) d.points.push_back({at[0], at[1], trajectory});
}

// (k/2 t, k/2 (2 - t)): from (0,k) to the diagonal at constant speed
inline Vec2 sliding(double k, double t) { return {0.5 * k * t, 0.5 * k * (2.0 - t)}; }

// same, three times faster, parked on the diagonal after t = 1/3
inline Vec2 fast_sliding(double a, double t) {
  const double s = std::min(3.0 * t, 1.0);
  return {0.5 * a * s, 0.5 * a * (2.0 - s)};
}

// Position after travelling l^1 arc length u along the polyline.
inline Vec2 along(const std::vector<Vec2>& poly, double u) {
  for (std::size_t i = 1; i < poly.size(); ++i) {
    const Vec2 seg = poly[i] - poly[i - 1];
    const double len = std::abs(seg[0]) + std::abs(seg[1]);
    if (u <= len || i + 1 == poly.size()) {
      const double f = len == 0.0 ? 0.0 : std::min(u / len, 1.0);
      return poly[i - 1] + f * seg;
    }
    u -= len;
  }
  return poly.back();
}

}  // namespace detail

inline void check(std::string_view name, const Params& p) {
  const std::string n(name);
  if (name == "mu_infty" || name == "omega_infty") {
    detail::require(p.j > 0.0, n, "j > 0");
    detail::require(3.0 * p.j < p.k, n, "k > 3j");
  } else if (name == "nu_infty") {
    detail::require(p.l > 0.0 && p.l < p.j, n, "0 < l < j");
    detail::require(3.0 * p.j < p.k, n, "k > 3j");
  } else if (name == "mu_one" || name == "nu_r_one" || name == "corner_one") {
    detail::require(p.k >= 8.0, n, "k >= 8");
    if (name == "nu_r_one") detail::require(p.r >= 0.0 && p.r <= 1.0, n, "0 <= r <= 1");
    if (name == "corner_one") detail::require(p.c > 0.0 && p.c < 1.0, n, "0 < c < 1");
  } else {
    std::string valid;
    for (const std::string& s : names()) valid += (valid.empty() ? "" : ", ") + s;
    throw Error(ErrorKind::ParameterDomain, "unknown curve \"" + n + "\"; valid names: " + valid);
  }
}

inline Diagram frame(std::string_view name, const Params& p, double t) {
  check(name, p);
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::ParameterDomain, "t must lie in [0, 1]");
  Diagram d;
  if (name == "mu_infty" || name == "nu_infty") {
    const double small = name == "mu_infty" ? p.j : p.l;
    detail::push_if_off_diagonal(d, detail::sliding(p.k, t), 0);
    detail::push_if_off_diagonal(d, detail::fast_sliding(small, t), 1);
  } else if (name == "omega_infty") {
    detail::push_if_off_diagonal(d, detail::sliding(p.k, t), 0);
    const Vec2 bump = t <= 0.5 ? Vec2{p.j * (0.5 - t), p.j * (0.5 + t)} : Vec2{p.j * (t - 0.5), p.j * (1.5 - t)};
    detail::push_if_off_diagonal(d, bump, 1);
  } else if (name == "mu_one") {
    const double k = p.k;
    if (t <= 0.5) {
      detail::push_if_off_diagonal(d, {2.0 * t, k}, 0);
      detail::push_if_off_diagonal(d, {1.0, k - 1.0 + 2.0 * t}, 1);
    } else {
      detail::push_if_off_diagonal(d, {1.0, k + 2.0 * (t - 0.5)}, 0);
      detail::push_if_off_diagonal(d, {1.0 + 2.0 * (t - 0.5), k}, 1);
    }
  } else if (name == "nu_r_one") {
    const double k = p.k;
    if (t <= 0.5) {
      detail::push_if_off_diagonal(d, {2.0 * t, k}, 0);
      detail::push_if_off_diagonal(d, {1.0, k - 1.0 + 2.0 * t}, 1);
    } else {
      const std::vector<Vec2> path = {{1.0, k}, {1.0, k + p.r}, {2.0 - p.r, k + p.r}};
      const Vec2 at = detail::along(path, 2.0 * (t - 0.5));
      detail::push_if_off_diagonal(d, at, 0);
      detail::push_if_off_diagonal(d, at, 1);
    }
  } else {  // corner_one
    const double k = p.k;
    const double c = p.c;
    // each leg sequence has l^1 length 2, traversed at speed 2
    const std::vector<Vec2> upper = {{0.0, k}, {1.0 - c, k}, {1.0, k + c}, {1.0, k + 1.0}};
    const std::vector<Vec2> lower = {{1.0, k - 1.0}, {1.0, k - c}, {1.0 + c, k}, {2.0, k}};
    detail::push_if_off_diagonal(d, detail::along(upper, 2.0 * t), 0);
    detail::push_if_off_diagonal(d, detail::along(lower, 2.0 * t), 1);
  }
  return d;
}

inline SampledCurve curve(std::string_view name, const Params& p, std::size_t grid) {
  SampledCurve c;
  c.times = uniform_times(grid);
  for (double t : c.times) c.frames.push_back(frame(name, p, t));
  return c;
}

}  // namespace pdg::gallery
