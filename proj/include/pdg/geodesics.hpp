#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pdg/curve.hpp"
#include "pdg/diagram.hpp"
#include "pdg/matching.hpp"

namespace pdg {

// ---------------------------------------------------------------------------
// Regimes of (p, q)

enum class Regime {
  Characterized,   // every geodesic is a convex combination
  Counterexample,  // branching and deviant geodesics exist
  Open,            // neither is known
};

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::Characterized: return "characterized";
    case Regime::Counterexample: return "counterexample";
    case Regime::Open: return "open";
  }
  return "open";
}

inline Regime regime_of(ExtendedReal p, ExtendedReal q) {
  if (p.is_infinite()) return Regime::Counterexample;
  const double pv = p.value();
  if (pv == 1.0 && q == ExtendedReal(1.0)) return Regime::Counterexample;
  if (q.is_finite() && q.value() == pv && pv >= 2.0) return Regime::Characterized;
  if (q == ExtendedReal(2.0) && pv > 1.0) return Regime::Characterized;
  return Regime::Open;
}

// ---------------------------------------------------------------------------
// Convex combinations

/// Per-slot trajectory of a convex combination, plus where each moving point
/// landed in the produced frame.
struct Interpolation {
  Diagram frame;
  std::vector<Vec2> source;                       // per left slot
  std::vector<Vec2> target;                       // per left slot
  std::vector<bool> moving;                       // false for diagonal-to-diagonal pairs
  std::vector<std::optional<std::size_t>> frame_index;
};

inline Interpolation interpolate(const Diagram& x, const Diagram& y, const Matching& m, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::ParameterDomain, "t must lie in [0, 1]");
  const AugmentedProblem prob = build_augmented_problem(x, y, MetricParams{});
  detail::require_permutation(m.assignment, prob.size());

  Interpolation out;
  const std::size_t n = prob.size();
  out.source.resize(n);
  out.target.resize(n);
  out.moving.resize(n);
  out.frame_index.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = m.assignment[i];
    const Slot& l = prob.left[i];
    const Slot& r = prob.right[j];
    if (!l.is_real() && !r.is_real()) continue;
    const Vec2 src = l.is_real() ? x[l.point].coords() : diagonal_projection(y[r.point]);
    const Vec2 dst = r.is_real() ? y[r.point].coords() : diagonal_projection(x[l.point]);
    out.source[i] = src;
    out.target[i] = dst;
    out.moving[i] = true;
    const Vec2 at = (1.0 - t) * src + t * dst;
    if (!(at[1] > at[0])) continue;  // on the diagonal: implicit
    std::size_t index = 0;
    if (l.is_real() && t < 1.0) {
      index = x[l.point].index;
    } else {
      index = r.is_real() ? y[r.point].index : x[l.point].index;
    }
    out.frame_index[i] = out.frame.size();
    out.frame.points.push_back({at[0], at[1], index});
  }
  return out;
}

/// The point set {(1-t) x + t m(x)}, dropping points that sit on the diagonal.
inline Diagram convex_combination(const Diagram& x, const Diagram& y, const Matching& m, double t) {
  return interpolate(x, y, m, t).frame;
}

inline SampledCurve convex_combination_curve(const Diagram& x, const Diagram& y, const Matching& m,
                                             std::size_t grid) {
  SampledCurve c;
  c.times = uniform_times(grid);
  for (double t : c.times) c.frames.push_back(convex_combination(x, y, m, t));
  return c;
}

// ---------------------------------------------------------------------------
// Certification

struct ViolationWitness {
  double s = 0.0;
  double t = 0.0;
  double measured = 0.0;  // d(frame(s), frame(t))
  double expected = 0.0;  // |t - s| d(frame(0), frame(1))
};

struct GeodesicCertificate {
  bool ok = true;
  double endpoint_distance = 0.0;
  double max_violation = 0.0;
  std::optional<ViolationWitness> witness;  // set when !ok
};

/// Checks d(c(s), c(t)) = |t - s| d(c(0), c(1)) over all sampled pairs s < t.
/// The witness is the first pair (in (s, t) order) attaining the largest
/// violation, ties broken within tol.
inline GeodesicCertificate certify_geodesic(const SampledCurve& curve, const MetricParams& params) {
  curve.validate();
  params.validate();
  const std::size_t n = curve.size();
  GeodesicCertificate cert;
  cert.endpoint_distance = distance(curve.frames.front(), curve.frames.back(), params).value;
  const double slack = params.tol * std::max(1.0, cert.endpoint_distance);

  ViolationWitness worst;
  double worst_violation = -1.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double measured = distance(curve.frames[a], curve.frames[b], params).value;
      const double expected = (curve.times[b] - curve.times[a]) * cert.endpoint_distance;
      const double violation = std::abs(measured - expected);
      cert.max_violation = std::max(cert.max_violation, violation);
      if (violation > worst_violation + slack) {
        worst_violation = violation;
        worst = {curve.times[a], curve.times[b], measured, expected};
      }
    }
  }
  cert.ok = cert.max_violation <= slack;
  if (!cert.ok) cert.witness = worst;
  return cert;
}

// ---------------------------------------------------------------------------
// Classification

struct CurveClassification {
  enum class Kind { ConvexCombination, Deviant, NotGeodesic };
  Kind kind = Kind::NotGeodesic;
  Regime regime = Regime::Open;
  GeodesicCertificate certificate;
  std::optional<Matching> matching;  // ConvexCombination: the supporting bijection; Deviant: the closest one
  double deviant_time = 0.0;         // Deviant: time of largest residual for the closest bijection
  double residual = 0.0;             // largest d(gamma_phi(t), frame(t)) for the reported bijection
  std::size_t optimal_bijections = 0;
};

inline const char* to_string(CurveClassification::Kind k) {
  switch (k) {
    case CurveClassification::Kind::ConvexCombination: return "convex-combination";
    case CurveClassification::Kind::Deviant: return "deviant";
    case CurveClassification::Kind::NotGeodesic: return "not-geodesic";
  }
  return "not-geodesic";
}

/// Certify, then compare the curve against the convex combination of every
/// optimal bijection between its endpoints.
inline CurveClassification classify_curve(const SampledCurve& curve, const MetricParams& params) {
  CurveClassification out;
  out.regime = regime_of(params.p, params.q);
  out.certificate = certify_geodesic(curve, params);
  if (!out.certificate.ok) return out;

  const Diagram& x = curve.frames.front();
  const Diagram& y = curve.frames.back();
  const std::vector<Matching> optima = enumerate_optimal_matchings(x, y, params);
  out.optimal_bijections = optima.size();
  const double slack = params.tol * std::max(1.0, out.certificate.endpoint_distance);

  bool have_best = false;
  for (const Matching& m : optima) {
    double worst = 0.0;
    double worst_t = 0.0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
      const Diagram g = convex_combination(x, y, m, curve.times[i]);
      const double r = distance(g, curve.frames[i], params).value;
      if (r > worst) {
        worst = r;
        worst_t = curve.times[i];
      }
    }
    if (!have_best || worst < out.residual) {
      have_best = true;
      out.residual = worst;
      out.deviant_time = worst_t;
      out.matching = m;
    }
    if (worst <= slack) break;
  }
  out.kind = out.residual <= slack ? CurveClassification::Kind::ConvexCombination
                                   : CurveClassification::Kind::Deviant;
  return out;
}

// ---------------------------------------------------------------------------
// Branching

/// Last sampled time up to which the curves agree, provided they disagree at
/// the next sample. Agreement means d_p[l^q] <= tol. Returns nullopt when the
/// curves agree everywhere or already differ at the first sample.
inline std::optional<double> detect_branching(const SampledCurve& a, const SampledCurve& b,
                                              const MetricParams& params) {
  a.validate();
  b.validate();
  if (a.times != b.times) throw Error(ErrorKind::Structural, "curves are sampled on different time grids");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (distance(a.frames[i], b.frames[i], params).value > params.tol) {
      if (i == 0) return std::nullopt;
      return a.times[i - 1];
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Characterisation audit

struct AuditTerm {
  Vec2 q;  // (x - psi(x_t)) / t
  Vec2 r;  // (psi(x_t) - Phi(x)) / (1 - t)
};

struct AuditReport {
  double t = 0.0;
  double positive = 0.0;  // P
  double negative = 0.0;  // N
  double bound = 0.0;     // d_p[l^q](X, Y)^p
  std::vector<AuditTerm> terms;
};

inline bool audit_supported(const MetricParams& params) {
  if (params.p.is_infinite() || params.q.is_infinite()) return false;
  const double p = params.p.value();
  const double q = params.q.value();
  return p >= 2.0 && (q == p || q == 2.0);
}

/// Splits the cost of `phi` through the intermediate diagram `mid` into the
/// convexity bound P and the defect N. `psi` matches the convex-combination
/// frame gamma_phi(t) (slots as produced by `interpolate`) to `mid`.
inline AuditReport characterization_audit(const Diagram& x, const Diagram& y, const Matching& phi,
                                          const Diagram& mid, const Matching& psi, double t,
                                          const MetricParams& params) {
  params.validate();
  if (!audit_supported(params)) {
    throw Error(ErrorKind::UnsupportedRegime, "audit covers p = q >= 2 and q = 2, p >= 2 only");
  }
  if (!(t > 0.0 && t < 1.0)) throw Error(ErrorKind::ParameterDomain, "audit time must lie in (0, 1)");

  const Interpolation path = interpolate(x, y, phi, t);
  const Diagram& frame = path.frame;
  detail::require_permutation(psi.assignment, frame.size() + mid.size());

  const double p = params.p.value();
  AuditReport rep;
  rep.t = t;

  auto add = [&](const Vec2& src, const Vec2& image, const Vec2& dst) {
    const AuditTerm term{(1.0 / t) * (src - image), (1.0 / (1.0 - t)) * (image - dst)};
    const double nq = ground_norm(term.q, params.q);
    const double nr = ground_norm(term.r, params.q);
    const double nd = ground_norm(term.q - term.r, params.q);
    rep.positive += t * std::pow(nq, p) + (1.0 - t) * std::pow(nr, p);
    rep.negative += t * (1.0 - t) * std::pow(nd, p);
    rep.terms.push_back(term);
  };

  for (std::size_t i = 0; i < path.source.size(); ++i) {
    if (!path.moving[i] || !path.frame_index[i]) continue;
    const std::size_t f = *path.frame_index[i];
    const std::size_t target = psi.assignment[f];
    const Vec2 xt = frame[f].coords();
    const Vec2 image = target < mid.size() ? mid[target].coords() : diagonal_projection(xt);
    add(path.source[i], image, path.target[i]);
  }
  // points of mid matched to the diagonal of the frame: their preimage is a
  // diagonal point that stays put under phi
  for (std::size_t k = frame.size(); k < psi.assignment.size(); ++k) {
    const std::size_t target = psi.assignment[k];
    if (target >= mid.size()) continue;
    const Vec2 m = mid[target].coords();
    const Vec2 foot = diagonal_projection(m);
    add(foot, m, foot);
  }

  rep.bound = std::pow(distance(x, y, params).value, p);
  return rep;
}

/// The matching of a diagram with itself that pairs every slot with its twin.
inline Matching identity_matching(const Diagram& d) {
  const AugmentedProblem prob = build_augmented_problem(d, d, MetricParams{});
  std::vector<std::size_t> id(prob.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  return make_matching(prob, std::move(id));
}

}  // namespace pdg
