#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "pdg/gallery.hpp"
#include "pdg/geodesics.hpp"
#include "pdg/inequalities.hpp"
#include "pdg/matching.hpp"
#include "pdg/ot.hpp"

// Self-contained verification suites behind `pdg verify`. Each check records
// the worst measured quantity against its threshold.

namespace pdg::verify {

struct Check {
  std::string name;
  std::string params;
  double measured = 0.0;
  double expected = 0.0;
  bool pass = false;
};

struct Report {
  std::vector<Check> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
  const Check* first_failure() const {
    for (const Check& c : checks) {
      if (!c.pass) return &c;
    }
    return nullptr;
  }
  void add(std::string name, std::string params, double measured, double expected, bool pass) {
    checks.push_back({std::move(name), std::move(params), measured, expected, pass});
  }
  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

using Rng = std::mt19937_64;

/// Random diagram with `count` points, births in [0, 10), persistence in
/// [0.1, 5). Roughly one in five points duplicates an earlier one so
/// multiplicities are exercised.
inline Diagram random_diagram(Rng& rng, std::size_t count) {
  std::uniform_real_distribution<double> birth(0.0, 10.0), pers(0.1, 5.0), coin(0.0, 1.0);
  Diagram d;
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0 && coin(rng) < 0.2) {
      Point dup = d.points[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)];
      dup.index = i;
      d.points.push_back(dup);
      continue;
    }
    const double b = birth(rng);
    d.points.push_back({b, b + pers(rng), i});
  }
  return d;
}

/// Pair of diagrams with |X| + |Y| <= max_total.
inline std::pair<Diagram, Diagram> random_pair(Rng& rng, std::size_t max_total) {
  std::uniform_int_distribution<std::size_t> total(0, max_total);
  const std::size_t n = total(rng);
  const std::size_t nx = std::uniform_int_distribution<std::size_t>(0, n)(rng);
  return {random_diagram(rng, nx), random_diagram(rng, n - nx)};
}

inline ineq::VectorPair random_vectors(Rng& rng, std::size_t max_dim = 16) {
  const std::size_t dim = std::uniform_int_distribution<std::size_t>(1, max_dim)(rng);
  std::uniform_real_distribution<double> entry(-10.0, 10.0);
  ineq::VectorPair x;
  for (std::size_t i = 0; i < dim; ++i) {
    x.v.push_back(entry(rng));
    x.w.push_back(entry(rng));
  }
  return x;
}

inline const std::vector<ExtendedReal>& p_grid() {
  static const std::vector<ExtendedReal> g = {1.0, 1.5, 2.0, 3.0, kInfinity};
  return g;
}
inline const std::vector<ExtendedReal>& q_grid() {
  static const std::vector<ExtendedReal> g = {1.0, 2.0, kInfinity};
  return g;
}

inline std::string pq(ExtendedReal p, ExtendedReal q) { return "p=" + p.to_string() + " q=" + q.to_string(); }

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// ---------------------------------------------------------------------------

inline Report metric_suite(std::uint64_t seed, std::size_t trials = 50) {
  Report rep;
  Rng rng(seed);
  const Diagram x4 = make_diagram({{0, 10}, {1, 9}});
  const Diagram y4 = make_diagram({{1, 11}, {2, 10}});
  const double d11 = distance(x4, y4, {1.0, 1.0}).value;
  rep.add("value/d11-four-point", "p=1 q=1", d11, 4.0, std::abs(d11 - 4.0) <= 1e-12);

  for (const ExtendedReal& q : q_grid()) {
    const double got = distance(make_diagram({{0, 4}}), Diagram{}, {kInfinity, q}).value;
    const double want = std::exp2(q.reciprocal() - 1.0) * 4.0;
    rep.add("value/diagonal-distance", pq(kInfinity, q) + " k=4", got, want, std::abs(got - want) <= 1e-12);
  }

  const Diagram xi{{{0, 1, 1}}};
  const Diagram zi{{{0, 1, 2}}};
  for (const ExtendedReal& p : p_grid()) {
    for (const ExtendedReal& q : q_grid()) {
      const MetricParams params{p, q};
      double worst = 0.0;
      for (std::size_t i = 0; i < trials; ++i) {
        auto [x, y] = random_pair(rng, 6);
        worst = std::max(worst, std::abs(distance(x, y, params).value - brute_force_distance(x, y, params)));
      }
      rep.add("oracle-equivalence", pq(p, q), worst, 1e-9, worst <= 1e-9);
      const double zero = distance(xi, zi, params).value;
      rep.add("index-differing-zero", pq(p, q), zero, 0.0, zero == 0.0);
    }
  }

  for (const ExtendedReal& p : p_grid()) {
    const MetricParams params{p, 2.0};
    double worst_triangle = -std::numeric_limits<double>::infinity();
    double worst_symmetry = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
      const Diagram a = random_diagram(rng, 3), b = random_diagram(rng, 3), c = random_diagram(rng, 3);
      const double ab = distance(a, b, params).value, bc = distance(b, c, params).value;
      const double ac = distance(a, c, params).value, ba = distance(b, a, params).value;
      worst_triangle = std::max(worst_triangle, ac - ab - bc);
      worst_symmetry = std::max(worst_symmetry, std::abs(ab - ba));
    }
    rep.add("triangle-inequality", pq(p, 2.0), worst_triangle, 1e-9, worst_triangle <= 1e-9);
    rep.add("symmetry", pq(p, 2.0), worst_symmetry, 1e-12, worst_symmetry <= 1e-12);
  }
  return rep;
}

// ---------------------------------------------------------------------------

inline Report ot_suite(std::uint64_t seed, std::size_t trials = 100) {
  Report rep;
  Rng rng(seed);
  {
    const auto r = ot::verify_ot_equivalence(make_diagram({{0, 10}, {1, 9}}), make_diagram({{1, 11}, {2, 10}}), 2.0);
    rep.add("ot-equivalence/four-point", "p=2 q=2", std::abs(r.assignment_value - r.coupling_min_value), 1e-9,
            r.agree);
  }
  for (double p : {1.0, 2.0, 3.0}) {
    double worst = 0.0;
    bool all = true;
    for (std::size_t i = 0; i < trials; ++i) {
      auto [x, y] = random_pair(rng, 5);
      const auto r = ot::verify_ot_equivalence(x, y, p);
      worst = std::max(worst, std::abs(r.assignment_value - r.coupling_min_value));
      all = all && r.agree;
    }
    rep.add("ot-equivalence/random", pq(p, 2.0), worst, 1e-9, all);
  }
  {
    double worst = -std::numeric_limits<double>::infinity();
    std::uniform_real_distribution<double> pos(0.01, 1.0);
    for (std::size_t i = 0; i < 2 * trials; ++i) {
      auto [x, y] = random_pair(rng, 5);
      const MetricParams params{2.0, 2.0};
      const AugmentedProblem prob = build_augmented_problem(x, y, params);
      assignment::SquareMatrix<double> m(prob.size());
      for (std::size_t a = 0; a < prob.size(); ++a) {
        for (std::size_t b = 0; b < prob.size(); ++b) m(a, b) = pos(rng);
      }
      const ot::Coupling c = ot::balance(std::move(m));
      const double gap = distance(x, y, params).value - ot::transport_cost(prob, c, 2.0);
      worst = std::max(worst, gap);
    }
    rep.add("birkhoff-lower-bound", "p=2 q=2", worst, 1e-9, worst <= 1e-9);
  }
  return rep;
}

// ---------------------------------------------------------------------------

inline Report inequality_suite(std::uint64_t seed, std::size_t draws = 1000) {
  Report rep;
  Rng rng(seed);
  std::uniform_int_distribution<int> level(1, 6);
  auto dyadic = [&]() {
    const int b = level(rng);
    const int den = 1 << b;
    const int num = std::uniform_int_distribution<int>(1, den - 1)(rng);
    return static_cast<double>(num) / den;
  };
  auto record = [&](const std::string& name, const std::string& params, double worst) {
    rep.add(name, params, worst, -1e-12, worst >= -1e-12);
  };

  for (double p : {2.0, 2.5, 3.0, 4.0}) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < draws; ++i) worst = std::min(worst, ineq::clarkson_slack(random_vectors(rng), p));
    record("clarkson", "p=" + ExtendedReal(p).to_string(), worst);
  }
  for (double p : {2.0, 2.5, 3.0, 4.0}) {
    const double c = std::exp2(2.0 - p);
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < draws; ++i) {
      worst = std::min(worst, ineq::convexity_defect_p_slack(random_vectors(rng), 0.5, p, c));
    }
    record("convexity-defect-p", "p=" + ExtendedReal(p).to_string() + " t=0.5 C=2^(2-p)", worst);

    // informational: largest C seen at a non-midpoint dyadic time
    std::vector<ineq::VectorPair> sample;
    for (std::size_t i = 0; i < 200; ++i) sample.push_back(random_vectors(rng));
    const double emp = ineq::empirical_defect_constant(sample, 0.25, p);
    rep.add("convexity-defect-p/empirical-C", "p=" + ExtendedReal(p).to_string() + " t=0.25", emp, kNaN,
            emp > 0.0);
  }
  for (double p : {1.1, 1.5, 2.0}) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < draws; ++i) worst = std::min(worst, ineq::bcl_slack(random_vectors(rng), p));
    record("bcl", "p=" + ExtendedReal(p).to_string(), worst);
  }
  for (double p : {1.1, 1.5}) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < draws; ++i) {
      worst = std::min(worst, ineq::convexity_defect_2_slack(random_vectors(rng), dyadic(), p));
    }
    record("convexity-defect-2", "p=" + ExtendedReal(p).to_string() + " dyadic t", worst);
  }
  for (double p : {1.5, 2.0, 3.0}) {
    double worst = std::numeric_limits<double>::infinity();
    std::uniform_real_distribution<double> weight(0.0, 10.0), gap(0.05, 1.0);
    for (std::size_t i = 0; i < draws; ++i) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
      std::vector<double> a(n), t(n + 1);
      t[0] = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
      for (std::size_t k = 0; k < n; ++k) {
        a[k] = weight(rng);
        t[k + 1] = t[k] + gap(rng);
      }
      worst = std::min(worst, ineq::jensen_partition_slack(a, t, p));
    }
    record("jensen-partition", "p=" + ExtendedReal(p).to_string(), worst);
  }

  // equality cases
  {
    ineq::VectorPair x = random_vectors(rng);
    x.w = x.v;
    double worst = 0.0;
    for (double p : {2.0, 2.5, 3.0, 4.0}) worst = std::max(worst, std::abs(ineq::clarkson_slack(x, p)));
    for (double p : {2.0, 3.0}) {
      worst = std::max(worst, std::abs(ineq::convexity_defect_p_slack(x, 0.3, p, 1.0)));
    }
    for (double p : {1.1, 1.5, 2.0}) worst = std::max(worst, std::abs(ineq::convexity_defect_2_slack(x, 0.3, p)));
    const ineq::VectorPair y = random_vectors(rng);
    worst = std::max(worst, std::abs(ineq::clarkson_slack(y, 2.0)));
    worst = std::max(worst, std::abs(ineq::bcl_slack(y, 2.0)));
    worst = std::max(worst, std::abs(ineq::convexity_defect_p_slack(y, 0.3, 2.0, 1.0)));
    worst = std::max(worst, std::abs(ineq::convexity_defect_2_slack(y, 0.3, 2.0)));
    ineq::VectorPair z = y;
    std::fill(z.w.begin(), z.w.end(), 0.0);
    worst = std::max(worst, std::abs(ineq::bcl_slack(z, 1.5)));
    const std::vector<double> t = {0.0, 0.25, 0.5, 1.0};
    const std::vector<double> a = {0.5, 0.5, 1.0};  // proportional to the gaps
    for (double p : {1.5, 2.0, 3.0}) worst = std::max(worst, std::abs(ineq::jensen_partition_slack(a, t, p)));
    rep.add("equality-cases", "all lemmas", worst, 1e-12, worst <= 1e-12);
  }
  return rep;
}

// ---------------------------------------------------------------------------

inline Report gallery_suite(std::size_t grid = 33) {
  Report rep;
  const gallery::Params base;  // k = 10, j = 3, l = 1
  const MetricParams one{1.0, 1.0};

  for (const ExtendedReal& q : q_grid()) {
    const MetricParams params{kInfinity, q};
    for (const char* name : {"mu_infty", "nu_infty", "omega_infty"}) {
      const auto cert = certify_geodesic(gallery::curve(name, base, grid), params);
      rep.add(std::string("geodesic/") + name, pq(kInfinity, q), cert.max_violation, 1e-9,
              cert.ok && cert.max_violation <= 1e-9);
    }
    for (const char* name : {"omega_infty", "mu_infty", "nu_infty"}) {
      const auto cls = classify_curve(gallery::curve(name, base, grid), params);
      rep.add(std::string("deviant/") + name, pq(kInfinity, q), cls.residual, params.tol,
              cls.kind == CurveClassification::Kind::Deviant);
    }
  }
  for (double r : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    gallery::Params gp = base;
    gp.r = r;
    const auto cert = certify_geodesic(gallery::curve("nu_r_one", gp, grid), one);
    rep.add("geodesic/nu_r_one", "p=1 q=1 r=" + ExtendedReal(r).to_string(), cert.max_violation, 1e-9, cert.ok);
  }
  for (const char* name : {"mu_one", "corner_one"}) {
    const auto cert = certify_geodesic(gallery::curve(name, base, grid), one);
    rep.add(std::string("geodesic/") + name, "p=1 q=1", cert.max_violation, 1e-9, cert.ok);
  }
  {
    const auto cls = classify_curve(gallery::curve("corner_one", base, grid), one);
    rep.add("deviant/corner_one", "p=1 q=1 c=0.5", cls.residual, one.tol,
            cls.kind == CurveClassification::Kind::Deviant);
  }
  {
    // mu_one traces the same point sets as the convex combination of the
    // cross bijection (0,k)->(2,k), (1,k-1)->(1,k+1)
    const auto cls = classify_curve(gallery::curve("mu_one", base, grid), one);
    rep.add("mu_one/cross-convex-combination", "p=1 q=1", cls.residual, one.tol,
            cls.kind == CurveClassification::Kind::ConvexCombination);
  }
  {
    const auto mu = reversed(gallery::curve("mu_infty", base, grid));
    const auto nu = reversed(gallery::curve("nu_infty", base, grid));
    const auto t0 = detect_branching(mu, nu, {kInfinity, 2.0});
    const double step = 1.0 / static_cast<double>(grid - 1);
    const double got = t0 ? 1.0 - *t0 : kNaN;
    rep.add("branching/mu-nu-infty", "p=inf q=2 (original time)", got, 1.0 / 3.0,
            t0 && std::abs(got - 1.0 / 3.0) <= step);
  }
  for (auto [r1, r2] : {std::pair{0.0, 0.5}, std::pair{0.0, 1.0}}) {
    gallery::Params a = base, b = base;
    a.r = r1;
    b.r = r2;
    const auto t0 = detect_branching(gallery::curve("nu_r_one", a, grid), gallery::curve("nu_r_one", b, grid), one);
    const double step = 1.0 / static_cast<double>(grid - 1);
    rep.add("branching/nu_r_one", "r=" + ExtendedReal(r1).to_string() + "," + ExtendedReal(r2).to_string(),
            t0 ? *t0 : kNaN, 0.5, t0 && std::abs(*t0 - 0.5) <= step);
  }

  // regime contrasts: the same curves stop being geodesics at p = q = 2
  const MetricParams two{2.0, 2.0};
  {
    const auto cert = certify_geodesic(gallery::curve("omega_infty", base, grid), two);
    const bool witness_ok = cert.witness && cert.witness->s == 0.0 && cert.witness->t == 0.5 &&
                            std::abs(cert.witness->measured - std::sqrt(17.0)) <= 1e-6 &&
                            std::abs(cert.witness->expected - 10.0 / (2.0 * std::sqrt(2.0))) <= 1e-6;
    rep.add("contrast/omega_infty", "p=2 q=2", cert.witness ? cert.witness->measured : kNaN, std::sqrt(17.0),
            !cert.ok && witness_ok);
  }
  {
    const auto cert = certify_geodesic(gallery::curve("mu_one", base, grid), two);
    const bool witness_ok = cert.witness && cert.witness->s == 0.0 && cert.witness->t == 0.5 &&
                            std::abs(cert.witness->measured - std::sqrt(2.0)) <= 1e-6 &&
                            std::abs(cert.witness->expected - 1.0) <= 1e-6;
    rep.add("contrast/mu_one", "p=2 q=2", cert.witness ? cert.witness->measured : kNaN, std::sqrt(2.0),
            !cert.ok && witness_ok);
  }
  return rep;
}

inline Report run_suite(const std::string& suite, std::uint64_t seed, std::size_t grid) {
  if (suite == "metric") return metric_suite(seed);
  if (suite == "ot") return ot_suite(seed);
  if (suite == "inequalities") return inequality_suite(seed);
  if (suite == "gallery") return gallery_suite(grid);
  if (suite == "all") {
    Report all = metric_suite(seed);
    all.append(ot_suite(seed));
    all.append(inequality_suite(seed));
    all.append(gallery_suite(grid));
    return all;
  }
  throw Error(ErrorKind::ParameterDomain, "unknown suite \"" + suite + "\"; valid: metric, ot, inequalities, gallery, all");
}

}  // namespace pdg::verify
