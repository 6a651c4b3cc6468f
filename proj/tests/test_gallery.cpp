#include <gtest/gtest.h>

#include "pdg/gallery.hpp"
#include "pdg/geodesics.hpp"

using namespace pdg;

namespace {

double gap(const Diagram& a, const Diagram& b) { return distance(a, b, {2.0, 2.0}).value; }

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParameterDomain);
    return e.what();
  }
  ADD_FAILURE() << "no error raised";
  return {};
}

const gallery::Params kBase{};  // k = 10, j = 3, l = 1

}  // namespace

TEST(Gallery, InfinityFamilyFrames) {
  EXPECT_EQ(gap(gallery::frame("mu_infty", kBase, 0.0), make_diagram({{0, 10}, {0, 3}})), 0.0);
  EXPECT_EQ(gap(gallery::frame("nu_infty", kBase, 0.0), make_diagram({{0, 10}, {0, 1}})), 0.0);
  EXPECT_EQ(gap(gallery::frame("omega_infty", kBase, 0.0), make_diagram({{0, 10}})), 0.0);
  EXPECT_LE(gap(gallery::frame("omega_infty", kBase, 0.5), make_diagram({{2.5, 7.5}, {0, 3}})), 1e-12);
  // the small point reaches the diagonal at t = 1/3
  EXPECT_EQ(gallery::frame("mu_infty", kBase, 1.0 / 3.0).size(), 1u);
  for (const char* name : {"mu_infty", "nu_infty", "omega_infty"}) {
    EXPECT_TRUE(gallery::frame(name, kBase, 1.0).empty()) << name;
  }
}

TEST(Gallery, OneFamilyFrames) {
  EXPECT_EQ(gap(gallery::frame("mu_one", kBase, 0.0), make_diagram({{0, 10}, {1, 9}})), 0.0);
  EXPECT_EQ(gap(gallery::frame("mu_one", kBase, 0.5), make_diagram({{1, 10}, {1, 10}})), 0.0);
  EXPECT_EQ(gap(gallery::frame("mu_one", kBase, 1.0), make_diagram({{1, 11}, {2, 10}})), 0.0);
  gallery::Params gp = kBase;
  gp.r = 0.5;
  EXPECT_EQ(gap(gallery::frame("nu_r_one", gp, 1.0), make_diagram({{1.5, 10.5}, {1.5, 10.5}})), 0.0);
  EXPECT_EQ(gap(gallery::frame("nu_r_one", gp, 0.75), make_diagram({{1, 10.5}, {1, 10.5}})), 0.0);
  // each staircase has covered its first leg (length 1/2) and half of the diagonal leg
  EXPECT_EQ(gap(gallery::frame("corner_one", kBase, 0.5), make_diagram({{0.75, 10.25}, {1.25, 9.75}})), 0.0);
  EXPECT_EQ(gap(gallery::frame("corner_one", kBase, 1.0), make_diagram({{1, 11}, {2, 10}})), 0.0);
}

TEST(Gallery, TrajectoryIndices) {
  const Diagram d = gallery::frame("mu_infty", kBase, 0.1);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].index, 0u);
  EXPECT_EQ(d[1].index, 1u);
}

TEST(Gallery, ConstraintErrors) {
  gallery::Params tight = kBase;
  tight.k = 9;
  EXPECT_NE(message_of([&] { gallery::frame("mu_infty", tight, 0.0); }).find("k > 3j"), std::string::npos);
  EXPECT_NE(message_of([&] { gallery::frame("omega_infty", tight, 0.0); }).find("k > 3j"), std::string::npos);
  gallery::Params wide = kBase;
  wide.l = 3;
  EXPECT_NE(message_of([&] { gallery::frame("nu_infty", wide, 0.0); }).find("0 < l < j"), std::string::npos);
  gallery::Params small = kBase;
  small.k = 7;
  EXPECT_NE(message_of([&] { gallery::frame("mu_one", small, 0.0); }).find("k >= 8"), std::string::npos);
  gallery::Params far = kBase;
  far.r = 1.5;
  EXPECT_NE(message_of([&] { gallery::frame("nu_r_one", far, 0.0); }).find("0 <= r <= 1"), std::string::npos);
  const std::string unknown = message_of([&] { gallery::frame("zeta", kBase, 0.0); });
  EXPECT_NE(unknown.find("omega_infty"), std::string::npos);
  message_of([&] { gallery::frame("mu_one", kBase, 1.5); });
}

TEST(Gallery, GeodesicsInTheirRegimes) {
  for (const ExtendedReal& q : {ExtendedReal(1.0), ExtendedReal(2.0), kInfinity}) {
    for (const char* name : {"mu_infty", "nu_infty", "omega_infty"}) {
      const auto cert = certify_geodesic(gallery::curve(name, kBase, 17), {kInfinity, q});
      EXPECT_TRUE(cert.ok) << name << " q=" << q.to_string();
    }
  }
  for (const char* name : {"mu_one", "nu_r_one", "corner_one"}) {
    EXPECT_TRUE(certify_geodesic(gallery::curve(name, kBase, 17), {1.0, 1.0}).ok) << name;
  }
}

TEST(Gallery, CornerCurveIsDeviant) {
  const auto cls = classify_curve(gallery::curve("corner_one", kBase, 17), {1.0, 1.0});
  EXPECT_EQ(cls.kind, CurveClassification::Kind::Deviant);
  EXPECT_EQ(cls.optimal_bijections, 2u);
  EXPECT_EQ(cls.regime, Regime::Counterexample);
}

TEST(Gallery, MuOneTracesTheCrossBijection) {
  // as point sets, mu_one(t) = {(2t, k), (1, k - 1 + 2t)}: the convex
  // combination of (0,k) -> (2,k) and (1,k-1) -> (1,k+1)
  const Diagram x = make_diagram({{0, 10}, {1, 9}});
  const Diagram y = make_diagram({{2, 10}, {1, 11}});
  const AugmentedProblem prob = build_augmented_problem(x, y, {1.0, 1.0});
  const Matching cross = make_matching(prob, {0, 1, 2, 3});
  EXPECT_EQ(cross.total, distance(x, y, {1.0, 1.0}).value);
  for (double t : uniform_times(17)) {
    EXPECT_LE(gap(gallery::frame("mu_one", kBase, t), convex_combination(x, y, cross, t)), 1e-12) << t;
  }
}
