#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "pdg/pdg.hpp"
#include "pdg/verify.hpp"

namespace pdg::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2, kResourceGuard = 3 };

enum class Format { Json, Csv };

struct RunConfig {
  ExtendedReal p = 2.0;
  ExtendedReal q = 2.0;
  double tol = kDefaultTol;
  std::size_t grid = 33;
  std::uint64_t seed = 0;
  Format format = Format::Json;

  MetricParams metric() const {
    MetricParams m{p, q, tol};
    m.validate();
    return m;
  }
  void validate() const {
    metric();
    if (grid < 2) throw Error(ErrorKind::ParameterDomain, "--grid must be >= 2");
  }
};

using io::Json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void require_json(const RunConfig& cfg) {
  if (cfg.format != Format::Json) throw Error(ErrorKind::ParameterDomain, "csv output is only available for verify");
}

inline Json pairs_json(const Diagram& x, const Diagram& y, const Matching& m) {
  const AugmentedProblem prob = build_augmented_problem(x, y, MetricParams{});
  Json pairs = Json::array();
  for (std::size_t i = 0; i < m.assignment.size(); ++i) {
    const Slot& l = prob.left[i];
    const Slot& r = prob.right[m.assignment[i]];
    if (!l.is_real() && !r.is_real()) continue;
    Json p = Json::object();
    p["x"] = l.is_real() ? Json(l.point) : Json(nullptr);
    p["y"] = r.is_real() ? Json(r.point) : Json(nullptr);
    p["cost"] = m.pair_costs[i];
    pairs.push_back(std::move(p));
  }
  return pairs;
}

inline Json certificate_json(const GeodesicCertificate& c) {
  Json j = Json::object();
  j["ok"] = c.ok;
  j["endpoint_distance"] = c.endpoint_distance;
  j["max_violation"] = c.max_violation;
  if (c.witness) {
    j["witness"] = Json{{"s", c.witness->s},
                        {"t", c.witness->t},
                        {"measured", c.witness->measured},
                        {"expected", c.witness->expected}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline int cmd_dist(const std::string& fx, const std::string& fy, const RunConfig& cfg, std::ostream& out) {
  require_json(cfg);
  const Diagram x = io::parse_diagram(read_file(fx));
  const Diagram y = io::parse_diagram(read_file(fy));
  const MetricParams params = cfg.metric();
  const DistanceResult r = distance(x, y, params);
  Json j = Json::object();
  j["value"] = r.value;
  j["p"] = params.p.to_string();
  j["q"] = params.q.to_string();
  j["regime"] = to_string(regime_of(params.p, params.q));
  j["pairs"] = pairs_json(x, y, r.witness);
  out << j.dump(2) << '\n';
  return kOk;
}

inline int cmd_geodesic(const std::string& fx, const std::string& fy, const RunConfig& cfg, std::ostream& out) {
  require_json(cfg);
  cfg.validate();
  const Diagram x = io::parse_diagram(read_file(fx));
  const Diagram y = io::parse_diagram(read_file(fy));
  const DistanceResult r = distance(x, y, cfg.metric());
  out << io::to_json(convex_combination_curve(x, y, r.witness, cfg.grid)).dump() << '\n';
  return kOk;
}

inline int cmd_certify(const std::string& fcurve, const RunConfig& cfg, std::ostream& out) {
  require_json(cfg);
  const SampledCurve c = io::parse_curve(read_file(fcurve));
  out << certificate_json(certify_geodesic(c, cfg.metric())).dump(2) << '\n';
  return kOk;
}

inline int cmd_classify(const std::string& fcurve, const RunConfig& cfg, std::ostream& out) {
  require_json(cfg);
  const SampledCurve c = io::parse_curve(read_file(fcurve));
  const CurveClassification cls = classify_curve(c, cfg.metric());
  Json j = Json::object();
  j["kind"] = to_string(cls.kind);
  j["regime"] = to_string(cls.regime);
  j["certificate"] = certificate_json(cls.certificate);
  j["optimal_bijections"] = cls.optimal_bijections;
  if (cls.matching) {
    j["pairs"] = pairs_json(c.frames.front(), c.frames.back(), *cls.matching);
  } else {
    j["pairs"] = nullptr;
  }
  j["residual"] = cls.residual;
  if (cls.kind == CurveClassification::Kind::Deviant) {
    j["deviant_time"] = cls.deviant_time;
  } else {
    j["deviant_time"] = nullptr;
  }
  out << j.dump(2) << '\n';
  return kOk;
}

inline int cmd_gallery(const std::string& name, const gallery::Params& gp, const RunConfig& cfg, std::ostream& out) {
  require_json(cfg);
  cfg.validate();
  out << io::to_json(gallery::curve(name, gp, cfg.grid)).dump() << '\n';
  return kOk;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

inline std::string csv_number(double v) {
  if (std::isnan(v)) return "";
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

inline int cmd_verify(const std::string& suite, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  const verify::Report rep = verify::run_suite(suite, cfg.seed, cfg.grid);
  if (cfg.format == Format::Csv) {
    out << "name,params,measured,expected,pass\n";
    for (const auto& c : rep.checks) {
      out << csv_field(c.name) << ',' << csv_field(c.params) << ',' << csv_number(c.measured) << ','
          << csv_number(c.expected) << ',' << (c.pass ? "true" : "false") << '\n';
    }
  } else {
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
      checks.push_back(Json{{"name", c.name},
                            {"params", c.params},
                            {"measured", c.measured},
                            {"expected", c.expected},
                            {"pass", c.pass}});
    }
    Json j = Json::object();
    j["suite"] = suite;
    j["seed"] = cfg.seed;
    j["pass"] = rep.all_pass();
    j["checks"] = std::move(checks);
    out << j.dump(2) << '\n';
  }
  if (const verify::Check* f = rep.first_failure()) {
    err << "verification failed: " << f->name << " [" << f->params << "] measured " << csv_number(f->measured)
        << ", expected " << csv_number(f->expected) << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

/// Map a library error to the CLI exit status.
inline int exit_code_for(const Error& e) {
  return e.kind() == ErrorKind::SizeGuard ? kResourceGuard : kInputError;
}

}  // namespace pdg::cli
