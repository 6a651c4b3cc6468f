#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using pdg::cli::RunConfig;

pdg::ExtendedReal parse_exponent(const std::string& text, const char* flag) {
  try {
    return pdg::ExtendedReal::parse(text);
  } catch (const pdg::Error& e) {
    throw pdg::Error(pdg::ErrorKind::Parse, std::string(flag) + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact d_p[l^q] distances and geodesics between finite persistence diagrams", "pdg"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string p_text = "2", q_text = "2", format_text = "json";
  std::optional<std::string> out_path;
  RunConfig cfg;
  app.add_option("--p", p_text, "outer exponent p in [1, 64] or inf")->capture_default_str();
  app.add_option("--q", q_text, "ground norm exponent q >= 1 or inf")->capture_default_str();
  app.add_option("--tol", cfg.tol, "absolute comparison tolerance")->capture_default_str();
  app.add_option("--grid", cfg.grid, "number of uniform time samples")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomised verification")->capture_default_str();
  app.add_option("--format", format_text, "json or csv (csv: verify only)")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "write the result to this file instead of stdout");

  std::string fx, fy, fcurve, name, suite;
  pdg::gallery::Params gp;

  auto* dist = app.add_subcommand("dist", "distance and an optimal matching");
  dist->add_option("X", fx, "diagram JSON")->required();
  dist->add_option("Y", fy, "diagram JSON")->required();

  auto* geo = app.add_subcommand("geodesic", "convex-combination geodesic of an optimal matching");
  geo->add_option("X", fx, "diagram JSON")->required();
  geo->add_option("Y", fy, "diagram JSON")->required();

  auto* cert = app.add_subcommand("certify", "check the geodesic identity on every sampled pair");
  cert->add_option("curve", fcurve, "sampled curve JSON")->required();

  auto* cls = app.add_subcommand("classify", "convex-combination / deviant / not a geodesic");
  cls->add_option("curve", fcurve, "sampled curve JSON")->required();

  auto* gal = app.add_subcommand("gallery", "sample one of the explicit branching/deviant curves");
  gal->add_option("name", name, "mu_infty, nu_infty, omega_infty, mu_one, nu_r_one, corner_one")->required();
  gal->add_option("--k", gp.k, "")->capture_default_str();
  gal->add_option("--j", gp.j, "")->capture_default_str();
  gal->add_option("--l", gp.l, "")->capture_default_str();
  gal->add_option("--r", gp.r, "")->capture_default_str();
  gal->add_option("--c", gp.c, "")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite, "metric, ot, inequalities, gallery or all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : pdg::cli::kInputError;
  }

  std::ostringstream buffer;
  int code = pdg::cli::kOk;
  try {
    cfg.p = parse_exponent(p_text, "--p");
    cfg.q = parse_exponent(q_text, "--q");
    cfg.format = format_text == "csv" ? pdg::cli::Format::Csv : pdg::cli::Format::Json;
    if (*dist) code = pdg::cli::cmd_dist(fx, fy, cfg, buffer);
    if (*geo) code = pdg::cli::cmd_geodesic(fx, fy, cfg, buffer);
    if (*cert) code = pdg::cli::cmd_certify(fcurve, cfg, buffer);
    if (*cls) code = pdg::cli::cmd_classify(fcurve, cfg, buffer);
    if (*gal) code = pdg::cli::cmd_gallery(name, gp, cfg, buffer);
    if (*ver) code = pdg::cli::cmd_verify(suite, cfg, buffer, std::cerr);
  } catch (const pdg::Error& e) {
    std::cerr << "pdg: " << e.what() << '\n';
    return pdg::cli::exit_code_for(e);
  }

  if (out_path) {
    std::ofstream f(*out_path, std::ios::binary);
    if (!f) {
      std::cerr << "pdg: cannot write \"" << *out_path << "\"\n";
      return pdg::cli::kInputError;
    }
    f << buffer.str();
  } else {
    std::cout << buffer.str();
  }
  return code;
}
