#include "gsieve/io.hpp"

#include <cstdio>
#include <ostream>
#include <set>

#include "gsieve/decomposition.hpp"
#include "gsieve/error.hpp"

namespace gsieve::io {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

double number(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) malformed(std::string("missing field '") + key + "'");
  const auto& v = doc.at(key);
  if (!v.is_number()) malformed(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

void reject_unknown(const json& doc, const std::set<std::string>& allowed, const char* where) {
  for (const auto& [key, _] : doc.items())
    if (!allowed.contains(key)) malformed(std::string("unknown field '") + key + "' in " + where);
}

}  // namespace

ModelParams model_from_json(const json& doc) {
  if (!doc.is_object()) malformed("model document must be a JSON object");
  reject_unknown(doc, {"m", "omega", "mu", "hbar", "lambda", "diffusion"}, "model");

  ModelParams p;
  p.m = number(doc, "m");
  p.omega = number(doc, "omega");
  p.mu = number(doc, "mu");
  p.hbar = number(doc, "hbar");
  p.lambda = number(doc, "lambda");

  if (!doc.contains("diffusion") || !doc.at("diffusion").is_object())
    malformed("missing object field 'diffusion'");
  const json& diff = doc.at("diffusion");
  const bool raw = diff.contains("D_qq") || diff.contains("D_pp") || diff.contains("D_pq");
  const bool decomposed = diff.contains("Delta") || diff.contains("d") || diff.contains("phi");
  if (raw == decomposed)
    malformed("diffusion must be exactly one of {D_qq, D_pp, D_pq} or {Delta, d, phi}");

  if (raw) {
    reject_unknown(diff, {"D_qq", "D_pp", "D_pq"}, "diffusion");
    p.D_qq = number(diff, "D_qq");
    p.D_pp = number(diff, "D_pp");
    p.D_pq = number(diff, "D_pq");
  } else {
    reject_unknown(diff, {"Delta", "d", "phi"}, "diffusion");
    const DiffDecomposition dec{number(diff, "Delta"), number(diff, "d"), number(diff, "phi")};
    if (!(dec.Delta >= 0.0) || !(dec.d > 0.0)) malformed("decomposed diffusion needs Delta >= 0, d > 0");
    if (!(p.m > 0.0) || !(p.omega > 0.0)) malformed("m and omega must be positive");
    set_from_scaled_diffusion(p, compose_diffusion(dec, p.hbar));
  }
  return p;
}

json model_to_json(const ModelParams& p) {
  return {{"m", p.m},
          {"omega", p.omega},
          {"mu", p.mu},
          {"hbar", p.hbar},
          {"lambda", p.lambda},
          {"diffusion", {{"D_qq", p.D_qq}, {"D_pp", p.D_pp}, {"D_pq", p.D_pq}}}};
}

GaussianState state_from_json(const json& doc, double hbar) {
  if (!doc.is_object()) malformed("initial_state must be a JSON object");
  reject_unknown(doc, {"mean", "sigma", "A", "aleph", "theta"}, "initial_state");

  GaussianState s;
  if (doc.contains("mean")) {
    const auto& m = doc.at("mean");
    if (!m.is_array() || m.size() != 2 || !m[0].is_number() || !m[1].is_number())
      malformed("mean must be an array of two numbers");
    s.mean = {m[0].get<double>(), m[1].get<double>()};
  }

  const bool explicit_sigma = doc.contains("sigma");
  const bool decomposed = doc.contains("A") || doc.contains("aleph") || doc.contains("theta");
  if (explicit_sigma == decomposed)
    malformed("initial_state needs exactly one of 'sigma' or {A, aleph, theta}");
  if (explicit_sigma) {
    const json& sig = doc.at("sigma");
    reject_unknown(sig, {"S11", "S12", "S22"}, "sigma");
    s.sigma = Mat2::symmetric(number(sig, "S11"), number(sig, "S12"), number(sig, "S22"));
  } else {
    const CovDecomposition dec{number(doc, "A"), number(doc, "aleph"), number(doc, "theta")};
    if (!(dec.area > 0.0) || !(dec.aleph > 0.0)) malformed("initial_state needs A > 0, aleph > 0");
    s.sigma = compose(dec, hbar);
  }
  return s;
}

json to_json(const ValidationReport& r) {
  return {{"version", kVersion},
          {"passed", r.passed()},
          {"checks",
           {{"m_positive", r.mass_positive},
            {"omega_positive", r.omega_positive},
            {"hbar_positive", r.hbar_positive},
            {"D_qq_nonnegative", r.D_qq_nonnegative},
            {"D_pp_nonnegative", r.D_pp_nonnegative},
            {"positivity_constraint", r.positivity_constraint}}},
          {"slack", r.slack},
          {"tolerance", r.tolerance},
          {"Delta", r.delta},
          {"anti_damped", r.anti_damped},
          {"drift",
           {{"hurwitz", r.stability.hurwitz},
            {"oscillatory", r.stability.oscillatory},
            {"re_eigen_max", r.stability.re_max},
            {"re_eigen_min", r.stability.re_min}}},
          {"failures", r.failures},
          {"warnings", r.warnings}};
}

json to_json(const SieveResult& r) {
  return {{"version", kVersion},
          {"aleph_star", r.analytic.aleph_star},
          {"theta_star", r.analytic.theta_star},
          {"min_rate", r.analytic.min_rate},
          {"degenerate_angle", r.analytic.degenerate_angle},
          {"grid",
           {{"n_aleph", r.grid_spec.n_aleph},
            {"n_theta", r.grid_spec.n_theta},
            {"aleph_range", {r.grid_spec.aleph_lo, r.grid_spec.aleph_hi}},
            {"i_aleph", r.grid.i_aleph},
            {"j_theta", r.grid.j_theta},
            {"aleph", r.grid.aleph},
            {"theta", r.grid.theta},
            {"rate", r.grid.rate},
            {"canonical_aleph", r.grid.canonical.aleph},
            {"canonical_theta", r.grid.canonical.theta},
            {"aleph_log_step", r.grid.aleph_log_step},
            {"theta_step", r.grid.theta_step},
            {"refined_aleph", r.refined.aleph},
            {"refined_theta", r.refined.theta},
            {"refined_rate", r.refined.rate},
            {"refine_levels", r.refined.levels}}},
          {"delta",
           {{"aleph", r.delta_aleph}, {"theta", r.delta_theta}, {"rate", r.delta_rate}}}};
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,x1,x2,S11,S12,S22,area,lin_entropy,entropy_rate\n";
  for (const auto& s : traj.samples) {
    os << format_double(s.t) << ',' << format_double(s.state.mean.x1) << ','
       << format_double(s.state.mean.x2) << ',' << format_double(s.state.sigma.a11) << ','
       << format_double(s.state.sigma.a12) << ',' << format_double(s.state.sigma.a22) << ','
       << format_double(s.entropy.area) << ',' << format_double(s.entropy.lin_entropy) << ','
       << format_double(s.entropy.entropy_rate) << '\n';
  }
}

void write_landscape_csv(std::ostream& os, const std::vector<LandscapeRow>& rows) {
  os << "aleph,theta,rate\n";
  for (const auto& r : rows)
    os << format_double(r.aleph) << ',' << format_double(r.theta) << ',' << format_double(r.rate)
       << '\n';
}

void write_wigner_csv(std::ostream& os, const WignerGrid& g) {
  os << "x1,x2,f\n";
  const std::size_t n2 = g.x2s.size();
  for (std::size_t i = 0; i < g.x1s.size(); ++i)
    for (std::size_t j = 0; j < n2; ++j)
      os << format_double(g.x1s[i]) << ',' << format_double(g.x2s[j]) << ','
         << format_double(g.values[i * n2 + j]) << '\n';
}

}  // namespace gsieve::io
