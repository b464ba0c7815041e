#pragma once

// JSON model/state documents and CSV writers.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "gsieve/core.hpp"
#include "gsieve/dynamics.hpp"
#include "gsieve/sieve.hpp"
#include "gsieve/wigner.hpp"

namespace gsieve::io {

inline constexpr const char* kVersion = "gsieve 1.0.0";

/// %.17g
std::string format_double(double v);

/// {"m", "omega", "mu", "hbar", "lambda", "diffusion": {D_qq, D_pp, D_pq} | {Delta, d, phi}}.
/// Throws Error(MalformedInput) on missing/extra/ill-typed fields.
ModelParams model_from_json(const nlohmann::json& doc);
nlohmann::json model_to_json(const ModelParams& model);

/// {"mean": [x1, x2], "sigma": {"S11", "S12", "S22"}} or
/// {"mean": [x1, x2], "A", "aleph", "theta"}; "mean" defaults to the origin.
GaussianState state_from_json(const nlohmann::json& doc, double hbar);

nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const SieveResult& result);

/// Header t,x1,x2,S11,S12,S22,area,lin_entropy,entropy_rate.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);
/// Header aleph,theta,rate.
void write_landscape_csv(std::ostream& os, const std::vector<LandscapeRow>& rows);
/// Header x1,x2,f; row-major with x1 outer.
void write_wigner_csv(std::ostream& os, const WignerGrid& grid);

}  // namespace gsieve::io
