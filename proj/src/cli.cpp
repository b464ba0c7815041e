#include "gsieve/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gsieve/core.hpp"
#include "gsieve/decomposition.hpp"
#include "gsieve/dynamics.hpp"
#include "gsieve/entropy.hpp"
#include "gsieve/error.hpp"
#include "gsieve/io.hpp"
#include "gsieve/kernels.hpp"
#include "gsieve/sieve.hpp"
#include "gsieve/wigner.hpp"

namespace gsieve::cli {

using nlohmann::json;

namespace {

class ConstraintViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    malformed("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

const json& section(const json& config, const char* key) {
  static const json empty = json::object();
  if (!config.contains(key)) return empty;
  const json& s = config.at(key);
  if (!s.is_object()) malformed(std::string("'") + key + "' must be an object");
  return s;
}

template <class T>
T get_or(const json& s, const char* key, T fallback) {
  if (!s.contains(key)) return fallback;
  try {
    return s.at(key).get<T>();
  } catch (const json::exception&) {
    malformed(std::string("field '") + key + "' has the wrong type");
  }
}

double required_number(const json& s, const char* where, const char* key) {
  if (!s.contains(key) || !s.at(key).is_number())
    malformed(std::string("missing numeric field '") + where + "." + key + "'");
  return s.at(key).get<double>();
}

std::size_t count_field(const json& s, const char* key, std::size_t fallback) {
  if (!s.contains(key)) return fallback;
  const json& v = s.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    malformed(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

ModelParams load_model(const json& config) {
  if (!config.contains("model")) malformed("config has no 'model'");
  const json& m = config.at("model");
  if (m.is_string()) return io::model_from_json(read_json_file(m.get<std::string>()));
  return io::model_from_json(m);
}

ModelParams load_valid_model(const json& config) {
  const ModelParams model = load_model(config);
  const ValidationReport report = validate(model);
  if (!report.passed()) {
    std::string msg = "model fails validation:";
    for (const auto& f : report.failures) msg += " " + f + ";";
    throw ConstraintViolation(msg);
  }
  return model;
}

GaussianState load_state(const json& config, double hbar) {
  if (!config.contains("initial_state")) malformed("config has no 'initial_state'");
  return io::state_from_json(config.at("initial_state"), hbar);
}

std::filesystem::path output_path(const json& config, const std::string& suffix) {
  const json& out = section(config, "output");
  const std::filesystem::path dir = get_or<std::string>(out, "dir", ".");
  std::filesystem::create_directories(dir);
  return dir / (get_or<std::string>(out, "prefix", "gsieve") + suffix);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write '" + path.string() + "'");
  os << text;
}

json matrix_json(const Mat2& s) { return {{"S11", s.a11}, {"S12", s.a12}, {"S22", s.a22}}; }

GridSpec grid_spec_from(const json& s) {
  GridSpec spec;
  spec.n_aleph = count_field(s, "n_aleph", spec.n_aleph);
  spec.n_theta = count_field(s, "n_theta", spec.n_theta);
  if (s.contains("aleph_range")) {
    const json& r = s.at("aleph_range");
    if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number())
      malformed("aleph_range must be [lo, hi]");
    spec.aleph_lo = r[0].get<double>();
    spec.aleph_hi = r[1].get<double>();
  }
  return spec;
}

Trajectory run_evolution(const json& config, const ModelParams& model, bool required) {
  const GaussianState initial = load_state(config, model.hbar);
  const json& ev = section(config, "evolve");
  if (!required && ev.empty()) return evolve(initial, model, 0.0, 1.0, 1);
  const double t_final = required_number(ev, "evolve", "t_final");
  const double dt = required_number(ev, "evolve", "dt");
  if (!(dt > 0.0)) malformed("evolve.dt must be positive");
  if (!(t_final >= 0.0)) malformed("evolve.t_final must be non-negative");
  const std::size_t every = count_field(ev, "sample_every", 1);
  return evolve(initial, model, t_final, dt, every);
}

// Runs a command body and maps failures onto the exit-code contract.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ConstraintViolation& e) {
    err << "error: " << e.what() << '\n';
    return kPhysics;
  } catch (const IntegrationError& e) {
    err << "error: integration failed at t=" << io::format_double(e.time()) << ": " << e.what()
        << '\n';
    return kNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_status(e.code());
  } catch (const json::exception& e) {
    err << "error: malformed config: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace

void apply_override(json& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) malformed("--set expects key=value, got '" + assignment + "'");
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);

  json value;
  try {
    value = json::parse(text);
  } catch (const json::parse_error&) {
    value = text;
  }

  json* node = &config;
  std::stringstream path(key);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(path, part, '.')) {
    if (part.empty()) malformed("empty path component in '" + key + "'");
    parts.push_back(part);
  }
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (!node->is_object()) malformed("'" + key + "' does not address an object");
    node = &(*node)[parts[i]];
    if (node->is_null()) *node = json::object();
  }
  if (!node->is_object()) malformed("'" + key + "' does not address an object");
  (*node)[parts.back()] = value;
}

int cmd_validate(const json& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ValidationReport report = validate(load_model(config));
    out << io::to_json(report).dump(2) << '\n';
    if (!report.passed()) {
      for (const auto& f : report.failures) err << "constraint violated: " << f << '\n';
      return int{kPhysics};
    }
    return int{kOk};
  });
}

int cmd_evolve(const json& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ModelParams model = load_valid_model(config);
    const Trajectory traj = run_evolution(config, model, true);

    std::ostringstream csv;
    io::write_trajectory_csv(csv, traj);
    const auto csv_path = output_path(config, "_trajectory.csv");
    write_text(csv_path, csv.str());

    const auto& last = traj.samples.back();
    json summary = {{"version", io::kVersion},
                    {"command", "evolve"},
                    {"step", traj.step},
                    {"samples", traj.samples.size()},
                    {"trajectory_csv", csv_path.filename().string()},
                    {"final",
                     {{"t", last.t},
                      {"mean", {last.state.mean.x1, last.state.mean.x2}},
                      {"sigma", matrix_json(last.state.sigma)},
                      {"area", last.entropy.area},
                      {"lin_entropy", last.entropy.lin_entropy},
                      {"entropy_rate", last.entropy.entropy_rate},
                      {"heisenberg_slack", heisenberg_slack(last.state.sigma, model.hbar)}}},
                    {"stationary", nullptr}};
    const Generator gen = make_generator(model);
    if (drift_stability(gen.Y).hurwitz) {
      const Mat2 s_inf = stationary_covariance(gen.Y, gen.D);
      json st = {{"sigma", matrix_json(s_inf)},
                 {"frobenius_distance", (last.state.sigma - s_inf).frobenius()}};
      st["area"] = s_inf.det() > 0.0 ? json(area(s_inf, model.hbar)) : json(nullptr);
      summary["stationary"] = st;
    }
    const std::string text = summary.dump(2) + "\n";
    write_text(output_path(config, "_evolve.json"), text);
    out << text;
    return int{kOk};
  });
}

int cmd_sieve(const json& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ModelParams model = load_valid_model(config);
    const json& s = section(config, "sieve");
    const double a = get_or<double>(s, "A", 1.0);
    if (!(a >= 1.0 - kPurityTolerance))
      throw ConstraintViolation("sieve.A must be >= 1 for a physical state");
    const int levels = get_or<int>(s, "refine_levels", 12);
    const GridSpec spec = grid_spec_from(s);
    make_axes(spec);

    const DiffDecomposition diff =
        decompose_diffusion(build_scaled_diffusion(model).D, model.hbar);
    const SieveResult result = run_sieve(a, model.lambda, diff, spec, levels);

    json doc = io::to_json(result);
    doc["command"] = "sieve";
    doc["A"] = a;
    doc["diffusion"] = {{"Delta", diff.Delta}, {"d", diff.d}, {"phi", diff.phi}};
    const std::string text = doc.dump(2) + "\n";
    write_text(output_path(config, "_sieve.json"), text);
    out << text;
    return int{kOk};
  });
}

int cmd_sweep(const json& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ModelParams model = load_valid_model(config);
    const json& s = section(config, "sieve");
    const double a = get_or<double>(s, "A", 1.0);
    if (!(a >= 1.0 - kPurityTolerance))
      throw ConstraintViolation("sieve.A must be >= 1 for a physical state");
    const GridAxes axes = make_axes(grid_spec_from(s));
    const DiffDecomposition diff =
        decompose_diffusion(build_scaled_diffusion(model).D, model.hbar);

    const auto rows = rate_landscape(a, model.lambda, diff, axes);
    std::ostringstream csv;
    io::write_landscape_csv(csv, rows);
    const auto csv_path = output_path(config, "_landscape.csv");
    write_text(csv_path, csv.str());

    std::size_t best = 0;
    for (std::size_t k = 1; k < rows.size(); ++k)
      if (rows[k].rate < rows[best].rate) best = k;
    const AnalyticSieve analytic = analytic_minimizer(a, model.lambda, diff);
    const json summary = {{"version", io::kVersion},
                          {"command", "sweep"},
                          {"landscape_csv", csv_path.filename().string()},
                          {"rows", rows.size()},
                          {"n_aleph", axes.alephs.size()},
                          {"n_theta", axes.thetas.size()},
                          {"grid_min", {{"aleph", rows[best].aleph},
                                        {"theta", rows[best].theta},
                                        {"rate", rows[best].rate}}},
                          {"min_rate", analytic.min_rate}};
    out << summary.dump(2) << '\n';
    return int{kOk};
  });
}

int cmd_wigner(const json& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ModelParams model = load_valid_model(config);
    const json& w = section(config, "wigner");
    const Trajectory traj = run_evolution(config, model, false);
    if (w.contains("t_index") && !w.at("t_index").is_number_integer())
      malformed("wigner.t_index must be an integer");
    const long long index = get_or<long long>(w, "t_index", 0);
    if (index < 0 || static_cast<std::size_t>(index) >= traj.samples.size())
      throw Error(ErrorCode::IndexOutOfRange, "wigner.t_index " + std::to_string(index) +
                                                  " outside [0, " +
                                                  std::to_string(traj.samples.size()) + ")");
    const auto& sample = traj.samples[static_cast<std::size_t>(index)];

    const double half_width = get_or<double>(w, "half_width", 8.0);
    const std::size_t n1 = count_field(w, "n1", 161);
    const std::size_t n2 = count_field(w, "n2", 161);
    if (n1 < 2 || n2 < 2) malformed("wigner grid needs at least 2 nodes per axis");
    const AxisSpec ax1 = default_axis(sample.state, 0, half_width, n1);
    const AxisSpec ax2 = default_axis(sample.state, 1, half_width, n2);
    const WignerGrid grid = wigner_grid(sample.state, ax1, ax2);

    std::ostringstream csv;
    io::write_wigner_csv(csv, grid);
    const auto csv_path = output_path(config, "_wigner.csv");
    write_text(csv_path, csv.str());

    const json sidecar = {
        {"version", io::kVersion},
        {"command", "wigner"},
        {"wigner_csv", csv_path.filename().string()},
        {"ordering", "row-major, x1 outer, x2 inner"},
        {"t_index", index},
        {"t", sample.t},
        {"x1", {{"lo", ax1.lo}, {"hi", ax1.hi}, {"n", ax1.n}}},
        {"x2", {{"lo", ax2.lo}, {"hi", ax2.hi}, {"n", ax2.n}}},
        {"half_width_sigmas", half_width},
        {"mean", {sample.state.mean.x1, sample.state.mean.x2}},
        {"sigma", matrix_json(sample.state.sigma)},
        {"peak", WignerDensity(sample.state).peak()},
        {"normalization", kernels::trapezoid_omp(grid.values, grid.x1s, grid.x2s)}};
    const std::string text = sidecar.dump(2) + "\n";
    write_text(output_path(config, "_wigner.json"), text);
    out << text;
    return int{kOk};
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian open-system dynamics and predictability-sieve engine", "gsieve"};
  app.set_version_flag("--version", io::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  const char* names[] = {"validate", "evolve", "sieve", "sweep", "wigner"};
  const char* help[] = {"check the model constraints", "integrate a Gaussian state",
                        "minimize the initial entropy rate", "dump the rate landscape",
                        "dump a Wigner function grid"};
  for (int i = 0; i < 5; ++i) {
    auto* sub = app.add_subcommand(names[i], help[i]);
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->add_option("--set", overrides, "override a config entry, key.path=value");
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  json config;
  try {
    config = read_json_file(config_path);
    for (const auto& o : overrides) apply_override(config, o);
    if (!config.is_object()) malformed("config must be a JSON object");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  if (cmd == "validate") return cmd_validate(config, out, err);
  if (cmd == "evolve") return cmd_evolve(config, out, err);
  if (cmd == "sieve") return cmd_sieve(config, out, err);
  if (cmd == "sweep") return cmd_sweep(config, out, err);
  return cmd_wigner(config, out, err);
}

}  // namespace gsieve::cli
