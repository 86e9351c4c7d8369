#include "thinlayer/cli/commands.hpp"

#include <cmath>
#include <ostream>

#include <CLI11.hpp>

#include "thinlayer/cli/acceptance.hpp"
#include "thinlayer/effective_thickness.hpp"
#include "thinlayer/elastic.hpp"
#include "thinlayer/errors.hpp"
#include "thinlayer/expression.hpp"
#include "thinlayer/incompressible.hpp"
#include "thinlayer/poisson.hpp"
#include "thinlayer/sensitivity.hpp"
#include "thinlayer/thickness.hpp"
#include "thinlayer/winkler.hpp"

#ifndef THINLAYER_DEFAULT_SAMPLE_MAP
#define THINLAYER_DEFAULT_SAMPLE_MAP "data/sample_thickness.csv"
#endif

namespace thinlayer::cli {

namespace {

constexpr int kDefaultCells = 256;
constexpr int kDefaultRatioCells = 128;

bool power_of_two_in_range(int n) { return n >= 32 && n <= 1024 && (n & (n - 1)) == 0; }

int grid_cells(const Config& config, const RunOptions& options, int fallback) {
  if (options.grid) {
    if (!power_of_two_in_range(*options.grid)) {
      throw ConfigError("--grid: must be a power of two in [32, 1024], got " + std::to_string(*options.grid));
    }
    return *options.grid;
  }
  const int n = config.integer_opt("solver", "grid").value_or(fallback);
  if (!power_of_two_in_range(n)) config.fail("solver", "grid", "must be a power of two in [32, 1024]");
  return n;
}

std::filesystem::path out_dir(const Config& config, const RunOptions& options) {
  if (options.out_dir) return *options.out_dir;
  return config.path_opt("output", "dir").value_or(std::filesystem::path("."));
}

PoissonOptions poisson_options(const Config& config) {
  PoissonOptions o;
  o.rel_tol = config.positive_opt("solver", "tolerance").value_or(o.rel_tol);
  return o;
}

ParaboloidGap read_gap(const Config& config) {
  config.allow_only("geometry", {"R1", "R2", "delta0"});
  return {config.positive("geometry", "R1"), config.positive("geometry", "R2"),
          config.number("geometry", "delta0")};
}

// Closed-form map from `expr_key` or lattice map from `map_key`; nullopt
// when neither is given.
std::optional<Field2> read_map(const Config& config, std::string_view section, std::string_view expr_key,
                               std::string_view map_key, std::string_view column) {
  const bool has_expr = config.has(section, expr_key);
  const bool has_map = config.has(section, map_key);
  if (has_expr && has_map) config.fail(section, map_key, "give either " + std::string(expr_key) + " or " +
                                                             std::string(map_key) + ", not both");
  if (has_expr) {
    try {
      return parse_expression(config.text(section, expr_key));
    } catch (const DomainError& e) {
      config.fail(section, expr_key, e.what());
    }
  }
  if (has_map) {
    const LatticeMap map = read_lattice_csv(config.path(section, map_key), column);
    return map.to_field();
  }
  return std::nullopt;
}

// Physical position of lattice node (c, r); end nodes hit the bounds exactly.
Vec2 lattice_node(const RectLattice& lat, int c, int r) {
  return {c == lat.n1 - 1 ? lat.y1_max : lat.y1_min + c * lat.step1(),
          r == lat.n2 - 1 ? lat.y2_max : lat.y2_min + r * lat.step2()};
}

Json ellipse_json(const EllipseDomain& d) { return Json{{"a1", number(d.a1())}, {"a2", number(d.a2())}}; }

LayerSpec read_layer_spec(const Config& config, std::string_view section) {
  if (config.has(section, "nu") && config.number(section, "nu") != 0.5) {
    config.fail(section, "nu", "the elliptic model assumes incompressible layers (nu = 0.5)");
  }
  return {config.positive(section, "E"), config.positive(section, "h")};
}

// [layer1] is required, [layer2] optional.
std::vector<LayerSpec> read_bilayer(const Config& config) {
  std::vector<LayerSpec> layers{read_layer_spec(config, "layer1")};
  if (config.has_section("layer2")) layers.push_back(read_layer_spec(config, "layer2"));
  return layers;
}

// Interpolating lattice maps throw DomainError outside their box; report
// that as a lattice mismatch.
void check_covers(const Field2& f, const EllipseDomain& d, const std::string& what) {
  try {
    for (double sx : {-1.0, 1.0}) {
      for (double sy : {-1.0, 1.0}) f({sx * d.a1(), sy * d.a2()});
    }
  } catch (const DomainError& e) {
    throw ShapeError(what + " does not cover the contact ellipse: " + e.what());
  }
}

}  // namespace

CommandResult cmd_winkler(const Config& config, const RunOptions& options) {
  config.allow_only("material", {"E", "nu"});
  config.allow_only("layer", {"h", "eps", "H", "H_map"});
  config.allow_only("solver", {"grid"});
  config.allow_only("output", {"dir"});
  const double E = config.positive("material", "E");
  const double nu = config.number("material", "nu");
  Material material = Material::incompressible(E);
  try {
    material = Material::compressible(E, nu);
  } catch (const IncompressibleSingularity& e) {
    throw IncompressibleSingularity(config.where("material", "nu") + ": " + e.what() +
                                    "; the Winkler model needs a compressible layer");
  } catch (const DomainError& e) {
    config.fail("material", "nu", e.what());
  }
  const ParaboloidGap gap = read_gap(config);
  const int cells = grid_cells(config, options, kDefaultCells);
  const EllipseDomain region = winkler_contact_region(gap);
  const double h = config.positive("layer", "h");
  const Field2 H = read_map(config, "layer", "H", "H_map", "H").value_or(Field2::constant(h));
  check_covers(H, region, "thickness map");
  const std::optional<double> eps = config.positive_opt("layer", "eps");
  const LayerThickness layer = eps ? thickness_decompose(H, h, *eps, region) : thickness_decompose(H, h, region);

  const WinklerSolution sol = winkler_solve(material, layer, gap, DiskGrid(cells));
  const std::filesystem::path dir = out_dir(config, options);
  CommandResult res;
  res.files = {dir / "winkler_pressure.csv", dir / "winkler.json"};
  write_field_csv(res.files[0], sol.pressure, "p");
  res.report = Json{
      {"command", "winkler"},
      {"grid", cells},
      {"material", {{"E", number(E)}, {"nu", number(nu)}, {"lambda", number(material.lambda())},
                    {"mu", number(material.mu())}}},
      {"layer", {{"h", number(layer.h())}, {"eps", number(layer.eps())}}},
      {"contact", ellipse_json(sol.contact_ellipse)},
      {"force", number(sol.force)},
      {"peak_pressure", number(sol.peak_pressure)},
      {"files", {{"pressure", res.files[0].filename().string()}}},
  };
  write_json(res.files[1], res.report);
  return res;
}

CommandResult cmd_elliptic(const Config& config, const RunOptions& options) {
  config.allow_only("layer1", {"E", "h", "nu"});
  config.allow_only("layer2", {"E", "h", "nu"});
  config.allow_only("solver", {"grid"});
  config.allow_only("output", {"dir"});
  const std::vector<LayerSpec> layers = read_bilayer(config);
  const ParaboloidGap gap = read_gap(config);
  const int cells = grid_cells(config, options, kDefaultCells);
  const double m = aggregate_compliance(layers);
  const EllipticContactSolution sol = elliptic_contact_solve(m, gap);
  const ForceLaw law = contact_force_and_MP(sol, m, gap);
  const MatchingResiduals mr = matching_residuals(sol.p0, sol.domain.a1(), sol.domain.a2(), m, gap);

  const std::filesystem::path dir = out_dir(config, options);
  CommandResult res;
  res.files = {dir / "elliptic_pressure.csv", dir / "elliptic.json"};
  write_field_csv(res.files[0], ScalarField::sample(sol.domain, DiskGrid(cells), sol.pressure_field()), "p");
  res.report = Json{
      {"command", "elliptic"},
      {"grid", cells},
      {"m", number(m)},
      {"p0", number(sol.p0)},
      {"a1", number(sol.domain.a1())},
      {"a2", number(sol.domain.a2())},
      {"s", number(sol.s)},
      {"P", number(law.P)},
      {"M_P", number(law.M_P)},
      {"matching_residual", number(mr.max())},
      {"files", {{"pressure", res.files[0].filename().string()}}},
  };
  write_json(res.files[1], res.report);
  return res;
}

CommandResult cmd_sensitivity(const Config& config, const RunOptions& options) {
  config.allow_only("layer1", {"E", "h", "nu", "variation", "variation_map"});
  config.allow_only("layer2", {"E", "h", "nu", "variation", "variation_map"});
  config.allow_only("solver", {"grid", "tolerance"});
  config.allow_only("output", {"dir"});
  const std::vector<LayerSpec> specs = read_bilayer(config);
  const ParaboloidGap gap = read_gap(config);
  const int cells = grid_cells(config, options, kDefaultCells);
  const PoissonOptions popts = poisson_options(config);
  const EllipticContactSolution base = elliptic_contact_solve(aggregate_compliance(specs), gap);

  SensitivityProblem prob{base, {}};
  const char* sections[] = {"layer1", "layer2"};
  for (std::size_t k = 0; k < specs.size(); ++k) {
    const std::optional<Field2> v = read_map(config, sections[k], "variation", "variation_map", "Htilde");
    if (v) check_covers(*v, base.domain, std::string("[") + sections[k] + "] variation map");
    prob.layers.push_back({specs[k], v.value_or(Field2::constant(0.0))});
  }

  const PoissonResult sol = pressure_variation(prob, DiskGrid(cells), RhsForm::flux, popts);
  const double dP = force_variation(sol.solution);
  const double absP = absolute_force_variation(sol.solution);
  const std::filesystem::path dir = out_dir(config, options);
  CommandResult res;
  res.files = {dir / "sensitivity_pressure_variation.csv", dir / "sensitivity.json"};
  write_field_csv(res.files[0], sol.solution, "p_tilde");
  res.report = Json{
      {"command", "sensitivity"},
      {"grid", cells},
      {"iterations", sol.iterations},
      {"relative_residual", number(sol.relative_residual)},
      {"m", number(base.m)},
      {"contact", {{"a1", number(base.domain.a1())}, {"a2", number(base.domain.a2())}, {"p0", number(base.p0)}}},
      {"force_variation", number(dP)},
      {"absolute_force_variation", number(absP)},
      {"force_ratio", number(absP > 0.0 ? std::abs(dP) / absP : 0.0)},
      {"orthogonality_residual", number(orthogonality_residual(prob.layers, base.domain))},
      {"predicted_force_variation", number(predicted_force_variation(prob))},
      {"files", {{"pressure_variation", res.files[0].filename().string()}}},
  };
  write_json(res.files[1], res.report);
  return res;
}

CommandResult cmd_optimize(const Config& config, const RunOptions& options) {
  config.allow_only("thickness", {"H", "H_map"});
  config.allow_only("domain", {"a1", "a2"});
  config.allow_only("optimize", {"kappa", "orthogonalize"});
  config.allow_only("solver", {"grid"});
  config.allow_only("output", {"dir"});
  const std::optional<Field2> H = read_map(config, "thickness", "H", "H_map", "H");
  if (!H) config.fail("thickness", "H", "give a closed-form H or an H_map file");
  const int cells = grid_cells(config, options, kDefaultCells);

  // omega: explicit, or the contact ellipse of the configured bilayer.
  const EllipseDomain omega = config.has_section("domain")
                                  ? EllipseDomain(config.positive("domain", "a1"), config.positive("domain", "a2"))
                                  : elliptic_contact_solve(aggregate_compliance(read_bilayer(config)),
                                                           read_gap(config))
                                        .domain;
  check_covers(*H, omega, "thickness map");
  const double kappa = config.number_or("optimize", "kappa", 1.0);
  const WeightComparison cmp = compare_weights(*H, omega, kappa);

  Json weights = Json::array();
  for (const WeightComparison::Entry& e : cmp.entries) {
    const Vec2 at = cmp.omega_star.from_unit({e.radial_argmax, 0.0});
    weights.push_back(Json{{"kind", weight_name(e.kind)},
                           {"h_eff", number(e.h_eff)},
                           {"criterion", number(e.criterion)},
                           {"argmax_radius", number(e.radial_argmax)},
                           {"argmax_point", {number(at.y1), number(at.y2)}}});
  }
  const std::filesystem::path dir = out_dir(config, options);
  CommandResult res;
  res.report = Json{
      {"command", "optimize"},
      {"omega", ellipse_json(omega)},
      {"kappa", number(kappa)},
      {"omega_star", ellipse_json(cmp.omega_star)},
      {"weights", weights},
  };

  if (const auto kind_name = config.text_opt("optimize", "orthogonalize")) {
    const WeightComparison::Entry* chosen = nullptr;
    for (const WeightComparison::Entry& e : cmp.entries) {
      if (*kind_name == weight_name(e.kind)) chosen = &e;
    }
    if (!chosen) config.fail("optimize", "orthogonalize", "expected rho_star, theta_star or uniform");
    const RectLattice lat = lattice_of(omega, DiskGrid(cells));
    const Field2 variation = orthogonalized_variation(*H, chosen->h_eff);
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(lat.n1) * static_cast<std::size_t>(lat.n2));
    for (int r = 0; r < lat.n2; ++r) {
      for (int c = 0; c < lat.n1; ++c) values.push_back(variation(lattice_node(lat, c, r)));
    }
    const std::filesystem::path file = dir / "optimize_variation.csv";
    write_lattice_csv(file, lat, values, "Htilde");
    res.files.push_back(file);
    res.report["orthogonalized"] =
        Json{{"weight", *kind_name}, {"h_eff", number(chosen->h_eff)}, {"file", file.filename().string()}};
  }
  res.files.push_back(dir / "optimize.json");
  write_json(res.files.back(), res.report);
  return res;
}

CommandResult cmd_validate(const Config& config, const RunOptions& options) {
  config.allow_only("validate", {"map"});
  config.allow_only("solver", {"grid"});
  config.allow_only("output", {"dir"});
  AcceptanceOptions ao;
  ao.ratio_cells = grid_cells(config, options, kDefaultRatioCells);
  ao.sample_map = config.path_opt("validate", "map").value_or(std::filesystem::path(THINLAYER_DEFAULT_SAMPLE_MAP));
  const std::vector<CriterionResult> results = run_acceptance(ao);

  Json criteria = Json::array();
  bool all = true;
  std::string table;
  int passed = 0;
  for (const CriterionResult& r : results) {
    table += summary_line(r) + "\n";
    passed += r.passed ? 1 : 0;
    Json measured = Json::object();
    for (const auto& [key, value] : r.measured) measured[key] = number(value);
    criteria.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"target", r.target},
                            {"measured", measured}});
    all = all && r.passed;
  }
  CommandResult res;
  res.text = table + std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed\n";
  res.exit_code = all ? kExitOk : kExitValidationFailure;
  res.report = Json{{"command", "validate"}, {"ratio_grid", ao.ratio_cells}, {"passed", all}, {"criteria", criteria}};
  res.files.push_back(out_dir(config, options) / "validate.json");
  write_json(res.files.back(), res.report);
  return res;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thin-layer contact models", "thinlayer"};
  app.require_subcommand(1);
  std::string config_path;
  std::string out_path;
  int grid = 0;
  struct Command {
    const char* name;
    const char* help;
    CommandResult (*fn)(const Config&, const RunOptions&);
  };
  const Command commands[] = {
      {"winkler", "Compressible layer: variable-modulus Winkler contact", cmd_winkler},
      {"elliptic", "Incompressible bilayer: elliptical contact", cmd_elliptic},
      {"sensitivity", "Pressure and force variation under thickness variations", cmd_sensitivity},
      {"optimize", "Effective thickness under the weighted criteria", cmd_optimize},
      {"validate", "Run the acceptance criteria", cmd_validate},
  };
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    auto* opt = sub->add_option("--config", config_path, "Configuration file");
    if (std::string_view(c.name) != "validate") opt->required();
    sub->add_option("--out", out_path, "Output directory");
    sub->add_option("--grid", grid, "Lattice cells per side (power of two, 32..1024)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "thinlayer: " << e.what() << "\n";
    return kExitConfigError;
  }

  const Command* chosen = nullptr;
  for (const Command& c : commands) {
    if (app.got_subcommand(c.name)) chosen = &c;
  }
  RunOptions options;
  if (!out_path.empty()) options.out_dir = out_path;
  if (app.get_subcommand(chosen->name)->count("--grid") > 0) options.grid = grid;

  auto fail = [&](const char* kind, int code, const std::exception& e) {
    err << "thinlayer: " << kind << ": " << e.what() << "\n";
    return code;
  };
  try {
    const Config config = config_path.empty() ? Config::parse("", "<defaults>") : Config::load(config_path);
    const CommandResult res = chosen->fn(config, options);
    out << (res.text.empty() ? res.report.dump(2) + "\n" : res.text);
    return res.exit_code;
  } catch (const ConfigError& e) {
    return fail("config error", kExitConfigError, e);
  } catch (const IoError& e) {
    return fail("I/O error", kExitConfigError, e);
  } catch (const IncompressibleSingularity& e) {
    return fail("incompressible singularity", kExitConfigError, e);
  } catch (const ShapeError& e) {
    return fail("shape error", kExitConfigError, e);
  } catch (const DomainError& e) {
    return fail("domain error", kExitConfigError, e);
  } catch (const NoContact& e) {
    return fail("no contact", kExitSolverError, e);
  } catch (const SolverError& e) {
    return fail("solver error", kExitSolverError, e);
  } catch (const std::exception& e) {
    return fail("error", kExitSolverError, e);
  }
}

}  // namespace thinlayer::cli
