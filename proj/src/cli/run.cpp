#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "hardy/cli.hpp"
#include "hardy/errors.hpp"
#include "hardy/eta.hpp"
#include "hardy/halfspace.hpp"
#include "hardy/hardy1d.hpp"
#include "hardy/random.hpp"
#include "hardy/rearrangement.hpp"
#include "hardy/sphere.hpp"
#include "hardy/weights.hpp"

namespace hardy::cli {
namespace {

constexpr std::pair<Command, const char*> kCommands[] = {
    {Command::ValidateWeight, "validate-weight"},
    {Command::EtaTable, "eta-table"},
    {Command::FindT, "find-T"},
    {Command::Quotient, "quotient"},
    {Command::Sharpness1d, "sharpness-1d"},
    {Command::SphereVerify, "sphere-verify"},
    {Command::HalfspaceVerify, "halfspace-verify"},
    {Command::RearrangeDemo, "rearrange-demo"},
    {Command::Integrability, "integrability"},
};

constexpr std::size_t kEtaTablePoints = 64;
constexpr std::size_t kDemoCells = 32;

double endpoint(const RunConfig& c) {
  if (c.a) return *c.a;
  return c.weight == "power" ? 1.0 : std::numbers::pi / 2;
}

Weight make_weight(const RunConfig& c) {
  if (c.weight == "power") return make_power_weight(c.p, c.delta, endpoint(c));
  if (c.weight == "sine") return make_sine_weight(c.n, c.p, endpoint(c));
  throw InvalidParameter("unknown weight '" + c.weight + "' (expected power or sine)");
}

void add_weight_meta(Table& t, const RunConfig& c) {
  t.meta.emplace_back("weight", c.weight);
  if (c.weight == "sine") {
    t.meta.emplace_back("n", std::int64_t{c.n});
  } else {
    t.meta.emplace_back("delta", c.delta);
  }
  t.meta.emplace_back("p", c.p);
  t.meta.emplace_back("a", endpoint(c));
}

void add_quotient_columns(Table& t) {
  t.columns.insert(t.columns.end(), {"numerator", "denominator", "quotient", "sharp_constant", "margin"});
}

void append_quotient(std::vector<Cell>& row, const QuotientReport& r) {
  row.insert(row.end(), {r.numerator, r.denominator, r.quotient, r.sharp_constant, r.margin});
}

Table validate_weight_table(const RunConfig& c) {
  const Weight w = make_weight(c);
  const ValidationReport r = validate_weight(w, 1024);
  Table t;
  add_weight_meta(t, c);
  t.columns = {"grid_size", "phi_at_zero", "boundary_slope", "boundary_ok", "min_phi", "positivity_ok",
               "c1", "c2", "fitted_c1", "fitted_c2", "growth_ok", "max_log_second_derivative",
               "log_concave_ok", "passed"};
  t.add_row({static_cast<std::int64_t>(r.grid.size()), r.phi_at_zero, r.boundary_slope, r.boundary_ok,
             r.min_phi, r.positivity_ok, w.c1(), w.c2(), r.fitted_c1, r.fitted_c2, r.growth_ok,
             r.max_log_second_derivative, r.log_concave_ok, r.passed()});
  return t;
}

Table eta_table(const RunConfig& c) {
  const Weight w = make_weight(c);
  const EtaProfile profile = find_truncation_point(w);
  std::vector<double> ts(kEtaTablePoints);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    ts[i] = w.a() * static_cast<double>(i + 1) / static_cast<double>(kEtaTablePoints + 1);
  }
  const std::vector<double> tails = tail_integrals(w, ts);
  const std::vector<double> etas = profile.eta_values(ts);
  const std::vector<double> truncated = profile.truncated_values(ts);
  Table t;
  add_weight_meta(t, c);
  t.meta.emplace_back("T", profile.T());
  t.columns = {"t", "tail_integral", "eta", "eta_truncated", "lower_bound", "upper_bound", "riccati_residual"};
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const EtaBounds b = eta_bounds(w, ts[i]);
    t.add_row({ts[i], tails[i], etas[i], truncated[i], b.lo, b.hi, riccati_residual(w, ts[i])});
  }
  return t;
}

Table find_t_table(const RunConfig& c) {
  const EtaProfile profile = find_truncation_point(make_weight(c));
  Table t;
  add_weight_meta(t, c);
  t.columns = {"T", "eta_T"};
  t.add_row({profile.T(), profile.eta_at_T()});
  return t;
}

Table quotient_table(const RunConfig& c) {
  const Weight w = make_weight(c);
  const EtaProfile profile = find_truncation_point(w);
  Table t;
  add_weight_meta(t, c);
  t.meta.emplace_back("truncated", c.truncated);
  std::optional<GridFunction> u;
  if (!c.nodes.empty() || !c.values.empty()) {
    u.emplace(c.nodes, c.values, w.a());
  } else {
    Rng rng(c.seed);
    u.emplace(random_grid_function(w.a(), rng));
    t.meta.emplace_back("seed", static_cast<std::int64_t>(c.seed));
  }
  add_quotient_columns(t);
  std::vector<Cell> row;
  append_quotient(row, hardy_quotient(w, profile, *u, c.truncated));
  t.add_row(std::move(row));
  return t;
}

Table sharpness_1d_table(const RunConfig& c) {
  const Weight w = make_weight(c);
  const EtaProfile profile = find_truncation_point(w);
  const ConvergenceTable study = convergence_study(w, profile, c.ks, c.truncated);
  Table t;
  add_weight_meta(t, c);
  t.meta.emplace_back("truncated", c.truncated);
  t.meta.emplace_back("T", profile.T());
  t.meta.emplace_back("trend_ok", study.trend_ok);
  t.meta.emplace_back("lower_bound_ok", study.lower_bound_ok);
  t.columns = {"k", "quotient", "sharp_constant", "margin"};
  for (const ConvergenceRow& r : study.rows) t.add_row({r.k, r.quotient, study.sharp_constant, r.margin});
  if (!study.lower_bound_ok) {
    throw AssertionFailure("sharpness-1d: a quotient fell below the sharp constant");
  }
  return t;
}

CapGeometry cap_from(const RunConfig& c) {
  return make_cap_geometry(c.n, c.a.value_or(std::numbers::pi / 2));
}

Table sphere_verify_table(const RunConfig& c) {
  const RhoStar rho(cap_from(c), c.p);
  Table t;
  t.meta.emplace_back("n", std::int64_t{c.n});
  t.meta.emplace_back("p", c.p);
  t.meta.emplace_back("a_star", rho.geometry().a_star);
  t.meta.emplace_back("cap_volume", cap_volume(c.n, rho.geometry().a_star));
  t.columns = {"k"};
  add_quotient_columns(t);
  for (std::int64_t k : c.ks) {
    std::vector<Cell> row{k};
    append_quotient(row, verify_sphere_theorem(rho, extremal_V_hat_k(rho, k)));
    t.add_row(std::move(row));
  }
  return t;
}

Table halfspace_verify_table(const RunConfig& c) {
  const HalfspaceSharpness s = sharpness_sequence_halfspace(c.n, c.p, c.k, c.eps);
  Table t;
  t.meta.emplace_back("n", std::int64_t{c.n});
  t.meta.emplace_back("p", c.p);
  t.columns = {"k", "eps", "ratio", "sharp_constant", "moment_n", "moment_n_minus_p", "moment_ratio"};
  t.add_row({c.k, c.eps, s.ratio, s.sharp_constant, s.moment_n, s.moment_n_minus_p, s.moment_ratio});
  return t;
}

Table rearrange_demo_table(const RunConfig& c) {
  const CapGeometry g = cap_from(c);
  const double volume = cap_volume(g.n, g.a_star);
  Rng rng(c.seed);
  std::uniform_real_distribution<double> value_dist(-1.0, 1.0);
  std::uniform_real_distribution<double> weight_dist(0.1, 1.0);
  std::vector<double> values(kDemoCells);
  std::vector<double> weights(kDemoCells);
  double total = 0.0;
  for (std::size_t i = 0; i < kDemoCells; ++i) {
    values[i] = value_dist(rng);
    weights[i] = weight_dist(rng);
    total += weights[i];
  }
  for (double& w : weights) w *= volume / total;
  const SampleSet samples(values, weights);
  const SphericalProfile sharp = spherical_rearrangement(samples, g);

  Table t;
  t.meta.emplace_back("n", std::int64_t{c.n});
  t.meta.emplace_back("a_star", g.a_star);
  t.meta.emplace_back("seed", static_cast<std::int64_t>(c.seed));
  for (int q = 1; q <= 3; ++q) {
    double direct = 0.0;
    for (std::size_t i = 0; i < kDemoCells; ++i) direct += weights[i] * std::pow(std::fabs(values[i]), q);
    t.meta.emplace_back("moment_" + std::to_string(q) + "_samples", direct);
    t.meta.emplace_back("moment_" + std::to_string(q) + "_rearranged", cap_integral(sharp, q));
  }
  t.columns = {"theta_lo", "theta_hi", "level", "cap_measure"};
  const auto nodes = sharp.profile.nodes();
  const auto levels = sharp.profile.values();
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    t.add_row({nodes[i], nodes[i + 1], levels[i], cap_volume(g.n, nodes[i + 1]) - cap_volume(g.n, nodes[i])});
  }
  return t;
}

Table integrability_table(const RunConfig& c) {
  Table t;
  t.columns = {"n", "p", "radius", "angular_integral", "value"};
  t.add_row({std::int64_t{c.n}, c.p, c.radius, zeta_angular_integral(c.n, c.p),
             zeta_integrability_check(c.n, c.p, c.radius)});
  return t;
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidParameter(std::string("could not parse ") + what + " entry '" + item + "'");
    }
  }
  return out;
}

}  // namespace

const char* command_name(Command c) {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "unknown";
}

std::optional<Command> parse_command(const std::string& name) {
  for (const auto& [cmd, text] : kCommands) {
    if (name == text) return cmd;
  }
  return std::nullopt;
}

Table build_table(const RunConfig& config) {
  Table t;
  switch (config.command) {
    case Command::ValidateWeight: t = validate_weight_table(config); break;
    case Command::EtaTable: t = eta_table(config); break;
    case Command::FindT: t = find_t_table(config); break;
    case Command::Quotient: t = quotient_table(config); break;
    case Command::Sharpness1d: t = sharpness_1d_table(config); break;
    case Command::SphereVerify: t = sphere_verify_table(config); break;
    case Command::HalfspaceVerify: t = halfspace_verify_table(config); break;
    case Command::RearrangeDemo: t = rearrange_demo_table(config); break;
    case Command::Integrability: t = integrability_table(config); break;
  }
  t.meta.insert(t.meta.begin(), {"command", std::string(command_name(config.command))});
  t.meta.emplace_back("version", std::string(HARDY_VERSION));
  return t;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Table table;
  try {
    table = build_table(config);
  } catch (const AssertionFailure& e) {
    err << "assertion failure: " << e.what() << '\n';
    return kExitAssertion;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const DegenerateInput& e) {
    err << "degenerate input: " << e.what() << '\n';
    return kExitParameter;
  } catch (const Error& e) {
    err << "parameter error: " << e.what() << '\n';
    return kExitParameter;
  }

  std::ofstream file;
  if (!config.output_path.empty()) {
    file.open(config.output_path, std::ios::binary);
    if (!file) {
      err << "parameter error: cannot open output file " << config.output_path << '\n';
      return kExitParameter;
    }
  }
  std::ostream& sink = config.output_path.empty() ? out : file;
  if (config.format == Format::Json) {
    write_json(sink, table);
  } else {
    write_csv(sink, table);
  }
  return kExitOk;
}

int main(int argc, char** argv) {
  RunConfig config;
  config.seed = kDefaultSeed;
  std::string command;
  std::string ks;
  std::string nodes;
  std::string values;
  std::string format = "csv";
  double a = 0.0;

  CLI::App app{"Numerical verification of sharp weighted Hardy inequalities"};
  app.set_version_flag("--version", std::string(HARDY_VERSION));
  std::vector<std::string> names;
  for (const auto& [cmd, name] : kCommands) names.emplace_back(name);
  app.add_option("command", command, "Operation to run")->required()->check(CLI::IsMember(names));
  app.add_option("--weight", config.weight, "Weight family")->check(CLI::IsMember({"power", "sine"}));
  app.add_option("--n", config.n, "Sphere dimension n (sine weight and cap commands)");
  app.add_option("--p", config.p, "Exponent p > 1");
  auto* a_opt = app.add_option("--a", a,
                               "Right endpoint a, or cap radius a* in radians "
                               "(default 1 for power, 1.5707963267948966 otherwise)");
  app.add_option("--delta", config.delta, "Power weight excess delta > 0");
  app.add_option("--ks", ks, "Comma-separated k values for sharpness studies");
  app.add_option("--k", config.k, "Single k for halfspace-verify");
  app.add_option("--eps", config.eps, "Radial bump half-width for halfspace-verify");
  app.add_option("--seed", config.seed, "Seed for random inputs");
  app.add_flag("--truncated", config.truncated, "Use the truncated weight eta_T");
  app.add_option("--radius", config.radius, "Ball radius for integrability");
  app.add_option("--nodes", nodes, "Comma-separated grid nodes for quotient");
  app.add_option("--values", values, "Comma-separated grid values for quotient");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", config.output_path, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParameter;
  }

  config.command = *parse_command(command);
  config.format = format == "json" ? Format::Json : Format::Csv;
  if (*a_opt) config.a = a;
  try {
    if (!ks.empty()) {
      config.ks.clear();
      for (double k : parse_list(ks, "--ks")) {
        if (k != std::floor(k)) throw InvalidParameter("--ks entries must be integers");
        config.ks.push_back(static_cast<std::int64_t>(k));
      }
    }
    if (!nodes.empty()) config.nodes = parse_list(nodes, "--nodes");
    if (!values.empty()) config.values = parse_list(values, "--values");
  } catch (const Error& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return kExitParameter;
  }
  return run(config, std::cout, std::cerr);
}

}  // namespace hardy::cli
