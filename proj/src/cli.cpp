#include "caspol/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "caspol/analysis.hpp"
#include "caspol/error.hpp"
#include "caspol/table.hpp"
#include "caspol/units.hpp"
#include "caspol/verification.hpp"

namespace caspol::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// ---------------------------------------------------------------- typed access

class Settings {
 public:
  explicit Settings(RawConfig raw) : raw_(std::move(raw)) {}

  [[nodiscard]] bool has(const std::string& key) const { return raw_.contains(key); }

  [[nodiscard]] std::string text(const std::string& key, const std::string& fallback) const {
    const auto it = raw_.find(key);
    return it == raw_.end() ? fallback : it->second;
  }

  [[nodiscard]] double number(const std::string& key) const {
    const auto it = raw_.find(key);
    if (it == raw_.end()) throw ConfigError(fmt::format("--{} is required", key));
    return parse_number(key, it->second);
  }

  [[nodiscard]] double number(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }

  [[nodiscard]] std::size_t count(const std::string& key) const {
    const double v = number(key);
    if (v < 0 || v != std::floor(v) || v > 1e9) {
      throw ConfigError(fmt::format("--{} must be a non-negative integer, got '{}'", key, raw_.at(key)));
    }
    return static_cast<std::size_t>(v);
  }

  [[nodiscard]] bool flag(const std::string& key) const {
    const std::string v = text(key, "false");
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError(fmt::format("--{} expects a boolean, got '{}'", key, v));
  }

  [[nodiscard]] std::vector<double> number_list(const std::string& key) const {
    const auto it = raw_.find(key);
    if (it == raw_.end()) throw ConfigError(fmt::format("--{} is required", key));
    std::vector<double> out;
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number(key, trim(item)));
    if (out.empty()) throw ConfigError(fmt::format("--{} is empty", key));
    return out;
  }

 private:
  static double parse_number(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size() || !std::isfinite(v)) {
      throw ConfigError(fmt::format("--{} expects a finite number, got '{}'", key, value));
    }
    return v;
  }

  RawConfig raw_;
};

Geometry geometry_from(const Settings& s) {
  const std::string kind = s.text("geometry", "");
  if (kind.empty()) throw ConfigError("--geometry is required (cc or cp)");
  GeometryKind k;
  if (kind == "cc") {
    k = GeometryKind::ConductorConductor;
  } else if (kind == "cp") {
    k = GeometryKind::ConductorPermeable;
  } else {
    throw ConfigError(fmt::format("--geometry must be cc or cp, got '{}'", kind));
  }
  return Geometry(k, s.number("a"));
}

AtomResponse atom_from(const Settings& s) { return AtomResponse{s.number("alpha", 0.0), s.number("beta", 0.0)}; }

GuardPolicy guard_from(const Settings& s) {
  GuardPolicy guard;
  guard.epsilon = s.number("guard-eps", guard.epsilon);
  const std::string mode = s.text("guard-mode", "reject");
  if (mode == "reject") {
    guard.mode = GuardMode::reject;
  } else if (mode == "asymptotic") {
    guard.mode = GuardMode::asymptotic;
  } else {
    throw ConfigError(fmt::format("--guard-mode must be reject or asymptotic, got '{}'", mode));
  }
  if (!(guard.epsilon > 0.0)) throw ConfigError("--guard-eps must be positive");
  return guard;
}

UnitSystem units_from(const Settings& s) {
  const std::string name = s.text("units", "natural");
  const auto mode = parse_unit_mode(name);
  if (!mode) throw ConfigError(fmt::format("--units must be natural or si, got '{}'", name));
  return UnitSystem{*mode};
}

enum class Format { csv, json };

Format format_from(const Settings& s) {
  const std::string name = s.text("format", "csv");
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw ConfigError(fmt::format("--format must be csv or json, got '{}'", name));
}

ZGrid grid_from(const Settings& s) {
  const bool single = s.has("z");
  const bool any_grid = s.has("z-min") || s.has("z-max") || s.has("z-count");
  if (single && any_grid) throw ConfigError("give either --z or --z-min/--z-max/--z-count, not both");
  if (single) return std::vector<double>{s.number("z")};
  if (!any_grid) throw ConfigError("a position is required: --z or --z-min/--z-max/--z-count");
  if (!(s.has("z-min") && s.has("z-max") && s.has("z-count"))) {
    throw ConfigError("a grid needs all of --z-min, --z-max and --z-count");
  }
  UniformGrid grid{s.count("z-count"), s.number("z-min"), s.number("z-max")};
  if (grid.count < 2) throw ConfigError("--z-count must be at least 2");
  if (!(grid.z_min < grid.z_max)) throw ConfigError("--z-min must be below --z-max");
  return grid;
}

// ---------------------------------------------------------------- output

class Output {
 public:
  Output(const Settings& s, std::ostream& fallback) : stream_(&fallback) {
    const std::string path = s.text("out", "");
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw ConfigError(fmt::format("cannot open '{}' for writing", path));
      stream_ = file_.get();
    }
  }

  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

void emit(const Settings& s, std::ostream& out, const Table& table) {
  const Format format = format_from(s);
  Output sink(s, out);
  if (format == Format::csv) {
    write_csv(sink.stream(), table);
  } else {
    write_json(sink.stream(), table);
  }
  if (!sink.stream()) throw ConfigError("failed while writing output");
}

void note_atom(const AtomResponse& atom, std::ostream& err) {
  for (const std::string& note : atom.diagnostics()) err << "warning: " << note << '\n';
}

// ---------------------------------------------------------------- commands

int cmd_potential(const Settings& s, std::ostream& out, std::ostream& err) {
  const Geometry geom = geometry_from(s);
  const AtomResponse atom = atom_from(s);
  const GuardPolicy guard = guard_from(s);
  const UnitSystem units = units_from(s);
  const ZGrid grid = grid_from(s);
  format_from(s);
  note_atom(atom, err);

  Table table{{"z", "V_E", "V_M", "V_total", "force_z", "regime"}, {}};
  for (double z : grid_points(grid, geom.separation())) {
    const PotentialSample p = sample_potential(atom, geom, z, guard);
    table.add_row({p.z, units.to_output(p.V_E), units.to_output(p.V_M), units.to_output(p.V),
                   units.to_output(p.force_z), std::string(regime_name(p.regime))});
  }
  emit(s, out, table);
  return kExitOk;
}

int cmd_correlators(const Settings& s, std::ostream& out, std::ostream& err) {
  static_cast<void>(err);
  const Geometry geom = geometry_from(s);
  const GuardPolicy guard = guard_from(s);
  const UnitSystem units = units_from(s);
  const ZGrid grid = grid_from(s);
  format_from(s);

  static constexpr std::array<char, 3> kAxes = {'x', 'y', 'z'};
  Table table;
  table.header.emplace_back("z");
  for (std::string_view pair : {"EE", "BB", "EB"}) {
    for (char i : kAxes) {
      for (char j : kAxes) table.header.push_back(fmt::format("{}_{}{}", pair, i, j));
    }
  }
  for (std::string_view col : {"trace_EE", "trace_BB", "trace_EE_plus_trace_BB", "regime"}) {
    table.header.emplace_back(col);
  }

  for (double z : grid_points(grid, geom.separation())) {
    const CorrelatorTensor ee = correlator_ee(geom, z, guard);
    const CorrelatorTensor bb = correlator_bb(geom, z, guard);
    const CorrelatorTensor eb = correlator_eb(geom, z);
    std::vector<Cell> row{z};
    for (const CorrelatorTensor* t : {&ee, &bb, &eb}) {
      for (const auto& r : t->components) {
        for (double v : r) row.emplace_back(units.to_output(v));
      }
    }
    row.emplace_back(units.to_output(ee.trace()));
    row.emplace_back(units.to_output(bb.trace()));
    row.emplace_back(units.to_output(ee.trace() + bb.trace()));
    row.emplace_back(std::string(regime_name(guard.inside(geom.scaled(z)) ? Regime::asymptotic : Regime::exact)));
    table.add_row(std::move(row));
  }
  emit(s, out, table);
  return kExitOk;
}

std::vector<Quantity> quantities_from(const Settings& s) {
  std::vector<Quantity> out;
  std::stringstream ss(s.text("quantities", "V,force"));
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string name = trim(item);
    const auto q = parse_quantity(name);
    if (!q) throw ConfigError(fmt::format("unknown quantity '{}' (V, V_E, V_M, force, EE_trace, BB_trace)", name));
    if (std::find(out.begin(), out.end(), *q) == out.end()) out.push_back(*q);
  }
  if (out.empty()) throw ConfigError("--quantities is empty");
  return out;
}

// Energies pick up hbar c in SI mode; so do forces and correlator traces.
int cmd_sweep(const Settings& s, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  spec.geometry = geometry_from(s);
  spec.atom = atom_from(s);
  spec.guard = guard_from(s);
  spec.grid = grid_from(s);
  spec.quantities = quantities_from(s);
  spec.limit_reference = s.flag("emit-limit-reference");
  spec.threads = static_cast<unsigned>(std::max<std::size_t>(1, s.has("threads") ? s.count("threads") : 1));
  const UnitSystem units = units_from(s);
  format_from(s);
  note_atom(spec.atom, err);

  const PotentialCurve curve = run_sweep(spec);
  Table table;
  table.header.emplace_back("z");
  for (Quantity q : curve.quantities) table.header.emplace_back(quantity_name(q));
  if (curve.limit_reference) table.header.emplace_back("V_wall");
  table.header.emplace_back("regime");
  for (const CurveRow& r : curve.rows) {
    std::vector<Cell> row{r.z};
    for (Quantity q : curve.quantities) row.emplace_back(units.to_output(r[q]));
    if (curve.limit_reference) row.emplace_back(units.to_output(r.v_wall));
    row.emplace_back(std::string(regime_name(r.regime)));
    table.add_row(std::move(row));
  }
  emit(s, out, table);
  return kExitOk;
}

int cmd_limits(const Settings& s, std::ostream& out, std::ostream& err) {
  const AtomResponse atom = atom_from(s);
  const GuardPolicy guard = guard_from(s);
  const UnitSystem units = units_from(s);
  const std::string wall_name = s.text("wall", "conducting");
  WallType wall;
  if (wall_name == "conducting") {
    wall = WallType::conducting;
  } else if (wall_name == "permeable") {
    wall = WallType::permeable;
  } else {
    throw ConfigError(fmt::format("--wall must be conducting or permeable, got '{}'", wall_name));
  }
  const double z = s.number("z");
  const std::vector<double> a_values = s.number_list("a-values");
  format_from(s);
  note_atom(atom, err);

  const LimitStudy study = limit_convergence_study(atom, wall, z, a_values, guard);
  Table table{{"a", "V_exact", "V_limit", "rel_error", "status"}, {}};
  for (const LimitRow& r : study.rows) {
    Cell rel;
    if (r.rel_error) rel = *r.rel_error;
    table.add_row({r.a, units.to_output(r.v_exact), units.to_output(r.v_limit), rel,
                   std::string(study.degenerate ? "limit degenerate" : "ok")});
  }
  emit(s, out, table);
  if (study.fitted_exponent) err << fmt::format("fitted convergence exponent: {:.6g}\n", *study.fitted_exponent);
  if (!study.degenerate && !study.monotone_decreasing) err << "note: relative error is not monotone in a\n";
  return kExitOk;
}

nlohmann::json report_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckRecord& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"description", c.description},
                      {"metric", std::string(metric_name(c.metric))},
                      {"max_abs_error", c.max_abs_error},
                      {"max_rel_error", c.max_rel_error},
                      {"tolerance", c.tolerance},
                      {"points_tested", c.points_tested},
                      {"pass", c.passed}});
  }
  return {{"level", std::string(level_name(report.level))},
          {"pass", report.passed()},
          {"failures", report.failure_count()},
          {"checks", checks}};
}

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err) {
  const std::string level_text = s.text("level", "quick");
  VerificationLevel level;
  if (level_text == "quick") {
    level = VerificationLevel::quick;
  } else if (level_text == "full") {
    level = VerificationLevel::full;
  } else {
    throw ConfigError(fmt::format("--level must be quick or full, got '{}'", level_text));
  }
  const std::string format = s.text("format", "text");
  if (format != "text" && format != "json") throw ConfigError("--format for verify must be text or json");

  const VerificationReport report = run_verification(level);
  Output sink(s, out);
  if (format == "json") {
    sink.stream() << report_json(report).dump(2) << '\n';
  } else {
    for (const CheckRecord& c : report.checks) {
      sink.stream() << fmt::format("{} {:<34} {:>10} = {:<10.3g} tol {:<8.3g} points {}\n",
                                   c.passed ? "PASS" : "FAIL", c.name, metric_name(c.metric), c.measured(),
                                   c.tolerance, c.points_tested);
    }
    sink.stream() << fmt::format("{} checks, {} failed ({})\n", report.checks.size(), report.failure_count(),
                                 level_name(level));
  }
  for (const CheckRecord& c : report.checks) {
    if (!c.passed) {
      err << fmt::format("FAIL {}: measured {:.6g} > tolerance {:.3g}\n", c.name, c.measured(), c.tolerance);
    }
  }
  return static_cast<int>(std::min<std::size_t>(report.failure_count(), 255));
}

// ---------------------------------------------------------------- parsing

using Command = std::function<int(const Settings&, std::ostream&, std::ostream&)>;

struct Subcommand {
  CLI::App* app = nullptr;
  std::set<std::string> keys;
  Command run;
};

void add_value(Subcommand& sub, RawConfig& raw, const std::string& key, const std::string& help) {
  sub.keys.insert(key);
  sub.app->add_option_function<std::string>(
      "--" + key, [&raw, key](const std::string& v) { raw[key] = v; }, help);
}

void add_switch(Subcommand& sub, RawConfig& raw, const std::string& key, const std::string& help) {
  sub.keys.insert(key);
  sub.app->add_flag_callback("--" + key, [&raw, key] { raw[key] = "true"; }, help);
}

void add_common(Subcommand& sub, RawConfig& raw) {
  add_value(sub, raw, "geometry", "wall pair: cc (two conductors) or cp (conductor at 0, permeable at a)");
  add_value(sub, raw, "a", "plate separation");
  add_value(sub, raw, "alpha", "static electric polarizability (length^3)");
  add_value(sub, raw, "beta", "static magnetic polarizability (length^3)");
  add_value(sub, raw, "z", "single position, 0 < z < a");
  add_value(sub, raw, "z-min", "first grid position");
  add_value(sub, raw, "z-max", "last grid position");
  add_value(sub, raw, "z-count", "number of grid points (>= 2)");
  add_value(sub, raw, "guard-eps", "guard radius in xi around either wall (default 1e-6)");
  add_value(sub, raw, "guard-mode", "reject or asymptotic inside the guard band");
  add_value(sub, raw, "units", "natural (default) or si");
  add_value(sub, raw, "format", "csv (default) or json");
  add_value(sub, raw, "out", "output path (default standard output)");
}

}  // namespace

RawConfig parse_config_text(const std::string& text) {
  RawConfig raw;
  std::stringstream ss(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(ss, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::string key;
    std::string value = "true";
    if (const auto eq = line.find('='); eq != std::string::npos) {
      key = trim(line.substr(0, eq));
      value = trim(line.substr(eq + 1));
    } else {
      key = line;
    }
    while (!key.empty() && key.front() == '-') key.erase(0, 1);
    if (key.empty()) throw ConfigError(fmt::format("config line {} has no key", number));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    raw[key] = value;
  }
  return raw;
}

RawConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot read config file '{}'", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Casimir-Polder potentials and vacuum correlators between parallel walls", "caspol"};
  app.require_subcommand(1);
  RawConfig raw;
  std::string config_path;

  std::vector<Subcommand> subs;
  subs.reserve(5);
  const auto make = [&](const std::string& name, const std::string& help, Command run) -> Subcommand& {
    Subcommand& sub = subs.emplace_back();
    sub.app = app.add_subcommand(name, help);
    sub.run = std::move(run);
    sub.app->add_option("--config", config_path, "flat key = value file; flags override its values");
    return sub;
  };

  Subcommand& potential = make("potential", "V_E, V_M, V and force at one z or on a grid", cmd_potential);
  add_common(potential, raw);

  Subcommand& correlators = make("correlators", "EE, BB and EB correlator tensors", cmd_correlators);
  add_common(correlators, raw);

  Subcommand& sweep = make("sweep", "tabulate selected quantities on a grid", cmd_sweep);
  add_common(sweep, raw);
  add_value(sweep, raw, "quantities", "comma list of V, V_E, V_M, force, EE_trace, BB_trace (default V,force)");
  add_switch(sweep, raw, "emit-limit-reference", "add the single-wall reference column V_wall");
  add_value(sweep, raw, "threads", "worker threads (output is identical for any value)");

  Subcommand& limits = make("limits", "convergence of the two-wall potential to the single-wall law", cmd_limits);
  add_value(limits, raw, "wall", "conducting (distance from z=0) or permeable (distance from z=a)");
  add_value(limits, raw, "alpha", "static electric polarizability (length^3)");
  add_value(limits, raw, "beta", "static magnetic polarizability (length^3)");
  add_value(limits, raw, "z", "distance from the wall");
  add_value(limits, raw, "a-values", "ascending comma list of plate separations");
  add_value(limits, raw, "guard-eps", "guard radius in xi around either wall");
  add_value(limits, raw, "guard-mode", "reject or asymptotic inside the guard band");
  add_value(limits, raw, "units", "natural (default) or si");
  add_value(limits, raw, "format", "csv (default) or json");
  add_value(limits, raw, "out", "output path (default standard output)");

  Subcommand& verify = make("verify", "run the built-in verification suite", cmd_verify);
  add_value(verify, raw, "level", "quick (10 samples per check) or full (200)");
  add_value(verify, raw, "format", "text (default) or json");
  add_value(verify, raw, "out", "report path (default standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }

  const auto chosen = std::find_if(subs.begin(), subs.end(), [](const Subcommand& s) { return s.app->parsed(); });
  if (chosen == subs.end()) {
    err << "error: no subcommand given\n";
    return kExitConfigError;
  }

  try {
    if (!config_path.empty()) {
      for (const auto& [key, value] : read_config_file(config_path)) {
        if (!chosen->keys.contains(key)) {
          throw ConfigError(fmt::format("config key '{}' does not apply to '{}'", key, chosen->app->get_name()));
        }
        raw.try_emplace(key, value);
      }
    }
    return chosen->run(Settings(std::move(raw)), out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const CasimirError& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace caspol::cli
