#include "cli.hpp"

#include <CLI11.hpp>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "pdm/config.hpp"
#include "pdm/error.hpp"
#include "pdm/fields.hpp"
#include "pdm/models.hpp"
#include "pdm/oracle.hpp"
#include "pdm/params.hpp"
#include "pdm/sweeps.hpp"

namespace pdm::cli {

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

QuantumState parse_state(const std::string& text) {
  QuantumState s;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> s.n_rho >> comma >> s.m) || comma != ',' || !(in >> std::ws).eof()) {
    throw ValidationError("state must look like n_rho,m (got '" + text + "')");
  }
  validate(s);
  return s;
}

std::vector<QuantumState> parse_states(const std::string& text) {
  std::vector<QuantumState> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (!item.empty()) out.push_back(parse_state(item));
  }
  if (out.empty()) throw ValidationError("state list is empty");
  return out;
}

ModelKind to_model(const std::string& name) {
  const auto kind = parse_model(name);
  if (!kind) throw ValidationError("unknown model '" + name + "' (expected a, b or c)");
  return *kind;
}

Param to_param(const std::string& name) {
  const auto p = parse_param(name);
  if (!p) throw ValidationError("unknown parameter '" + name + "'");
  return *p;
}

// Physical parameter flags shared by every command; a flag overrides the
// config file, which overrides the defaults.
struct ParamFlags {
  std::array<double, kAllParams.size()> values{};
  std::array<CLI::Option*, kAllParams.size()> options{};
  std::string config;
  std::string out;

  void attach(CLI::App* app) {
    for (std::size_t i = 0; i < kAllParams.size(); ++i) {
      const Param p = kAllParams[i];
      std::string names = "--" + std::string(param_name(p));
      if (p == Param::alpha_ab) names = "--alpha," + names;
      options[i] = app->add_option(names, values[i], "parameter " + std::string(param_name(p)));
    }
    app->add_option("--config", config, "flat key=value parameter file");
    app->add_option("--out", out, "write data to this file instead of stdout");
  }

  PhysicalParams resolve(std::ostream& err) const {
    ParamValues v;
    if (!config.empty()) apply_config_file(config, v);
    for (std::size_t i = 0; i < kAllParams.size(); ++i) {
      if (options[i]->count() > 0) v.set(kAllParams[i], values[i]);
    }
    const PhysicalParams params(v);
    err << "# params";
    for (Param p : kAllParams) err << ' ' << param_name(p) << '=' << num(params.get(p));
    err << '\n';
    return params;
  }
};

struct Command {
  CLI::App* app = nullptr;
  ParamFlags flags;
  std::function<int(const PhysicalParams&, std::ostream&, std::ostream&)> body;
};

int emit(const Command& cmd, std::ostream& out, std::ostream& err) {
  const PhysicalParams params = cmd.flags.resolve(err);
  if (cmd.flags.out.empty()) return cmd.body(params, out, err);
  std::ofstream file(cmd.flags.out);
  if (!file) throw ValidationError("cannot open output file '" + cmd.flags.out + "'");
  return cmd.body(params, file, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound states of position-dependent-mass charged particles in magnetic and flux fields"};
  app.require_subcommand(1);
  std::vector<std::unique_ptr<Command>> commands;
  auto add = [&](const std::string& name, const std::string& description) -> Command& {
    commands.push_back(std::make_unique<Command>());
    Command& c = *commands.back();
    c.app = app.add_subcommand(name, description);
    c.flags.attach(c.app);
    return c;
  };

  std::string model = "a";

  // spectrum
  int nrho_max = 2;
  int m_min = -2;
  int m_max = 2;
  Command& spectrum = add("spectrum", "closed-form energies as CSV n_rho,m,E");
  spectrum.app->add_option("--model", model, "a, b or c");
  spectrum.app->add_option("--nrho-max", nrho_max)->check(CLI::NonNegativeNumber);
  spectrum.app->add_option("--m-min", m_min);
  spectrum.app->add_option("--m-max", m_max);
  spectrum.body = [&](const PhysicalParams& params, std::ostream& o, std::ostream&) {
    const ModelKind kind = to_model(model);
    o << "n_rho,m,E\n";
    for (int n = 0; n <= nrho_max; ++n) {
      for (int m = m_min; m <= m_max; ++m) {
        const auto e = try_closed_form_energy(kind, {n, m}, params);
        if (e) o << n << ',' << m << ',' << num(*e) << '\n';
      }
    }
    return kExitOk;
  };

  // wavefunction
  int nrho = 0;
  int m_state = 0;
  double rho_min = 0.05;
  double rho_max = 20.0;
  int points = 200;
  std::string form = "power";
  Command& wave = add("wavefunction", "normalized closed-form state as CSV rho,R,U");
  wave.app->add_option("--model", model, "a, b or c");
  wave.app->add_option("--nrho", nrho)->check(CLI::NonNegativeNumber);
  wave.app->add_option("--m", m_state);
  wave.app->add_option("--rho-min", rho_min);
  wave.app->add_option("--rho-max", rho_max);
  wave.app->add_option("--points", points);
  wave.app->add_option("--form", form, "model c shape: power or xi")->check(CLI::IsMember({"power", "xi"}));
  wave.body = [&](const PhysicalParams& params, std::ostream& o, std::ostream&) {
    if (!(rho_min > 0.0) || !(rho_max > rho_min) || points < 2) {
      throw ValidationError("wavefunction grid needs 0 < rho-min < rho-max and points >= 2");
    }
    const Wavefunction wf(to_model(model), {nrho, m_state}, params, form == "xi" ? WaveForm::xi : WaveForm::power);
    o << "rho,R,U\n";
    for (int i = 0; i < points; ++i) {
      const double rho = i == points - 1 ? rho_max : rho_min + (rho_max - rho_min) * i / (points - 1);
      o << num(rho) << ',' << num(wf.radial(rho)) << ',' << num(wf.reduced(rho)) << '\n';
    }
    return kExitOk;
  };

  // field
  double f_rho_min = 0.1;
  double f_rho_max = 10.0;
  int f_points = 100;
  Command& field = add("field", "field profile as CSV rho,S,Bz,Aphi");
  field.app->add_option("--rho-min", f_rho_min);
  field.app->add_option("--rho-max", f_rho_max);
  field.app->add_option("--points", f_points);
  field.body = [&](const PhysicalParams& params, std::ostream& o, std::ostream&) {
    if (!(f_rho_min > 0.0) || !(f_rho_max > f_rho_min) || f_points < 2) {
      throw ValidationError("field grid needs 0 < rho-min < rho-max and points >= 2");
    }
    std::ostringstream rows;
    for (int i = 0; i < f_points; ++i) {
      const double rho = i == f_points - 1 ? f_rho_max : f_rho_min + (f_rho_max - f_rho_min) * i / (f_points - 1);
      const FieldSample s = sample_field(rho, params);
      rows << num(s.rho) << ',' << num(s.s) << ',' << num(s.b_z) << ',' << num(s.a_phi) << '\n';
    }
    o << "rho,S,Bz,Aphi\n" << rows.str();
    return kExitOk;
  };

  // sweep
  std::string param = "beta";
  double lo = -2.0;
  double hi = 2.0;
  int steps = 41;
  std::string states = "0,1;1,0";
  Command& sw = add("sweep", "energies over a parameter range as CSV param,value,n_rho,m,E,valid");
  sw.app->add_option("--model", model, "a, b or c");
  sw.app->add_option("--param", param, "beta, b0, alpha_ab, mu or delta");
  sw.app->add_option("--lo", lo);
  sw.app->add_option("--hi", hi);
  sw.app->add_option("--steps", steps);
  sw.app->add_option("--states", states, "n_rho,m pairs separated by ';'");
  sw.body = [&](const PhysicalParams& params, std::ostream& o, std::ostream&) {
    const SweepSpec spec{to_model(model), parse_states(states), to_param(param), lo, hi, steps};
    const auto rows = sweep(spec, params);
    o << "param,value,n_rho,m,E,valid\n";
    for (const auto& r : rows) {
      o << param_name(spec.param) << ',' << num(r.value) << ',' << r.state.n_rho << ',' << r.state.m << ','
        << (r.energy ? num(*r.energy) : std::string()) << ',' << (r.energy ? 1 : 0) << '\n';
    }
    return kExitOk;
  };

  // crossings
  std::string state1 = "0,1";
  std::string state2 = "1,0";
  int scan_steps = 2001;
  bool catalog = false;
  Command& cross = add("crossings", "level crossings as JSON records param,value,E,state1,state2");
  cross.app->add_option("--model", model, "a, b or c");
  cross.app->add_option("--param", param, "beta, b0, alpha_ab, mu or delta");
  cross.app->add_option("--lo", lo);
  cross.app->add_option("--hi", hi);
  cross.app->add_option("--steps", scan_steps);
  cross.app->add_option("--state1", state1);
  cross.app->add_option("--state2", state2);
  cross.app->add_flag("--catalog", catalog, "run the built-in scenarios (ignores parameter flags)");
  cross.body = [&](const PhysicalParams& params, std::ostream& o, std::ostream&) {
    nlohmann::json records = nlohmann::json::array();
    auto record = [&](const CrossingPoint& c, Param p, const std::string* label) {
      nlohmann::json j{{"param", param_name(p)},
                       {"value", c.param_value},
                       {"E", c.energy},
                       {"state1", {c.states.first.n_rho, c.states.first.m}},
                       {"state2", {c.states.second.n_rho, c.states.second.m}}};
      if (label) j["scenario"] = *label;
      records.push_back(j);
    };
    if (catalog) {
      for (const auto& sc : crossing_catalog()) {
        const auto found =
            find_crossings(sc.kind, sc.s1, sc.s2, sc.param, sc.lo, sc.hi, PhysicalParams(sc.base), scan_steps);
        for (const auto& c : found) record(c, sc.param, &sc.label);
      }
    } else {
      const Param p = to_param(param);
      const auto found =
          find_crossings(to_model(model), parse_state(state1), parse_state(state2), p, lo, hi, params, scan_steps);
      for (const auto& c : found) record(c, p, nullptr);
    }
    o << records.dump(2) << '\n';
    return kExitOk;
  };

  // verify
  double tolerance = 1e-5;
  Command& ver = add("verify", "closed form against the numerical solver, as a CSV table");
  ver.app->add_option("--model", model, "a, b or c");
  ver.app->add_option("--nrho-max", nrho_max)->check(CLI::NonNegativeNumber);
  ver.app->add_option("--m-min", m_min);
  ver.app->add_option("--m-max", m_max);
  ver.app->add_option("--tol", tolerance, "relative energy tolerance");
  ver.body = [&](const PhysicalParams& params, std::ostream& o, std::ostream& e) {
    const ModelKind kind = to_model(model);
    VerifyOptions opts;
    opts.energy_tolerance = tolerance;
    o << "n_rho,m,closed,oracle,rel_diff,residual,nodes,ok\n";
    int failures = 0;
    int checked = 0;
    for (int n = 0; n <= nrho_max; ++n) {
      for (int m = m_min; m <= m_max; ++m) {
        if (!try_closed_form_energy(kind, {n, m}, params)) continue;
        const VerifyRow r = verify_state(kind, {n, m}, params, opts);
        ++checked;
        if (!r.ok) ++failures;
        o << n << ',' << m << ',' << num(r.closed) << ',' << num(r.oracle) << ',' << num(r.rel_diff) << ','
          << num(r.residual) << ',' << r.nodes << ',' << (r.ok ? 1 : 0) << '\n';
      }
    }
    e << "# verified " << checked << " states, " << failures << " outside tolerance\n";
    return failures == 0 ? kExitOk : kExitVerifyFailed;
  };

  // greene-aldrich
  double ga_max = 2.0;
  int ga_steps = 200;
  Command& ga = add("greene-aldrich", "accuracy of 1/rho ~ delta/(1-exp(-delta rho)) as CSV");
  ga.app->add_option("--max", ga_max, "largest delta*rho");
  ga.app->add_option("--steps", ga_steps);
  ga.body = [&](const PhysicalParams& params, std::ostream& o, std::ostream& e) {
    const double delta = params.delta() > 0.0 ? params.delta() : 1.0;
    if (!(ga_max > 0.0) || ga_steps < 2) throw ValidationError("greene-aldrich needs max > 0 and steps >= 2");
    o << "delta_rho,rho,exact,approx,rel_err\n";
    double previous = -1.0;
    bool monotone = true;
    for (int i = 1; i <= ga_steps; ++i) {
      const double x = ga_max * i / ga_steps;
      const GreeneAldrich g = greene_aldrich(x / delta, delta);
      if (!(g.rel_err > previous)) monotone = false;
      previous = g.rel_err;
      o << num(x) << ',' << num(x / delta) << ',' << num(g.exact) << ',' << num(g.approx) << ','
        << num(g.rel_err) << '\n';
    }
    const double at_small = greene_aldrich(0.01 / delta, delta).rel_err;
    const bool small_ok = at_small <= 1e-2;
    e << "# rel_err at delta*rho=0.01: " << num(at_small) << (small_ok ? " (<= 1e-2)" : " (> 1e-2)")
      << "; monotone on (0, " << num(ga_max) << "]: " << (monotone ? "yes" : "no") << '\n';
    return monotone && small_ok ? kExitOk : kExitVerifyFailed;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitInvalid;
  }

  for (const auto& c : commands) {
    if (!c->app->parsed()) continue;
    try {
      return emit(*c, out, err);
    } catch (const BracketError& e) {
      err << "error: " << e.what() << " (F(lo)=" << num(e.f_lo()) << ", F(hi)=" << num(e.f_hi()) << ")\n";
      return kExitVerifyFailed;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitInvalid;
    }
  }
  err << app.help();
  return kExitInvalid;
}

}  // namespace pdm::cli
