#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "colehopf/errors.hpp"
#include "colehopf/io.hpp"
#include "colehopf/special.hpp"
#include "colehopf/transform.hpp"

namespace colehopf::cli {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

double now_seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("config-parse", "cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SolutionMode parse_mode(const std::string& s) {
  if (s == "derived") return SolutionMode::derived;
  if (s == "paper-literal" || s == "paper_literal") return SolutionMode::paper_literal;
  throw Error("config-parse", "mode must be 'derived' or 'paper-literal', got '" + s + "'");
}

InitialCondition parse_ic(const nlohmann::json& j, const PhysicalParams& params,
                          const fs::path& config_dir) {
  if (!j.is_object() || !j.contains("kind")) {
    throw Error("config-parse", "ic must be an object with a 'kind' key");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "delta") {
    return DeltaIC{j.value("strength", params.strength_N)};
  }
  if (kind == "gaussian") {
    GaussianIC g;
    g.center = j.value("center", 0.0);
    g.width = j.value("width", 1.0);
    if (j.contains("mass")) {
      g = mollified_delta(j["mass"].get<double>(), g.width);
      g.center = j.value("center", 0.0);
    } else {
      g.amplitude = j.value("amplitude", 1.0);
    }
    return g;
  }
  if (kind == "tanh_front") {
    return TanhFrontIC{j.value("k", 1.0)};
  }
  if (kind == "samples") {
    if (!j.contains("path")) throw Error("config-parse", "samples ic requires 'path'");
    fs::path p = j["path"].get<std::string>();
    if (p.is_relative()) p = config_dir / p;
    return SamplesIC{read_field_csv(p.string())};
  }
  throw Error("config-parse", "unknown ic kind '" + kind + "'");
}

ordered_json json_complex(std::complex<double> v) {
  return ordered_json{{"re", v.real()}, {"im", v.imag()}};
}

ordered_json json_params(const PhysicalParams& p) {
  return ordered_json{{"hbar", p.hbar},           {"mass", p.mass}, {"c", p.c}, {"l", p.l},
                      {"strength_N", p.strength_N}, {"nu_reg", p.nu_reg}};
}

ordered_json json_grid(const Grid1D& g) {
  return ordered_json{{"x_min", g.x_min}, {"x_max", g.x_max}, {"n", g.n}};
}

ordered_json json_ic(const InitialCondition& ic) {
  ordered_json j;
  if (const auto* d = std::get_if<DeltaIC>(&ic)) {
    j = {{"kind", "delta"}, {"strength", d->strength}};
  } else if (const auto* g = std::get_if<GaussianIC>(&ic)) {
    j = {{"kind", "gaussian"}, {"amplitude", g->amplitude}, {"center", g->center},
         {"width", g->width}};
  } else if (const auto* t = std::get_if<TanhFrontIC>(&ic)) {
    j = {{"kind", "tanh_front"}, {"k", t->k}};
  } else {
    const auto& s = std::get<SamplesIC>(ic);
    j = {{"kind", "samples"}, {"n", s.field.grid.n}};
  }
  return j;
}

void write_json(const std::string& path, const ordered_json& j) {
  write_text_atomic(path, j.dump(2) + "\n");
}

/// Solver CSV: x, re, im, abs per node.
void write_solution_csv(const ComplexField& f, const std::string& role, const std::string& path) {
  std::string out;
  out.reserve(f.values.size() * 64 + 64);
  out += "# field=" + role + " time=" + format_double(f.time) + "\n";
  out += "x,re,im,abs\n";
  for (int i = 0; i < f.grid.n; ++i) {
    const auto v = f.values[static_cast<std::size_t>(i)];
    out += format_double(f.grid.node(i));
    out += ',';
    out += format_double(v.real());
    out += ',';
    out += format_double(v.imag());
    out += ',';
    out += format_double(std::abs(v));
    out += '\n';
  }
  write_text_atomic(path, out);
}

std::vector<std::string> frame_warnings(const PhysicalParams& p) {
  std::vector<std::string> w;
  if (p.c != 1.0 || p.l != 1.0) {
    w.push_back("c and l are recorded but the solvers operate in the c = l = 1 frame");
  }
  return w;
}

void write_timings(const RunConfig& cfg, const ordered_json& wall) {
  // Wall-clock data is machine-dependent, so it lives in a sidecar that the
  // determinism guarantee does not cover.
  ordered_json j{{"schema", "colehopf/1"}, {"command", cfg.command}, {"wall_seconds", wall}};
  write_json((fs::path(cfg.out_dir) / "timings.json").string(), j);
}

struct DeltaSolution {
  ComplexField psi;
  ComplexField eta;
};

DeltaSolution delta_closed_solution(double N, const Grid1D& grid, double t, ComplexDiffusion eps,
                                    SolutionMode mode) {
  DeltaSolution out{make_field(grid, t), make_field(grid, t)};
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.node(i);
    const auto idx = static_cast<std::size_t>(i);
    out.psi.values[idx] = mode == SolutionMode::derived
                              ? psi_delta_closed_form(N, x, t, eps)
                              : psi_delta_literal_ratio(N, x, t, eps);
    out.eta.values[idx] = delta_eta_closed_form(N, x, t, eps);
  }
  return out;
}

}  // namespace

RunConfig load_run_config(const std::string& command, const std::string& config_path) {
  RunConfig cfg;
  cfg.command = command;

  const std::string text = read_file(config_path);
  const ParamsConfig pc = parse_params_json(text);
  cfg.params = pc.params;
  cfg.grid = pc.grid;

  nlohmann::json j = nlohmann::json::parse(text);  // validated by parse_params_json
  const fs::path config_dir = fs::path(config_path).parent_path();

  if (j.contains("ic")) {
    cfg.ic = parse_ic(j["ic"], cfg.params, config_dir);
  } else {
    cfg.ic = DeltaIC{cfg.params.strength_N};
  }
  validate_ic(cfg.ic);

  if (j.contains("t")) cfg.t = j["t"].get<double>();
  if (j.contains("mode")) cfg.mode = parse_mode(j["mode"].get<std::string>());
  if (j.contains("out_dir")) cfg.out_dir = j["out_dir"].get<std::string>();
  if (j.contains("grids")) {
    cfg.grid_sizes.clear();
    for (const auto& g : j["grids"]) cfg.grid_sizes.push_back(g.get<int>());
  }
  if (j.contains("fd")) {
    const auto& f = j["fd"];
    cfg.fd.cfl_target = f.value("cfl", cfg.fd.cfl_target);
    if (f.contains("time_scheme")) {
      const std::string s = f["time_scheme"].get<std::string>();
      if (s == "rk4_explicit") {
        cfg.fd.time_scheme = FDConfig::TimeScheme::rk4_explicit;
      } else if (s == "imex") {
        cfg.fd.time_scheme = FDConfig::TimeScheme::imex;
      } else {
        throw Error("config-parse", "fd.time_scheme must be 'rk4_explicit' or 'imex'");
      }
    }
    if (f.contains("flux_form")) {
      const std::string s = f["flux_form"].get<std::string>();
      if (s == "conservative") {
        cfg.fd.flux_form = FDConfig::FluxForm::conservative;
      } else if (s == "advective") {
        cfg.fd.flux_form = FDConfig::FluxForm::advective;
      } else {
        throw Error("config-parse", "fd.flux_form must be 'conservative' or 'advective'");
      }
    }
    cfg.fd.validate();
  }
  if (j.contains("fd_check")) cfg.fd_check = j["fd_check"].get<bool>();
  if (j.contains("N_values")) {
    for (const auto& v : j["N_values"]) cfg.compare_strengths.push_back(v.get<double>());
  }
  if (j.contains("erf_table")) {
    const auto& e = j["erf_table"];
    cfg.erf_table.re_min = e.value("re_min", cfg.erf_table.re_min);
    cfg.erf_table.re_max = e.value("re_max", cfg.erf_table.re_max);
    cfg.erf_table.im_min = e.value("im_min", cfg.erf_table.im_min);
    cfg.erf_table.im_max = e.value("im_max", cfg.erf_table.im_max);
    cfg.erf_table.step = e.value("step", cfg.erf_table.step);
    if (!(cfg.erf_table.step > 0.0)) throw Error("config-parse", "erf_table.step must be positive");
  }
  return cfg;
}

int run_solve(const RunConfig& cfg) {
  if (!(cfg.t > 0.0)) throw Error("config-parse", "t must be positive");
  const ComplexDiffusion eps = epsilon_of(cfg.params);
  fs::create_directories(cfg.out_dir);

  const auto t0 = std::chrono::steady_clock::now();
  ComplexField psi, eta;
  std::string method;
  QuadratureStats stats;
  bool have_stats = false;

  if (const auto* d = std::get_if<DeltaIC>(&cfg.ic)) {
    method = cfg.mode == SolutionMode::derived ? "delta-closed-form" : "delta-literal-ratio";
    DeltaSolution sol = delta_closed_solution(d->strength, cfg.grid, cfg.t, eps, cfg.mode);
    psi = std::move(sol.psi);
    eta = std::move(sol.eta);
  } else {
    method = "colehopf-quadrature";
    psi = solve_burgers_colehopf(cfg.ic, cfg.grid, cfg.t, eps, cfg.mode, {}, &stats);
    eta = evolve_heat_quadrature(eta0_profile(cfg.ic, eps), cfg.grid, cfg.t, eps, {}, &stats);
    have_stats = true;
  }
  const double solve_seconds = now_seconds(t0);

  // PDE residual probe: a second evaluation a short step later
  const auto t1 = std::chrono::steady_clock::now();
  const double dt_probe = std::max(1e-4, 1e-3 * cfg.t);
  ComplexField psi_b;
  if (const auto* d = std::get_if<DeltaIC>(&cfg.ic)) {
    psi_b = delta_closed_solution(d->strength, cfg.grid, cfg.t + dt_probe, eps, cfg.mode).psi;
  } else {
    psi_b = solve_burgers_colehopf(cfg.ic, cfg.grid, cfg.t + dt_probe, eps, cfg.mode);
  }
  const double residual = burgers_residual(psi, psi_b, eps);
  const double probe_seconds = now_seconds(t1);

  ordered_json report{{"schema", "colehopf/1"},
                      {"command", "solve"},
                      {"method", method},
                      {"mode", solution_mode_name(cfg.mode)},
                      {"params", json_params(cfg.params)},
                      {"epsilon", json_complex(eps.epsilon)},
                      {"grid", json_grid(cfg.grid)},
                      {"ic", json_ic(cfg.ic)},
                      {"t", cfg.t},
                      {"residual_l2", residual}};

  if (const auto* front = std::get_if<TanhFrontIC>(&cfg.ic)) {
    const ComplexField exact = sample_traveling_front(front->k, eps, cfg.grid, cfg.t);
    report["oracle_l2_rel"] = rel_l2_gap(psi, exact);
  } else {
    report["oracle_l2_rel"] = nullptr;
  }

  double fd_seconds = 0.0;
  if (cfg.fd_check && !std::holds_alternative<DeltaIC>(cfg.ic)) {
    const auto t2 = std::chrono::steady_clock::now();
    const ComplexField fd =
        solve_burgers_fd(sample_psi0(cfg.ic, eps, cfg.grid), cfg.t, eps, cfg.fd);
    report["fd_l2_rel"] = rel_l2_gap(psi, fd);
    fd_seconds = now_seconds(t2);
  } else {
    report["fd_l2_rel"] = nullptr;
  }

  if (have_stats) {
    report["quadrature"] = ordered_json{{"total_panels", stats.total_panels},
                                        {"max_node_panels", stats.max_node_panels}};
  } else {
    report["quadrature"] = nullptr;
  }
  report["warnings"] = frame_warnings(cfg.params);
  report["outputs"] = {"psi.csv", "eta.csv"};

  write_solution_csv(psi, "psi", (fs::path(cfg.out_dir) / "psi.csv").string());
  write_solution_csv(eta, "eta", (fs::path(cfg.out_dir) / "eta.csv").string());
  write_json((fs::path(cfg.out_dir) / "report.json").string(), report);
  write_timings(cfg, ordered_json{{"solve", solve_seconds},
                                  {"residual_probe", probe_seconds},
                                  {"fd_check", fd_seconds},
                                  {"total", now_seconds(t0)}});
  return 0;
}

int run_roundtrip(const RunConfig& cfg) {
  if (std::holds_alternative<DeltaIC>(cfg.ic)) {
    throw Error("config-parse", "roundtrip requires a sampleable IC (not delta)");
  }
  const ComplexDiffusion eps = epsilon_of(cfg.params);
  fs::create_directories(cfg.out_dir);

  const auto t0 = std::chrono::steady_clock::now();
  const ComplexField psi0 = sample_psi0(cfg.ic, eps, cfg.grid);
  EtaDiagnostics diag;
  const ComplexField phi = potential_from_velocity(psi0);
  const ComplexField eta = eta_from_potential(phi, eps, &diag);
  const ComplexField back = velocity_from_eta(eta, eps);
  const double gap = rel_linf_gap(back, psi0);

  ordered_json report{{"schema", "colehopf/1"},
                      {"command", "roundtrip"},
                      {"params", json_params(cfg.params)},
                      {"epsilon", json_complex(eps.epsilon)},
                      {"grid", json_grid(cfg.grid)},
                      {"ic", json_ic(cfg.ic)},
                      {"rel_linf_gap", gap},
                      {"max_abs_exponent", diag.max_abs_exponent},
                      {"overflow_risk", diag.overflow_risk},
                      {"outputs", {"psi_in.csv", "psi_out.csv"}}};

  write_solution_csv(psi0, "psi", (fs::path(cfg.out_dir) / "psi_in.csv").string());
  write_solution_csv(back, "psi", (fs::path(cfg.out_dir) / "psi_out.csv").string());
  write_json((fs::path(cfg.out_dir) / "report.json").string(), report);
  write_timings(cfg, ordered_json{{"total", now_seconds(t0)}});
  return 0;
}

int run_converge(const RunConfig& cfg) {
  if (!(cfg.t > 0.0)) throw Error("config-parse", "t must be positive");
  if (cfg.grid_sizes.size() < 3) {
    throw Error("config-parse", "converge needs at least 3 grid sizes");
  }
  const ComplexDiffusion eps = epsilon_of(cfg.params);
  fs::create_directories(cfg.out_dir);

  const auto t0 = std::chrono::steady_clock::now();
  const ConvergenceReport rep = convergence_study(cfg.ic, eps, cfg.t, cfg.grid.x_min,
                                                  cfg.grid.x_max, cfg.grid_sizes, cfg.fd, cfg.mode);

  ordered_json runs = ordered_json::array();
  ordered_json wall = ordered_json::array();
  std::string dat = "# h fd_error ch_error\n";
  for (const auto& r : rep.runs) {
    ordered_json jr{{"n", r.n}, {"h", r.h}};
    jr["fd_error"] = r.fd_error < 0.0 ? ordered_json(nullptr) : ordered_json(r.fd_error);
    jr["ch_error"] = r.ch_error < 0.0 ? ordered_json(nullptr) : ordered_json(r.ch_error);
    runs.push_back(jr);
    wall.push_back(ordered_json{{"n", r.n}, {"fd", r.fd_seconds}, {"ch", r.ch_seconds}});
    dat += format_double(r.h) + " " +
           (r.fd_error < 0.0 ? "nan" : format_double(r.fd_error)) + " " +
           (r.ch_error < 0.0 ? "nan" : format_double(r.ch_error)) + "\n";
  }

  ordered_json report{{"schema", "colehopf/1"},
                      {"command", "converge"},
                      {"params", json_params(cfg.params)},
                      {"epsilon", json_complex(eps.epsilon)},
                      {"ic", json_ic(cfg.ic)},
                      {"t", cfg.t},
                      {"mode", solution_mode_name(cfg.mode)},
                      {"reference", rep.reference},
                      {"exact", rep.exact},
                      {"resolution_limited", rep.resolution_limited},
                      {"runs", runs},
                      {"fd_orders", rep.fd_orders},
                      {"ch_orders", rep.ch_orders}};
  if (rep.exact) {
    report["fd_orders"] = "exact";
    report["ch_orders"] = "exact";
  }

  // gnuplot script with an h^2 guide anchored to the first defined error
  double anchor = 1.0, anchor_h = 1.0;
  for (const auto& r : rep.runs) {
    if (r.ch_error > 0.0) {
      anchor = r.ch_error;
      anchor_h = r.h;
      break;
    }
  }
  std::string gp;
  gp += "set logscale xy\n";
  gp += "set xlabel 'h'\n";
  gp += "set ylabel 'relative L2 error'\n";
  gp += "set key left top\n";
  gp += "plot 'converge.dat' using 1:2 with linespoints title 'direct FD', \\\n";
  gp += "     'converge.dat' using 1:3 with linespoints title 'ratio solver', \\\n";
  gp += "     " + format_double(anchor / (anchor_h * anchor_h)) +
        "*x**2 with lines dashtype 2 title 'h^2'\n";

  write_json((fs::path(cfg.out_dir) / "converge.json").string(), report);
  write_text_atomic((fs::path(cfg.out_dir) / "converge.dat").string(), dat);
  write_text_atomic((fs::path(cfg.out_dir) / "converge.gp").string(), gp);
  write_timings(cfg, ordered_json{{"runs", wall}, {"total", now_seconds(t0)}});
  return 0;
}

int run_compare_eq13(const RunConfig& cfg) {
  if (!(cfg.t > 0.0)) throw Error("config-parse", "t must be positive");
  if (!std::holds_alternative<DeltaIC>(cfg.ic)) {
    throw Error("config-parse", "compare-eq13 requires the delta IC");
  }
  const ComplexDiffusion eps = epsilon_of(cfg.params);
  fs::create_directories(cfg.out_dir);

  std::vector<double> Ns = cfg.compare_strengths;
  if (Ns.empty()) Ns.push_back(std::get<DeltaIC>(cfg.ic).strength);

  const auto t0 = std::chrono::steady_clock::now();
  ordered_json entries = ordered_json::array();
  std::vector<std::string> dat_files;

  for (std::size_t ni = 0; ni < Ns.size(); ++ni) {
    const double N = Ns[ni];
    bool n_singular = false;
    std::string singular_message;

    ordered_json points = ordered_json::array();
    double max_gap_standard = 0.0, max_gap_paper = 0.0;
    std::string dat = "# x abs_closed abs_standard abs_paper  (N=" + format_double(N) + ")\n";

    for (int i = 0; i < cfg.grid.n; ++i) {
      const double x = cfg.grid.node(i);
      ordered_json pt{{"x", x}};
      std::vector<std::string> flags;

      std::complex<double> closed{0.0, 0.0};
      bool have_closed = true;
      try {
        closed = psi_delta_closed_form(N, x, cfg.t, eps);
        pt["closed"] = json_complex(closed);
      } catch (const Error& e) {
        have_closed = false;
        pt["closed"] = nullptr;
        flags.push_back(e.code());
      }

      auto eval_alt = [&](ErfConvention conv, const char* key,
                          double& max_gap) -> std::string {
        try {
          const std::complex<double> v =
              psi_delta_alt_closed_form(N, x, cfg.t, cfg.params.hbar, cfg.params.mass, conv);
          pt[key] = json_complex(v);
          if (have_closed) {
            const double gap = std::abs(v - closed);
            pt[std::string("gap_") + key] = gap;
            max_gap = std::max(max_gap, gap);
          } else {
            pt[std::string("gap_") + key] = nullptr;
          }
          return format_double(std::abs(v));
        } catch (const Error& e) {
          pt[key] = nullptr;
          pt[std::string("gap_") + key] = nullptr;
          flags.push_back(e.code());
          if (e.code() == "formula-singularity") {
            n_singular = true;
            singular_message = e.what();
          }
          return "nan";
        }
      };

      const std::string abs_std = eval_alt(ErfConvention::standard, "standard", max_gap_standard);
      const std::string abs_paper = eval_alt(ErfConvention::paper, "paper", max_gap_paper);

      pt["flags"] = flags;
      points.push_back(pt);
      dat += format_double(x) + " " +
             (have_closed ? format_double(std::abs(closed)) : "nan") + " " + abs_std + " " +
             abs_paper + "\n";
    }

    const std::string dat_name = "eq13_compare_" + std::to_string(ni) + ".dat";
    write_text_atomic((fs::path(cfg.out_dir) / dat_name).string(), dat);
    dat_files.push_back(dat_name);

    ordered_json entry{{"N", N},
                       {"singular", n_singular},
                       {"max_abs_gap_standard", n_singular ? ordered_json(nullptr)
                                                           : ordered_json(max_gap_standard)},
                       {"max_abs_gap_paper", n_singular ? ordered_json(nullptr)
                                                        : ordered_json(max_gap_paper)},
                       {"points", points}};
    if (n_singular) entry["singular_message"] = singular_message;
    entries.push_back(entry);
  }

  ordered_json report{{"schema", "colehopf/1"},
                      {"command", "compare-eq13"},
                      {"params", json_params(cfg.params)},
                      {"epsilon", json_complex(eps.epsilon)},
                      {"grid", json_grid(cfg.grid)},
                      {"t", cfg.t},
                      {"entries", entries}};
  write_json((fs::path(cfg.out_dir) / "eq13_compare.json").string(), report);

  std::string gp;
  gp += "set xlabel 'x'\n";
  gp += "set ylabel '|psi|'\n";
  gp += "set key outside\n";
  gp += "plot \\\n";
  for (std::size_t ni = 0; ni < dat_files.size(); ++ni) {
    const std::string nlab = format_double(Ns[ni]);
    gp += "  '" + dat_files[ni] + "' using 1:2 with lines title 'closed form N=" + nlab + "', \\\n";
    gp += "  '" + dat_files[ni] + "' using 1:3 with lines title 'printed/std N=" + nlab + "', \\\n";
    gp += "  '" + dat_files[ni] + "' using 1:4 with lines title 'printed/alt N=" + nlab + "'";
    gp += ni + 1 < dat_files.size() ? ", \\\n" : "\n";
  }
  write_text_atomic((fs::path(cfg.out_dir) / "eq13_compare.gp").string(), gp);
  write_timings(cfg, ordered_json{{"total", now_seconds(t0)}});
  return 0;
}

int run_erf_table(const RunConfig& cfg) {
  fs::create_directories(cfg.out_dir);
  const ErfTableExtent& e = cfg.erf_table;
  std::string out = "z_re,z_im,value_re,value_im,est_abs_error,method\n";
  const int nre = static_cast<int>(std::floor((e.re_max - e.re_min) / e.step + 1e-9)) + 1;
  const int nim = static_cast<int>(std::floor((e.im_max - e.im_min) / e.step + 1e-9)) + 1;
  for (int i = 0; i < nre; ++i) {
    for (int k = 0; k < nim; ++k) {
      const double re = e.re_min + i * e.step;
      const double im = e.im_min + k * e.step;
      const ErfResult r = erf_complex({re, im});
      out += format_double(re) + "," + format_double(im) + "," + format_double(r.value.real()) +
             "," + format_double(r.value.imag()) + "," + format_double(r.est_abs_error) + "," +
             erf_method_name(r.method) + "\n";
    }
  }
  write_text_atomic((fs::path(cfg.out_dir) / "erf_table.csv").string(), out);
  return 0;
}

int run_command(const RunConfig& cfg) {
  if (cfg.command == "solve") return run_solve(cfg);
  if (cfg.command == "roundtrip") return run_roundtrip(cfg);
  if (cfg.command == "converge") return run_converge(cfg);
  if (cfg.command == "compare-eq13") return run_compare_eq13(cfg);
  if (cfg.command == "erf-table") return run_erf_table(cfg);
  throw Error("config-parse", "unknown command '" + cfg.command + "'");
}

namespace {

void print_error_json(const Error& e) {
  ordered_json ctx = ordered_json::object();
  for (const auto& [k, v] : e.context()) ctx[k] = v;
  ordered_json j{{"code", e.code()}, {"message", e.what()}, {"context", ctx}};
  std::cerr << j.dump() << std::endl;
}

}  // namespace

int dispatch(int argc, char** argv) {
  CLI::App app{"Cole-Hopf solver for the generalized viscous Burgers equation"};
  app.require_subcommand(1);

  struct SubState {
    std::string config_path;
    std::string out_dir;
    std::string mode;
  };
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"solve", "evolve an initial condition and write psi/eta CSV plus a JSON report"},
      {"roundtrip", "run the velocity->potential->heat->velocity chain on the sampled IC"},
      {"converge", "grid-refinement study of the direct and ratio solvers"},
      {"compare-eq13", "tabulate the point-source closed form against the printed formula"},
      {"erf-table", "dump the complex error function verification table"}};

  std::map<std::string, SubState> state;
  for (const auto& [name, desc] : commands) {
    auto* sub = app.add_subcommand(name, desc);
    auto& st = state[name];
    sub->add_option("config", st.config_path, "JSON config file")->required();
    sub->add_option("--out-dir", st.out_dir, "override the output directory");
    sub->add_option("--mode", st.mode, "solution mode: derived | paper-literal")
        ->check(CLI::IsMember({"derived", "paper-literal"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    ordered_json j{{"code", "usage"}, {"message", e.what()}, {"context", ordered_json::object()}};
    std::cerr << j.dump() << std::endl;
    return e.get_exit_code() == 0 ? 1 : e.get_exit_code();
  }

  try {
    for (const auto& [name, desc] : commands) {
      if (app.got_subcommand(name)) {
        const SubState& st = state[name];
        RunConfig cfg = load_run_config(name, st.config_path);
        if (!st.out_dir.empty()) cfg.out_dir = st.out_dir;
        if (!st.mode.empty()) cfg.mode = parse_mode(st.mode);
        return run_command(cfg);
      }
    }
    throw Error("usage", "no subcommand selected");
  } catch (const Error& e) {
    print_error_json(e);
    return 1;
  } catch (const std::exception& e) {
    ordered_json j{{"code", "internal"}, {"message", e.what()}, {"context", ordered_json::object()}};
    std::cerr << j.dump() << std::endl;
    return 1;
  }
}

}  // namespace colehopf::cli
