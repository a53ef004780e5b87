#include "mhd/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mhd/diagnostics.hpp"
#include "mhd/io.hpp"

namespace mhd {

namespace {

const std::vector<std::string> kConsNames = {"mass", "momx", "momy", "momz",
                                             "energy", "B1", "B2", "B3"};
const std::vector<std::string> kPrimNames = {"rho", "u", "v", "w", "p", "B1", "B2", "B3"};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n\"'");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n\"'");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::string body = trim(s);
  if (!body.empty() && body.front() == '[') body = body.substr(1);
  if (!body.empty() && body.back() == ']') body.pop_back();
  std::vector<std::string> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_double(const std::string& key, const std::string& s) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(trim(s), &pos);
    if (pos != trim(s).size() || !std::isfinite(v)) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': expected a number, got '" + s + "'");
  }
}

std::size_t parse_count(const std::string& key, const std::string& s) {
  const double v = parse_double(key, s);
  if (v != std::floor(v) || v < 2) {
    throw ConfigError("key '" + key + "': expected an integer >= 2, got '" + s + "'");
  }
  return static_cast<std::size_t>(v);
}

std::string cfl_tag(double cfl) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", cfl);
  return buf;
}

std::string time_tag(double t) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", t);
  return buf;
}

std::vector<double> ledger_row(const ConservationLedger& l) {
  std::vector<double> r = {l.time};
  r.insert(r.end(), l.totals.begin(), l.totals.end());
  r.push_back(l.total_entropy);
  return r;
}

std::vector<std::string> ledger_header() {
  std::vector<std::string> h = {"time"};
  h.insert(h.end(), kConsNames.begin(), kConsNames.end());
  h.push_back("entropy");
  return h;
}

class Artifacts {
 public:
  explicit Artifacts(const std::string& dir) : dir_(dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw ConfigError("cannot create output directory '" + dir + "': " + ec.message());
  }
  std::string path(const std::string& name) {
    const std::string p = (std::filesystem::path(dir_) / name).string();
    result.files.push_back(p);
    return p;
  }
  RunResult result;

 private:
  std::string dir_;
};

Grid1D make_grid_1d(const RunConfig& c, std::size_t n, const ProblemSpec& spec) {
  return c.grid == GridKind::Stretched ? make_stretched_grid(n, spec.xmin, spec.xmax, c.ratio)
                                       : make_uniform_grid(n, spec.xmin, spec.xmax);
}

// Snapshot times strictly inside (0, t_final), sorted, plus t_final itself.
std::vector<double> snapshot_times(const RunConfig& c) {
  std::vector<double> ts;
  for (double t : c.output_times) {
    if (t > 0.0 && t < c.t_final) ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  ts.push_back(c.t_final);
  return ts;
}

[[noreturn]] void breakdown(const CellStateError& e, double t, const Grid2D* g2) {
  std::ostringstream os;
  os << "solver breakdown at t=" << format_double(t) << ": " << e.what();
  if (g2 != nullptr && g2->nx > 0) {
    os << " (i=" << e.cell() % g2->nx << ", j=" << e.cell() / g2->nx << ")";
  }
  throw SolverBreakdown(os.str());
}

// Advances through every snapshot time; calls on_snapshot(q, t) at each.
template <class DtFn, class SnapFn, class StepFn>
void march(Field& q, const RunConfig& c, const RhsFn& rhs, DtFn dt_fn, SnapFn on_snapshot,
           StepFn on_step, const Grid2D* g2 = nullptr) {
  double t = 0.0;
  try {
    for (double target : snapshot_times(c)) {
      advance(q, t, target, c.integrator, rhs, dt_fn, [&](const Field& f, double tt) {
        t = tt;
        on_step(f, tt);
      });
      t = target;
      to_primitive(q, c.gamma);
      on_snapshot(q, target);
    }
  } catch (const CellStateError& e) {
    breakdown(e, t, g2);
  }
}

void run_convergence(const RunConfig& c, Artifacts& art) {
  const ProblemSpec spec = problem_spec(ProblemId::Manufactured);
  RhsOptions opt{c.gamma, c.flux, BoundaryKind::Periodic, manufactured_source};
  const double gamma = c.gamma;
  std::vector<std::array<double, 8>> errors;
  for (std::size_t n : c.cells) {
    const Grid1D grid = make_grid_1d(c, n, spec);
    Field q = init_manufactured(grid, gamma);
    const RhsFn rhs = [&](const Field& f, double t, Field& out) {
      semidiscrete_rhs_1d(f, grid, opt, t, out);
    };
    march(
        q, c, rhs, [&](const Field& f) { return stable_dt(f, grid, gamma, c.cfl.front()); },
        [&](const Field& f, double t) {
          write_snapshot(art.path("snapshot_N" + std::to_string(n) + "_t" + time_tag(t) + ".csv"),
                         f, grid, gamma);
        },
        [](const Field&, double) {});
    errors.push_back(l2_error(
        q, [gamma](double x, double t) { return manufactured_cons(x, t, gamma); }, grid,
        c.t_final));
  }

  std::vector<std::string> header = {"cells"};
  header.insert(header.end(), kConsNames.begin(), kConsNames.end());
  std::vector<std::vector<double>> rows;
  for (std::size_t k = 0; k < c.cells.size(); ++k) {
    std::vector<double> row = {static_cast<double>(c.cells[k])};
    row.insert(row.end(), errors[k].begin(), errors[k].end());
    rows.push_back(std::move(row));
  }
  write_csv(art.path("convergence_errors.csv"), header, rows);

  if (c.cells.size() < 2) return;
  std::vector<std::string> eh = {"variable"};
  for (std::size_t k = 0; k + 1 < c.cells.size(); ++k) {
    eh.push_back("rate_" + std::to_string(c.cells[k]) + "_" + std::to_string(c.cells[k + 1]));
  }
  eh.push_back("mean");
  std::vector<std::vector<double>> erows;
  for (int v = 0; v < 8; ++v) {
    std::vector<double> row;
    std::vector<double> col;
    for (const auto& e : errors) col.push_back(e[v]);
    const bool usable = std::all_of(col.begin(), col.end(), [](double e) { return e > 0.0; });
    if (usable) {
      const EocResult r = eoc(col, c.cells);
      row.insert(row.end(), r.rates.begin(), r.rates.end());
      row.push_back(r.mean);
    } else {
      row.insert(row.end(), c.cells.size(), std::nan(""));
    }
    erows.push_back(std::move(row));
  }
  write_csv(art.path("convergence_eoc.csv"), eh, erows, kConsNames);
}

template <class GridT, class RhsCall>
void run_ledger_sweep(const RunConfig& c, Artifacts& art, const GridT& grid, const Field& init,
                      RhsCall rhs_call, const Grid2D* g2) {
  std::vector<std::vector<double>> deltas;
  for (double cfl : c.cfl) {
    Field q = init;
    const ConservationLedger start = integrate_conserved(q, grid, c.gamma, 0.0);
    std::vector<std::vector<double>> rows = {ledger_row(start)};
    const RhsFn rhs = rhs_call;
    ConservationLedger last = start;
    march(
        q, c, rhs, [&](const Field& f) { return stable_dt(f, grid, c.gamma, cfl); },
        [&](const Field& f, double t) {
          write_snapshot(art.path("snapshot_cfl" + cfl_tag(cfl) + "_t" + time_tag(t) + ".csv"), f,
                         grid, c.gamma);
        },
        [&](const Field& f, double t) {
          last = integrate_conserved(f, grid, c.gamma, t);
          rows.push_back(ledger_row(last));
        },
        g2);
    write_csv(art.path("ledger_cfl" + cfl_tag(cfl) + ".csv"), ledger_header(), rows);
    const LedgerDelta d = delta_e(start, last);
    std::vector<double> row = {cfl};
    row.insert(row.end(), d.totals.begin(), d.totals.end());
    row.push_back(d.entropy);
    deltas.push_back(std::move(row));
  }
  std::vector<std::string> h = {"cfl"};
  h.insert(h.end(), kConsNames.begin(), kConsNames.end());
  h.push_back("entropy");
  write_csv(art.path("conservation_deltas.csv"), h, deltas);
}

void run_conservation(const RunConfig& c, Artifacts& art) {
  ProblemSpec spec = problem_spec(c.problem);
  spec.gamma = c.gamma;
  const Grid1D grid = make_grid_1d(c, c.cells.front(), spec);
  const Field init = init_riemann(spec, grid);
  RhsOptions opt{c.gamma, c.flux, c.bc, {}};
  run_ledger_sweep(
      c, art, grid, init,
      [&](const Field& f, double t, Field& out) { semidiscrete_rhs_1d(f, grid, opt, t, out); },
      nullptr);
}

Field init_2d(ProblemId id, const Grid2D& grid) {
  return id == ProblemId::Rotor ? init_rotor(grid) : init_shock_tube_25d(grid);
}

void run_shocktube2d(const RunConfig& c, Artifacts& art) {
  const std::size_t n = c.cells.front();
  const Grid2D grid = make_grid_2d(n, n, 0.0, 1.0, 0.0, 1.0);
  const Field init = init_2d(ProblemId::ShockTube25D, grid);
  RhsOptions opt{c.gamma, c.flux, c.bc, {}};
  run_ledger_sweep(
      c, art, grid, init,
      [&](const Field& f, double t, Field& out) { semidiscrete_rhs_2d(f, grid, opt, t, out); },
      &grid);
}

std::vector<double> riemann_distance(const Field& q, const Grid1D& grid, double gamma,
                                     const CsvTable& ref, const ProblemSpec& spec) {
  std::vector<double> x;
  std::vector<std::vector<double>> values;
  const std::size_t xc = ref.column("x");
  std::vector<std::size_t> cols;
  for (const auto& name : kPrimNames) cols.push_back(ref.column(name));
  for (const auto& row : ref.rows) {
    x.push_back(row[xc]);
    std::vector<double> v;
    for (std::size_t col : cols) v.push_back(row[col]);
    values.push_back(std::move(v));
  }
  const auto proj = project_snapshot(x, values, spec.xmin, spec.xmax, grid);
  std::vector<double> dist(8, 0.0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const PrimState p = cons_to_prim(q[i], gamma);
    const double mine[8] = {p.rho, p.u, p.v, p.w, p.p, p.B1, p.B2, p.B3};
    for (int k = 0; k < 8; ++k) {
      const double d = mine[k] - proj[i][k];
      dist[k] += grid.widths[i] * d * d;
    }
  }
  for (double& d : dist) d = std::sqrt(d);
  return dist;
}

void run_riemann(const RunConfig& c, Artifacts& art) {
  ProblemSpec spec = problem_spec(c.problem);
  spec.gamma = c.gamma;
  std::optional<CsvTable> ref;
  if (!c.reference.empty()) {
    try {
      ref = read_csv(c.reference);
    } catch (const std::exception& e) {
      throw ConfigError("cannot read reference '" + c.reference + "': " + e.what());
    }
  }
  std::vector<std::vector<double>> dist_rows;
  for (std::size_t n : c.cells) {
    const Grid1D grid = make_grid_1d(c, n, spec);
    Field q = init_riemann(spec, grid);
    RhsOptions opt{c.gamma, c.flux, c.bc, {}};
    const RhsFn rhs = [&](const Field& f, double t, Field& out) {
      semidiscrete_rhs_1d(f, grid, opt, t, out);
    };
    march(
        q, c, rhs, [&](const Field& f) { return stable_dt(f, grid, c.gamma, c.cfl.front()); },
        [&](const Field& f, double t) {
          write_snapshot(art.path(problem_name(c.problem) + "_" + flux_name(c.flux) + "_N" +
                                  std::to_string(n) + "_t" + time_tag(t) + ".csv"),
                         f, grid, c.gamma);
        },
        [](const Field&, double) {});
    if (ref) {
      std::vector<double> row = {static_cast<double>(n)};
      const auto d = riemann_distance(q, grid, c.gamma, *ref, spec);
      row.insert(row.end(), d.begin(), d.end());
      dist_rows.push_back(std::move(row));
    }
  }
  if (ref) {
    std::vector<std::string> h = {"cells"};
    h.insert(h.end(), kPrimNames.begin(), kPrimNames.end());
    write_csv(art.path("reference_distance.csv"), h, dist_rows);
  }
}

void run_rotor(const RunConfig& c, Artifacts& art) {
  const std::size_t n = c.cells.front();
  const Grid2D grid = make_grid_2d(n, n, 0.0, 1.0, 0.0, 1.0);
  Field q = init_2d(ProblemId::Rotor, grid);
  RhsOptions opt{c.gamma, c.flux, c.bc, {}};
  const RhsFn rhs = [&](const Field& f, double t, Field& out) {
    semidiscrete_rhs_2d(f, grid, opt, t, out);
  };
  const ConservationLedger start = integrate_conserved(q, grid, c.gamma, 0.0);
  std::vector<std::vector<double>> ledger = {ledger_row(start)};
  march(
      q, c, rhs, [&](const Field& f) { return stable_dt(f, grid, c.gamma, c.cfl.front()); },
      [&](const Field& f, double t) {
        write_snapshot(art.path("rotor_N" + std::to_string(n) + "_t" + time_tag(t) + ".csv"), f,
                       grid, c.gamma);
        const std::vector<double> div = discrete_div_b(f, grid);
        std::vector<std::vector<double>> rows;
        rows.reserve(div.size());
        for (std::size_t j = 0; j < grid.ny; ++j) {
          for (std::size_t i = 0; i < grid.nx; ++i) {
            const PrimState p = cons_to_prim(f[grid.index(i, j)], c.gamma);
            rows.push_back({grid.x(i), grid.y(j), div[grid.index(i, j)],
                            std::sqrt(p.vel_sq()) / std::sqrt(c.gamma * p.p / p.rho)});
          }
        }
        write_csv(art.path("divb_N" + std::to_string(n) + "_t" + time_tag(t) + ".csv"),
                  {"x", "y", "divB", "mach"}, rows);
      },
      [&](const Field& f, double t) {
        ledger.push_back(ledger_row(integrate_conserved(f, grid, c.gamma, t)));
      },
      &grid);
  write_csv(art.path("ledger.csv"), ledger_header(), ledger);
}

void set_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "problem", "flux",       "cells",        "cfl",        "grid",      "ratio",   "gamma",
      "t_final", "bc",         "integrator",   "output_dir", "output_times", "reference",
      "threads"};
  return keys;
}

Experiment parse_experiment(const std::string& name) {
  const std::string n = lower(trim(name));
  if (n == "convergence") return Experiment::Convergence;
  if (n == "conservation") return Experiment::Conservation;
  if (n == "riemann") return Experiment::Riemann;
  if (n == "shocktube2d") return Experiment::ShockTube2D;
  if (n == "rotor") return Experiment::Rotor;
  throw ConfigError("unknown experiment '" + name + "'");
}

std::string experiment_name(Experiment e) {
  switch (e) {
    case Experiment::Convergence: return "convergence";
    case Experiment::Conservation: return "conservation";
    case Experiment::Riemann: return "riemann";
    case Experiment::ShockTube2D: return "shocktube2d";
    case Experiment::Rotor: return "rotor";
  }
  return "unknown";
}

FluxKind parse_flux(const std::string& name) {
  const std::string n = lower(trim(name));
  if (n == "ec") return FluxKind::EC;
  if (n == "ekec") return FluxKind::EKEC;
  if (n == "es_roe" || n == "es-roe") return FluxKind::ES_ROE;
  if (n == "es_llf" || n == "es-llf") return FluxKind::ES_LLF;
  throw ConfigError("unknown flux '" + name + "'");
}

std::string flux_name(FluxKind k) {
  switch (k) {
    case FluxKind::EC: return "ec";
    case FluxKind::EKEC: return "ekec";
    case FluxKind::ES_ROE: return "es_roe";
    case FluxKind::ES_LLF: return "es_llf";
  }
  return "unknown";
}

RunConfig make_run_config(const std::string& experiment, const KeyValues& values) {
  for (const auto& [k, v] : values) {
    const auto& keys = config_keys();
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
      throw ConfigError("unknown key '" + k + "'");
    }
  }
  RunConfig c;
  c.experiment = parse_experiment(experiment);
  auto get = [&](const std::string& k) -> std::optional<std::string> {
    auto it = values.find(k);
    if (it == values.end()) return std::nullopt;
    return trim(it->second);
  };

  switch (c.experiment) {
    case Experiment::Convergence:
      c.problem = ProblemId::Manufactured;
      c.cells = {50, 100, 200, 400};
      c.cfl = {0.5};
      break;
    case Experiment::Conservation:
      c.problem = ProblemId::BrioWu;
      c.cells = {100};
      c.cfl = {1.0, 0.1, 0.01};
      break;
    case Experiment::Riemann:
      c.problem = ProblemId::BrioWu;
      c.flux = FluxKind::ES_ROE;
      c.cells = {200};
      c.cfl = {0.1};
      break;
    case Experiment::ShockTube2D:
      c.problem = ProblemId::ShockTube25D;
      c.cells = {50};
      c.cfl = {1.0, 0.1, 0.01};
      c.integrator = RKScheme::RK2;
      break;
    case Experiment::Rotor:
      c.problem = ProblemId::Rotor;
      c.flux = FluxKind::ES_ROE;
      c.cells = {128};
      c.cfl = {0.8};
      c.integrator = RKScheme::RK2;
      break;
  }

  if (auto v = get("problem")) {
    try {
      c.problem = parse_problem(lower(*v));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  const bool one_d = c.experiment == Experiment::Conservation || c.experiment == Experiment::Riemann;
  const bool riemann_problem = c.problem == ProblemId::BrioWu || c.problem == ProblemId::RyuJones ||
                               c.problem == ProblemId::Torrilhon;
  if (one_d && !riemann_problem) {
    throw ConfigError(experiment_name(c.experiment) + " needs brio_wu, ryu_jones or torrilhon");
  }
  if (c.experiment == Experiment::Convergence && c.problem != ProblemId::Manufactured) {
    throw ConfigError("convergence runs the manufactured problem only");
  }
  if (c.experiment == Experiment::ShockTube2D && c.problem != ProblemId::ShockTube25D) {
    throw ConfigError("shocktube2d runs the shock_tube_25d problem only");
  }
  if (c.experiment == Experiment::Rotor && c.problem != ProblemId::Rotor) {
    throw ConfigError("rotor runs the rotor problem only");
  }

  const ProblemSpec spec = problem_spec(c.problem);
  c.gamma = spec.gamma;
  c.t_final = spec.t_final;
  c.bc = c.experiment == Experiment::Riemann ? spec.bc : BoundaryKind::Periodic;

  if (auto v = get("flux")) c.flux = parse_flux(*v);
  if (auto v = get("cells")) {
    c.cells.clear();
    for (const auto& s : split_list(*v)) c.cells.push_back(parse_count("cells", s));
    if (c.cells.empty()) throw ConfigError("key 'cells' is empty");
  }
  if (auto v = get("cfl")) {
    c.cfl.clear();
    for (const auto& s : split_list(*v)) {
      const double x = parse_double("cfl", s);
      if (!(x > 0.0)) throw ConfigError("key 'cfl' must be > 0");
      c.cfl.push_back(x);
    }
    if (c.cfl.empty()) throw ConfigError("key 'cfl' is empty");
  }
  if (auto v = get("grid")) {
    const std::string g = lower(*v);
    if (g == "uniform" || g == "regular") {
      c.grid = GridKind::Uniform;
    } else if (g == "stretched" || g == "irregular") {
      c.grid = GridKind::Stretched;
    } else {
      throw ConfigError("unknown grid '" + *v + "'");
    }
  }
  if (auto v = get("ratio")) {
    c.ratio = parse_double("ratio", *v);
    if (!(c.ratio >= 1.0)) throw ConfigError("key 'ratio' must be >= 1");
  }
  if (auto v = get("gamma")) {
    c.gamma = parse_double("gamma", *v);
    if (!(c.gamma > 1.0)) throw ConfigError("key 'gamma' must be > 1");
  }
  if (auto v = get("t_final")) {
    c.t_final = parse_double("t_final", *v);
    if (!(c.t_final > 0.0)) throw ConfigError("key 't_final' must be > 0");
  }
  if (auto v = get("bc")) {
    const std::string b = lower(*v);
    if (b == "periodic") {
      c.bc = BoundaryKind::Periodic;
    } else if (b == "outflow") {
      c.bc = BoundaryKind::Outflow;
    } else {
      throw ConfigError("unknown bc '" + *v + "'");
    }
  }
  if (auto v = get("integrator")) {
    const std::string s = lower(*v);
    if (s == "lserk45") {
      c.integrator = RKScheme::LSERK45;
    } else if (s == "rk2") {
      c.integrator = RKScheme::RK2;
    } else {
      throw ConfigError("unknown integrator '" + *v + "'");
    }
  }
  if (auto v = get("output_times")) {
    for (const auto& s : split_list(*v)) c.output_times.push_back(parse_double("output_times", s));
  }
  if (auto v = get("output_dir")) c.output_dir = *v;
  if (auto v = get("reference")) c.reference = *v;
  if (auto v = get("threads")) {
    const double t = parse_double("threads", *v);
    if (t < 0 || t != std::floor(t)) throw ConfigError("key 'threads' must be an integer >= 0");
    c.threads = static_cast<int>(t);
  }
  if (c.grid == GridKind::Stretched &&
      (c.experiment == Experiment::ShockTube2D || c.experiment == Experiment::Rotor)) {
    throw ConfigError("stretched grids are 1D only");
  }
  return c;
}

RunResult run_experiment(const RunConfig& config) {
  set_threads(config.threads);
  Artifacts art(config.output_dir);
  switch (config.experiment) {
    case Experiment::Convergence: run_convergence(config, art); break;
    case Experiment::Conservation: run_conservation(config, art); break;
    case Experiment::Riemann: run_riemann(config, art); break;
    case Experiment::ShockTube2D: run_shocktube2d(config, art); break;
    case Experiment::Rotor: run_rotor(config, art); break;
  }
  return art.result;
}

std::vector<std::vector<double>> project_snapshot(const std::vector<double>& x,
                                                  const std::vector<std::vector<double>>& values,
                                                  double xmin, double xmax, const Grid1D& grid) {
  const std::size_t m = x.size();
  if (m == 0 || values.size() != m) throw LengthMismatch("reference snapshot is empty or ragged");
  const std::size_t nv = values.front().size();
  const double h = (xmax - xmin) / static_cast<double>(m);
  std::vector<std::vector<double>> out(grid.size(), std::vector<double>(nv, 0.0));
  double left = grid.xmin;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double right = left + grid.widths[i];
    const auto first = static_cast<std::size_t>(std::max(0.0, std::floor((left - xmin) / h)));
    double covered = 0.0;
    for (std::size_t k = first; k < m; ++k) {
      const double a = std::max(left, xmin + static_cast<double>(k) * h);
      const double b = std::min(right, xmin + static_cast<double>(k + 1) * h);
      if (a >= right) break;
      if (b <= a) continue;
      for (std::size_t v = 0; v < nv; ++v) out[i][v] += (b - a) * values[k][v];
      covered += b - a;
    }
    if (covered > 0.0) {
      for (double& v : out[i]) v /= covered;
    }
    left = right;
  }
  return out;
}

}  // namespace mhd
