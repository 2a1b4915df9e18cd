// spinitc: ITC metrics of XX spin chains as scriptable, reproducible
// subcommands. All indices are 1-based; doubly-infinite relative positions
// may be negative. Output is CSV (default) or JSON, written to stdout or
// --output. Exit codes: 0 success, 2 usage error, 3 numerical cross-check
// failure, 4 convergence failure.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spinitc/asymptotics.hpp"
#include "spinitc/biassweep.hpp"
#include "spinitc/chain.hpp"
#include "spinitc/errors.hpp"
#include "spinitc/geometry.hpp"
#include "spinitc/itc.hpp"
#include "spinitc/spectral.hpp"

namespace {

using nlohmann::json;
using namespace spinitc;

std::string fmt15(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  std::string s(buf);
  return s == "-0" ? "0" : s;
}

// A cell is a json value; infinite distances become the string "inf" so no
// sentinel float ever reaches serialized output.
json cell(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}
json cell(ExtReal v) { return cell(v.value()); }

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;

  void add_row(std::vector<json> cells) { rows.push_back(std::move(cells)); }
};

std::string cell_to_csv(const json& c) {
  if (c.is_string()) return c.get<std::string>();
  if (c.is_boolean()) return c.get<bool>() ? "true" : "false";
  if (c.is_number_integer()) return std::to_string(c.get<long long>());
  if (c.is_number_unsigned()) return std::to_string(c.get<unsigned long long>());
  return fmt15(c.get<double>());
}

std::string render(const Table& t, const json& config, const std::string& format) {
  if (format == "json") {
    json out;
    out["config"] = config;
    json data = json::array();
    for (const auto& row : t.rows) {
      json obj;
      for (size_t c = 0; c < t.columns.size(); ++c) obj[t.columns[c]] = row[c];
      data.push_back(std::move(obj));
    }
    out["data"] = std::move(data);
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  for (size_t c = 0; c < t.columns.size(); ++c) {
    os << (c ? "," : "") << t.columns[c];
  }
  os << "\n";
  for (const auto& row : t.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      os << (c ? "," : "") << cell_to_csv(row[c]);
    }
    os << "\n";
  }
  return os.str();
}

void emit(const Table& t, const json& config, const std::string& format,
          const std::string& output) {
  const std::string text = render(t, config, format);
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(output, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + output);
  f << text;
}

struct CommonOpts {
  std::string format = "csv";
  std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", opts.output, "Destination path (default: stdout)");
}

void check_spin(int v, int n, const char* what) {
  if (v < 1 || v > n) {
    throw std::invalid_argument(std::string(what) + " must lie in 1.." + std::to_string(n) +
                                ", got " + std::to_string(v));
  }
}

SpectralDecomposition decompose(const ChainSpec& spec) {
  return spec.homogeneous() ? analytic_spectrum(spec)
                            : numeric_spectrum(build_hamiltonian(spec));
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad --zeta entry: '" + item + "'");
    }
    if (pos != item.size()) throw std::invalid_argument("bad --zeta entry: '" + item + "'");
    grid.push_back(v);
  }
  if (grid.empty()) throw std::invalid_argument("--zeta list is empty");
  return grid;
}

// pmax and distance share selectors: --pair, one or more --row, or the full
// matrix when neither is given.
void run_pair_table(const ChainSpec& spec, const std::vector<int>& pair,
                    const std::vector<int>& rows, bool as_distance,
                    const CommonOpts& opts, const json& config) {
  spec.validate();
  const int n = spec.n_spins;
  if (!pair.empty() && !rows.empty()) {
    throw std::invalid_argument("--pair and --row are mutually exclusive");
  }
  const SpectralDecomposition dec = decompose(spec);
  const std::string value_col = as_distance ? "distance" : "sqrt_pmax";
  auto value = [&](int i, int j) -> json {
    const double p = p_max(dec, i, j);
    return as_distance ? cell(distance_from_pmax(p)) : cell(std::sqrt(p));
  };

  Table t;
  if (!pair.empty()) {
    check_spin(pair[0], n, "--pair i");
    check_spin(pair[1], n, "--pair j");
    t.columns = {"i", "j", value_col};
    t.add_row({pair[0], pair[1], value(pair[0], pair[1])});
  } else if (!rows.empty()) {
    for (int r : rows) check_spin(r, n, "--row");
    t.columns = {"j"};
    for (int r : rows) t.columns.push_back(value_col + "_from_" + std::to_string(r));
    for (int j = 1; j <= n; ++j) {
      std::vector<json> row{j};
      for (int r : rows) row.push_back(value(r, j));
      t.add_row(std::move(row));
    }
  } else {
    t.columns = {"i", "j", value_col};
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) t.add_row({i, j, value(i, j)});
    }
  }
  emit(t, config, opts.format, opts.output);
}

json base_config(const std::string& command, const CommonOpts& opts) {
  json config;
  config["command"] = command;
  config["format"] = opts.format;
  config["output"] = opts.output.empty() ? "-" : opts.output;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Information Transfer Capacity (ITC) metrics for XX spin chains: maximum\n"
      "excitation-transfer probabilities, the -log p_max pre-metric, anti-core\n"
      "detection, infinite-chain asymptotics and centre-bias sweeps.\n"
      "Spin indices are 1-based; 'asymptotic --frame doubly' accepts negative\n"
      "positions relative to the centre."};
  app.require_subcommand(1);

  // ---- pmax / distance ----
  struct PairTableOpts {
    int n = 0;
    double bias = 0.0;
    std::vector<int> pair;
    std::vector<int> rows;
    CommonOpts common;
  };
  PairTableOpts pm, di;
  CLI::App* c_pmax = app.add_subcommand("pmax", "sqrt(p_max) for a pair, rows, or the matrix");
  c_pmax->add_option("--n", pm.n, "Chain length")->required();
  c_pmax->add_option("--bias", pm.bias, "Centre bias zeta")->capture_default_str();
  c_pmax->add_option("--pair", pm.pair, "Single spin pair i j")->expected(2);
  c_pmax->add_option("--row", pm.rows, "Source spin; repeat for several rows");
  add_common(c_pmax, pm.common);

  CLI::App* c_dist =
      app.add_subcommand("distance", "d = -log p_max for a pair, rows, or the matrix");
  c_dist->add_option("--n", di.n, "Chain length")->required();
  c_dist->add_option("--bias", di.bias, "Centre bias zeta")->capture_default_str();
  c_dist->add_option("--pair", di.pair, "Single spin pair i j")->expected(2);
  c_dist->add_option("--row", di.rows, "Source spin; repeat for several rows");
  add_common(c_dist, di.common);

  // ---- anticore ----
  struct {
    int n = 0;
    double bias = 0.0;
    double alpha = 2.0;
    bool profile = false;
    CommonOpts common;
  } ac;
  CLI::App* c_ac = app.add_subcommand("anticore", "Anti-core flag and inertia argmax");
  c_ac->add_option("--n", ac.n, "Chain length (odd)")->required();
  c_ac->add_option("--bias", ac.bias, "Centre bias zeta")->capture_default_str();
  c_ac->add_option("--alpha", ac.alpha, "Inertia exponent")->capture_default_str();
  c_ac->add_flag("--profile", ac.profile, "Emit the per-spin inertia profile instead");
  add_common(c_ac, ac.common);

  // ---- asymptotic ----
  struct {
    std::string frame;
    long long i = 0;
    long long j = 0;
    double tol = 1e-10;
    CommonOpts common;
  } as;
  CLI::App* c_as = app.add_subcommand(
      "asymptotic", "Infinite-chain sqrt(p_max): series and closed form, cross-checked");
  c_as->add_option("--frame", as.frame,
                   "semi (positions >= 1) or doubly (signed, centre-relative)")
      ->required()
      ->check(CLI::IsMember({"semi", "doubly"}));
  c_as->add_option("--i", as.i, "First position")->required();
  c_as->add_option("--j", as.j, "Second position")->required();
  c_as->add_option("--tol", as.tol, "Certified series truncation bound")->capture_default_str();
  add_common(c_as, as.common);

  // ---- sweep ----
  struct {
    int n = 0;
    std::string zeta = "1,10,100,1000,10000";
    CommonOpts common;
  } sw;
  CLI::App* c_sw = app.add_subcommand("sweep", "Centre-bias sweep over a zeta grid");
  c_sw->add_option("--n", sw.n, "Chain length (odd)")->required();
  c_sw->add_option("--zeta", sw.zeta, "Comma-separated ascending grid")->capture_default_str();
  add_common(c_sw, sw.common);

  // ---- hyperbolicity ----
  struct {
    int n = 0;
    double bias = 0.0;
    long long budget = 2'000'000;
    unsigned long long seed = 12345;
    CommonOpts common;
  } hy;
  CLI::App* c_hy = app.add_subcommand(
      "hyperbolicity", "Four-point delta (diagnostic) and triangle audit of the pre-metric");
  c_hy->add_option("--n", hy.n, "Chain length")->required();
  c_hy->add_option("--bias", hy.bias, "Centre bias zeta")->capture_default_str();
  c_hy->add_option("--budget", hy.budget, "Exhaustive quadruple budget / sample count")
      ->capture_default_str();
  c_hy->add_option("--seed", hy.seed, "Quadruple sampling seed")->capture_default_str();
  add_common(c_hy, hy.common);

  // ---- evolve ----
  struct {
    int n = 0;
    double bias = 0.0;
    std::vector<int> pair;
    double tmax = 100.0;
    double dt = 0.05;
    CommonOpts common;
  } ev;
  CLI::App* c_ev = app.add_subcommand("evolve", "p_t(i,j) over a time grid, with p_max alongside");
  c_ev->add_option("--n", ev.n, "Chain length")->required();
  c_ev->add_option("--bias", ev.bias, "Centre bias zeta")->capture_default_str();
  c_ev->add_option("--pair", ev.pair, "Spin pair i j")->required()->expected(2);
  c_ev->add_option("--tmax", ev.tmax, "End of the time grid")->capture_default_str();
  c_ev->add_option("--dt", ev.dt, "Grid step")->capture_default_str();
  add_common(c_ev, ev.common);

  // ---- constants ----
  struct {
    CommonOpts common;
  } co;
  CLI::App* c_co =
      app.add_subcommand("constants", "Asymptotic constants at 15 significant digits");
  add_common(c_co, co.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*c_pmax || *c_dist) {
      const bool as_distance = static_cast<bool>(*c_dist);
      const PairTableOpts& o = as_distance ? di : pm;
      json config = base_config(as_distance ? "distance" : "pmax", o.common);
      config["n"] = o.n;
      config["bias"] = o.bias;
      if (!o.pair.empty()) config["pair"] = o.pair;
      if (!o.rows.empty()) config["rows"] = o.rows;
      run_pair_table({o.n, o.bias}, o.pair, o.rows, as_distance, o.common, config);
    } else if (*c_ac) {
      const ChainSpec spec{ac.n, ac.bias};
      spec.validate();
      const ITCMatrix m = itc_matrix(spec);
      const AntiCoreResult res = find_anticore(m);
      json config = base_config("anticore", ac.common);
      config["n"] = ac.n;
      config["bias"] = ac.bias;
      config["alpha"] = ac.alpha;
      config["profile"] = ac.profile;
      Table t;
      if (ac.profile) {
        t.columns = {"j", "inertia"};
        for (int j = 1; j <= ac.n; ++j) t.add_row({j, cell(inertia(m, j, ac.alpha))});
      } else {
        int argmax = 1;
        for (int j = 2; j <= ac.n; ++j) {
          if (inertia(m, j, ac.alpha) > inertia(m, argmax, ac.alpha)) argmax = j;
        }
        std::string violations;
        for (const auto& [i, j] : res.violations) {
          violations += (violations.empty() ? "" : ";") + std::to_string(i) + ":" +
                        std::to_string(j);
        }
        t.columns = {"omega", "flag", "inertia_argmax", "violations"};
        t.add_row({res.omega, res.holds, argmax, violations});
      }
      emit(t, config, ac.common.format, ac.common.output);
    } else if (*c_as) {
      json config = base_config("asymptotic", as.common);
      config["frame"] = as.frame;
      config["i"] = as.i;
      config["j"] = as.j;
      config["tol"] = as.tol;
      const AsymptoticValue v = as.frame == "semi"
                                    ? semi_infinite_pmax(as.i, as.j, as.tol)
                                    : doubly_infinite_pmax(as.i, as.j, as.tol);
      const char* special = "none";
      switch (v.special) {
        case AsymptoticSpecial::kIdentity: special = "identity"; break;
        case AsymptoticSpecial::kCenter: special = "center"; break;
        case AsymptoticSpecial::kReflectedIdentity: special = "reflected-identity"; break;
        case AsymptoticSpecial::kNone: break;
      }
      Table t;
      t.columns = {"frame", "i", "j", "gcd", "i_reduced", "j_reduced", "parity",
                   "special", "sqrt_pmax", "series", "closed", "tail_bound"};
      const std::string parity =
          as.frame == "semi"
              ? ""
              : (v.pair.parity == ParityClass::kEqualDyadicValuation ? "equal" : "unequal");
      t.add_row({as.frame, as.i, as.j, v.pair.g, v.pair.i_red, v.pair.j_red, parity,
                 special, cell(v.value), cell(v.series), cell(v.closed), cell(v.tail_bound)});
      emit(t, config, as.common.format, as.common.output);
    } else if (*c_sw) {
      const std::vector<double> grid = parse_grid(sw.zeta);
      json config = base_config("sweep", sw.common);
      config["n"] = sw.n;
      config["zeta"] = grid;
      const std::vector<SweepPoint> pts = sweep({sw.n, 0.0}, grid);
      for (size_t k = 1; k < pts.size(); ++k) {
        if (pts[k].pmax_1_omega > pts[k - 1].pmax_1_omega + 1e-10) {
          std::cerr << "note: pmax_1_omega not monotone between zeta = "
                    << fmt15(pts[k - 1].zeta) << " and " << fmt15(pts[k].zeta) << "\n";
        }
      }
      Table t;
      t.columns = {"zeta", "lambda_max_over_zeta", "pmax_1_omega", "pmax_1_N",
                   "d_1_omega", "d_1_omega_over_log_zeta"};
      for (const SweepPoint& pt : pts) {
        t.add_row({cell(pt.zeta), cell(pt.lambda_max_over_zeta), cell(pt.pmax_1_omega),
                   cell(pt.pmax_1_n), cell(pt.d_1_omega), cell(pt.d_1_omega_over_log_zeta)});
      }
      emit(t, config, sw.common.format, sw.common.output);
    } else if (*c_hy) {
      const ChainSpec spec{hy.n, hy.bias};
      spec.validate();
      json config = base_config("hyperbolicity", hy.common);
      config["n"] = hy.n;
      config["bias"] = hy.bias;
      config["budget"] = hy.budget;
      config["seed"] = hy.seed;
      const ITCMatrix m = itc_matrix(spec);
      const FourPointResult fp = four_point_delta(m.distance, hy.budget, hy.seed);
      const TriangleAudit tri = triangle_violations(m.distance);
      Table t;
      t.columns = {"delta", "x", "y", "z", "w", "quadruples", "skipped_infinite",
                   "exhaustive", "seed", "triangle_violations", "max_triangle_excess"};
      t.add_row({cell(fp.delta), fp.quad[0], fp.quad[1], fp.quad[2], fp.quad[3],
                 fp.scanned, fp.skipped_infinite, fp.exhaustive,
                 static_cast<unsigned long long>(fp.seed),
                 static_cast<long long>(tri.violations.size()), cell(tri.max_excess)});
      emit(t, config, hy.common.format, hy.common.output);
    } else if (*c_ev) {
      const ChainSpec spec{ev.n, ev.bias};
      spec.validate();
      if (!(ev.dt > 0.0) || !(ev.tmax >= 0.0)) {
        throw std::invalid_argument("--dt must be > 0 and --tmax >= 0");
      }
      check_spin(ev.pair[0], ev.n, "--pair i");
      check_spin(ev.pair[1], ev.n, "--pair j");
      json config = base_config("evolve", ev.common);
      config["n"] = ev.n;
      config["bias"] = ev.bias;
      config["pair"] = ev.pair;
      config["tmax"] = ev.tmax;
      config["dt"] = ev.dt;
      const SpectralDecomposition dec = decompose(spec);
      const double pmax_pair = p_max(dec, ev.pair[0], ev.pair[1]);
      Table t;
      t.columns = {"t", "p_t", "p_max"};
      for (long long k = 0;; ++k) {
        const double tt = static_cast<double>(k) * ev.dt;
        if (tt > ev.tmax + ev.dt * 1e-9) break;
        t.add_row({cell(tt), cell(p_t(dec, ev.pair[0], ev.pair[1], tt)), cell(pmax_pair)});
      }
      emit(t, config, ev.common.format, ev.common.output);
    } else if (*c_co) {
      json config = base_config("constants", co.common);
      const DiameterConstants c = diameter_constants();
      Table t;
      t.columns = {"name", "value"};
      t.add_row({"2/pi", cell(c.center_sqrt)});
      t.add_row({"8/pi^2", cell(c.doubly_floor_sqrt)});
      t.add_row({"64/pi^4", cell(c.semi_floor_pmax)});
      t.add_row({"pi^2-8", cell(std::numbers::pi * std::numbers::pi - 8.0)});
      t.add_row({"-2log(2/pi)", cell(c.doubly_diameter)});
      emit(t, config, co.common.format, co.common.output);
    }
  } catch (const CrossCheckError& e) {
    std::cerr << "cross-check failure: " << e.what() << "\n";
    return 3;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
