// Command-line surface for the three-qubit XX ring toolkit: single-point
// queries, critical-temperature tables, parameter sweeps, and the
// closed-form-vs-oracle verification suites.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xxring/concurrence.hpp"
#include "xxring/critical.hpp"
#include "xxring/io.hpp"
#include "xxring/linalg.hpp"
#include "xxring/reference_tables.hpp"
#include "xxring/ring.hpp"
#include "xxring/sweep.hpp"
#include "xxring/teleport.hpp"
#include "xxring/verify.hpp"
#include "xxring/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string fmt12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct UnitScale {
  double field;        // multiply a --B/--eta-style value by this
  double temperature;  // multiply a --T-style value by this
};

// In units-of-J mode the field and temperature inputs are multiples of |J|.
UnitScale unit_scale(const std::string& units, double J) {
  if (units == "absolute") return {1.0, 1.0};
  if (units == "J") {
    if (J == 0.0) {
      throw std::invalid_argument("units-of-J input requires J != 0 (use --units absolute)");
    }
    return {std::abs(J), std::abs(J)};
  }
  throw std::invalid_argument("unknown units '" + units + "' (expected J or absolute)");
}

xxring::SweepRange parse_range(const std::string& text) {
  xxring::SweepRange r;
  const std::size_t c1 = text.find(':');
  if (c1 == std::string::npos) {
    r.start = r.stop = std::stod(text);
    r.count = 1;
    return r;
  }
  const std::size_t c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos) {
    throw std::invalid_argument("range '" + text + "' must be start:stop:count or a single value");
  }
  r.start = std::stod(text.substr(0, c1));
  r.stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
  r.count = std::stoi(text.substr(c2 + 1));
  return r;
}

std::vector<xxring::Quantity> parse_quantities(const std::vector<std::string>& names) {
  std::vector<xxring::Quantity> out;
  for (const std::string& entry : names) {
    std::stringstream ss(entry);
    std::string token;
    while (std::getline(ss, token, ',')) {
      if (token.empty()) continue;
      const auto q = xxring::quantity_from_name(token);
      if (!q) throw std::invalid_argument("unknown quantity '" + token + "'");
      out.push_back(*q);
    }
  }
  if (out.empty()) throw std::invalid_argument("no quantities requested");
  return out;
}

// ---------------------------------------------------------------------------
// spectrum

int cmd_spectrum(double J, double B) {
  const xxring::Spectrum s = xxring::analytic_spectrum({J, B, 1.0});
  std::vector<const xxring::EigenLevel*> levels;
  for (const auto& level : s.levels) levels.push_back(&level);
  std::stable_sort(levels.begin(), levels.end(),
                   [](const auto* a, const auto* b) { return a->energy < b->energy; });
  std::cout << "# analytic spectrum at J=" << fmt12(J) << " B=" << fmt12(B) << "\n";
  for (const auto* level : levels) {
    std::printf("%-4s %s\n", std::string(level->label).c_str(), fmt12(level->energy).c_str());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// point

struct PointOptions {
  double J = 0.0, B = 0.0, T = 0.0;
  std::vector<std::string> quantity_names;
  double theta = 1.0471975511965976;
  std::string units = "J";
  bool verify = false;
};

void print_value(const std::string& name, double value) {
  std::cout << name << " = " << fmt12(value) << "\n";
}

void print_verified(const std::string& name, double closed, double oracle) {
  std::cout << name << " closed=" << fmt12(closed) << " oracle=" << fmt12(oracle)
            << " |diff|=" << fmt12(std::abs(closed - oracle)) << "\n";
}

int point_zero_temperature(const PointOptions& opt, double B_phys,
                           const std::vector<xxring::Quantity>& quantities) {
  const xxring::ComplexMatrix ground = xxring::ground_state_limit(opt.J, B_phys);
  for (xxring::Quantity q : quantities) {
    switch (q) {
      case xxring::Quantity::Concurrence: {
        const double exact = xxring::concurrence_zero_T(opt.J, B_phys);
        if (opt.verify) {
          print_verified("concurrence",
                         exact, xxring::wootters_concurrence(xxring::reduced_pair_state(ground)));
        } else {
          print_value("concurrence", exact);
        }
        break;
      }
      case xxring::Quantity::AvgFidelity: {
        const double exact = xxring::average_fidelity_zero_T(opt.J, B_phys);
        if (opt.verify) {
          print_verified("avg_fidelity", exact, xxring::average_fidelity_for_resource(ground));
        } else {
          print_value("avg_fidelity", exact);
        }
        break;
      }
      case xxring::Quantity::Advantage:
        print_value("advantage",
                    xxring::average_fidelity_zero_T(opt.J, B_phys) > 2.0 / 3.0 ? 1.0 : 0.0);
        break;
      case xxring::Quantity::Probabilities: {
        // No closed form in the exact limit; report the simulated branches.
        const auto outcomes =
            xxring::teleport_outcomes(xxring::input_state(opt.theta, 0.0), ground);
        for (const auto& branch : outcomes) {
          print_value("p" + std::to_string(branch.j), branch.probability);
        }
        break;
      }
    }
  }
  return kExitOk;
}

int cmd_point(const PointOptions& opt) {
  const auto quantities =
      parse_quantities(opt.quantity_names.empty()
                           ? std::vector<std::string>{"concurrence,avg_fidelity,advantage"}
                           : opt.quantity_names);
  const UnitScale scale = unit_scale(opt.units, opt.J);
  const double B_phys = opt.B * scale.field;
  if (opt.T < 0.0) throw std::invalid_argument("point: temperature must be >= 0");
  if (opt.T == 0.0) return point_zero_temperature(opt, B_phys, quantities);

  const xxring::RingParams p{opt.J, B_phys, 1.0 / (opt.T * scale.temperature)};
  for (xxring::Quantity q : quantities) {
    switch (q) {
      case xxring::Quantity::Concurrence: {
        const double closed = xxring::thermal_concurrence(p);
        if (opt.verify) {
          const double oracle = xxring::wootters_concurrence(
              xxring::reduced_pair_state(xxring::thermal_state(p)));
          print_verified("concurrence", closed, oracle);
        } else {
          print_value("concurrence", closed);
        }
        break;
      }
      case xxring::Quantity::AvgFidelity: {
        const double closed = xxring::average_fidelity_closed(p);
        if (opt.verify) {
          print_verified("avg_fidelity", closed, xxring::average_fidelity_quadrature(p));
        } else {
          print_value("avg_fidelity", closed);
        }
        break;
      }
      case xxring::Quantity::Advantage:
        print_value("advantage", xxring::quantum_advantage(p) ? 1.0 : 0.0);
        break;
      case xxring::Quantity::Probabilities: {
        const auto closed = xxring::outcome_probabilities_closed(p, opt.theta);
        if (opt.verify) {
          const xxring::ComplexMatrix pi_in = xxring::input_state(opt.theta, 0.0);
          const xxring::ComplexMatrix chi = xxring::thermal_state(p);
          for (int j = 1; j <= 4; ++j) {
            print_verified("p" + std::to_string(j), closed[j - 1],
                           xxring::measure_branch(pi_in, chi, j).probability);
          }
        } else {
          for (int j = 1; j <= 4; ++j) print_value("p" + std::to_string(j), closed[j - 1]);
        }
        break;
      }
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// tables

int print_table(const char* title, double J, std::span<const xxring::CriticalReferenceRow> ref,
                double tol) {
  std::vector<double> etas;
  for (const auto& row : ref) etas.push_back(row.eta);
  const auto scan = xxring::phase_scan(J, etas);

  int failures = 0;
  std::cout << title << "\n";
  const bool with_t2 = J < 0.0;
  std::printf(with_t2 ? "  %-7s %-13s %-11s %-10s %-13s %-11s %-10s\n"
                      : "  %-7s %-13s %-11s %-10s\n",
              "eta", "T1", "T1(ref)", "|dT1|", "T2", "T2(ref)", "|dT2|");
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const auto& row = scan[i];
    std::printf("  %-7g ", ref[i].eta);
    auto emit = [&](std::optional<double> solved, std::optional<double> published) {
      if (!published) {
        std::printf("%-13s %-11s %-10s ", solved ? fmt12(*solved).c_str() : "-", "-", "-");
        return;
      }
      if (!solved) {
        std::printf("%-13s %-11g %-10s ", "FAIL", *published, "-");
        ++failures;
        return;
      }
      const double diff = std::abs(*solved - *published);
      if (diff > tol) ++failures;
      std::printf("%-13.9g %-11g %-10.1e ", *solved, *published, diff);
    };
    emit(row.T1, ref[i].T1);
    if (with_t2) emit(row.T2, ref[i].T2);
    std::printf("\n");
  }
  return failures;
}

int cmd_tables(double tol) {
  int failures = 0;
  failures += print_table("Antiferromagnetic ring (J > 0), B = eta J, temperatures in units of J",
                          1.0, xxring::reference_rows_antiferro(), tol);
  std::cout << "\n";
  failures += print_table(
      "Ferromagnetic ring (J < 0), B = -eta J, temperatures in units of |J|", -1.0,
      xxring::reference_rows_ferro(), tol);
  std::cout << "\n"
            << (failures == 0 ? "TABLES PASS" : "TABLES FAIL") << " (tolerance " << tol << ")\n";
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOptions {
  double J = -1.0;
  std::string B_range = "0";
  std::string T_range = "1";
  std::vector<std::string> quantity_names;
  double theta = 1.0471975511965976;
  std::string units = "J";
  std::string format = "csv";
  std::string out_path;
  bool serial = false;
};

int cmd_sweep(const SweepOptions& opt) {
  xxring::SweepSpec spec;
  spec.J = opt.J;
  spec.B = parse_range(opt.B_range);
  spec.T = parse_range(opt.T_range);
  spec.quantities = parse_quantities(opt.quantity_names);
  spec.theta = opt.theta;
  if (opt.units == "absolute") {
    spec.units_of_J = false;
  } else if (opt.units != "J") {
    throw std::invalid_argument("unknown units '" + opt.units + "'");
  }
  if (opt.format != "csv" && opt.format != "json") {
    throw std::invalid_argument("unknown format '" + opt.format + "' (expected csv or json)");
  }
  spec.validate();

  const xxring::SweepTable table = xxring::run_sweep(spec, !opt.serial);

  std::string quantities;
  for (const auto& name : opt.quantity_names) {
    if (!quantities.empty()) quantities += ",";
    quantities += name;
  }
  const xxring::RunManifest manifest = xxring::make_manifest({
      {"J", xxring::format_double(spec.J)},
      {"B", opt.B_range},
      {"T", opt.T_range},
      {"quantities", quantities},
      {"theta", xxring::format_double(spec.theta)},
      {"units", spec.units_of_J ? "J" : "absolute"},
      {"engine", opt.serial ? "serial" : "parallel"},
  });

  auto emit = [&](std::ostream& os) {
    if (opt.format == "json") {
      xxring::write_json(os, table, manifest);
    } else {
      xxring::write_csv(os, table, manifest);
    }
  };

  if (opt.out_path.empty() || opt.out_path == "-") {
    emit(std::cout);
    return kExitOk;
  }
  std::ofstream file(opt.out_path);
  if (!file) {
    std::cerr << "error: cannot open output path '" << opt.out_path << "'\n";
    return kExitIo;
  }
  emit(file);
  file.flush();
  if (!file) {
    std::cerr << "error: short write to '" << opt.out_path << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// critical

int cmd_critical(double J, std::optional<double> B, std::optional<double> eta,
                 const std::string& units) {
  if (B && eta) throw std::invalid_argument("pass either --B or --eta, not both");
  double field = 0.0;
  if (eta) {
    field = *eta * std::abs(J);
  } else if (B) {
    field = *B * unit_scale(units, J).field;
  }
  const double out_scale = (units == "absolute") ? std::abs(J) : 1.0;
  const char* unit_label = (units == "absolute") ? "" : " |J|";

  auto report = [&](const char* name, const std::optional<xxring::CriticalResult>& r) {
    if (!r) {
      std::cout << name << ": no transition\n";
      return;
    }
    std::cout << name << " = " << fmt12(r->value * out_scale) << unit_label
              << "  (residual " << fmt12(r->residual) << ", bracket ["
              << fmt12(r->bracket_low * out_scale) << ", " << fmt12(r->bracket_high * out_scale)
              << "], " << r->iterations << " iterations)\n";
  };

  report("T1", xxring::solve_T1(J, field));
  if (J < 0.0) report("T2", xxring::solve_T2(J, field));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& grid_name, double perturb, bool serial) {
  std::span<const xxring::GridPoint> grid;
  if (grid_name == "standard") {
    grid = xxring::standard_grid();
  } else if (grid_name == "small") {
    grid = xxring::small_grid();
  } else {
    throw std::invalid_argument("unknown grid '" + grid_name + "' (expected standard or small)");
  }

  const xxring::VerifyOutcome r = xxring::run_verification(grid, perturb, !serial);
  auto report = [](const char* name, double dev, double tol, const xxring::GridPoint& at) {
    std::printf("%-34s max|dev| = %-12.3e tol = %-8.0e at (J=%g, B=%g, beta=%g)  %s\n", name, dev,
                tol, at.J, at.B, at.beta, dev <= tol ? "PASS" : "FAIL");
  };
  std::cout << "oracle suites over " << grid.size() << " grid points";
  if (perturb != 0.0) std::cout << " (closed forms perturbed by " << perturb << ")";
  std::cout << "\n";
  report("thermal state vs matrix exponential", r.max_thermal_dev,
         xxring::VerifyOutcome::kThermalTol, r.thermal_argmax);
  report("concurrence vs spin-flip pipeline", r.max_concurrence_dev,
         xxring::VerifyOutcome::kConcurrenceTol, r.concurrence_argmax);
  report("avg fidelity vs protocol quadrature", r.max_fidelity_dev,
         xxring::VerifyOutcome::kFidelityTol, r.fidelity_argmax);
  std::cout << (r.pass() ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
  return r.pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("Thermal entanglement and teleportation in a three-qubit "
                           "Heisenberg XX ring (") +
               std::string(xxring::kToolName) + " " + std::string(xxring::kVersion) + ")"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Optional config file (ini format; flags override)");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Labeled analytic energies, sorted ascending");
  double sp_J = 0.0, sp_B = 0.0;
  spectrum->add_option("--J", sp_J, "Exchange coupling")->required();
  spectrum->add_option("--B", sp_B, "Magnetic field")->required();

  // point
  auto* point = app.add_subcommand("point", "Quantities at a single (J, B, T) point");
  PointOptions popt;
  point->add_option("--J", popt.J, "Exchange coupling")->required();
  point->add_option("--B", popt.B, "Magnetic field (units per --units)")->required();
  point->add_option("--T", popt.T, "Temperature; 0 selects the exact zero-T limits")->required();
  point->add_option("--q", popt.quantity_names,
                    "Quantities: concurrence, avg_fidelity, advantage, probabilities "
                    "(default: concurrence,avg_fidelity,advantage)");
  point->add_option("--theta", popt.theta, "Input polar angle for probabilities");
  point->add_option("--units", popt.units, "J (fields/temperatures in |J|) or absolute");
  point->add_flag("--verify", popt.verify, "Also print the oracle value and the difference");

  // tables
  auto* tables = app.add_subcommand("tables", "Recompute the critical-temperature tables");
  double tab_tol = 1e-4;
  tables->add_option("--tol", tab_tol, "Comparison tolerance against the reference values");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Grid of quantities over (B, T), CSV or JSON");
  SweepOptions sopt;
  sweep->add_option("--J", sopt.J, "Exchange coupling")->required();
  sweep->add_option("--B", sopt.B_range, "Field range start:stop:count (or single value)")
      ->required();
  sweep->add_option("--T", sopt.T_range, "Temperature range start:stop:count")->required();
  sweep->add_option("--q", sopt.quantity_names, "Comma-separated quantity list")->required();
  sweep->add_option("--theta", sopt.theta, "Input polar angle for probabilities");
  sweep->add_option("--units", sopt.units, "J or absolute");
  sweep->add_option("--format", sopt.format, "csv or json");
  sweep->add_option("--out", sopt.out_path, "Output path (default: stdout)");
  sweep->add_flag("--serial", sopt.serial, "Use the serial reference engine");

  // critical
  auto* critical = app.add_subcommand("critical", "Solve the T1/T2 transition temperatures");
  double cr_J = 0.0;
  std::optional<double> cr_B, cr_eta;
  critical->add_option("--J", cr_J, "Exchange coupling")->required();
  critical->add_option("--B", cr_B, "Magnetic field (units per --units)");
  critical->add_option("--eta", cr_eta, "Field ratio, B = eta |J|");
  std::string cr_units = "J";
  critical->add_option("--units", cr_units, "J or absolute");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the closed-form vs oracle suites");
  std::string v_grid = "standard";
  double v_perturb = 0.0;
  bool v_serial = false;
  verify->add_option("--grid", v_grid, "standard (5x5x4) or small (3x3x3)");
  verify->add_option("--perturb", v_perturb, "Fault injection: offset added to closed forms");
  verify->add_flag("--serial", v_serial, "Use the serial reference engine");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(sp_J, sp_B);
    if (point->parsed()) return cmd_point(popt);
    if (tables->parsed()) return cmd_tables(tab_tol);
    if (sweep->parsed()) return cmd_sweep(sopt);
    if (critical->parsed()) return cmd_critical(cr_J, cr_B, cr_eta, cr_units);
    if (verify->parsed()) return cmd_verify(v_grid, v_perturb, v_serial);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::range_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
