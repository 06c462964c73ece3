#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <new>
#include <sstream>

#include "sturmian/basis.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/green.hpp"
#include "sturmian/output.hpp"
#include "sturmian/rspt.hpp"
#include "sturmian/spectral.hpp"
#include "sturmian/stark_operator.hpp"
#include "sturmian/stark_physics.hpp"

namespace sturmian::cli {

namespace {

using output::ConfigEcho;
using output::format_double;

struct Options {
  std::string output;

  std::string series_variable = "beta";
  int series_order = 8;
  std::string series_format = "json";

  double curve_fmin = 0.0;
  double curve_fmax = 0.12;
  int curve_points = 121;
  std::vector<int> curve_orders{2, 4, 6, 8, 10};
  std::vector<int> curve_series_orders{2, 4, 6, 8};

  int matrix_nmax = 5;
  double matrix_beta = 1e-3;

  int spectrum_nmax = 21;
  double spectrum_beta = 1e-3;
  int spectrum_k = 0;
  bool spectrum_vectors = false;

  double green_energy = -0.7;
  std::vector<double> green_r{1.0, 0.0, 0.0};
  std::vector<double> green_r_prime{0.0, 1.0, 0.0};
  int green_nmax = 30;

  int basis_nmax = 20;
  int basis_quad_order = 0;
};

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_double(v[i]);
  return s;
}

const CLI::Validator kEven = CLI::Validator(
    [](const std::string& text) -> std::string {
      try {
        const int v = std::stoi(text);
        if (v < 0 || v % 2 != 0) return "value must be an even integer >= 0, got " + text;
      } catch (const std::exception&) {
        return "expected an integer, got " + text;
      }
      return {};
    },
    "EVEN");

std::string resolve_output_path(const std::string& path) {
  if (path.empty()) return path;
  const std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  if (const char* dir = std::getenv("STURMIAN_OUTPUT_DIR"); dir != nullptr && *dir != '\0')
    return (std::filesystem::path(dir) / p).string();
  return path;
}

int emit(const std::string& content, const Options& opts, std::ostream& out, std::ostream& err) {
  const std::string path = resolve_output_path(opts.output);
  if (path.empty()) {
    out << content;
    return kOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open output file " << path << "\n";
    return kRuntimeFailure;
  }
  file << content;
  return file ? kOk : kRuntimeFailure;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

int cmd_series(const Options& o, std::ostream& out, std::ostream& err) {
  const ConfigEcho config{{"variable", o.series_variable}, {"order", std::to_string(o.series_order)},
                          {"format", o.series_format}};
  const int order = o.series_order;
  std::optional<RationalSeries> result;
  try {
    const auto lambda_beta = rspt_ground_state(std::max(order, 1));
    result = o.series_variable == "beta" ? lambda_beta.truncated(order) : energy_series_in_field(lambda_beta, order);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    err << "note: completed orders 0.." << e.partial().max_order() << " of lambda(beta):\n";
    err << output::series_csv(e.partial(), "");
    return kRuntimeFailure;
  }
  std::string content;
  if (o.series_format == "json")
    content = dump(output::series_json(*result, output::metadata("series", config)));
  else if (o.series_format == "csv")
    content = output::series_csv(*result, output::csv_provenance("series", config));
  else
  {
    std::istringstream lines(output::csv_provenance("series", config));
    for (std::string line; std::getline(lines, line);) content += "%" + line.substr(1) + "\n";
    content += output::series_latex(*result);
  }
  return emit(content, o, out, err);
}

std::vector<double> linspace(double lo, double hi, int points) {
  std::vector<double> grid;
  if (points == 1) return {lo};
  for (int i = 0; i < points; ++i) grid.push_back(lo + (hi - lo) * i / (points - 1));
  return grid;
}

int cmd_curve(const Options& o, std::ostream& out, std::ostream& err) {
  const ConfigEcho config{{"fmin", format_double(o.curve_fmin)},
                          {"fmax", format_double(o.curve_fmax)},
                          {"points", std::to_string(o.curve_points)},
                          {"orders", join(o.curve_orders)},
                          {"series_orders", join(o.curve_series_orders)}};
  const auto rows = curve(linspace(o.curve_fmin, o.curve_fmax, o.curve_points), o.curve_orders,
                          o.curve_series_orders);
  std::size_t failed = 0;
  for (const auto& p : rows) {
    if (p.converged) continue;
    ++failed;
    err << "warning: F=" << format_double(p.field) << " order " << p.order << " " << to_string(p.method)
        << ": " << p.diagnostic << "\n";
  }
  const int status = emit(output::curve_csv(rows, output::csv_provenance("curve", config)), o, out, err);
  if (status != kOk) return status;
  return (!rows.empty() && failed == rows.size()) ? kRuntimeFailure : kOk;
}

int cmd_matrix(const Options& o, std::ostream& out, std::ostream& err) {
  const ConfigEcho config{{"nmax", std::to_string(o.matrix_nmax)}, {"beta", format_double(o.matrix_beta)}};
  const auto matrix = assemble_matrix(BasisTruncation(o.matrix_nmax), o.matrix_beta);
  return emit(output::matrix_csv(matrix, output::csv_provenance("matrix", config)), o, out, err);
}

int cmd_spectrum(const Options& o, std::ostream& out, std::ostream& err) {
  const ConfigEcho config{{"nmax", std::to_string(o.spectrum_nmax)},
                          {"beta", format_double(o.spectrum_beta)},
                          {"k", std::to_string(o.spectrum_k)},
                          {"vectors", o.spectrum_vectors ? "true" : "false"}};
  const auto result = bw_spectrum(BasisTruncation(o.spectrum_nmax), o.spectrum_beta, o.spectrum_k);
  return emit(dump(output::spectrum_json(result, o.spectrum_vectors, output::metadata("spectrum", config))), o,
              out, err);
}

int cmd_green(const Options& o, std::ostream& out, std::ostream& err) {
  const ConfigEcho config{{"energy", format_double(o.green_energy)},
                          {"r", join(o.green_r)},
                          {"rp", join(o.green_r_prime)},
                          {"nmax", std::to_string(o.green_nmax)}};
  const Vec3 r{o.green_r[0], o.green_r[1], o.green_r[2]};
  const Vec3 rp{o.green_r_prime[0], o.green_r_prime[1], o.green_r_prime[2]};
  const auto green = green_function(o.green_energy, r, rp, o.green_nmax);
  return emit(dump(output::green_json(green, output::metadata("green", config))), o, out, err);
}

int cmd_basis_check(const Options& o, std::ostream& out, std::ostream& err) {
  const BasisTruncation trunc(o.basis_nmax);
  const int quad = o.basis_quad_order > 0 ? o.basis_quad_order : orthonormality_required_order(trunc) + 10;
  const ConfigEcho config{{"nmax", std::to_string(o.basis_nmax)}, {"quad_order", std::to_string(quad)}};
  const auto report = orthonormality_residual(trunc, quad);
  const int status = emit(dump(output::basis_check_json(report, output::metadata("basis-check", config))), o, out, err);
  if (status != kOk) return status;
  if (!report.sufficient) {
    err << "warning: quadrature order " << quad << " is below the exact order " << report.required_order << "\n";
    return kRuntimeFailure;
  }
  if (report.max_residual >= 1e-10) {
    err << "error: orthonormality residual " << format_double(report.max_residual) << " exceeds 1e-10\n";
    return kRuntimeFailure;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Sturmian-basis perturbation theory for the hydrogen atom", "sturmian"};
  app.require_subcommand(1);
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_config("--config", "", "Flat key=value configuration file; command-line flags take precedence");
  app.add_option("-o,--output", o.output,
                 "Write results to this file (relative paths resolve against $STURMIAN_OUTPUT_DIR when set)");
  app.set_version_flag("--version", std::string(STURMIAN_VERSION));

  auto* series = app.add_subcommand("series", "Exact perturbation series lambda(beta) or E(F)");
  series->add_option("--variable", o.series_variable, "beta: lambda(beta); field: E(F)/Ry")
      ->check(CLI::IsMember({"beta", "field"}))
      ->capture_default_str();
  series->add_option("--order", o.series_order, "Highest power (even)")->check(kEven)->capture_default_str();
  series->add_option("--format", o.series_format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "latex"}))
      ->capture_default_str();

  auto* curve_cmd = app.add_subcommand("curve", "Ground-state energy versus field, implicit and power-series rows");
  curve_cmd->add_option("--fmin", o.curve_fmin, "Smallest field")->check(CLI::NonNegativeNumber)->capture_default_str();
  curve_cmd->add_option("--fmax", o.curve_fmax, "Largest field")->check(CLI::NonNegativeNumber)->capture_default_str();
  curve_cmd->add_option("--points", o.curve_points, "Number of grid points")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  curve_cmd->add_option("--orders", o.curve_orders, "Implicit-curve orders")
      ->delimiter(',')
      ->check(kEven)
      ->capture_default_str();
  curve_cmd->add_option("--series-orders", o.curve_series_orders, "Truncated power-series orders")
      ->delimiter(',')
      ->check(kEven)
      ->capture_default_str();

  auto* matrix = app.add_subcommand("matrix", "Dump the nonzero entries of n delta + V as CSV");
  matrix->add_option("--nmax", o.matrix_nmax, "Largest n")->check(CLI::Range(1, 500))->capture_default_str();
  matrix->add_option("--beta", o.matrix_beta, "Dimensionless coupling")->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the truncated Stark matrix");
  spectrum->add_option("--nmax", o.spectrum_nmax, "Largest n")->check(CLI::Range(1, 200))->capture_default_str();
  spectrum->add_option("--beta", o.spectrum_beta, "Dimensionless coupling")->capture_default_str();
  spectrum->add_option("--k", o.spectrum_k, "Number of lowest eigenpairs (0 = all)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  spectrum->add_flag("--vectors", o.spectrum_vectors, "Include eigenvectors");

  auto* green = app.add_subcommand("green", "Coulomb Green's function G_E(r, r') with its partial-sum trace");
  green->add_option("--energy", o.green_energy, "Energy in Ry (< 0)")->capture_default_str();
  green->add_option("--r", o.green_r, "x,y,z in a_B")->delimiter(',')->expected(3)->capture_default_str();
  green->add_option("--rp", o.green_r_prime, "x',y',z' in a_B")->delimiter(',')->expected(3)->capture_default_str();
  green->add_option("--nmax", o.green_nmax, "Largest n in the sum")->check(CLI::Range(1, 200))->capture_default_str();

  auto* basis = app.add_subcommand("basis-check", "Orthonormality residuals of the Sturmian basis");
  basis->add_option("--nmax", o.basis_nmax, "Largest n")->check(CLI::Range(1, 150))->capture_default_str();
  basis->add_option("--quad-order", o.basis_quad_order, "Gauss-Laguerre order (0 = automatic)")
      ->check(CLI::Range(0, 400))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << STURMIAN_VERSION << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
      err << sub->help();
    else
      err << app.help();
    return kUsageError;
  }

  try {
    if (series->parsed()) return cmd_series(o, out, err);
    if (curve_cmd->parsed()) {
      if (o.curve_fmax < o.curve_fmin) {
        err << "error: --fmax must be >= --fmin\n";
        return kUsageError;
      }
      return cmd_curve(o, out, err);
    }
    if (matrix->parsed()) return cmd_matrix(o, out, err);
    if (spectrum->parsed()) return cmd_spectrum(o, out, err);
    if (green->parsed()) return cmd_green(o, out, err);
    if (basis->parsed()) return cmd_basis_check(o, out, err);
  } catch (const PoleError& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeFailure;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kRuntimeFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeFailure;
  }
  return kUsageError;
}

}  // namespace sturmian::cli
