#include "sturmian/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace sturmian::output {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

nlohmann::ordered_json metadata(const std::string& command, const ConfigEcho& config) {
  nlohmann::ordered_json meta;
  meta["tool"] = "sturmian";
  meta["version"] = STURMIAN_VERSION;
  meta["command"] = command;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [key, value] : config) cfg[key] = value;
  meta["config"] = std::move(cfg);
  return meta;
}

std::string csv_provenance(const std::string& command, const ConfigEcho& config) {
  std::string out = "# sturmian " STURMIAN_VERSION " " + command + "\n";
  for (const auto& [key, value] : config) out += "# " + key + "=" + value + "\n";
  return out;
}

nlohmann::ordered_json series_json(const RationalSeries& series, const nlohmann::ordered_json& meta) {
  nlohmann::ordered_json out;
  out["metadata"] = meta;
  out["variable"] = to_string(series.variable());
  out["max_order"] = series.max_order();
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (int s = 0; s <= series.max_order(); ++s) {
    const auto& c = series.coefficient(s);
    terms.push_back({{"power", s}, {"numerator", c.get_num().get_str()}, {"denominator", c.get_den().get_str()}});
  }
  out["terms"] = std::move(terms);
  return out;
}

std::string series_csv(const RationalSeries& series, const std::string& provenance) {
  std::string out = provenance + "power,numerator,denominator\n";
  for (int s = 0; s <= series.max_order(); ++s) {
    const auto& c = series.coefficient(s);
    out += std::to_string(s) + "," + c.get_num().get_str() + "," + c.get_den().get_str() + "\n";
  }
  return out;
}

std::string series_latex(const RationalSeries& series) {
  const std::string var = series.variable() == SeriesVariable::Beta ? "\\beta" : "F";
  std::string out = "\\begin{tabular}{rr}\n\\hline\n$s$ & coefficient of $" + var + "^s$ \\\\\n\\hline\n";
  for (int s = 0; s <= series.max_order(); ++s) {
    const auto& c = series.coefficient(s);
    std::string value;
    if (c.get_den() == 1) {
      value = c.get_num().get_str();
    } else {
      const bool negative = sgn(c) < 0;
      mpz_class num = abs(c.get_num());
      value = std::string(negative ? "-" : "") + "\\frac{" + num.get_str() + "}{" + c.get_den().get_str() + "}";
    }
    out += std::to_string(s) + " & $" + value + "$ \\\\\n";
  }
  out += "\\hline\n\\end{tabular}\n";
  return out;
}

std::string matrix_csv(const PerturbationMatrix& matrix, const std::string& provenance) {
  std::ostringstream out;
  out << provenance << "n,l,n_prime,l_prime,value\n";
  const auto& trunc = matrix.truncation();
  // Row-major walk over both triangles.
  std::vector<std::vector<std::pair<std::size_t, double>>> rows(matrix.dimension());
  for (std::size_t i = 0; i < matrix.dimension(); ++i) rows[i].emplace_back(i, matrix.diagonal(i));
  for (const auto& e : matrix.upper_entries()) {
    if (e.value == 0.0) continue;
    rows[e.row].emplace_back(e.col, e.value);
    rows[e.col].emplace_back(e.row, e.value);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::sort(rows[i].begin(), rows[i].end());
    for (const auto& [j, value] : rows[i])
      out << trunc[i].n << ',' << trunc[i].l << ',' << trunc[j].n << ',' << trunc[j].l << ','
          << format_double(value) << '\n';
  }
  return out.str();
}

nlohmann::ordered_json spectrum_json(const SpectralResult& result, bool with_vectors,
                                     const nlohmann::ordered_json& meta) {
  nlohmann::ordered_json out;
  out["metadata"] = meta;
  out["n_max"] = result.truncation.n_max();
  out["beta"] = result.beta;
  out["dimension"] = result.truncation.size();
  out["max_relative_residual"] = result.max_relative_residual;
  out["eigenvalues"] = result.eigenvalues;
  if (with_vectors) {
    nlohmann::ordered_json vectors = nlohmann::ordered_json::array();
    for (Eigen::Index k = 0; k < result.eigenvectors.cols(); ++k) {
      nlohmann::ordered_json components = nlohmann::ordered_json::array();
      for (Eigen::Index i = 0; i < result.eigenvectors.rows(); ++i) {
        const auto& nu = result.truncation[static_cast<std::size_t>(i)];
        components.push_back({{"n", nu.n}, {"l", nu.l}, {"value", result.eigenvectors(i, k)}});
      }
      vectors.push_back({{"index", k}, {"eigenvalue", result.eigenvalues[static_cast<std::size_t>(k)]},
                         {"components", std::move(components)}});
    }
    out["eigenvectors"] = std::move(vectors);
  }
  return out;
}

nlohmann::ordered_json green_json(const GreenEvaluation& green, const nlohmann::ordered_json& meta) {
  nlohmann::ordered_json out;
  out["metadata"] = meta;
  out["energy_ry"] = green.energy;
  out["r"] = green.r;
  out["r_prime"] = green.r_prime;
  out["n_max"] = green.n_max;
  out["value"] = green.value;
  nlohmann::ordered_json trace = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < green.partial_sums.size(); ++k)
    trace.push_back({{"n", k + 1}, {"value", green.partial_sums[k]}});
  out["partial_sums"] = std::move(trace);
  return out;
}

std::string curve_csv(const std::vector<CurvePoint>& rows, const std::string& provenance) {
  std::string out = provenance + "F,order,method,lambda,energy_ry,converged,iterations\n";
  for (const auto& p : rows) {
    const bool unknown = p.method == CurveMethod::Implicit && !p.converged;
    const double energy = unknown ? std::numeric_limits<double>::quiet_NaN() : p.energy;
    out += format_double(p.field) + "," + std::to_string(p.order) + "," + to_string(p.method) + "," +
           format_double(p.lambda) + "," + format_double(energy) + "," + (p.converged ? "true" : "false") + "," +
           std::to_string(p.iterations) + "\n";
  }
  return out;
}

nlohmann::ordered_json basis_check_json(const OrthonormalityReport& report, const nlohmann::ordered_json& meta) {
  nlohmann::ordered_json out;
  out["metadata"] = meta;
  out["n_max"] = report.truncation.n_max();
  out["m_sector"] = report.truncation.m_sector();
  out["states"] = report.truncation.size();
  out["quad_order"] = report.quad_order;
  out["required_order"] = report.required_order;
  out["sufficient"] = report.sufficient;
  out["max_residual"] = report.max_residual;
  return out;
}

}  // namespace sturmian::output
