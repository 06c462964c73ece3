#pragma once

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "sturmian/basis.hpp"
#include "sturmian/green.hpp"
#include "sturmian/rspt.hpp"
#include "sturmian/spectral.hpp"
#include "sturmian/stark_operator.hpp"
#include "sturmian/stark_physics.hpp"

namespace sturmian::output {

/// Ordered (key, value) echo of the run configuration.
using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

/// %.17g, enough to round-trip a double.
std::string format_double(double value);

/// {"tool", "version", "command", "config": {...}}
nlohmann::ordered_json metadata(const std::string& command, const ConfigEcho& config);

/// "# sturmian <version> <command>" and "# key=value" lines.
std::string csv_provenance(const std::string& command, const ConfigEcho& config);

/// {"metadata", "variable", "max_order", "terms": [{"power", "numerator", "denominator"}]}
/// with integers as decimal strings.
nlohmann::ordered_json series_json(const RationalSeries& series, const nlohmann::ordered_json& meta);
/// power,numerator,denominator
std::string series_csv(const RationalSeries& series, const std::string& provenance);
/// tabular environment with one row per power.
std::string series_latex(const RationalSeries& series);

/// n,l,n_prime,l_prime,value over the nonzero entries of n delta + V, both
/// triangles, row-major.
std::string matrix_csv(const PerturbationMatrix& matrix, const std::string& provenance);

nlohmann::ordered_json spectrum_json(const SpectralResult& result, bool with_vectors,
                                     const nlohmann::ordered_json& meta);

nlohmann::ordered_json green_json(const GreenEvaluation& green, const nlohmann::ordered_json& meta);

/// F,order,method,lambda,energy_ry,converged,iterations
std::string curve_csv(const std::vector<CurvePoint>& rows, const std::string& provenance);

nlohmann::ordered_json basis_check_json(const OrthonormalityReport& report, const nlohmann::ordered_json& meta);

}  // namespace sturmian::output
