// Acceptance suite: one [PASS]/[FAIL] line per criterion.
//
//   acceptance [--cli PATH] [c1 ... c10]
//
// With no ids every criterion runs. --cli points at the sturmian executable
// for the determinism check; without it the check runs in-process.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "double_rspt.hpp"
#include "sturmian/basis.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/green.hpp"
#include "sturmian/rspt.hpp"
#include "sturmian/spectral.hpp"
#include "sturmian/stark_operator.hpp"
#include "sturmian/stark_physics.hpp"

using namespace sturmian;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(double x, int digits = 3) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string cli_path;

Outcome c1() {
  const std::vector<Rational> printed{1, 0, -36, 0, -20052, 0, Rational("-292973512"), 0, Rational("-73522897716")};
  const auto t0 = std::chrono::steady_clock::now();
  const auto s = rspt_ground_state(8);
  const double dt = seconds_since(t0);
  std::string mismatches;
  for (int k = 0; k <= 8; ++k)
    if (s.coefficient(k) != printed[k])
      mismatches += " beta^" + std::to_string(k) + ": got " + s.coefficient(k).get_str() + ", expected " +
                    printed[k].get_str() + ";";
  const bool ok = mismatches.empty() && dt < 1.0;
  return {ok, "runtime " + fmt(dt) + " s" + (mismatches.empty() ? "" : ";" + mismatches)};
}

Outcome c2() {
  const std::vector<Rational> printed{-1, 0, Rational(-9, 2), 0, Rational(-3555, 32), 0, Rational(-2512779, 256), 0,
                                      Rational("-13012777803/8192")};
  const auto t0 = std::chrono::steady_clock::now();
  const auto e = energy_series_in_field(8);
  const double dt = seconds_since(t0);
  std::string mismatches;
  for (int k = 0; k <= 8; ++k)
    if (e.coefficient(k) != printed[k])
      mismatches += " F^" + std::to_string(k) + ": got " + e.coefficient(k).get_str() + ";";
  return {mismatches.empty() && dt < 1.0, "runtime " + fmt(dt) + " s" + mismatches};
}

Outcome c3() {
  Rational sum = 0;
  for (const QuantumIndex nu : {QuantumIndex{2, 1, 0}, QuantumIndex{3, 1, 0}}) {
    const Surd c = stark_coupling_exact({1, 0, 0}, nu);
    sum += (c * c).as_rational() / (1 - nu.n);
  }
  return {sum == -36 && rspt_ground_state(2).coefficient(2) == sum, "sum = " + sum.get_str()};
}

Outcome c4() {
  const BasisTruncation t(10);
  double band_err = 0.0, outside_quad = 0.0;
  bool outside_exact_zero = true, sufficient = true;
  int pairs = 0;
  for (const auto& a : t.states())
    for (const auto& b : t.states()) {
      ++pairs;
      const auto o = quadrature_oracle_element(a, b, 1.0);
      sufficient = sufficient && o.sufficient;
      const bool in_band = std::abs(a.l - b.l) == 1 && std::abs(a.n - b.n) <= 2;
      const double analytic = stark_element(a, b, 1.0);
      if (in_band) {
        band_err = std::max(band_err, std::abs(o.value - analytic));
      } else {
        outside_exact_zero = outside_exact_zero && stark_coupling_exact(a, b).is_zero();
        outside_quad = std::max(outside_quad, std::abs(o.value));
      }
    }
  const bool ok = sufficient && band_err < 1e-10 && outside_exact_zero && outside_quad < 1e-12;
  return {ok, std::to_string(pairs) + " pairs; band max |diff| " + fmt(band_err) + "; outside-band max |quad| " +
                  fmt(outside_quad) + (outside_exact_zero ? "" : "; nonzero analytic element outside band")};
}

Outcome c5() {
  const BasisTruncation t(20);
  const auto r = orthonormality_residual(t, orthonormality_required_order(t));
  return {r.sufficient && r.max_residual < 1e-10,
          std::to_string(t.size()) + " states, order " + std::to_string(r.quad_order) + ", max residual " +
              fmt(r.max_residual)};
}

Outcome c6() {
  const double beta = 1e-3;
  const auto r = bw_spectrum(BasisTruncation(21), beta, 1);
  const double series = evaluate_series(rspt_ground_state(8), beta);
  const double diff = std::abs(r.eigenvalues[0] - series);
  const auto zero = bw_spectrum(BasisTruncation(21), 0.0);
  bool exact = true;
  std::size_t i = 0;
  for (int n = 1; n <= 21; ++n)
    for (int k = 0; k < n; ++k) exact = exact && zero.eigenvalues[i++] == n;
  return {diff < 1e-8 && exact, "|lambda_min - series| " + fmt(diff) + (exact ? "; beta=0 spectrum exact" : "; beta=0 spectrum wrong")};
}

Outcome c7() {
  std::vector<double> grid;
  for (int i = 0; i <= 120; ++i) grid.push_back(0.12 * i / 120);
  const std::vector<int> orders{2, 4, 6, 8};
  const auto rows = curve(grid, orders, orders);
  const std::size_t n = grid.size();
  std::string below;
  int violations = 0, unconverged = 0;
  for (std::size_t o = 0; o < orders.size(); ++o)
    for (std::size_t i = 1; i < n; ++i) {
      const auto& implicit = rows[o * n + i];
      const auto& series = rows[(orders.size() + o) * n + i];
      if (!implicit.converged || !series.converged) {
        ++unconverged;
        continue;
      }
      if (!(series.energy > implicit.energy)) {
        if (violations++ == 0)
          below = "first at s=" + std::to_string(orders[o]) + ", F=" + fmt(grid[i]) + " (series " +
                  fmt(series.energy, 12) + " vs implicit " + fmt(implicit.energy, 12) + ")";
      }
    }
  const bool part_a = violations == 0 && unconverged == 0;

  const auto p = rspt_ground_state(10);
  std::vector<double> e;
  bool converged = true;
  for (int s = 2; s <= 10; s += 2) {
    const auto pt = solve_implicit(p, 0.06, s);
    converged = converged && pt.converged;
    e.push_back(pt.energy);
  }
  std::vector<double> gaps;
  for (std::size_t i = 0; i + 1 < e.size(); ++i) gaps.push_back(std::abs(e[i + 1] - e[i]));
  bool decreasing = true;
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i) decreasing = decreasing && gaps[i + 1] < gaps[i];
  const bool part_b = converged && !decreasing;
  std::string gap_text;
  for (double g : gaps) gap_text += (gap_text.empty() ? "" : ",") + fmt(g);

  std::string detail = "(a) " + std::string(part_a ? "holds" : "violated") + ": " + std::to_string(violations) +
                       " of " + std::to_string(orders.size() * (n - 1)) + " points have series <= implicit";
  if (unconverged) detail += ", " + std::to_string(unconverged) + " unconverged";
  if (!below.empty()) detail += ", " + below;
  detail += "; (b) " + std::string(part_b ? "holds" : "violated") + ": gaps at F=0.06 " + gap_text;
  return {part_a && part_b, detail};
}

Outcome c8() {
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n)
    for (int l = 0; l < n; ++l) {
      const std::vector<Vec3> points{{0.5, 0, 0}, {0.3, 0.4, 0.9}, {-1.2, 0.2, 0.7}, {0, 0, -2.0}, {0.1, -0.1, 0.1}};
      worst = std::max(worst, resolvent_residual(-0.7, {n, l, 0}, points, 30).max_residual);
    }
  bool inside = false, outside = true;
  try {
    check_pole(2.0 + 9e-10, 30, 1e-9);
  } catch (const PoleError& e) {
    inside = e.resonant_n() == 2;
  }
  try {
    check_pole(2.0 + 1.1e-9, 30, 1e-9);
  } catch (const PoleError&) {
    outside = false;
  }
  bool via_energy = false;
  try {
    green_function(-1.0 / ((3.0 + 5e-10) * (3.0 + 5e-10)), {1, 0, 0}, {0, 1, 0}, 30);
  } catch (const PoleError& e) {
    via_energy = e.resonant_n() == 3;
  }
  const bool ok = worst < 1e-8 && inside && outside && via_energy;
  return {ok, "max resolvent residual " + fmt(worst) + "; pole detection " +
                  (inside && outside && via_energy ? "correct" : "wrong")};
}

Outcome c9() {
  const double exact = rspt_ground_state(10).coefficient(10).get_d();
  const auto m = assemble_matrix(BasisTruncation(19), 1.0);
  Eigen::MatrixXd v = m.to_dense();
  Eigen::VectorXd d = v.diagonal();
  v.diagonal().setZero();
  const double oracle = double_rspt(d, v, 10)[10];
  const double rel = std::abs(oracle - exact) / std::abs(exact);
  char buf[96];
  std::snprintf(buf, sizeof buf, "exact %.15g, double %.15g, relative %.2g", exact, oracle, rel);
  return {rel < 1e-10, buf};
}

std::vector<std::vector<std::string>> suite_commands() {
  return {{"series", "--variable", "beta", "--order", "10"},
          {"series", "--variable", "field", "--order", "10", "--format", "csv"},
          {"series", "--format", "latex"},
          {"curve"},
          {"matrix"},
          {"spectrum", "--vectors"},
          {"green"},
          {"basis-check"}};
}

std::string in_process(const std::vector<std::string>& command) {
  std::vector<std::string> args{"sturmian"};
  args.insert(args.end(), command.begin(), command.end());
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return std::to_string(code) + "\n" + out.str();
}

std::string subprocess(const std::vector<std::string>& command, const std::filesystem::path& file) {
  std::string line = "'" + cli_path + "' --output '" + file.string() + "'";
  for (const auto& a : command) line += " '" + a + "'";
  const int code = std::system((line + " 2>/dev/null").c_str());
  std::ifstream in(file, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return std::to_string(code) + "\n" + s.str();
}

Outcome c10() {
  const auto commands = suite_commands();
  const auto dir = std::filesystem::temp_directory_path() / "sturmian_acceptance";
  std::filesystem::create_directories(dir);
  std::size_t bytes = 0;
  std::string differing;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::string first, second;
    if (cli_path.empty()) {
      first = in_process(commands[i]);
      second = in_process(commands[i]);
    } else {
      first = subprocess(commands[i], dir / ("run1_" + std::to_string(i)));
      second = subprocess(commands[i], dir / ("run2_" + std::to_string(i)));
    }
    bytes += first.size();
    if (first != second || first.rfind("0\n", 0) != 0) differing += " " + commands[i][0];
  }
  return {differing.empty(), std::to_string(commands.size()) + " commands, " + std::to_string(bytes) + " bytes" +
                                 (cli_path.empty() ? " (in-process)" : " (executable)") +
                                 (differing.empty() ? "" : "; differing or failing:" + differing)};
}

struct Criterion {
  std::string id;
  std::string title;
  std::function<Outcome()> check;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"c1", "lambda(beta) coefficients match the printed series exactly, < 1 s", c1},
      {"c2", "E(F) coefficients match the printed series exactly, < 1 s", c2},
      {"c3", "second-order sum over (2,1,0), (3,1,0) equals -36", c3},
      {"c4", "analytic vs quadrature matrix elements for n, n' <= 10", c4},
      {"c5", "basis orthonormality for n, n' <= 20", c5},
      {"c6", "lowest eigenvalue at beta=1e-3, n_max=21 vs series; beta=0 spectrum", c6},
      {"c7", "field curve: series above implicit; non-monotone order gaps at F=0.06", c7},
      {"c8", "resolvent identity at E=-0.7, n_max=30; pole detection", c8},
      {"c9", "beta^10 coefficient vs double-precision matrix oracle", c9},
      {"c10", "byte-identical output across repeated CLI runs", c10},
  };

  std::vector<std::string> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--cli" && i + 1 < argc)
      cli_path = argv[++i];
    else
      selected.push_back(a);
  }
  for (const auto& s : selected) {
    bool known = false;
    for (const auto& c : criteria) known = known || c.id == s;
    if (!known) {
      std::cerr << "unknown criterion " << s << "\n";
      return 2;
    }
  }

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << " -- " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
