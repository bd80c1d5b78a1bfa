// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "nhchain/critical.hpp"
#include "nhchain/observables.hpp"
#include "nhchain/qfi.hpp"
#include "nhchain/sweep.hpp"
#include "oracle.hpp"

using namespace nhchain;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, const std::function<Outcome()>& check) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("%s [%d] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

Outcome two_site_spectrum() {
  std::mt19937_64 gen(20240601);
  std::uniform_real_distribution<double> u(0.0, 0.5);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const ChainParams p{2, u(gen), 1.0, u(gen), 0.0};
    const auto closed = eigenvalues_two_site(p);
    const auto dense = dense_eigenvalues(build_hamiltonian(p));
    worst = std::max(worst, oracle::multiset_distance(dense, {closed.begin(), closed.end()}));
  }
  return {worst < 1e-10, fmt("max multiset distance %.3g over 1000 draws (tol 1e-10)", worst)};
}

Outcome two_site_steady_state() {
  double worst_infidelity = 0.0, worst_mag = 0.0, worst_corr = 0.0;
  int points = 0;
  for (int a = 0; a < 10; ++a)
    for (int b = 0; b < 10; ++b)
      for (int c = 0; c < 8; ++c) {
        const double j = 0.05 * (a + 0.5);
        // Field as a fraction of its exceptional-point value at this coupling.
        const double h = 0.1 * (b + 0.5) * std::sqrt(1.0 - 4 * j * j) / 4.0;
        const double theta = c * std::numbers::pi / 4;
        const ChainParams p{2, j, 1.0, h, theta};
        const SteadyState ss = solve_steady_state(p, {SolverMethod::Dense});
        const auto ref = oracle::two_site_steady_vector(j, 1.0, h, theta);
        worst_infidelity = std::max(worst_infidelity, 1.0 - oracle::fidelity(ss.vector, ref));

        const auto m = magnetizations_two_site(p);
        const auto mx = magnetization_profile(ss, Axis::X);
        const auto my = magnetization_profile(ss, Axis::Y);
        const auto mz = magnetization_profile(ss, Axis::Z);
        for (double d : {mx[0] - m.sx1, my[0] - m.sy1, mz[0] - m.sz1, mx[1] - m.sx2, my[1] - m.sy2,
                         mz[1] - m.sz2})
          worst_mag = std::max(worst_mag, std::abs(d));

        const auto cc = correlations_two_site(p);
        for (double d : {correlation_profile(ss, Axis::X)[0] - cc.xx, correlation_profile(ss, Axis::Y)[0] - cc.yy,
                         correlation_profile(ss, Axis::Z)[0] - cc.zz})
          worst_corr = std::max(worst_corr, std::abs(d));
        ++points;
      }
  const bool ok = worst_infidelity < 1e-10 && worst_mag < 1e-8 && worst_corr < 1e-8;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%d points: max infidelity %.3g, magnetization err %.3g, correlation err %.3g "
                "(transverse correlations use (1 - B/A))",
                points, worst_infidelity, worst_mag, worst_corr);
  return {ok, buf};
}

Outcome qfi_oracle() {
  double worst = 0.0;
  int points = 0;
  for (double j : {0.0, 0.15, 0.3, 0.4})
    for (double h : {0.02, 0.08, 0.15, 0.2})
      for (QfiTarget t : {QfiTarget::Field, QfiTarget::Angle}) {
        const ChainParams p{2, j, 1.0, h, 0.3};
        const double b2 = 1 - 4 * j * j - 16 * h * h;
        if (b2 < 0.01) continue;
        const double exact = qfi_two_site_analytic(p, t);
        const double scale = std::max(std::abs(exact), 1e-12);
        worst = std::max(worst, std::abs(qfi_fidelity(p, t).value - exact) / scale);
        worst = std::max(worst, std::abs(qfi_vector_fd(p, t).value - exact) / scale);
        ++points;
      }
  // Near the exceptional point: B = 0.01 at J = 0.3.
  const double j = 0.3;
  const double h = std::sqrt(1 - 4 * j * j - 1e-4) / 4;
  const ChainParams near{2, j, 1.0, h, 0.0};
  const double target = 1 + 4 * j * j;
  const double numeric = qfi_fidelity(near, QfiTarget::Angle).value;
  const double closed = qfi_two_site_analytic(near, QfiTarget::Angle);
  const double near_err = std::max(std::abs(numeric - target), std::abs(closed - target)) / target;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%d grid points, max rel err %.3g (tol 1e-3); I_theta at B=0.01: numeric %.5f, "
                "closed %.5f vs 1+4J^2 = %.2f, rel err %.3g (tol 2e-2)",
                points, worst, numeric, closed, target, near_err);
  return {worst < 1e-3 && near_err < 2e-2, buf};
}

Outcome two_site_ep() {
  const double at_field = find_ep_coupling({2, 0.0, 1.0, 0.2, 0.0}, 0.0, 0.6).critical_coupling;
  const double at_zero = find_ep_coupling({2, 0.0, 1.0, 0.0, 0.0}, 0.0, 0.6).critical_coupling;
  const bool ok = std::abs(at_field - 0.3) <= 1e-4 && std::abs(at_zero - 0.5) <= 1e-4;
  return {ok, fmt("J_c(h=0.2) = %.7f, J_c(h=0) = %.7f (tol 1e-4)", at_field, at_zero)};
}

Outcome extrapolation() {
  std::vector<int> sizes;
  for (int n = 2; n <= 10; ++n) sizes.push_back(n);
  std::vector<std::pair<int, double>> points;
  const std::vector<double> zero_field{0.0};
  for (int n : sizes) {
    const EpCurve curve = ep_curve(n, zero_field, 1.0, 0.0);
    points.emplace_back(n, curve.points[0].critical_coupling);
  }
  const ScalingFit fit = fit_inverse_poly(points);
  const double c = fit.extrapolated();
  std::vector<std::pair<int, double>> large(points.begin() + 2, points.end());
  const ScalingFit alt = fit_inverse_poly(large);
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "N=2..10: a=%.4f b=%.4f c=%.4f (target [0.244, 0.254]); informational N=4..10: "
                "a=%.4f b=%.4f c=%.4f",
                fit.coefficients[0], fit.coefficients[1], c, alt.coefficients[0], alt.coefficients[1],
                alt.extrapolated());
  return {c >= 0.244 && c <= 0.254, buf};
}

SolverOptions krylov_solver() {
  SolverOptions s;
  s.method = SolverMethod::Krylov;
  return s;
}

Outcome qfi_growth() {
  QfiOptions opts;
  opts.solver = krylov_solver();
  std::vector<double> values;
  std::string detail = "I_h:";
  for (int n : {2, 4, 6, 8, 10, 12}) {
    const QfiEstimate e = qfi_fidelity({n, 0.23, 1.0, 0.2, 0.0}, QfiTarget::Field, opts);
    values.push_back(e.value);
    detail += fmt(" N=%.0f:%.3f", n, e.value);
  }
  bool increasing = true;
  for (std::size_t k = 1; k + 1 < values.size(); ++k) increasing = increasing && values[k] > values[k - 1];
  const double increment = (values[5] - values[4]) / values[4];
  detail += fmt("; increasing(2..10)=%.0f, increment 10->12 = %.4f (tol 0.05)", increasing ? 1 : 0, increment);
  return {increasing && increment < 0.05, detail};
}

Outcome correlation_decay() {
  const SteadyState s10 = solve_steady_state({10, 0.23, 1.0, 0.2, 0.0}, krylov_solver());
  const SteadyState s12 = solve_steady_state({12, 0.23, 1.0, 0.2, 0.0}, krylov_solver());
  const auto c10 = correlation_profile(s10, Axis::Y);
  const auto c12 = correlation_profile(s12, Axis::Y);
  // Profiles are indexed from n = 2.
  double tail = 0.0;
  for (int n = 8; n <= 12; ++n) tail = std::max(tail, std::abs(c12[static_cast<std::size_t>(n - 2)]));
  double mismatch = 0.0;
  for (int n = 2; n <= 8; ++n)
    mismatch = std::max(mismatch, std::abs(c12[static_cast<std::size_t>(n - 2)] - c10[static_cast<std::size_t>(n - 2)]));
  std::string detail = fmt("max |<y1 yn>| for n>=8 at N=12: %.4g (tol 1e-3); max |N=12 - N=10| for n<=8: %.3g (tol 1e-3)",
                           tail, mismatch);
  detail += "; N=12 profile:";
  for (double v : c12) detail += fmt(" %.5f", v);
  return {tail < 1e-3 && mismatch < 1e-3, detail};
}

Outcome dynamics() {
  const ChainParams p{6, 0.23, 1.0, 0.2, 0.0};
  const double gap = solve_steady_state(p, {SolverMethod::Dense}).gap;
  cli::SweepSpec spec;
  spec.command = "evolve";
  spec.base = p;
  spec.t_range = cli::RangeSpec{0.0, 20.0 / gap, 21};
  const cli::CsvTable t = cli::run_evolve(spec);
  const double fid = t.column_as_double("fidelity_to_ss").back();
  return {fid > 1 - 1e-6, fmt("fidelity_to_ss at t=20/gap=%.3f: 1 - %.3g (tol 1e-6)", 20.0 / gap, std::max(0.0, 1 - fid))};
}

Outcome determinism() {
  std::vector<cli::SweepSpec> specs;
  auto add = [&](const std::string& command, ChainParams base) {
    cli::SweepSpec s;
    s.command = command;
    s.base = base;
    specs.push_back(s);
    return &specs.back();
  };
  add("spectrum", {4, 0.23, 1.0, 0.2, 0.3});
  add("gap", {3, 0.0, 1.0, 0.0, 0.0})->j_range = cli::RangeSpec{0.0, 0.5, 6};
  specs.back().h_range = cli::RangeSpec{0.0, 0.2, 3};
  add("qfi", {4, 0.23, 1.0, 0.2, 0.0})->method = "krylov";
  add("ep", {3, 0.0, 1.0, 0.0, 0.0})->h_range = cli::RangeSpec{0.0, 0.2, 3};
  add("scaling", {2, 0.0, 1.0, 0.0, 0.0})->n_range = cli::RangeSpec{2, 6, 5};
  add("correlations", {8, 0.23, 1.0, 0.2, 0.0})->method = "krylov";
  add("evolve", {5, 0.23, 1.0, 0.2, 0.0});
  std::string mismatched;
  for (const auto& s : specs)
    if (cli::run_command(s).str() != cli::run_command(s).str()) mismatched += " " + s.command;
  return {mismatched.empty(), mismatched.empty() ? "7 subcommands byte-identical across two runs"
                                                 : "differing output:" + mismatched};
}

}  // namespace

int main() {
  run(1, "two-site spectrum vs closed form", two_site_spectrum);
  run(2, "two-site steady state, magnetizations, correlations", two_site_steady_state);
  run(3, "QFI estimators vs closed forms", qfi_oracle);
  run(4, "two-site exceptional point", two_site_ep);
  run(5, "finite-size extrapolation of J_c", extrapolation);
  run(6, "QFI growth and saturation", qfi_growth);
  run(7, "correlation decay and size independence", correlation_decay);
  run(8, "dynamical convergence", dynamics);
  run(9, "determinism", determinism);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
