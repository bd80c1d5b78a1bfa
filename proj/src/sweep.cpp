#include "nhchain/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "nhchain/critical.hpp"
#include "nhchain/errors.hpp"
#include "nhchain/observables.hpp"

namespace nhchain::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double parse_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("cannot parse " + what + " from '" + s + "'");
  return v;
}

std::string range_text(const std::optional<RangeSpec>& r) {
  if (!r) return "none";
  return format_double(r->start) + ":" + format_double(r->stop) + ":" + std::to_string(r->count);
}

bool analytic(const SweepSpec& spec) { return spec.method == "analytic2"; }

void require_method(const SweepSpec& spec, std::initializer_list<const char*> allowed) {
  for (const char* m : allowed)
    if (spec.method == m) return;
  std::string list;
  for (const char* m : allowed) list += (list.empty() ? "" : ", ") + std::string(m);
  throw DomainError(spec.command + ": method '" + spec.method + "' not supported (use one of " +
                    list + ")");
}

void require_two_sites(const SweepSpec& spec) {
  for (int n : spec.sizes())
    if (n != 2) throw DomainError(spec.command + ": method analytic2 is only defined for N = 2");
}

CsvTable table_for(const SweepSpec& spec, std::vector<std::string> columns) {
  CsvTable t(std::move(columns));
  t.comments = spec.echo();
  return t;
}

// Row-major grid: N outermost, then J, h, theta.
std::vector<ChainParams> parameter_grid(const SweepSpec& spec) {
  std::vector<ChainParams> grid;
  for (int n : spec.sizes())
    for (double j : spec.couplings())
      for (double h : spec.fields())
        for (double th : spec.angles()) {
          ChainParams p = spec.base;
          p.num_sites = n;
          p.coupling = j;
          p.field = h;
          p.angle = th;
          p.validate();
          grid.push_back(p);
        }
  return grid;
}

std::vector<Complex> two_site_sorted(const ChainParams& p) {
  const auto ev = eigenvalues_two_site(p);
  std::vector<Complex> v(ev.begin(), ev.end());
  std::sort(v.begin(), v.end(), spectral_order);
  return v;
}

}  // namespace

std::vector<double> RangeSpec::values() const {
  if (count < 1) throw DomainError("range: count must be >= 1");
  if (count == 1) return {start};
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = start + (stop - start) * i / (count - 1);
  v.back() = stop;
  return v;
}

RangeSpec parse_range(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 3) throw DomainError("range '" + text + "' must look like start:stop:count");
  RangeSpec r;
  r.start = parse_double(parts[0], "range start");
  r.stop = parse_double(parts[1], "range stop");
  int count = 0;
  auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), count);
  if (ec != std::errc() || ptr != parts[2].data() + parts[2].size())
    throw DomainError("range '" + text + "': count must be an integer");
  r.count = count;
  if (r.count < 1) throw DomainError("range '" + text + "': count must be >= 1");
  if (!(r.start <= r.stop)) throw DomainError("range '" + text + "': start must not exceed stop");
  return r;
}

std::vector<std::string> SweepSpec::echo() const {
  std::vector<std::string> lines;
  lines.push_back(std::string(kVersion));
  lines.push_back("command=" + command);
  lines.push_back("N=" + std::to_string(base.num_sites) + " J=" + format_double(base.coupling) +
                  " gamma=" + format_double(base.decay_rate) + " h=" + format_double(base.field) +
                  " theta=" + format_double(base.angle));
  lines.push_back("n_range=" + range_text(n_range) + " j_range=" + range_text(j_range) +
                  " h_range=" + range_text(h_range) + " theta_range=" + range_text(theta_range) +
                  " t_range=" + range_text(t_range));
  lines.push_back("method=" + method + " estimator=" + estimator + " target=" + to_string(target) +
                  " delta=" + format_double(delta));
  lines.push_back("seed=" + std::to_string(seed) + " period=" + format_double(period) +
                  " krylov_tol=" + format_double(krylov_tol) +
                  " max_iters=" + std::to_string(max_iters) +
                  " tol_coupling=" + format_double(tol_coupling));
  lines.push_back("degree=" + std::to_string(degree) + " axis=" + axis + " initial=" + initial +
                  " input=" + (input.empty() ? "none" : input));
  return lines;
}

SolverOptions SweepSpec::solver_options() const {
  SolverOptions o;
  if (method == "dense")
    o.method = SolverMethod::Dense;
  else if (method == "krylov")
    o.method = SolverMethod::Krylov;
  else if (method == "auto" || method == "analytic2")
    o.method = SolverMethod::Auto;
  else
    throw DomainError("unknown method '" + method + "'");
  o.krylov.period = period;
  o.krylov.tol = krylov_tol;
  o.krylov.max_iters = max_iters;
  o.krylov.seed = seed;
  return o;
}

std::vector<int> SweepSpec::sizes() const {
  if (!n_range) return {base.num_sites};
  std::vector<int> out;
  for (double v : n_range->values()) {
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9)
      throw DomainError("n range must produce integer sizes, got " + format_double(v));
    out.push_back(static_cast<int>(r));
  }
  return out;
}

std::vector<double> SweepSpec::couplings() const {
  return j_range ? j_range->values() : std::vector<double>{base.coupling};
}
std::vector<double> SweepSpec::fields() const {
  return h_range ? h_range->values() : std::vector<double>{base.field};
}
std::vector<double> SweepSpec::angles() const {
  return theta_range ? theta_range->values() : std::vector<double>{base.angle};
}

CsvTable run_spectrum(const SweepSpec& spec) {
  require_method(spec, {"auto", "dense", "analytic2"});
  ChainParams p = spec.base;
  p.validate();
  if (p.dim() > kMaxDenseDim)
    throw DomainError("spectrum: N = " + std::to_string(p.num_sites) +
                      " exceeds the dense limit (N <= 12); use the gap, qfi, correlations or "
                      "evolve subcommands with --method krylov instead");
  std::vector<Complex> ev;
  if (analytic(spec)) {
    require_two_sites(spec);
    ev = two_site_sorted(p);
  } else {
    ev = dense_eigenvalues(build_hamiltonian(p));
  }
  CsvTable t = table_for(spec, {"index", "re_lambda", "im_lambda"});
  for (std::size_t i = 0; i < ev.size(); ++i)
    t.add_row({static_cast<long long>(i), ev[i].real(), ev[i].imag()});
  return t;
}

CsvTable run_gap_sweep(const SweepSpec& spec) {
  require_method(spec, {"auto", "dense", "krylov", "analytic2"});
  if (spec.sizes().size() != 1) throw DomainError("gap: sweeps a J-h grid at a single N");
  if (analytic(spec)) require_two_sites(spec);
  const std::vector<ChainParams> grid = parameter_grid(spec);
  const SolverOptions solver = spec.solver_options();
  if (!analytic(spec) && resolve_method(solver, spec.base.num_sites) == SolverMethod::Dense &&
      spec.base.dim() > kMaxDenseDim)
    throw DomainError("gap: N too large for the dense path; pass --method krylov");

  std::vector<double> gaps(grid.size(), kNaN);
  std::vector<std::string> status(grid.size(), "ok");
  const auto count = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      gaps[k] = analytic(spec) ? imaginary_gap(two_site_sorted(grid[k])) : gap_at(grid[k], solver);
      if (gaps[k] <= gap_tolerance(grid[k])) status[k] = "closed";
    } catch (const std::exception& e) {
      status[k] = e.what();
    }
  }
  CsvTable t = table_for(spec, {"J", "h", "gap", "status"});
  for (std::size_t k = 0; k < grid.size(); ++k)
    t.add_row({grid[k].coupling, grid[k].field, gaps[k], status[k]});
  return t;
}

CsvTable run_qfi_sweep(const SweepSpec& spec) {
  require_method(spec, {"auto", "dense", "krylov", "analytic2"});
  if (spec.estimator != "fidelity" && spec.estimator != "vector_fd")
    throw DomainError("qfi: unknown estimator '" + spec.estimator + "'");
  if (analytic(spec)) require_two_sites(spec);
  const std::vector<ChainParams> grid = parameter_grid(spec);
  QfiOptions opts;
  opts.step = spec.delta;
  opts.solver = spec.solver_options();

  std::vector<QfiEstimate> results(grid.size());
  std::vector<std::string> status(grid.size(), "ok");
  const auto count = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    QfiEstimate& r = results[k];
    r.params = grid[k];
    r.target = spec.target;
    try {
      if (analytic(spec)) {
        r.method = QfiMethod::Analytic;
        r.value = qfi_two_site_analytic(grid[k], spec.target);
      } else if (spec.estimator == "vector_fd") {
        r = qfi_vector_fd(grid[k], spec.target, opts);
      } else {
        r = qfi_fidelity(grid[k], spec.target, opts);
      }
      if (!r.reliable) status[k] = "unreliable";
    } catch (const std::exception& e) {
      r.value = kNaN;
      r.richardson_diff = kNaN;
      r.method = analytic(spec) ? QfiMethod::Analytic
                 : spec.estimator == "vector_fd" ? QfiMethod::VectorFd
                                                 : QfiMethod::Fidelity;
      status[k] = e.what();
    }
  }

  CsvTable t = table_for(spec, {"N", "J", "h", "theta", "target", "method", "delta", "qfi",
                                "richardson_diff", "status"});
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const QfiEstimate& r = results[k];
    t.add_row({static_cast<long long>(grid[k].num_sites), grid[k].coupling, grid[k].field,
               grid[k].angle, std::string(to_string(spec.target)), std::string(to_string(r.method)),
               r.step, r.value, r.richardson_diff, status[k]});
  }
  return t;
}

CsvTable run_ep(const SweepSpec& spec) {
  require_method(spec, {"auto", "dense", "krylov"});
  EpOptions opts;
  opts.tol_coupling = spec.tol_coupling;
  opts.solver = spec.solver_options();
  if (spec.method == "auto") opts.solver.method = SolverMethod::Dense;
  const std::vector<double> fields = spec.fields();

  CsvTable t = table_for(spec, {"N", "h", "J_c", "status"});
  for (int n : spec.sizes()) {
    const EpCurve curve = ep_curve(n, fields, spec.base.decay_rate, spec.base.angle, opts);
    for (const EpPoint& pt : curve.points)
      t.add_row({static_cast<long long>(n), pt.field, pt.critical_coupling, pt.status});
    if (!curve.monotone)
      t.comments.push_back("warning: J_c(h) not monotone for N=" + std::to_string(n));
  }
  return t;
}

CsvTable run_scaling(const SweepSpec& spec) {
  std::vector<std::pair<int, double>> points;
  if (!spec.input.empty()) {
    std::ifstream in(spec.input);
    if (!in) throw DomainError("scaling: cannot open input file '" + spec.input + "'");
    const CsvTable src = CsvTable::parse(in);
    const auto ns = src.column_as_double("N");
    const auto hs = src.column_as_double("h");
    const auto jc = src.column_as_double("J_c");
    for (std::size_t i = 0; i < ns.size(); ++i)
      if (std::abs(hs[i] - spec.base.field) <= 1e-12 && std::isfinite(jc[i]))
        points.emplace_back(static_cast<int>(std::lround(ns[i])), jc[i]);
  } else {
    SweepSpec ep = spec;
    ep.command = "ep";
    ep.h_range.reset();
    if (!ep.n_range) ep.n_range = RangeSpec{2.0, 10.0, 9};
    const CsvTable curve = run_ep(ep);
    const auto ns = curve.column_as_double("N");
    const auto jc = curve.column_as_double("J_c");
    for (std::size_t i = 0; i < ns.size(); ++i)
      if (std::isfinite(jc[i])) points.emplace_back(static_cast<int>(std::lround(ns[i])), jc[i]);
  }

  const ScalingFit fit = fit_inverse_poly(points, spec.degree);
  CsvTable t = table_for(spec, {"coeff_name", "value", "residual"});
  t.comments.push_back("reference_fit a=0.842 b=0.031 c=0.249");
  for (const auto& [n, jc] : fit.points)
    t.comments.push_back("point N=" + std::to_string(n) + " J_c=" + format_double(jc));
  for (int k = spec.degree; k >= 0; --k) {
    std::string name = k == 2 ? "a" : k == 1 ? "b" : k == 0 ? "c" : "inv_n_pow_" + std::to_string(k);
    t.add_row({name, fit.coefficients[static_cast<std::size_t>(spec.degree - k)], fit.residual_norm});
  }
  return t;
}

CsvTable run_correlations(const SweepSpec& spec) {
  require_method(spec, {"auto", "dense", "krylov", "analytic2"});
  const Axis axis = parse_axis(spec.axis);
  if (analytic(spec)) require_two_sites(spec);
  const std::vector<ChainParams> grid = parameter_grid(spec);
  const SolverOptions solver = spec.solver_options();

  std::vector<std::vector<double>> profiles(grid.size());
  std::vector<std::string> status(grid.size(), "ok");
  const auto count = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      if (analytic(spec)) {
        const TwoSiteCorrelations c = correlations_two_site(grid[k]);
        profiles[k] = {axis == Axis::X ? c.xx : axis == Axis::Y ? c.yy : c.zz};
      } else {
        profiles[k] = correlation_profile(solve_steady_state(grid[k], solver), axis);
      }
    } catch (const std::exception& e) {
      profiles[k].assign(static_cast<std::size_t>(grid[k].num_sites - 1), kNaN);
      status[k] = e.what();
    }
  }

  CsvTable t = table_for(spec, {"N", "J", "h", "theta", "axis", "n", "value", "status"});
  for (std::size_t k = 0; k < grid.size(); ++k)
    for (std::size_t j = 0; j < profiles[k].size(); ++j)
      t.add_row({static_cast<long long>(grid[k].num_sites), grid[k].coupling, grid[k].field,
                 grid[k].angle, std::string(to_string(axis)), static_cast<long long>(j + 2),
                 profiles[k][j], status[k]});
  return t;
}

CsvTable run_evolve(const SweepSpec& spec) {
  require_method(spec, {"auto", "dense", "krylov"});
  if (spec.initial != "random" && spec.initial != "steady")
    throw DomainError("evolve: --initial must be random or steady");
  ChainParams p = spec.base;
  p.validate();
  const SparseOperator h = build_hamiltonian(p);
  const SteadyState ss = solve_steady_state(p, spec.solver_options());
  const std::vector<double> times =
      spec.t_range ? spec.t_range->values() : RangeSpec{0.0, 20.0 / ss.gap, 41}.values();
  if (times.front() < 0.0) throw DomainError("evolve: times must be >= 0");

  StateVector phi = spec.initial == "steady" ? ss.vector : random_state(p.dim(), spec.seed);
  double norm = 1.0;
  double now = 0.0;
  CsvTable t = table_for(spec, {"t", "norm", "fidelity_to_ss"});
  t.comments.push_back("steady_eigenvalue=" + format_double(ss.eigenvalue.real()) + "," +
                       format_double(ss.eigenvalue.imag()) + " gap=" + format_double(ss.gap));
  for (double target : times) {
    if (target > now) {
      StateVector next = evolve(h, phi, target - now);
      const double factor = next.norm();
      if (!(factor > 0.0)) throw NumericalError("evolve: state decayed to zero");
      norm *= factor;
      phi = next / factor;
      now = target;
    }
    t.add_row({target, norm, std::abs(ss.vector.dot(phi))});
  }
  return t;
}

CsvTable run_command(const SweepSpec& spec) {
  if (spec.command == "spectrum") return run_spectrum(spec);
  if (spec.command == "gap") return run_gap_sweep(spec);
  if (spec.command == "qfi") return run_qfi_sweep(spec);
  if (spec.command == "ep") return run_ep(spec);
  if (spec.command == "scaling") return run_scaling(spec);
  if (spec.command == "correlations") return run_correlations(spec);
  if (spec.command == "evolve") return run_evolve(spec);
  throw DomainError("unknown command '" + spec.command + "'");
}

}  // namespace nhchain::cli
