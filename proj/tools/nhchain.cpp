// Command-line front end: one subcommand per table, CSV on stdout or --out.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nhchain/errors.hpp"
#include "nhchain/sweep.hpp"

using nhchain::cli::SweepSpec;

namespace {

struct RawFlags {
  std::string j_range, h_range, n_range, theta_range, t_range, target = "h";
};

void add_common(CLI::App& sub, SweepSpec& spec, RawFlags& raw) {
  sub.add_option("--n", spec.base.num_sites, "Number of sites")->capture_default_str();
  sub.add_option("--j", spec.base.coupling, "Pair creation/annihilation coupling J")
      ->capture_default_str();
  sub.add_option("--gamma", spec.base.decay_rate, "Decay rate")->capture_default_str();
  sub.add_option("--h", spec.base.field, "Field amplitude on site 1")->capture_default_str();
  sub.add_option("--theta", spec.base.angle, "Field azimuthal angle (radians)")
      ->capture_default_str();
  sub.add_option("--n-range", raw.n_range, "Sizes as lo:hi:count");
  sub.add_option("--j-range", raw.j_range, "Coupling grid lo:hi:count");
  sub.add_option("--h-range", raw.h_range, "Field grid lo:hi:count");
  sub.add_option("--theta-range", raw.theta_range, "Angle grid lo:hi:count");
  sub.add_option("--method", spec.method, "Solver: auto|dense|krylov|analytic2")
      ->check(CLI::IsMember({"auto", "dense", "krylov", "analytic2"}))
      ->capture_default_str();
  sub.add_option("--seed", spec.seed, "Seed for random start vectors")->capture_default_str();
  sub.add_option("--tau", spec.period, "Krylov propagation period (default 5/gamma)");
  sub.add_option("--krylov-tol", spec.krylov_tol, "Krylov power-iteration tolerance")
      ->capture_default_str();
  sub.add_option("--max-iters", spec.max_iters, "Krylov iteration cap")->capture_default_str();
  sub.add_option("--out", spec.out, "Output CSV path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady states, spectra and quantum Fisher information of lossy spin chains"};
  // "--h" is the field flag, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(nhchain::cli::kVersion));

  SweepSpec spec;
  RawFlags raw;

  auto* spectrum = app.add_subcommand("spectrum", "Full sorted spectrum of one Hamiltonian");
  auto* gap = app.add_subcommand("gap", "Imaginary-part gap over a J-h grid");
  auto* qfi = app.add_subcommand("qfi", "Quantum Fisher information sweep");
  auto* ep = app.add_subcommand("ep", "Exceptional-point coupling J_c(h) per size");
  auto* scaling = app.add_subcommand("scaling", "Fit J_c(N) = a/N^2 + b/N + c");
  auto* corr = app.add_subcommand("correlations", "Correlation profile <s1 sn> for n = 2..N");
  auto* evolve = app.add_subcommand("evolve", "Convergence of exp(-iHt) psi0 to the steady state");

  for (CLI::App* sub : {spectrum, gap, qfi, ep, scaling, corr, evolve}) add_common(*sub, spec, raw);

  qfi->add_option("--target", raw.target, "Parameter: h|theta")
      ->check(CLI::IsMember({"h", "theta"}))
      ->capture_default_str();
  qfi->add_option("--delta", spec.delta, "Initial finite-difference step")->capture_default_str();
  qfi->add_option("--estimator", spec.estimator, "fidelity|vector_fd")
      ->check(CLI::IsMember({"fidelity", "vector_fd"}))
      ->capture_default_str();
  for (CLI::App* sub : {ep, scaling})
    sub->add_option("--tol-j", spec.tol_coupling, "Bisection width in J")->capture_default_str();
  scaling->add_option("--degree", spec.degree, "Polynomial degree in 1/N")->capture_default_str();
  scaling->add_option("--input", spec.input, "CSV from `ep` to fit instead of recomputing");
  corr->add_option("--axis", spec.axis, "x|y|z")
      ->check(CLI::IsMember({"x", "y", "z"}))
      ->capture_default_str();
  evolve->add_option("--t-range", raw.t_range, "Time grid lo:hi:count (default 0:20/gap:41)");
  evolve->add_option("--initial", spec.initial, "random|steady")
      ->check(CLI::IsMember({"random", "steady"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    spec.command = app.get_subcommands().front()->get_name();
    spec.target = nhchain::parse_qfi_target(raw.target);
    using nhchain::cli::parse_range;
    if (!raw.n_range.empty()) spec.n_range = parse_range(raw.n_range);
    if (!raw.j_range.empty()) spec.j_range = parse_range(raw.j_range);
    if (!raw.h_range.empty()) spec.h_range = parse_range(raw.h_range);
    if (!raw.theta_range.empty()) spec.theta_range = parse_range(raw.theta_range);
    if (!raw.t_range.empty()) spec.t_range = parse_range(raw.t_range);

    const nhchain::cli::CsvTable table = nhchain::cli::run_command(spec);
    if (spec.out.empty()) {
      table.write(std::cout);
    } else {
      std::ofstream out(spec.out, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << spec.out << "\n";
        return 1;
      }
      table.write(out);
    }
  } catch (const nhchain::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
