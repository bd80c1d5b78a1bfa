#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nhchain/csv.hpp"
#include "nhchain/qfi.hpp"

namespace nhchain::cli {

inline constexpr const char* kVersion = "nhchain 0.1.0";

/// Linear grid "start:stop:count".
struct RangeSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  std::vector<double> values() const;
};

/// Throws DomainError on malformed text, count < 1 or start > stop.
RangeSpec parse_range(const std::string& text);

/// Everything a subcommand needs; filled from flags by the executable.
struct SweepSpec {
  std::string command;
  ChainParams base;
  std::optional<RangeSpec> n_range, j_range, h_range, theta_range, t_range;
  std::string method = "auto";  ///< auto | dense | krylov | analytic2
  std::string estimator = "fidelity";  ///< fidelity | vector_fd (qfi only)
  QfiTarget target = QfiTarget::Field;
  double delta = 1e-3;
  std::uint64_t seed = kDefaultSeed;
  double period = 0.0;      ///< Krylov propagation period; <= 0 means 5 / gamma
  double krylov_tol = 1e-10;
  int max_iters = 10000;
  double tol_coupling = 1e-5;
  int degree = 2;
  std::string axis = "y";
  std::string initial = "random";  ///< evolve: random | steady
  std::string input;               ///< scaling: optional CSV produced by `ep`
  std::string out;

  /// Comment lines echoing every field, in a fixed order.
  std::vector<std::string> echo() const;

  SolverOptions solver_options() const;
  std::vector<int> sizes() const;
  std::vector<double> couplings() const;
  std::vector<double> fields() const;
  std::vector<double> angles() const;
};

CsvTable run_spectrum(const SweepSpec& spec);
CsvTable run_gap_sweep(const SweepSpec& spec);
CsvTable run_qfi_sweep(const SweepSpec& spec);
CsvTable run_ep(const SweepSpec& spec);
CsvTable run_scaling(const SweepSpec& spec);
CsvTable run_correlations(const SweepSpec& spec);
CsvTable run_evolve(const SweepSpec& spec);

/// Dispatches on spec.command.
CsvTable run_command(const SweepSpec& spec);

}  // namespace nhchain::cli
