#pragma once

#include <string>

#include "nhchain/steady_state.hpp"

namespace nhchain {

enum class QfiTarget { Field, Angle };
enum class QfiMethod { Fidelity, VectorFd, Analytic };

QfiTarget parse_qfi_target(const std::string& s);  // "h" | "theta"
const char* to_string(QfiTarget t);
const char* to_string(QfiMethod m);

struct QfiOptions {
  double step = 1e-3;               ///< initial step, units of gamma (radians for the angle)
  double consistency_target = 1e-4; ///< halve the step until successive estimates agree this well
  int max_halvings = 8;
  double unreliable_above = 0.05;   ///< final richardson_diff above this flags the estimate
  double floor = 1e-4;              ///< QFI values below this are compared in absolute terms
  SolverOptions solver;
};

struct QfiEstimate {
  ChainParams params;
  QfiTarget target = QfiTarget::Field;
  double value = 0.0;
  QfiMethod method = QfiMethod::Fidelity;
  double step = 0.0;             ///< smallest step used
  double richardson_diff = 0.0;  ///< relative change between the last two step sizes
  bool reliable = true;
};

/// Copy of p with the target parameter moved by delta. A negative field is
/// folded back to |h| with the angle advanced by pi (same Hamiltonian).
ChainParams shifted(const ChainParams& p, QfiTarget target, double delta);

/// 8 (1 - |<minus|plus>|) / (2 step)^2 for states at eta -/+ step.
double qfi_from_fidelity(const StateVector& minus, const StateVector& plus, double step);

/// 4 (<d|d> - |<psi|d>|^2) with d the central difference of the neighbours,
/// each rotated so its overlap with `center` is real and positive.
double qfi_from_vectors(const StateVector& minus, const StateVector& center,
                        const StateVector& plus, double step);

/// Fidelity-susceptibility estimate of the QFI of the steady state.
QfiEstimate qfi_fidelity(const ChainParams& p, QfiTarget target, const QfiOptions& opts = {});

/// Finite-difference-of-vectors estimate; independent cross-check of qfi_fidelity.
QfiEstimate qfi_vector_fd(const ChainParams& p, QfiTarget target, const QfiOptions& opts = {});

/// Closed forms for N = 2 in the gapped region:
///   I_h     = 16 / B^2
///   I_theta = (A - B)(A B + g^2 + 4 J^2) / (g^2 A)
/// with A = sqrt(g^2 - 4J^2), B = sqrt(g^2 - 4J^2 - 16h^2).
double qfi_two_site_analytic(const ChainParams& p, QfiTarget target);

/// Cramer-Rao floor 1 / sqrt(rounds * fisher).
double cramer_rao_bound(double fisher, long rounds);

}  // namespace nhchain
