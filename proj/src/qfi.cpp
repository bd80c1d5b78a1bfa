#include "nhchain/qfi.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "nhchain/errors.hpp"

namespace nhchain {

namespace {

Complex unit_phase(Complex z) {
  const double r = std::abs(z);
  return r > 0.0 ? z / r : Complex{1.0, 0.0};
}

struct Adaptive {
  double value;
  double step;
  double diff;
};

// Evaluates `at(step)` at step, step/2, step/4, ... until two successive
// values agree to the consistency target, then Richardson-extrapolates the
// last pair (the leading error term is O(step^2) for both estimators).
Adaptive adapt(const std::function<double(double)>& at, const QfiOptions& opts) {
  if (!(opts.step > 0.0)) throw DomainError("qfi: step must be positive");
  auto rel = [&](double coarse, double fine) {
    return std::abs(fine - coarse) / std::max(std::abs(fine), opts.floor);
  };
  double step = opts.step;
  double coarse = at(step);
  double fine = at(step / 2.0);
  double diff = rel(coarse, fine);
  for (int k = 0; k < opts.max_halvings && diff > opts.consistency_target; ++k) {
    step /= 2.0;
    coarse = fine;
    fine = at(step / 2.0);
    diff = rel(coarse, fine);
  }
  return {(4.0 * fine - coarse) / 3.0, step / 2.0, diff};
}

QfiEstimate finish(const ChainParams& p, QfiTarget target, QfiMethod method, const Adaptive& a,
                   const QfiOptions& opts) {
  QfiEstimate e;
  e.params = p;
  e.target = target;
  e.method = method;
  e.step = a.step;
  e.richardson_diff = a.diff;
  e.reliable = a.diff <= opts.unreliable_above;
  if (!std::isfinite(a.value)) throw NumericalError("qfi: non-finite estimate");
  if (a.value < -1e-10) e.reliable = false;
  e.value = std::max(a.value, 0.0);
  return e;
}

}  // namespace

QfiTarget parse_qfi_target(const std::string& s) {
  if (s == "h") return QfiTarget::Field;
  if (s == "theta") return QfiTarget::Angle;
  throw DomainError("unknown QFI target '" + s + "' (expected h or theta)");
}

const char* to_string(QfiTarget t) { return t == QfiTarget::Field ? "h" : "theta"; }

const char* to_string(QfiMethod m) {
  switch (m) {
    case QfiMethod::Fidelity:
      return "fidelity";
    case QfiMethod::VectorFd:
      return "vector_fd";
    case QfiMethod::Analytic:
      return "analytic2";
  }
  return "unknown";
}

ChainParams shifted(const ChainParams& p, QfiTarget target, double delta) {
  ChainParams q = p;
  if (target == QfiTarget::Angle) {
    q.angle += delta;
    return q;
  }
  q.field += delta;
  if (q.field < 0.0) {
    q.field = -q.field;
    q.angle += std::numbers::pi;
  }
  return q;
}

double qfi_from_fidelity(const StateVector& minus, const StateVector& plus, double step) {
  if (minus.size() != plus.size()) throw DomainError("qfi_from_fidelity: dimension mismatch");
  if (!(step > 0.0)) throw DomainError("qfi_from_fidelity: step must be positive");
  const double fidelity = std::abs(minus.dot(plus)) / (minus.norm() * plus.norm());
  return 8.0 * (1.0 - fidelity) / ((2.0 * step) * (2.0 * step));
}

double qfi_from_vectors(const StateVector& minus, const StateVector& center,
                        const StateVector& plus, double step) {
  if (minus.size() != center.size() || plus.size() != center.size())
    throw DomainError("qfi_from_vectors: dimension mismatch");
  if (!(step > 0.0)) throw DomainError("qfi_from_vectors: step must be positive");
  const StateVector psi = center.normalized();
  const StateVector m = minus.normalized() * unit_phase(minus.dot(psi));
  const StateVector p = plus.normalized() * unit_phase(plus.dot(psi));
  const StateVector d = (p - m) / (2.0 * step);
  return 4.0 * (d.squaredNorm() - std::norm(psi.dot(d)));
}

QfiEstimate qfi_fidelity(const ChainParams& p, QfiTarget target, const QfiOptions& opts) {
  p.validate();
  auto at = [&](double step) {
    const SteadyState lo = solve_steady_state(shifted(p, target, -step), opts.solver);
    const SteadyState hi = solve_steady_state(shifted(p, target, step), opts.solver);
    return qfi_from_fidelity(lo.vector, hi.vector, step);
  };
  return finish(p, target, QfiMethod::Fidelity, adapt(at, opts), opts);
}

QfiEstimate qfi_vector_fd(const ChainParams& p, QfiTarget target, const QfiOptions& opts) {
  p.validate();
  const SteadyState center = solve_steady_state(p, opts.solver);
  auto at = [&](double step) {
    const SteadyState lo = solve_steady_state(shifted(p, target, -step), opts.solver);
    const SteadyState hi = solve_steady_state(shifted(p, target, step), opts.solver);
    return qfi_from_vectors(lo.vector, center.vector, hi.vector, step);
  };
  return finish(p, target, QfiMethod::VectorFd, adapt(at, opts), opts);
}

double qfi_two_site_analytic(const ChainParams& p, QfiTarget target) {
  p.validate();
  if (p.num_sites != 2) throw DomainError("qfi_two_site_analytic: requires N = 2");
  if (p.decay_rate <= 0.0) throw DomainError("qfi_two_site_analytic: decay rate must be positive");
  const double g = p.decay_rate, j = p.coupling, h = p.field;
  const double a2 = g * g - 4.0 * j * j;
  const double b2 = a2 - 16.0 * h * h;
  if (!(b2 > 0.0)) {
    std::ostringstream os;
    os << "qfi_two_site_analytic: at or beyond the exceptional point (B^2 = " << b2 << ")";
    throw DomainError(os.str());
  }
  if (target == QfiTarget::Field) return 16.0 / b2;
  const double a = std::sqrt(a2), b = std::sqrt(b2);
  return (a - b) * (a * b + g * g + 4.0 * j * j) / (g * g * a);
}

double cramer_rao_bound(double fisher, long rounds) {
  if (!(fisher > 0.0) || !std::isfinite(fisher))
    throw DomainError("cramer_rao_bound: Fisher information must be positive and finite");
  if (rounds < 1) throw DomainError("cramer_rao_bound: need at least one measurement round");
  return 1.0 / std::sqrt(static_cast<double>(rounds) * fisher);
}

}  // namespace nhchain
