#include "repflow/kempf_ness.hpp"

#include <cmath>
#include <utility>

namespace repflow {

namespace {

constexpr double kRealImagTol = 1e-12;
constexpr double kStepFloor = 1e-16;

void require_direction_in_p(const GroupDescriptor& desc, const HermitianMatrix& a) {
  if (a.size() != desc.n) throw SizeMismatch("direction size does not match descriptor");
  if (desc.is_real() && a.matrix().max_abs_imag() > kRealImagTol)
    throw DirectionNotInP("direction must be real symmetric for a real group");
  if (desc.is_sl() &&
      std::abs(a.matrix().trace()) > 1e-9 * (1.0 + a.frobenius_norm()))
    throw DirectionNotInP("direction must be traceless for a special linear group");
}

void validate(const FlowOptions& opts) {
  if (!(opts.residual_tol > 0.0 && opts.residual_tol < 1.0))
    throw ParameterOutOfRange("residual_tol must lie in (0, 1)");
  if (opts.max_iterations < 1) throw ParameterOutOfRange("max_iterations must be positive");
  if (!(opts.condition_threshold > 0.0))
    throw ParameterOutOfRange("condition_threshold must be positive");
  if (!(opts.armijo_c > 0.0)) throw ParameterOutOfRange("armijo_c must be positive");
  if (opts.initial_step < 0.0) throw ParameterOutOfRange("initial_step must not be negative");
}

double tuple_distance_relative(const RepresentationTuple& a, const RepresentationTuple& b) {
  double worst = 0.0;
  for (int i = 0; i < a.rank(); ++i) {
    const double d = distance(a.element(i).matrix(), b.element(i).matrix());
    worst = std::max(worst, d / (1.0 + b.element(i).matrix().frobenius_norm()));
  }
  return worst;
}

}  // namespace

const char* to_string(FlowVerdict v) {
  switch (v) {
    case FlowVerdict::Converged:
      return "Converged";
    case FlowVerdict::BoundaryDegeneration:
      return "BoundaryDegeneration";
    case FlowVerdict::MaxIterations:
      return "MaxIterations";
  }
  return "Unknown";
}

KNResidual kn_residual(const RepresentationTuple& rho) {
  const int n = rho.descriptor().n;
  ComplexMatrix r(n);
  for (const GroupElement& g : rho.elements()) {
    const ComplexMatrix& m = g.matrix();
    const ComplexMatrix adj = m.adjoint();
    r += adj * m;
    r -= m * adj;
  }
  KNResidual out{HermitianMatrix(std::move(r)), 0.0};
  out.norm = out.matrix.frobenius_norm();
  return out;
}

bool is_minimal_candidate(const RepresentationTuple& rho, double tol) {
  if (!(tol > 0.0)) throw ParameterOutOfRange("tolerance must be positive");
  return kn_residual(rho).norm <= tol * (1.0 + orbit_norm(rho));
}

double orbit_norm(const RepresentationTuple& rho) {
  double s = 0.0;
  for (const GroupElement& g : rho.elements()) {
    const double f = g.matrix().frobenius_norm();
    s += f * f;
  }
  return s;
}

RepresentationTuple conjugate_by_exp(const RepresentationTuple& rho, const HermitianMatrix& a,
                                     double s) {
  require_direction_in_p(rho.descriptor(), a);
  const ComplexMatrix fwd = exp_hermitian(s * a);
  const ComplexMatrix bwd = exp_hermitian(-s * a);
  std::vector<GroupElement> elems;
  elems.reserve(static_cast<std::size_t>(rho.rank()));
  for (const GroupElement& g : rho.elements())
    elems.emplace_back(rho.descriptor(), fwd * g.matrix() * bwd);
  return RepresentationTuple(rho.descriptor(), std::move(elems));
}

BalanceReport balance_flow(const RepresentationTuple& rho, const FlowOptions& opts) {
  validate(opts);

  RepresentationTuple current = rho;
  ComplexMatrix conjugator = ComplexMatrix::identity(rho.descriptor().n);
  double norm = orbit_norm(current);

  BalanceReport report{0, {norm}, {}, 1.0, FlowVerdict::MaxIterations, current, 0.0};

  for (int iter = 0;; ++iter) {
    const KNResidual residual = kn_residual(current);
    const double relative = residual.norm / (1.0 + norm);
    report.residual_trajectory.push_back(relative);
    report.conjugator_condition = condition_number(conjugator);
    report.iterations = iter;

    if (report.conjugator_condition > opts.condition_threshold) {
      report.verdict = FlowVerdict::BoundaryDegeneration;
      break;
    }
    if (relative <= opts.residual_tol) {
      report.verdict = FlowVerdict::Converged;
      break;
    }
    if (iter >= opts.max_iterations) {
      report.verdict = FlowVerdict::MaxIterations;
      break;
    }

    const HermitianMatrix direction = (1.0 / residual.norm) * residual.matrix;
    const double start =
        opts.initial_step > 0.0 ? opts.initial_step : 0.25 / (1.0 + residual.norm);

    // Armijo backtracking on the orbit norm; the slope along the normalized
    // direction is -2 ||R||_F.
    bool accepted = false;
    for (double step = start; step >= kStepFloor; step *= 0.5) {
      RepresentationTuple candidate = conjugate_by_exp(current, direction, step);
      const double candidate_norm = orbit_norm(candidate);
      if (candidate_norm <= norm - opts.armijo_c * step * 2.0 * residual.norm) {
        current = std::move(candidate);
        norm = candidate_norm;
        conjugator = exp_hermitian(step * direction) * conjugator;
        report.norm_trajectory.push_back(norm);
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      // The norm can no longer be decreased at the step floor; report the
      // budget verdict rather than inventing a convergence claim.
      report.verdict = FlowVerdict::MaxIterations;
      break;
    }
  }

  report.final_tuple = current;
  report.witness_residual =
      tuple_distance_relative(conjugate_tuple(rho, conjugator), current);
  return report;
}

double minimality_certificate(const RepresentationTuple& rho, int directions,
                              std::uint64_t seed) {
  if (directions < 1) throw ParameterOutOfRange("need at least one probe direction");
  static constexpr double kProbes[] = {1e-2, -1e-2, 1e-1, -1e-1};
  Rng rng(seed);
  const double base = orbit_norm(rho);
  double worst = 0.0;
  for (int d = 0; d < directions; ++d) {
    const HermitianMatrix a = random_p_direction(rho.descriptor(), rng);
    for (const double s : kProbes)
      worst = std::max(worst, base - orbit_norm(conjugate_by_exp(rho, a, s)));
  }
  return worst;
}

}  // namespace repflow
