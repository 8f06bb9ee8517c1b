#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "repflow/group.hpp"

namespace repflow {

// The balancing defect R = sum_i g_i* g_i - sum_i g_i g_i*. It vanishes
// exactly on tuples that minimize the norm on their conjugation orbit, and
// its trace is identically zero.
struct KNResidual {
  HermitianMatrix matrix;
  double norm = 0.0;  // ||R||_F
};

enum class FlowVerdict { Converged, BoundaryDegeneration, MaxIterations };

const char* to_string(FlowVerdict v);

struct FlowOptions {
  // Stop when ||R||_F / (1 + orbit_norm) falls to this.
  double residual_tol = 1e-8;
  int max_iterations = 10000;
  // Declare the orbit limit out of reach once the accumulated conjugator's
  // condition number passes this. For a degenerating direction the coupling
  // cond^2 * residual stays roughly constant near 1, so the threshold must
  // sit below 1/sqrt(residual_tol) to fire before the residual test does.
  double condition_threshold = 1e3;
  double armijo_c = 1e-4;
  // Starting step of each backtracking search; 0 picks 0.25/(1 + ||R||_F)
  // from the current residual.
  double initial_step = 0.0;
};

struct BalanceReport {
  int iterations = 0;
  std::vector<double> norm_trajectory;      // orbit norm per accepted step
  std::vector<double> residual_trajectory;  // relative residual per iteration
  double conjugator_condition = 1.0;
  FlowVerdict verdict = FlowVerdict::MaxIterations;
  RepresentationTuple final_tuple;
  // || h rho_0 h^-1 - final ||, relative, with h the accumulated conjugator;
  // certifies that a Converged limit lies on the input's orbit.
  double witness_residual = 0.0;
};

// R and its Frobenius norm for the tuple.
KNResidual kn_residual(const RepresentationTuple& rho);

// True iff ||R||_F <= tol * (1 + orbit_norm(rho)): first-order optimality of
// the orbit norm under conjugation.
bool is_minimal_candidate(const RepresentationTuple& rho, double tol);

// sum_i tr(g_i* g_i), the squared Frobenius norm of the tuple. Invariant
// under conjugation by the maximal compact.
double orbit_norm(const RepresentationTuple& rho);

// Componentwise exp(sA) g_i exp(-sA). A must lie in the symmetric part of
// the Lie algebra for rho's descriptor (Hermitian, real symmetric over R,
// traceless for SL); throws DirectionNotInP otherwise.
RepresentationTuple conjugate_by_exp(const RepresentationTuple& rho, const HermitianMatrix& a,
                                     double s);

// First-order norm-minimizing flow: repeatedly conjugate along R/||R||_F
// with an Armijo backtracking step. The directional derivative of the orbit
// norm along A is -2 Re tr(A R), so R is the steepest descent direction.
// Verdicts:
//   Converged            relative residual at residual_tol with a bounded
//                        accumulated conjugator;
//   BoundaryDegeneration conjugator condition passed condition_threshold
//                        (the norm infimum sits outside the orbit);
//   MaxIterations        iteration budget or step floor hit first.
BalanceReport balance_flow(const RepresentationTuple& rho, const FlowOptions& opts = {});

// Probes random directions A and steps s in {+-1e-2, +-1e-1}; returns the
// largest observed norm decrease orbit_norm(rho) - orbit_norm(exp(sA)-conj).
// A value <= 1e-6 * orbit_norm(rho) certifies minimality at probe scale.
double minimality_certificate(const RepresentationTuple& rho, int directions, std::uint64_t seed);

}  // namespace repflow
