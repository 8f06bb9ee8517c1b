#pragma once

#include <utility>
#include <vector>

#include "repflow/group.hpp"

namespace repflow {

// Discretized deformation path of a tuple: samples (t, image) with t
// increasing from 0 (the input) to 1 (a tuple in the compact part).
struct RetractionPath {
  RepresentationTuple tuple;
  std::vector<std::pair<double, RepresentationTuple>> samples;
};

// The deformation f_t(g) = k exp((1-t) X) for g = k exp(X). At t = 0 this is
// the identity, at t = 1 it lands in the maximal compact, and compact
// elements are fixed for every t. Throws ParameterOutOfRange unless
// 0 <= t <= 1; the deformation is defined on [0, 1] only.
GroupElement retract_element(const GroupElement& g, double t);

// Componentwise retraction of a tuple.
RepresentationTuple retract_tuple(const RepresentationTuple& rho, double t);

// Samples f_{i/steps}(rho) for i = 0..steps. Each component is decomposed
// once and re-used across all t.
RetractionPath retraction_path(const RepresentationTuple& rho, int steps);

// Largest componentwise defect || f_t(h g h^-1) - h f_t(g) h^-1 ||_F for a
// compact h. Throws NotInCompact when h fails the compact membership test.
double check_equivariance(const RepresentationTuple& rho, const GroupElement& h, double t);

}  // namespace repflow
