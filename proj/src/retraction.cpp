#include "repflow/retraction.hpp"

#include <cmath>

namespace repflow {

namespace {

void require_unit_interval(double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw ParameterOutOfRange("deformation parameter must lie in [0, 1]");
}

GroupElement retract_from_pair(const GroupDescriptor& desc, const CartanPair& pair, double t) {
  return GroupElement(desc, pair.k.matrix() * exp_hermitian((1.0 - t) * pair.x));
}

}  // namespace

GroupElement retract_element(const GroupElement& g, double t) {
  require_unit_interval(t);
  return retract_from_pair(g.descriptor(), cartan_decompose(g), t);
}

RepresentationTuple retract_tuple(const RepresentationTuple& rho, double t) {
  require_unit_interval(t);
  std::vector<GroupElement> elems;
  elems.reserve(static_cast<std::size_t>(rho.rank()));
  for (const GroupElement& g : rho.elements()) elems.push_back(retract_element(g, t));
  return RepresentationTuple(rho.descriptor(), std::move(elems));
}

RetractionPath retraction_path(const RepresentationTuple& rho, int steps) {
  if (steps < 1) throw ParameterOutOfRange("path needs at least one step");
  std::vector<CartanPair> pairs;
  pairs.reserve(static_cast<std::size_t>(rho.rank()));
  for (const GroupElement& g : rho.elements()) pairs.push_back(cartan_decompose(g));

  RetractionPath path{rho, {}};
  path.samples.reserve(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) / steps;
    std::vector<GroupElement> elems;
    elems.reserve(pairs.size());
    for (const CartanPair& pair : pairs)
      elems.push_back(retract_from_pair(rho.descriptor(), pair, t));
    path.samples.emplace_back(t, RepresentationTuple(rho.descriptor(), std::move(elems)));
  }
  return path;
}

double check_equivariance(const RepresentationTuple& rho, const GroupElement& h, double t) {
  require_unit_interval(t);
  const MembershipResult compact = in_maximal_compact(h, kMembershipTol);
  if (!compact.member)
    throw NotInCompact("conjugator fails compact membership, residual " +
                       std::to_string(compact.residual));
  const ComplexMatrix hm = h.matrix();
  const ComplexMatrix hinv = inverse(hm);
  double worst = 0.0;
  for (const GroupElement& g : rho.elements()) {
    const GroupElement conj_first(rho.descriptor(), hm * g.matrix() * hinv);
    const ComplexMatrix lhs = retract_element(conj_first, t).matrix();
    const ComplexMatrix rhs = hm * retract_element(g, t).matrix() * hinv;
    worst = std::max(worst, distance(lhs, rhs));
  }
  return worst;
}

}  // namespace repflow
