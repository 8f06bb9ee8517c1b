#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "repflow/linalg.hpp"
#include "repflow/rng.hpp"

namespace repflow {

class Rng;

enum class Family { GL, SL };
enum class Field { Real, Complex };

// Default tolerance for group-membership residuals.
inline constexpr double kMembershipTol = 1e-9;

// Names one of the supported matrix groups: GL(n) or SL(n) over R or C.
// The maximal compact is O(n)/U(n), or its determinant-one subgroup for SL.
struct GroupDescriptor {
  Family family = Family::GL;
  int n = 1;
  Field field = Field::Real;

  bool operator==(const GroupDescriptor&) const = default;

  bool is_sl() const { return family == Family::SL; }
  bool is_real() const { return field == Field::Real; }

  std::string to_string() const;                      // "SL2R", "GL3C", ...
  static GroupDescriptor parse(const std::string&);   // throws BadDescriptor
};

struct MembershipResult {
  bool member = false;
  double residual = 0.0;
};

// Membership residual of M against the descriptor:
//   GL: 0 when cond(M) <= 1e12, +inf otherwise;
//   SL: adds |det(M) - 1|;
//   real field: adds the largest |Im entry|.
// True iff residual <= tol.
MembershipResult contains(const GroupDescriptor& desc, const ComplexMatrix& m, double tol);

// An n x n matrix validated against its descriptor at construction, so
// downstream code never re-checks membership.
class GroupElement {
 public:
  GroupElement(GroupDescriptor desc, ComplexMatrix m, double tol = kMembershipTol);

  const GroupDescriptor& descriptor() const { return desc_; }
  const ComplexMatrix& matrix() const { return m_; }
  int size() const { return m_.size(); }

  // Sign of Re(det): tags the connected component for the real families.
  int det_sign() const;

 private:
  GroupDescriptor desc_;
  ComplexMatrix m_;
};

GroupElement operator*(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);

// Ordered r-tuple of elements over one descriptor: the images of the free
// generators under a representation.
class RepresentationTuple {
 public:
  RepresentationTuple(GroupDescriptor desc, std::vector<GroupElement> elements);

  static RepresentationTuple from_matrices(const GroupDescriptor& desc,
                                           const std::vector<ComplexMatrix>& matrices,
                                           double tol = kMembershipTol);

  const GroupDescriptor& descriptor() const { return desc_; }
  int rank() const { return static_cast<int>(elements_.size()); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }

 private:
  GroupDescriptor desc_;
  std::vector<GroupElement> elements_;
};

// Componentwise h . rho . h^-1 (h need not be in the group's compact part).
RepresentationTuple conjugate_tuple(const RepresentationTuple& rho, const ComplexMatrix& h);

// The global Cartan involution g -> (g*)^-1; on real matrices this is the
// transpose-inverse. Its fixed set is the maximal compact.
GroupElement cartan_involution(const GroupElement& g);

// Residual ||g*g - I||_F (+ |det-1| for SL); true iff <= tol.
MembershipResult in_maximal_compact(const GroupElement& g, double tol);

// Unique factorization g = k exp(X) with k in the maximal compact and X
// Hermitian (real symmetric over R, traceless for SL).
struct CartanPair {
  CartanPair(GroupElement k_in, HermitianMatrix x_in);
  GroupElement k;
  HermitianMatrix x;
};

CartanPair cartan_decompose(const GroupElement& g);

// Haar sample of the maximal compact: QR of a Gaussian matrix with the
// R-diagonal kept positive; SL over C divides by the principal n-th root of
// the determinant, SL over R rejects det = -1 draws.
GroupElement sample_compact(const GroupDescriptor& desc, Rng& rng);
GroupElement sample_compact(const GroupDescriptor& desc, std::uint64_t seed);

// k exp(X) with k Haar-compact and X a random direction of norm <= spread.
GroupElement sample_group(const GroupDescriptor& desc, double spread, Rng& rng);
GroupElement sample_group(const GroupDescriptor& desc, double spread, std::uint64_t seed);

RepresentationTuple sample_compact_tuple(const GroupDescriptor& desc, int rank, Rng& rng);
RepresentationTuple sample_tuple(const GroupDescriptor& desc, int rank, double spread, Rng& rng);

// Unit-norm random element of the symmetric part of the Lie algebra
// (Hermitian; real symmetric over R; traceless for SL).
HermitianMatrix random_p_direction(const GroupDescriptor& desc, Rng& rng);

}  // namespace repflow
