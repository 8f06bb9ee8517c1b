#include "repflow/group.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <utility>

namespace repflow {

namespace {

constexpr double kMaxCondition = 1e12;
constexpr double kRealImagTol = 1e-12;
constexpr double kTracelessTol = 1e-9;
constexpr double kCompactTol = 1e-9;

ComplexMatrix gaussian_matrix(int n, Field field, Rng& rng) {
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = field == Field::Real ? Complex(rng.gaussian(), 0.0) : rng.gaussian_complex();
  return m;
}

// Modified Gram-Schmidt with one re-orthogonalization pass. The column norms
// (the R diagonal) are positive by construction, which is exactly the
// correction that makes QR of a Gaussian matrix Haar-distributed.
bool orthonormalize(ComplexMatrix& m) {
  const int n = m.size();
  for (int j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < j; ++i) {
        Complex proj = 0.0;
        for (int k = 0; k < n; ++k) proj += std::conj(m(k, i)) * m(k, j);
        for (int k = 0; k < n; ++k) m(k, j) -= proj * m(k, i);
      }
    }
    double norm = 0.0;
    for (int k = 0; k < n; ++k) norm += std::norm(m(k, j));
    norm = std::sqrt(norm);
    if (norm < 1e-8) return false;  // degenerate draw, caller re-samples
    for (int k = 0; k < n; ++k) m(k, j) /= norm;
  }
  return true;
}

}  // namespace

std::string GroupDescriptor::to_string() const {
  std::string s = family == Family::GL ? "GL" : "SL";
  s += std::to_string(n);
  s += field == Field::Real ? 'R' : 'C';
  return s;
}

GroupDescriptor GroupDescriptor::parse(const std::string& text) {
  if (text.size() < 4) throw BadDescriptor("descriptor too short: " + text);
  GroupDescriptor d;
  const std::string fam = text.substr(0, 2);
  if (fam == "GL")
    d.family = Family::GL;
  else if (fam == "SL")
    d.family = Family::SL;
  else
    throw BadDescriptor("unknown family in descriptor: " + text);

  std::size_t pos = 2;
  std::size_t digits = 0;
  int n = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    n = n * 10 + (text[pos] - '0');
    ++pos;
    ++digits;
    if (digits > 2) throw BadDescriptor("matrix size out of range in descriptor: " + text);
  }
  if (digits == 0 || n < 1) throw BadDescriptor("missing matrix size in descriptor: " + text);
  d.n = n;

  if (pos + 1 != text.size()) throw BadDescriptor("malformed descriptor: " + text);
  if (text[pos] == 'R')
    d.field = Field::Real;
  else if (text[pos] == 'C')
    d.field = Field::Complex;
  else
    throw BadDescriptor("unknown field letter in descriptor: " + text);
  return d;
}

MembershipResult contains(const GroupDescriptor& desc, const ComplexMatrix& m, double tol) {
  if (m.size() != desc.n) throw SizeMismatch("matrix size does not match descriptor");
  double residual = 0.0;
  if (desc.family == Family::GL) {
    if (!(condition_number(m) <= kMaxCondition))
      residual = std::numeric_limits<double>::infinity();
  } else {
    residual += std::abs(determinant(m) - Complex(1.0, 0.0));
  }
  if (desc.field == Field::Real) residual += m.max_abs_imag();
  return {residual <= tol, residual};
}

GroupElement::GroupElement(GroupDescriptor desc, ComplexMatrix m, double tol)
    : desc_(desc), m_(std::move(m)) {
  if (!m_.all_finite()) throw NotInGroup("matrix has non-finite entries");
  const MembershipResult r = contains(desc_, m_, tol);
  if (!r.member)
    throw NotInGroup("matrix fails " + desc_.to_string() +
                     " membership, residual " + std::to_string(r.residual));
}

int GroupElement::det_sign() const { return determinant(m_).real() < 0.0 ? -1 : 1; }

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (!(a.descriptor() == b.descriptor()))
    throw SizeMismatch("group elements have different descriptors");
  return GroupElement(a.descriptor(), a.matrix() * b.matrix());
}

GroupElement inverse(const GroupElement& g) {
  return GroupElement(g.descriptor(), inverse(g.matrix()));
}

RepresentationTuple::RepresentationTuple(GroupDescriptor desc, std::vector<GroupElement> elements)
    : desc_(desc), elements_(std::move(elements)) {
  if (elements_.empty()) throw ParameterOutOfRange("representation tuple needs rank >= 1");
  for (const GroupElement& g : elements_)
    if (!(g.descriptor() == desc_))
      throw SizeMismatch("tuple elements must share one descriptor");
}

RepresentationTuple RepresentationTuple::from_matrices(const GroupDescriptor& desc,
                                                       const std::vector<ComplexMatrix>& matrices,
                                                       double tol) {
  std::vector<GroupElement> elems;
  elems.reserve(matrices.size());
  for (const ComplexMatrix& m : matrices) elems.emplace_back(desc, m, tol);
  return RepresentationTuple(desc, std::move(elems));
}

RepresentationTuple conjugate_tuple(const RepresentationTuple& rho, const ComplexMatrix& h) {
  const ComplexMatrix hinv = inverse(h);
  std::vector<GroupElement> elems;
  elems.reserve(static_cast<std::size_t>(rho.rank()));
  for (const GroupElement& g : rho.elements())
    elems.emplace_back(rho.descriptor(), h * g.matrix() * hinv);
  return RepresentationTuple(rho.descriptor(), std::move(elems));
}

GroupElement cartan_involution(const GroupElement& g) {
  // (g*)^-1; real elements stay exactly real through the complex arithmetic.
  return GroupElement(g.descriptor(), inverse(g.matrix().adjoint()));
}

MembershipResult in_maximal_compact(const GroupElement& g, double tol) {
  const ComplexMatrix gram = g.matrix().adjoint() * g.matrix();
  double residual = distance(gram, ComplexMatrix::identity(g.size()));
  if (g.descriptor().is_sl()) residual += std::abs(determinant(g.matrix()) - Complex(1.0, 0.0));
  return {residual <= tol, residual};
}

CartanPair::CartanPair(GroupElement k_in, HermitianMatrix x_in)
    : k(std::move(k_in)), x(std::move(x_in)) {
  const MembershipResult r = in_maximal_compact(k, kCompactTol);
  if (!r.member)
    throw NotInCompact("compact factor fails membership, residual " + std::to_string(r.residual));
  if (k.descriptor().is_real() && x.matrix().max_abs_imag() > kRealImagTol)
    throw DirectionNotInP("direction must be real symmetric for a real group");
  if (k.descriptor().is_sl() && std::abs(x.matrix().trace()) > kTracelessTol)
    throw DirectionNotInP("direction must be traceless for a special linear group");
}

CartanPair cartan_decompose(const GroupElement& g) {
  const ComplexMatrix gram = g.matrix().adjoint() * g.matrix();
  HermitianMatrix x = 0.5 * log_posdef(gram);
  ComplexMatrix k = g.matrix() * exp_hermitian(-1.0 * x);
  return CartanPair(GroupElement(g.descriptor(), std::move(k)), std::move(x));
}

GroupElement sample_compact(const GroupDescriptor& desc, Rng& rng) {
  for (;;) {
    ComplexMatrix q = gaussian_matrix(desc.n, desc.field, rng);
    if (!orthonormalize(q)) continue;
    if (desc.is_sl()) {
      if (desc.is_real()) {
        if (determinant(q).real() < 0.0) continue;  // keep the SO(n) component
      } else {
        const double phase = std::arg(determinant(q));
        q *= std::polar(1.0, -phase / desc.n);
      }
    }
    return GroupElement(desc, std::move(q));
  }
}

GroupElement sample_compact(const GroupDescriptor& desc, std::uint64_t seed) {
  Rng rng(seed);
  return sample_compact(desc, rng);
}

HermitianMatrix random_p_direction(const GroupDescriptor& desc, Rng& rng) {
  if (desc.is_sl() && desc.n == 1)
    throw ParameterOutOfRange("SL(1) has no nonzero directions");
  for (;;) {
    ComplexMatrix b = gaussian_matrix(desc.n, desc.field, rng);
    ComplexMatrix x = Complex(0.5, 0.0) * (b + b.adjoint());
    if (desc.is_sl()) {
      const double shift = x.trace().real() / desc.n;
      for (int i = 0; i < desc.n; ++i) x(i, i) -= shift;
    }
    const double norm = x.frobenius_norm();
    if (norm < 1e-8) continue;  // degenerate draw
    x *= Complex(1.0 / norm, 0.0);
    return HermitianMatrix(std::move(x));
  }
}

GroupElement sample_group(const GroupDescriptor& desc, double spread, Rng& rng) {
  if (!(spread > 0.0)) throw ParameterOutOfRange("spread must be positive");
  const GroupElement k = sample_compact(desc, rng);
  if (desc.is_sl() && desc.n == 1) return k;  // trivial group, no directions
  const HermitianMatrix dir = random_p_direction(desc, rng);
  const double norm = spread * rng.uniform();  // |X| uniform in [0, spread)
  return GroupElement(desc, k.matrix() * exp_hermitian(norm * dir));
}

GroupElement sample_group(const GroupDescriptor& desc, double spread, std::uint64_t seed) {
  Rng rng(seed);
  return sample_group(desc, spread, rng);
}

RepresentationTuple sample_compact_tuple(const GroupDescriptor& desc, int rank, Rng& rng) {
  std::vector<GroupElement> elems;
  elems.reserve(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) elems.push_back(sample_compact(desc, rng));
  return RepresentationTuple(desc, std::move(elems));
}

RepresentationTuple sample_tuple(const GroupDescriptor& desc, int rank, double spread, Rng& rng) {
  std::vector<GroupElement> elems;
  elems.reserve(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) elems.push_back(sample_group(desc, spread, rng));
  return RepresentationTuple(desc, std::move(elems));
}

}  // namespace repflow
