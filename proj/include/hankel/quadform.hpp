#ifndef HANKEL_QUADFORM_HPP
#define HANKEL_QUADFORM_HPP

#include <string>
#include <vector>

#include "hankel/binary_form.hpp"
#include "hankel/linalg.hpp"

namespace hankel {

// Symmetric quadratic form over Q with named basis vectors.
struct SymQuadForm {
  QMat m;
  std::vector<std::string> basis_labels;

  int dim() const { return m.rows; }
};

// Moment matrix of the functional <., L> on degree-d forms in the plain
// monomial basis x^{d-i} y^i, normalized by (2d)!: entry (i,j) is
// L_{i+j} / C(2d, i+j). For L = sum w_k (a_k x + b_k y)^{2d} this is the
// weighted sum of evaluation outer products, and its kernel is (L)^perp_d.
SymQuadForm middle_catalecticant(const BinaryForm& L);

// Restriction B^T Q B to the span of the given degree-d forms.
SymQuadForm restrict_to(const SymQuadForm& q, const std::vector<BinaryForm>& basis);

Inertia inertia(const SymQuadForm& q);

// Reduced-echelon kernel basis (coordinate vectors in q's basis).
std::vector<std::vector<Q>> kernel(const SymQuadForm& q);

// Kernel vectors of a restricted form pulled back to binary forms through
// the same basis that produced the restriction.
std::vector<BinaryForm> kernel_forms(const SymQuadForm& q,
                                     const std::vector<BinaryForm>& basis);

struct BasepointReport {
  bool basepoint_free = false;
  BinaryForm common_factor;  // gcd of the inputs (degree 0 iff basepoint-free)
};

// A space of forms is basepoint-free iff its gcd is constant; a nonconstant
// gcd names the common projective roots (complex ones included).
BasepointReport basepoint_free(const std::vector<BinaryForm>& forms);

}  // namespace hankel

#endif
