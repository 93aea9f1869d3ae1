#ifndef HANKEL_APOLAR_HPP
#define HANKEL_APOLAR_HPP

#include <vector>

#include "hankel/binary_form.hpp"
#include "hankel/linalg.hpp"
#include "hankel/roots.hpp"

namespace hankel {

// Generator pair of the apolar ideal (F)^perp = (f_perp, f_circ) with
// deg f_perp <= deg f_circ and d1 + d2 = deg F + 2.
struct ApolarIdeal {
  BinaryForm f_perp, f_circ;
  int d1 = 0, d2 = 0;
  bool f_perp_unique = true;  // false exactly when d1 == d2
};

// Exact reduced-echelon basis of (F)^perp_k, the kernel of the pairing
// matrix R_k -> R_{d-k} against F. For k = d+1 the whole degree-(d+1)
// space is returned.
std::vector<BinaryForm> catalecticant_kernel(const BinaryForm& F, int k);

// The (d-k+1) x (k+1) pairing matrix itself: row r, column c holds the
// x^{m-r} y^r coordinate of <x^{k-c} y^c, F>.
QMat catalecticant_matrix(const BinaryForm& F, int k);

ApolarIdeal apolar_generators(const BinaryForm& F);

// G in (F)^perp, decided through (G)_d subset (F)^perp: the pairing of h*G
// against F vanishes for every monomial h of degree d - deg G.
bool is_apolar_member(const BinaryForm& G, const BinaryForm& F);

// One node of a generalized decomposition: a point of the projective line
// with a multiplicity; conjugate pairs are stored once with the upper-half
// root [re + i*im : 1], im > 0.
struct DecompNode {
  bool conjugate_pair = false;
  ProjPoint point;    // real node
  Q cre, cim;         // complex node root coordinates (b = 1), cim > 0
  int multiplicity = 1;
};

// F = sum over real nodes, j < mult of  c[i][j] * l^j l_perp^{d-j}
//   + sum over pair nodes, j < mult of  2 Re( w[i][j] * l^j l_perp^{d-j} )
// with l the linear form vanishing at the node and l_perp its apolar dual
// (the evaluation form of the node point).
struct Decomposition {
  BinaryForm source, witness;
  std::vector<DecompNode> nodes;
  std::vector<std::vector<Q>> c;    // real nodes: c[i][j]
  std::vector<std::vector<GQ>> w;   // pair nodes: w[i][j]
};

Decomposition generalized_decomposition(const BinaryForm& F, const BinaryForm& g);

// Re-expand a decomposition; equals the source exactly (used as the
// soundness oracle).
BinaryForm expand(const Decomposition& dec);

// The unique form of degree (deg g + deg h - 2) with g, h apolar to it,
// scaled so its first nonzero coefficient is 1. Throws NotCoprime.
BinaryForm form_from_apolar(const BinaryForm& g, const BinaryForm& h);

// evaluation form of a node: (a x + b y)^k for the point [a:b]
BinaryForm node_power(const ProjPoint& p, int k);
// first-order form at a node: (b x - a y)(a x + b y)^{k-1}
BinaryForm node_tangent(const ProjPoint& p, int k);

}  // namespace hankel

#endif
