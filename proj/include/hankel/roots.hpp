#ifndef HANKEL_ROOTS_HPP
#define HANKEL_ROOTS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hankel/binary_form.hpp"

namespace hankel {

enum class RootClass {
  AllSimpleReal,
  OneComplexPair,
  OneDoubleReal,
  NotAlmostReal,
};

const char* root_class_name(RootClass c);

// Point on the projective line with coprime integer coordinates [a:b],
// first nonzero coordinate positive. [1:0] is the root at infinity.
struct ProjPoint {
  Z a{1}, b{0};

  ProjPoint() = default;
  ProjPoint(const Q& root);             // finite root [root : 1]
  ProjPoint(const Z& a_, const Z& b_);  // normalized
  bool at_infinity() const { return b == 0; }
  std::string str() const;
};

bool operator==(const ProjPoint& p, const ProjPoint& q);
bool operator<(const ProjPoint& p, const ProjPoint& q);

// Root counts, cheap form of the classification (no root extraction).
struct RootPattern {
  int degree = 0;
  int distinct_real = 0;       // distinct real projective roots
  int simple_real = 0;         // those with multiplicity exactly 1
  int double_real = 0;         // multiplicity exactly 2
  int higher_real = 0;         // multiplicity >= 3
  int complex_pairs = 0;       // conjugate pairs counted with multiplicity
  int distinct_complex_pairs = 0;
  RootClass classification = RootClass::NotAlmostReal;

  bool almost_real() const { return classification != RootClass::NotAlmostReal; }
  bool all_simple_real() const { return classification == RootClass::AllSimpleReal; }
  bool all_real() const { return complex_pairs == 0; }
  // deg - #simple real roots; what a coprime cofactor cannot repair
  int excess() const { return degree - simple_real; }
};

RootPattern root_pattern(const BinaryForm& f);

struct AlgebraicRootInfo {
  Q lo, hi;            // isolating interval for the squarefree defining poly
  BinaryForm defining; // squarefree factor (no rational roots) the root satisfies
};

struct RootProfile {
  int degree = 0;
  std::vector<std::pair<ProjPoint, int>> rational_roots;
  std::vector<std::pair<AlgebraicRootInfo, int>> algebraic_real_roots;
  // even-degree factors without real roots; each contributes deg/2 conjugate
  // pairs at the stated multiplicity (an irreducible rational quadratic when
  // deg = 2, which is the case ray construction consumes)
  std::vector<std::pair<BinaryForm, int>> complex_pair_factors;
  RootClass classification = RootClass::NotAlmostReal;
  RootPattern pattern;

  bool almost_real() const { return classification != RootClass::NotAlmostReal; }
};

// Exact classification via squarefree decomposition, rational root
// extraction and Sturm isolation. Throws ZeroForm on the zero form.
RootProfile classify_roots(const BinaryForm& f);

// Distinct real roots of the dehomogenization of f in [lo, hi] (whole line
// when unset); the root at infinity is reported separately by the caller via
// inf_multiplicity(). Throws ZeroForm.
int sturm_count(const BinaryForm& f, const std::optional<Q>& lo = std::nullopt,
                const std::optional<Q>& hi = std::nullopt);

// Upper bound, valid for every real form supported on the given set of
// y-exponents in degree r, for the number of distinct real projective roots.
// Sign assignments are maximized jointly for x > 0 and x < 0 (each adjacent
// support gap contributes 1 when odd, 2 when even), and the four
// drop-an-extreme-monomial cases account for forced roots at 0 and infinity.
int descartes_support_bound(const std::set<int>& support_y_exponents, int r);

}  // namespace hankel

#endif
