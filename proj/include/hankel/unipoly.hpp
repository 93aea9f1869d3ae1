#ifndef HANKEL_UNIPOLY_HPP
#define HANKEL_UNIPOLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hankel/rational.hpp"

namespace hankel {

// Dense univariate polynomial over Q, coefficients by ascending power.
// Invariant: no trailing zero coefficient (zero polynomial = empty vector).
struct UniPoly {
  std::vector<Q> c;

  UniPoly() = default;
  explicit UniPoly(std::vector<Q> coeffs) : c(std::move(coeffs)) { trim(); }

  void trim();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for 0
  const Q& lc() const { return c.back(); }

  Q eval(const Q& x) const;
  int sign_at(const Q& x) const;
  int sign_at_pos_inf() const;
  int sign_at_neg_inf() const;

  UniPoly derivative() const;
  // Scale to primitive integer coefficients, positive leading coefficient.
  UniPoly primitive() const;
};

UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const Q& s, const UniPoly& a);
bool operator==(const UniPoly& a, const UniPoly& b);

// Euclidean division; throws on zero divisor.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
// Exact division; throws if the remainder is nonzero.
UniPoly divexact(const UniPoly& a, const UniPoly& b);

// Monic gcd (gcd of zero polynomials is zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Yun squarefree decomposition: p = lc * prod f_k^k with f_k squarefree,
// pairwise coprime, monic. Returns pairs (f_k, k) for nonconstant f_k.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

// Resultant of a and b (exact, subresultant-free via fraction clearing).
Q resultant(const UniPoly& a, const UniPoly& b);

// Number of distinct real roots in (lo, hi]; full line when no bounds given.
// Endpoints need not avoid roots: they are nudged internally.
struct SturmChain {
  std::vector<UniPoly> seq;  // primitive integer chain
  explicit SturmChain(const UniPoly& p);
  int variations_at(const Q& x) const;
  int variations_at_pos_inf() const;
  int variations_at_neg_inf() const;
  int count_roots(const std::optional<Q>& lo, const std::optional<Q>& hi) const;
  int count_all_roots() const { return count_roots(std::nullopt, std::nullopt); }
};

// One isolated real root: either an exact rational point or an open interval
// (lo, hi) containing exactly one root of the (squarefree) polynomial.
struct IsolatedRoot {
  bool exact = false;
  Q value;    // when exact
  Q lo, hi;   // when not exact; poly(lo), poly(hi) != 0, lo < root < hi
};

// Isolate all distinct real roots of p (p != 0, need not be squarefree);
// returned in increasing order. Rational roots come back exact.
std::vector<IsolatedRoot> isolate_real_roots(const UniPoly& p);

// All rational roots of p with multiplicities.
std::vector<std::pair<Q, int>> rational_roots(const UniPoly& p);

// Root bound: all real roots lie in (-B, B).
Q cauchy_root_bound(const UniPoly& p);

// Shrink an isolating interval for the unique root of squarefree p inside it
// until hi - lo <= width.
void refine_isolating_interval(const UniPoly& p, Q& lo, Q& hi, const Q& width);

}  // namespace hankel

#endif
