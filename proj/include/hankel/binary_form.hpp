#ifndef HANKEL_BINARY_FORM_HPP
#define HANKEL_BINARY_FORM_HPP

#include <string>
#include <utility>
#include <vector>

#include "hankel/rational.hpp"
#include "hankel/unipoly.hpp"

namespace hankel {

// Homogeneous binary form of fixed degree d over Q.
// coeffs[i] is the coefficient of x^(d-i) y^i; the zero form keeps its degree.
struct BinaryForm {
  int deg = 0;
  std::vector<Q> c;

  BinaryForm() : c(1, Q(0)) {}
  explicit BinaryForm(int d) : deg(d), c(d + 1, Q(0)) {}
  BinaryForm(int d, std::vector<Q> coeffs);

  static BinaryForm monomial(int d, int i, const Q& coeff = Q(1));
  // (a x + b y)^k
  static BinaryForm linear_power(const Q& a, const Q& b, int k);

  bool is_zero() const;
  const Q& coeff(int i) const { return c[i]; }

  Q eval(const Q& a, const Q& b) const;

  BinaryForm dx() const;  // partial derivative in x (degree drops by 1)
  BinaryForm dy() const;

  // multiplicity of the root [1:0] (the y-adic valuation)
  int inf_multiplicity() const;
  // F(t, 1) as a univariate polynomial in t
  UniPoly dehomogenize() const;

  // primitive integer coefficients, first nonzero coefficient positive
  BinaryForm normalized() const;

  std::string str() const;
};

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
BinaryForm operator-(const BinaryForm& a);
BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
BinaryForm operator*(const Q& s, const BinaryForm& a);
bool operator==(const BinaryForm& a, const BinaryForm& b);

// p of degree <= d homogenized into degree d (pads with y-powers... the
// missing x-degree becomes a power of y at the front)
BinaryForm homogenize(const UniPoly& p, int d);

BinaryForm gcd(const BinaryForm& a, const BinaryForm& b);
BinaryForm divexact(const BinaryForm& a, const BinaryForm& b);
bool divides(const BinaryForm& a, const BinaryForm& b);

// The apolar action <f, g> = d(f) . g for deg f <= deg g; the result has
// degree deg g - deg f (degree 0 = scalar). Bilinear; on monomials
// <x^a y^b, x^a y^b> = a! b! and distinct monomials pair to zero.
BinaryForm apolar_pair(const BinaryForm& f, const BinaryForm& g);

// Complex form F = re + i*im, used for conjugate-pair node arithmetic.
struct CBinaryForm {
  BinaryForm re, im;

  CBinaryForm() = default;
  CBinaryForm(BinaryForm r) : re(std::move(r)), im(BinaryForm(re.deg)) {}
  CBinaryForm(BinaryForm r, BinaryForm i) : re(std::move(r)), im(std::move(i)) {}

  static CBinaryForm linear_power(const GQ& a, const GQ& b, int k);
  CBinaryForm conj() const { return CBinaryForm(re, -im); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

CBinaryForm operator*(const CBinaryForm& a, const CBinaryForm& b);
CBinaryForm operator*(const GQ& s, const CBinaryForm& a);
CBinaryForm operator+(const CBinaryForm& a, const CBinaryForm& b);

// Polynomial text grammar: terms `c*x^a*y^b` joined by + and -, coefficients
// integers or p/q. Parse and print are exact inverses; parse errors carry the
// byte offset of the offending token.
BinaryForm parse_form(const std::string& text);
std::string print_form(const BinaryForm& f);

}  // namespace hankel

#endif
