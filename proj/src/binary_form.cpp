#include "hankel/binary_form.hpp"

#include <cctype>
#include <sstream>

#include "hankel/errors.hpp"

namespace hankel {

BinaryForm::BinaryForm(int d, std::vector<Q> coeffs) : deg(d), c(std::move(coeffs)) {
  if (static_cast<int>(c.size()) != d + 1)
    fail(Err::DimensionMismatch, "coefficient vector length != degree + 1");
  for (auto& q : c) q.canonicalize();
}

BinaryForm BinaryForm::monomial(int d, int i, const Q& coeff) {
  BinaryForm f(d);
  f.c[i] = canon(coeff);
  return f;
}

BinaryForm BinaryForm::linear_power(const Q& a, const Q& b, int k) {
  BinaryForm f(k);
  Q pa(1);
  for (int i = 0; i <= k; ++i) {
    // coefficient of x^{k-i} y^i = C(k,i) a^{k-i} b^i
    f.c[i] = canon(Q(binomial(k, i)) * q_pow(a, k - i) * q_pow(b, i));
  }
  return f;
}

bool BinaryForm::is_zero() const {
  for (const auto& q : c)
    if (!hankel::is_zero(q)) return false;
  return true;
}

Q BinaryForm::eval(const Q& a, const Q& b) const {
  Q r(0);
  for (int i = 0; i <= deg; ++i) {
    if (hankel::is_zero(c[i])) continue;
    r += c[i] * q_pow(a, deg - i) * q_pow(b, i);
  }
  return canon(r);
}

BinaryForm BinaryForm::dx() const {
  if (deg == 0) return BinaryForm(0);
  BinaryForm f(deg - 1);
  for (int i = 0; i < deg; ++i) f.c[i] = canon(Q(deg - i) * c[i]);
  return f;
}

BinaryForm BinaryForm::dy() const {
  if (deg == 0) return BinaryForm(0);
  BinaryForm f(deg - 1);
  for (int i = 1; i <= deg; ++i) f.c[i - 1] = canon(Q(i) * c[i]);
  return f;
}

int BinaryForm::inf_multiplicity() const {
  for (int i = 0; i <= deg; ++i)
    if (!hankel::is_zero(c[i])) return i;
  return deg + 1;  // zero form
}

UniPoly BinaryForm::dehomogenize() const {
  std::vector<Q> p(deg + 1);
  for (int i = 0; i <= deg; ++i) p[deg - i] = c[i];
  return UniPoly(std::move(p));
}

BinaryForm BinaryForm::normalized() const {
  if (is_zero()) return *this;
  Q lambda = primitive_scale(c, /*make_first_positive=*/true);
  BinaryForm f(deg);
  for (int i = 0; i <= deg; ++i) f.c[i] = canon(c[i] * lambda);
  return f;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.deg != b.deg) fail(Err::DegreeMismatch, "form addition degree mismatch");
  BinaryForm r(a.deg);
  for (int i = 0; i <= a.deg; ++i) r.c[i] = canon(a.c[i] + b.c[i]);
  return r;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
  if (a.deg != b.deg) fail(Err::DegreeMismatch, "form subtraction degree mismatch");
  BinaryForm r(a.deg);
  for (int i = 0; i <= a.deg; ++i) r.c[i] = canon(a.c[i] - b.c[i]);
  return r;
}

BinaryForm operator-(const BinaryForm& a) {
  BinaryForm r(a.deg);
  for (int i = 0; i <= a.deg; ++i) r.c[i] = -a.c[i];
  return r;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm r(a.deg + b.deg);
  for (int i = 0; i <= a.deg; ++i) {
    if (is_zero(a.c[i])) continue;
    for (int j = 0; j <= b.deg; ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  for (auto& q : r.c) q.canonicalize();
  return r;
}

BinaryForm operator*(const Q& s, const BinaryForm& a) {
  BinaryForm r(a.deg);
  for (int i = 0; i <= a.deg; ++i) r.c[i] = canon(s * a.c[i]);
  return r;
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
  return a.deg == b.deg && a.c == b.c;
}

BinaryForm homogenize(const UniPoly& p, int d) {
  if (p.degree() > d) fail(Err::DegreeMismatch, "polynomial degree exceeds target");
  BinaryForm f(d);
  for (int k = 0; k <= p.degree(); ++k) f.c[d - k] = p.c[k];
  return f;
}

BinaryForm gcd(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  int vy = std::min(a.inf_multiplicity(), b.inf_multiplicity());
  UniPoly g = gcd(a.dehomogenize(), b.dehomogenize());
  BinaryForm r = homogenize(g, g.degree() + vy);
  return r.normalized();
}

bool divides(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero()) return b.is_zero();
  if (b.is_zero()) return true;
  if (a.inf_multiplicity() > b.inf_multiplicity()) return false;
  auto [q, r] = divrem(b.dehomogenize(), a.dehomogenize());
  return r.is_zero();
}

BinaryForm divexact(const BinaryForm& a, const BinaryForm& b) {
  if (b.is_zero()) fail(Err::ZeroForm, "division by the zero form");
  int va = a.inf_multiplicity(), vb = b.inf_multiplicity();
  if (a.is_zero()) return BinaryForm(std::max(0, a.deg - b.deg));
  if (va < vb) fail(Err::DegreeMismatch, "inexact form division");
  UniPoly q = hankel::divexact(a.dehomogenize(), b.dehomogenize());
  return homogenize(q, a.deg - b.deg);
}

BinaryForm apolar_pair(const BinaryForm& f, const BinaryForm& g) {
  int n = f.deg, d = g.deg;
  if (n > d) fail(Err::DegreeMismatch, "apolar pairing needs deg f <= deg g");
  int m = d - n;
  BinaryForm r(m);
  // d(x^{n-i} y^i) . x^{d-j} y^j lands on x^{m-k} y^k for k = j - i with
  // factor (d-j)! / (m-k)! * j! / k!
  for (int i = 0; i <= n; ++i) {
    if (is_zero(f.c[i])) continue;
    for (int k = 0; k <= m; ++k) {
      int j = k + i;
      if (is_zero(g.c[j])) continue;
      Z num = factorial(d - j) * factorial(j);
      Z den = factorial(m - k) * factorial(k);
      r.c[k] += f.c[i] * g.c[j] * canon(Q(num) / Q(den));
    }
  }
  for (auto& q : r.c) q.canonicalize();
  return r;
}

CBinaryForm CBinaryForm::linear_power(const GQ& a, const GQ& b, int k) {
  CBinaryForm f{BinaryForm(k), BinaryForm(k)};
  for (int i = 0; i <= k; ++i) {
    GQ pa(Q(1)), pb(Q(1));
    for (int t = 0; t < k - i; ++t) pa *= a;
    for (int t = 0; t < i; ++t) pb *= b;
    GQ coeff = GQ(Q(binomial(k, i))) * pa * pb;
    f.re.c[i] = canon(coeff.re);
    f.im.c[i] = canon(coeff.im);
  }
  return f;
}

CBinaryForm operator*(const CBinaryForm& a, const CBinaryForm& b) {
  return CBinaryForm(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

CBinaryForm operator*(const GQ& s, const CBinaryForm& a) {
  return CBinaryForm(s.re * a.re - s.im * a.im, s.re * a.im + s.im * a.re);
}

CBinaryForm operator+(const CBinaryForm& a, const CBinaryForm& b) {
  return CBinaryForm(a.re + b.re, a.im + b.im);
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  Z parse_integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail(Err::ParseError, "expected integer", start);
    return Z(s.substr(start, pos - start));
  }

  // [integer][/integer]
  Q parse_rational() {
    Z num = parse_integer();
    skip_ws();
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      size_t dpos = pos;
      Z den = parse_integer();
      if (den == 0) fail(Err::ParseError, "zero denominator", dpos);
      return canon(Q(num) / Q(den));
    }
    return Q(num);
  }

  int parse_exponent() {
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      size_t epos = pos;
      Z e = parse_integer();
      if (e < 0 || e > 1000) fail(Err::ParseError, "exponent out of range", epos);
      return static_cast<int>(e.get_si());
    }
    return 1;
  }

  // term := [rational] ['*'] [x[^a]] ['*'] [y[^b]]
  // returns (coefficient, a, b), with at least one of the pieces present
  struct Term {
    Q coeff{1};
    int ax = 0, ay = 0;
    size_t start = 0;
  };

  void eat_star() {
    skip_ws();
    if (pos < s.size() && s[pos] == '*') {
      size_t star = pos;
      ++pos;
      skip_ws();
      if (pos >= s.size() || (s[pos] != 'x' && s[pos] != 'y'))
        fail(Err::ParseError, "expected variable after '*'", star);
    }
  }

  Term parse_term() {
    Term t;
    skip_ws();
    t.start = pos;
    bool any = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      t.coeff = parse_rational();
      any = true;
      eat_star();
    }
    skip_ws();
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      t.ax = parse_exponent();
      any = true;
      eat_star();
    }
    skip_ws();
    if (pos < s.size() && s[pos] == 'y') {
      ++pos;
      t.ay = parse_exponent();
      any = true;
    }
    if (!any) fail(Err::ParseError, "expected term", pos);
    return t;
  }
};

}  // namespace

BinaryForm parse_form(const std::string& text) {
  Parser p(text);
  struct Piece {
    Parser::Term term;
    bool negative;
  };
  std::vector<Piece> pieces;
  bool neg = false;
  if (p.peek() == '+' || p.peek() == '-') {
    neg = p.peek() == '-';
    ++p.pos;
  }
  while (true) {
    Parser::Term t = p.parse_term();
    pieces.push_back({t, neg});
    if (p.eof()) break;
    char c = p.peek();
    if (c == '+' || c == '-') {
      neg = c == '-';
      ++p.pos;
    } else {
      fail(Err::ParseError, std::string("unexpected character '") + c + "'", p.pos);
    }
  }
  int d = 0;
  for (const auto& piece : pieces) d = std::max(d, piece.term.ax + piece.term.ay);
  BinaryForm f(d);
  for (const auto& piece : pieces) {
    int td = piece.term.ax + piece.term.ay;
    if (td != d && !is_zero(piece.term.coeff))
      fail(Err::ParseError, "form is not homogeneous", piece.term.start);
    Q c = piece.negative ? Q(-piece.term.coeff) : piece.term.coeff;
    f.c[piece.term.ay] += c;
  }
  for (auto& q : f.c) q.canonicalize();
  return f;
}

std::string print_form(const BinaryForm& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= f.deg; ++i) {
    const Q& q = f.c[i];
    if (is_zero(q)) continue;
    Q a = abs(q);
    if (first) {
      if (sgn(q) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(q) < 0 ? "-" : "+");
    }
    int ax = f.deg - i, ay = i;
    bool has_var = ax > 0 || ay > 0;
    bool coeff_one = (a == 1);
    if (!coeff_one || !has_var) out << q_to_string(a);
    bool need_star = !coeff_one || !has_var;
    if (ax > 0) {
      if (need_star) out << "*";
      out << "x";
      if (ax > 1) out << "^" << ax;
      need_star = true;
    }
    if (ay > 0) {
      if (need_star) out << "*";
      out << "y";
      if (ay > 1) out << "^" << ay;
    }
  }
  return out.str();
}

std::string BinaryForm::str() const { return print_form(*this); }

const char* err_name(Err e) {
  switch (e) {
    case Err::ZeroForm: return "ZeroForm";
    case Err::DegreeMismatch: return "DegreeMismatch";
    case Err::NotApolar: return "NotApolar";
    case Err::NotCoprime: return "NotCoprime";
    case Err::IrrationalNodes: return "IrrationalNodes";
    case Err::ZeroCoefficient: return "ZeroCoefficient";
    case Err::OddDegree: return "OddDegree";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::EmptyKernel: return "EmptyKernel";
    case Err::EmptySpace: return "EmptySpace";
    case Err::CenterOnThirdSecant: return "CenterOnThirdSecant";
    case Err::ProperDivisor: return "ProperDivisor";
    case Err::VerificationFailed: return "VerificationFailed";
    case Err::SearchExhausted: return "SearchExhausted";
    case Err::DegreeTooSmall: return "DegreeTooSmall";
    case Err::CenterOnSecant: return "CenterOnSecant";
    case Err::GenericTypeRequired: return "GenericTypeRequired";
    case Err::OpenInterval: return "OpenInterval";
    case Err::ParseError: return "ParseError";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace hankel
