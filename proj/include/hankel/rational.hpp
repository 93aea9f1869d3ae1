#ifndef HANKEL_RATIONAL_HPP
#define HANKEL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hankel {

// Exact rational scalar. mpq_class keeps fractions reduced with positive
// denominator once canonicalize() has run; every constructor we expose
// goes through canon().
using Q = mpq_class;
using Z = mpz_class;

inline Q canon(Q q) {
  q.canonicalize();
  return q;
}

inline Q frac(long num, long den) {
  if (den == 0) throw std::invalid_argument("frac: zero denominator");
  return canon(Q(num, den));
}

inline int sgn(const Q& q) { return mpq_sgn(q.get_mpq_t()); }
inline bool is_zero(const Q& q) { return sgn(q) == 0; }

inline Z factorial(unsigned n) {
  Z r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Z binomial(unsigned n, unsigned k) {
  if (k > n) return Z(0);
  Z r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Q q_pow(const Q& q, unsigned e) {
  Q r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), q.get_num().get_mpz_t(), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), q.get_den().get_mpz_t(), e);
  r.canonicalize();
  return r;
}

// Gaussian rational a + b*i; used inside decompositions with conjugate
// node pairs. Public results stay real.
struct GQ {
  Q re{0}, im{0};

  GQ() = default;
  GQ(Q r) : re(std::move(r)) {}
  GQ(Q r, Q i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return hankel::is_zero(re) && hankel::is_zero(im); }
  bool is_real() const { return hankel::is_zero(im); }
  GQ conj() const { return GQ(re, -im); }
  Q norm() const { return re * re + im * im; }

  GQ operator-() const { return GQ(-re, -im); }
  GQ& operator+=(const GQ& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GQ& operator-=(const GQ& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GQ& operator*=(const GQ& o) {
    Q r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
};

inline GQ operator+(GQ a, const GQ& b) { return a += b; }
inline GQ operator-(GQ a, const GQ& b) { return a -= b; }
inline GQ operator*(GQ a, const GQ& b) { return a *= b; }
inline GQ operator/(const GQ& a, const GQ& b) {
  Q n = b.norm();
  if (is_zero(n)) throw std::domain_error("GQ: division by zero");
  GQ c = a * b.conj();
  return GQ(c.re / n, c.im / n);
}
inline bool operator==(const GQ& a, const GQ& b) {
  return a.re == b.re && a.im == b.im;
}

// Scale a rational vector to a primitive integer vector (gcd of numerators 1,
// lcm of denominators cleared). Zero vector stays zero. Returns the factor
// lambda with lambda*v primitive; sign chosen so the first nonzero entry of
// the result is positive when make_first_positive is set.
Q primitive_scale(const std::vector<Q>& v, bool make_first_positive = false);

std::string q_to_string(const Q& q);
Q q_from_string(const std::string& s);  // "p/q" or "p"

}  // namespace hankel

#endif
