#include "hankel/unipoly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hankel {

Q primitive_scale(const std::vector<Q>& v, bool make_first_positive) {
  Z den(1), num(0);
  for (const auto& q : v) {
    if (is_zero(q)) continue;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num().get_mpz_t());
  }
  if (num == 0) return Q(1);
  Q lambda = canon(Q(den) / Q(num));
  if (lambda < 0) lambda = -lambda;
  if (make_first_positive) {
    for (const auto& q : v) {
      if (!is_zero(q)) {
        if (sgn(q) < 0) lambda = -lambda;
        break;
      }
    }
  }
  return lambda;
}

std::string q_to_string(const Q& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Q q_from_string(const std::string& s) {
  Q q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

void UniPoly::trim() {
  while (!c.empty() && is_zero(c.back())) c.pop_back();
}

Q UniPoly::eval(const Q& x) const {
  Q r(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

int UniPoly::sign_at(const Q& x) const { return sgn(eval(x)); }
int UniPoly::sign_at_pos_inf() const { return is_zero() ? 0 : sgn(lc()); }
int UniPoly::sign_at_neg_inf() const {
  if (is_zero()) return 0;
  return degree() % 2 == 0 ? sgn(lc()) : -sgn(lc());
}

UniPoly UniPoly::derivative() const {
  if (c.size() <= 1) return UniPoly();
  std::vector<Q> d(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) d[i - 1] = Q(static_cast<long>(i)) * c[i];
  return UniPoly(std::move(d));
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return *this;
  Q lambda = primitive_scale(c);
  if (sgn(lc()) * sgn(lambda) < 0) lambda = -lambda;
  std::vector<Q> d(c.size());
  for (size_t i = 0; i < c.size(); ++i) d[i] = canon(c[i] * lambda);
  return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Q> r(std::max(a.c.size(), b.c.size()), Q(0));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Q> r(std::max(a.c.size(), b.c.size()), Q(0));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return UniPoly(std::move(r));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Q> r(a.c.size() + b.c.size() - 1, Q(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  }
  return UniPoly(std::move(r));
}

UniPoly operator*(const Q& s, const UniPoly& a) {
  std::vector<Q> r(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) r[i] = s * a.c[i];
  return UniPoly(std::move(r));
}

bool operator==(const UniPoly& a, const UniPoly& b) { return a.c == b.c; }

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("divrem: zero divisor");
  UniPoly r = a;
  if (a.degree() < b.degree()) return {UniPoly(), r};
  std::vector<Q> q(a.degree() - b.degree() + 1, Q(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    Q f = canon(r.lc() / b.lc());
    q[k] = f;
    for (size_t i = 0; i < b.c.size(); ++i) r.c[k + i] -= f * b.c[i];
    r.trim();
  }
  return {UniPoly(std::move(q)), r};
}

UniPoly divexact(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("divexact: inexact division");
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly f = a.primitive(), g = b.primitive();
  while (!g.is_zero()) {
    UniPoly r = divrem(f, g).second.primitive();
    f = std::move(g);
    g = std::move(r);
  }
  if (f.is_zero()) return f;
  Q inv = canon(Q(1) / f.lc());
  return inv * f;
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() < 1) return out;
  // Yun's algorithm.
  UniPoly d = p.derivative();
  UniPoly a = gcd(p, d);
  UniPoly b = divexact(p, a);
  UniPoly c = divexact(d, a);
  int k = 1;
  while (b.degree() >= 1) {
    UniPoly t = c - b.derivative();
    UniPoly f = gcd(b, t);
    if (f.degree() >= 1) out.emplace_back(f, k);
    b = divexact(b, f);
    c = divexact(t, f);
    ++k;
  }
  return out;
}

Q resultant(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return Q(0);
  // Euclidean resultant with explicit degree bookkeeping.
  UniPoly f = a, g = b;
  Q res(1);
  while (true) {
    if (g.degree() == 0) return canon(res * q_pow(g.c[0], f.degree()));
    UniPoly rem = divrem(f, g).second;
    if (rem.is_zero()) return Q(0);
    int df = f.degree(), dg = g.degree(), dr = rem.degree();
    // res(f,g) = (-1)^{df*dg} lc(g)^{df-dr} res(g, rem)
    if ((static_cast<long>(df) * dg) % 2 != 0) res = -res;
    res *= q_pow(g.lc(), df - dr);
    f = std::move(g);
    g = std::move(rem);
  }
}

SturmChain::SturmChain(const UniPoly& p) {
  UniPoly f = p.primitive();
  if (f.is_zero()) throw std::domain_error("SturmChain: zero polynomial");
  // chain on the squarefree part, so variation counts stay valid when an
  // evaluation point hits a multiple root of the original polynomial
  UniPoly g = gcd(f, f.derivative());
  if (g.degree() >= 1) f = divexact(f, g).primitive();
  seq.push_back(f);
  UniPoly d = f.derivative().primitive();
  if (!d.is_zero()) seq.push_back(d);
  while (seq.size() >= 2 && seq.back().degree() >= 1) {
    UniPoly r = divrem(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    std::vector<Q> neg(r.c.size());
    for (size_t i = 0; i < r.c.size(); ++i) neg[i] = -r.c[i];
    seq.push_back(UniPoly(std::move(neg)).primitive());
  }
}

namespace {
int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}
}  // namespace

int SturmChain::variations_at(const Q& x) const {
  std::vector<int> s(seq.size());
  for (size_t i = 0; i < seq.size(); ++i) s[i] = seq[i].sign_at(x);
  return count_variations(s);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> s(seq.size());
  for (size_t i = 0; i < seq.size(); ++i) s[i] = seq[i].sign_at_pos_inf();
  return count_variations(s);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> s(seq.size());
  for (size_t i = 0; i < seq.size(); ++i) s[i] = seq[i].sign_at_neg_inf();
  return count_variations(s);
}

int SturmChain::count_roots(const std::optional<Q>& lo,
                            const std::optional<Q>& hi) const {
  // V(a) - V(b) counts distinct roots in (a, b]; at a root of the squarefree
  // head the variation count equals its limit from the right, so a closed
  // lower end only needs an explicit membership check.
  int va = lo ? variations_at(*lo) : variations_at_neg_inf();
  int vb = hi ? variations_at(*hi) : variations_at_pos_inf();
  int n = va - vb;
  if (lo && seq.front().sign_at(*lo) == 0) ++n;
  return n;
}

Q cauchy_root_bound(const UniPoly& p) {
  if (p.is_zero()) return Q(1);
  Q m(0);
  for (const auto& q : p.c) {
    Q a = abs(q);
    if (a > m) m = a;
  }
  Q b = canon(Q(1) + m / abs(p.lc()));
  // round up to an integer
  Z num = b.get_num(), den = b.get_den();
  Z quo;
  mpz_cdiv_q(quo.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Q(quo);
}

void refine_isolating_interval(const UniPoly& p, Q& lo, Q& hi, const Q& width) {
  int slo = p.sign_at(lo);
  assert(slo != 0 && p.sign_at(hi) != 0 && slo != p.sign_at(hi));
  while (canon(hi - lo) > width) {
    Q mid = canon((lo + hi) / 2);
    int sm = p.sign_at(mid);
    if (sm == 0) {
      // land exactly on the root: shrink symmetrically around it
      Q eps = canon((hi - lo) / 4);
      while (p.sign_at(mid - eps) == 0 || p.sign_at(mid + eps) == 0) eps /= 2;
      if (p.sign_at(mid - eps) == slo) {
        lo = mid - eps;
        hi = mid + eps;
      }
      continue;
    }
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
}

namespace {

// Integer roots of a primitive integer polynomial (used through the monic
// transform for rational roots). Roots found by isolating to width < 1 and
// testing the integer candidates.
std::vector<Z> integer_roots_monic(const UniPoly& v) {
  std::vector<Z> out;
  if (v.degree() < 1) return out;
  SturmChain chain(v);
  Q bound = cauchy_root_bound(v);
  struct Seg {
    Q lo, hi;
    int cnt;
  };
  std::vector<Seg> stack;
  auto count_in = [&](const Q& a, const Q& b) {
    return chain.count_roots(a, b);
  };
  Q lo = -bound, hi = bound;
  int total = count_in(lo, hi);
  if (total > 0) stack.push_back({lo, hi, total});
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (canon(s.hi - s.lo) <= 1) {
      Z a, b;
      mpz_cdiv_q(a.get_mpz_t(), s.lo.get_num().get_mpz_t(), s.lo.get_den().get_mpz_t());
      mpz_fdiv_q(b.get_mpz_t(), s.hi.get_num().get_mpz_t(), s.hi.get_den().get_mpz_t());
      for (Z k = a; k <= b; ++k)
        if (is_zero(v.eval(Q(k)))) out.push_back(k);
      continue;
    }
    Q mid = canon((s.lo + s.hi) / 2);
    int left = count_in(s.lo, mid);
    if (left > 0) stack.push_back({s.lo, mid, left});
    if (s.cnt - left > 0) stack.push_back({mid, s.hi, s.cnt - left});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<std::pair<Q, int>> rational_roots(const UniPoly& p) {
  std::vector<std::pair<Q, int>> out;
  auto sqf = squarefree_decomposition(p);
  for (auto& [f, mult] : sqf) {
    UniPoly u = f.primitive();
    if (u.degree() < 1) continue;
    // Substituting x = z/a for a = lc(u) gives the monic integer polynomial
    // v(z) = a^{n-1} u(z/a); rational roots of u are z/a for integer roots z.
    int n = u.degree();
    Q a_n = u.lc();
    std::vector<Q> vc(n + 1);
    for (int i = 0; i < n; ++i) vc[i] = canon(u.c[i] * q_pow(a_n, n - 1 - i));
    vc[n] = Q(1);
    UniPoly v{vc};
    for (const Z& z : integer_roots_monic(v)) {
      Q root = canon(Q(z) / a_n);
      if (is_zero(u.eval(root))) out.emplace_back(root, mult);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<IsolatedRoot> isolate_real_roots(const UniPoly& p) {
  std::vector<IsolatedRoot> out;
  if (p.degree() < 1) return out;
  // Work on the squarefree part so multiple roots collapse.
  UniPoly sf = divexact(p, gcd(p, p.derivative())).primitive();
  if (sf.degree() < 1) return out;
  SturmChain chain(sf);
  Q bound = cauchy_root_bound(sf);
  struct Seg {
    Q lo, hi;
    int cnt;
  };
  std::vector<Seg> work;
  int total = chain.count_roots(-bound, bound);
  if (total > 0) work.push_back({-bound, bound, total});
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    if (s.cnt == 1) {
      // subdivision keeps endpoints off the roots of sf
      IsolatedRoot r;
      r.exact = false;
      r.lo = s.lo;
      r.hi = s.hi;
      out.push_back(r);
      continue;
    }
    Q mid = canon((s.lo + s.hi) / 2);
    if (sf.sign_at(mid) == 0) {
      IsolatedRoot r;
      r.exact = true;
      r.value = mid;
      out.push_back(r);
      // count roots strictly on each side of mid
      Q eps(1, 2);
      while (sf.sign_at(mid - eps) == 0 || sf.sign_at(mid + eps) == 0) eps /= 2;
      int left = chain.count_roots(s.lo, mid - eps);
      int right = s.cnt - 1 - left;
      if (left > 0) work.push_back({s.lo, canon(mid - eps), left});
      if (right > 0) work.push_back({canon(mid + eps), s.hi, right});
      continue;
    }
    int left = chain.count_roots(s.lo, mid);
    if (left > 0) work.push_back({s.lo, mid, left});
    if (s.cnt - left > 0) work.push_back({mid, s.hi, s.cnt - left});
  }
  // detect rational roots among the isolated intervals; simple roots of the
  // squarefree part flip sign, so non-exact intervals stay refinable
  auto rats = rational_roots(sf);
  for (auto& r : out) {
    if (r.exact) continue;
    for (auto& [q, m] : rats) {
      if (r.lo < q && q < r.hi) {
        r.exact = true;
        r.value = q;
        break;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
    Q va = a.exact ? a.value : a.lo;
    Q vb = b.exact ? b.value : b.lo;
    return va < vb;
  });
  return out;
}

}  // namespace hankel
