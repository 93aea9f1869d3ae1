#include "hankel/roots.hpp"

#include <algorithm>

#include "hankel/errors.hpp"

namespace hankel {

const char* root_class_name(RootClass c) {
  switch (c) {
    case RootClass::AllSimpleReal: return "AllSimpleReal";
    case RootClass::OneComplexPair: return "OneComplexPair";
    case RootClass::OneDoubleReal: return "OneDoubleReal";
    case RootClass::NotAlmostReal: return "NotAlmostReal";
  }
  return "?";
}

ProjPoint::ProjPoint(const Q& root) : a(root.get_num()), b(root.get_den()) {}

ProjPoint::ProjPoint(const Z& a_, const Z& b_) : a(a_), b(b_) {
  if (a == 0 && b == 0) fail(Err::Internal, "projective point needs a nonzero coordinate");
  Z g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g != 0) {
    a /= g;
    b /= g;
  }
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
  }
}

std::string ProjPoint::str() const { return "[" + a.get_str() + ":" + b.get_str() + "]"; }

bool operator==(const ProjPoint& p, const ProjPoint& q) { return p.a == q.a && p.b == q.b; }
bool operator<(const ProjPoint& p, const ProjPoint& q) {
  if (p.at_infinity() != q.at_infinity()) return q.at_infinity();  // infinity last
  if (p.at_infinity()) return false;
  // compare as rationals a/b with sign of b fixed positive via normalization?
  // b can be negative only if a > 0; compare a*qb ? qa*b carefully
  Q lhs = canon(Q(p.a) / Q(p.b));
  Q rhs = canon(Q(q.a) / Q(q.b));
  return lhs < rhs;
}

namespace {

RootClass classify_from_counts(int degree, int simple, int dbl, int higher,
                               int pairs, int distinct_pairs) {
  if (simple == degree) return RootClass::AllSimpleReal;
  if (simple == degree - 2) {
    if (pairs == 1 && dbl == 0 && higher == 0) return RootClass::OneComplexPair;
    if (dbl == 1 && pairs == 0 && higher == 0) return RootClass::OneDoubleReal;
  }
  return RootClass::NotAlmostReal;
}

}  // namespace

RootPattern root_pattern(const BinaryForm& f) {
  if (f.is_zero()) fail(Err::ZeroForm, "cannot classify roots of the zero form");
  RootPattern pat;
  pat.degree = f.deg;
  int vinf = f.inf_multiplicity();
  if (vinf > 0) {
    ++pat.distinct_real;
    if (vinf == 1)
      ++pat.simple_real;
    else if (vinf == 2)
      ++pat.double_real;
    else
      ++pat.higher_real;
  }
  UniPoly p = f.dehomogenize();
  if (p.degree() >= 1) {
    for (auto& [u, mult] : squarefree_decomposition(p)) {
      SturmChain chain(u);
      int real = chain.count_all_roots();
      pat.distinct_real += real;
      if (mult == 1)
        pat.simple_real += real;
      else if (mult == 2)
        pat.double_real += real;
      else
        pat.higher_real += real;
      int pair_deg = u.degree() - real;  // even: conjugate pairs of u
      pat.complex_pairs += mult * (pair_deg / 2);
      pat.distinct_complex_pairs += pair_deg / 2;
    }
  }
  pat.classification =
      classify_from_counts(pat.degree, pat.simple_real, pat.double_real,
                           pat.higher_real, pat.complex_pairs,
                           pat.distinct_complex_pairs);
  return pat;
}

RootProfile classify_roots(const BinaryForm& f) {
  if (f.is_zero()) fail(Err::ZeroForm, "cannot classify roots of the zero form");
  RootProfile prof;
  prof.degree = f.deg;
  int vinf = f.inf_multiplicity();
  if (vinf > 0) prof.rational_roots.emplace_back(ProjPoint(Z(1), Z(0)), vinf);
  UniPoly p = f.dehomogenize();
  if (p.degree() >= 1) {
    for (auto& [u, mult] : squarefree_decomposition(p)) {
      UniPoly rest = u.primitive();
      for (auto& [root, m] : rational_roots(u)) {
        prof.rational_roots.emplace_back(ProjPoint(root), mult);
        std::vector<Q> lin{-root, Q(1)};
        rest = divexact(rest, UniPoly(lin));
      }
      if (rest.degree() >= 1) {
        auto isolated = isolate_real_roots(rest);
        for (const auto& ir : isolated) {
          AlgebraicRootInfo info;
          info.lo = ir.lo;
          info.hi = ir.hi;
          info.defining = homogenize(rest, rest.degree());
          prof.algebraic_real_roots.emplace_back(info, mult);
        }
        int pair_deg = rest.degree() - static_cast<int>(isolated.size());
        if (pair_deg > 0) {
          // factor carrying this level's conjugate pairs; its irrational real
          // roots (if any) are listed above and not divided out
          BinaryForm factor = homogenize(rest, rest.degree());
          prof.complex_pair_factors.emplace_back(factor.normalized(), mult);
        }
      }
    }
  }
  std::sort(prof.rational_roots.begin(), prof.rational_roots.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  prof.pattern = root_pattern(f);
  prof.classification = prof.pattern.classification;
  return prof;
}

int sturm_count(const BinaryForm& f, const std::optional<Q>& lo,
                const std::optional<Q>& hi) {
  if (f.is_zero()) fail(Err::ZeroForm, "sturm_count of the zero form");
  UniPoly p = f.dehomogenize();
  if (p.degree() < 1) return 0;
  SturmChain chain(p);
  return chain.count_roots(lo, hi);
}

int descartes_support_bound(const std::set<int>& support, int r) {
  if (support.empty()) fail(Err::Internal, "descartes bound needs a nonempty support");
  // bound for the distinct nonzero real roots of any form supported on s
  auto nonzero_bound = [](const std::vector<int>& s) {
    int total = 0;
    for (size_t i = 1; i < s.size(); ++i) {
      int gap = s[i] - s[i - 1];
      total += (gap % 2 != 0) ? 1 : 2;
    }
    return total;
  };
  std::vector<int> s(support.begin(), support.end());
  int best = 0;
  // a member may drop the extreme monomials, forcing roots at infinity
  // (low y-exponent end) and at zero (high end); four truncation patterns
  for (int drop_lo = 0; drop_lo <= 1; ++drop_lo) {
    for (int drop_hi = 0; drop_hi <= 1; ++drop_hi) {
      std::vector<int> t(s.begin() + drop_lo, s.end() - drop_hi);
      if (t.empty()) continue;
      int extra = 0;
      if (t.front() >= 1) ++extra;       // forced root at [1:0]
      if (t.back() <= r - 1) ++extra;    // forced root at [0:1]
      best = std::max(best, nonzero_bound(t) + extra);
    }
  }
  return best;
}

}  // namespace hankel
