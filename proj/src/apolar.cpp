#include "hankel/apolar.hpp"

#include <algorithm>

#include "hankel/errors.hpp"

namespace hankel {

QMat catalecticant_matrix(const BinaryForm& F, int k) {
  int d = F.deg, m = d - k;
  QMat mat(m + 1, k + 1);
  for (int r = 0; r <= m; ++r)
    for (int c = 0; c <= k; ++c) {
      const Q& f = F.c[r + c];
      if (is_zero(f)) continue;
      Z num = factorial(d - r - c) * factorial(r + c);
      Z den = factorial(m - r) * factorial(r);
      mat.at(r, c) = canon(f * Q(num) / Q(den));
    }
  return mat;
}

std::vector<BinaryForm> catalecticant_kernel(const BinaryForm& F, int k) {
  if (F.is_zero()) fail(Err::ZeroForm, "apolar ideal of the zero form");
  int d = F.deg;
  if (k < 0 || k > d + 1) fail(Err::DegreeMismatch, "catalecticant degree out of range");
  std::vector<BinaryForm> out;
  if (k == d + 1) {
    for (int i = 0; i <= k; ++i) out.push_back(BinaryForm::monomial(k, i));
    return out;
  }
  QMat mat = catalecticant_matrix(F, k);
  for (auto& v : nullspace(mat)) out.push_back(BinaryForm(k, std::move(v)));
  return out;
}

namespace {

// echelon reduction helpers on coefficient vectors
std::vector<std::vector<Q>> forms_to_vectors(const std::vector<BinaryForm>& fs) {
  std::vector<std::vector<Q>> v;
  for (const auto& f : fs) v.push_back(f.c);
  return v;
}

int first_nonzero(const std::vector<Q>& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) return static_cast<int>(i);
  return -1;
}

// reduce v against reduced-echelon rows (pivot entries are 1)
void reduce_against(std::vector<Q>& v, const std::vector<std::vector<Q>>& rows) {
  for (const auto& row : rows) {
    int p = first_nonzero(row);
    if (p < 0) continue;
    if (!is_zero(v[p])) {
      Q f = v[p];
      for (size_t j = 0; j < v.size(); ++j) v[j] = canon(v[j] - f * row[j]);
    }
  }
}

BinaryForm scale_first_one(const BinaryForm& f) {
  int p = first_nonzero(f.c);
  if (p < 0) return f;
  Q inv = canon(Q(1) / f.c[p]);
  return inv * f;
}

}  // namespace

ApolarIdeal apolar_generators(const BinaryForm& F) {
  if (F.is_zero()) fail(Err::ZeroForm, "apolar ideal of the zero form");
  int d = F.deg;
  ApolarIdeal ideal;
  int d1 = -1;
  std::vector<BinaryForm> ker;
  for (int k = 1; k <= d + 1; ++k) {
    ker = catalecticant_kernel(F, k);
    if (!ker.empty()) {
      d1 = k;
      break;
    }
  }
  ideal.d1 = d1;
  ideal.d2 = d + 2 - d1;
  if (ideal.d1 == ideal.d2) {
    // the kernel is the full 2-dimensional pencil; take its echelon pair
    if (ker.size() != 2) fail(Err::Internal, "tied apolar type without a pencil");
    auto rows = row_space_canonical(forms_to_vectors(ker));
    ideal.f_perp = scale_first_one(BinaryForm(d1, rows[0]));
    ideal.f_circ = scale_first_one(BinaryForm(d1, rows[1]));
    ideal.f_perp_unique = false;
  } else {
    if (ker.size() != 1) fail(Err::Internal, "apolar minimal layer not 1-dimensional");
    ideal.f_perp = scale_first_one(ker[0]);
    ideal.f_perp_unique = true;
    // canonical complement generator in degree d2, reduced modulo
    // f_perp * R_{d2-d1}
    std::vector<BinaryForm> multiples;
    for (int i = 0; i <= ideal.d2 - d1; ++i)
      multiples.push_back(BinaryForm::monomial(ideal.d2 - d1, i) * ideal.f_perp);
    auto sub = row_space_canonical(forms_to_vectors(multiples));
    BinaryForm circ;
    bool found = false;
    for (auto& cand : catalecticant_kernel(F, ideal.d2)) {
      std::vector<Q> v = cand.c;
      reduce_against(v, sub);
      if (first_nonzero(v) >= 0) {
        circ = scale_first_one(BinaryForm(ideal.d2, v));
        found = true;
        break;
      }
    }
    if (!found) fail(Err::Internal, "no complement generator in degree d2");
    ideal.f_circ = circ;
  }
  BinaryForm g = gcd(ideal.f_perp, ideal.f_circ);
  if (g.deg != 0) fail(Err::Internal, "apolar generators are not coprime");
  return ideal;
}

bool is_apolar_member(const BinaryForm& G, const BinaryForm& F) {
  if (G.deg > F.deg) fail(Err::DegreeMismatch, "member degree exceeds form degree");
  int gap = F.deg - G.deg;
  for (int i = 0; i <= gap; ++i) {
    BinaryForm hG = BinaryForm::monomial(gap, i) * G;
    if (!is_zero(apolar_pair(hG, F).c[0])) return false;
  }
  return true;
}

BinaryForm node_power(const ProjPoint& p, int k) {
  return BinaryForm::linear_power(Q(p.a), Q(p.b), k);
}

BinaryForm node_tangent(const ProjPoint& p, int k) {
  BinaryForm l = BinaryForm::linear_power(Q(p.b), Q(-p.a), 1);
  return l * BinaryForm::linear_power(Q(p.a), Q(p.b), k - 1);
}

namespace {

// basis form l^j l_perp^{d-j} for a real node [a:b]:
// l = b x - a y (vanishes at the node), l_perp = a x + b y
BinaryForm real_basis_form(const ProjPoint& p, int j, int d) {
  BinaryForm l = BinaryForm::linear_power(Q(p.b), Q(-p.a), 1);
  BinaryForm f = BinaryForm::linear_power(Q(p.a), Q(p.b), d - j);
  for (int t = 0; t < j; ++t) f = l * f;
  return f;
}

CBinaryForm complex_basis_form(const Q& re, const Q& im, int j, int d) {
  // node [rho : 1]: l = x - rho y, l_perp = rho x + y
  CBinaryForm l(BinaryForm::linear_power(Q(1), -re, 1),
                BinaryForm::linear_power(Q(0), -im, 1));
  CBinaryForm f = CBinaryForm::linear_power(GQ(re, im), GQ(Q(1)), d - j);
  for (int t = 0; t < j; ++t) f = l * f;
  return f;
}

bool rational_sqrt(const Q& q, Q& out) {
  if (sgn(q) < 0) return false;
  Z n = q.get_num(), d = q.get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
    Z rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    out = canon(Q(rn) / Q(rd));
    return true;
  }
  return false;
}

}  // namespace

Decomposition generalized_decomposition(const BinaryForm& F, const BinaryForm& g) {
  if (F.is_zero()) fail(Err::ZeroForm, "decomposition of the zero form");
  if (g.deg > F.deg) fail(Err::DegreeMismatch, "witness degree exceeds form degree");
  if (!is_apolar_member(g, F)) fail(Err::NotApolar, "witness is not apolar to the form");
  int d = F.deg;

  RootProfile prof = classify_roots(g);
  if (!prof.algebraic_real_roots.empty())
    fail(Err::IrrationalNodes, "witness has irrational real roots");

  Decomposition dec;
  dec.source = F;
  dec.witness = g;
  for (auto& [pt, mult] : prof.rational_roots) {
    DecompNode n;
    n.point = pt;
    n.multiplicity = mult;
    dec.nodes.push_back(n);
  }
  for (auto& [factor, mult] : prof.complex_pair_factors) {
    if (factor.deg != 2)
      fail(Err::IrrationalNodes, "complex part is not a single rational quadratic");
    // A x^2 + B xy + C y^2 with roots (-B +- sqrt(B^2-4AC)) / 2A
    const Q &A = factor.c[0], &B = factor.c[1], &C = factor.c[2];
    Q disc = canon(Q(4) * A * C - B * B);
    Q root;
    if (!rational_sqrt(disc, root))
      fail(Err::IrrationalNodes, "conjugate pair is not Gaussian rational");
    DecompNode n;
    n.conjugate_pair = true;
    n.cre = canon(-B / (Q(2) * A));
    n.cim = canon(root / (Q(2) * A));
    if (sgn(n.cim) < 0) n.cim = -n.cim;
    n.multiplicity = mult;
    dec.nodes.push_back(n);
  }

  // assemble the linear system: columns are the basis forms
  int unknowns = 0;
  for (auto& n : dec.nodes) unknowns += (n.conjugate_pair ? 2 : 1) * n.multiplicity;
  QMat sys(d + 1, unknowns);
  int col = 0;
  for (auto& n : dec.nodes) {
    for (int j = 0; j < n.multiplicity; ++j) {
      if (!n.conjugate_pair) {
        BinaryForm b = real_basis_form(n.point, j, d);
        for (int i = 0; i <= d; ++i) sys.at(i, col) = b.c[i];
        ++col;
      } else {
        CBinaryForm b = complex_basis_form(n.cre, n.cim, j, d);
        // contribution 2 Re(w * b) = 2 w_re Re(b) - 2 w_im Im(b)
        for (int i = 0; i <= d; ++i) {
          sys.at(i, col) = canon(Q(2) * b.re.c[i]);
          sys.at(i, col + 1) = canon(Q(-2) * b.im.c[i]);
        }
        col += 2;
      }
    }
  }
  auto sol = solve(sys, F.c);
  if (!sol) fail(Err::Internal, "decomposition system inconsistent for an apolar witness");
  // basis forms at distinct nodes are independent, so the solution is unique
  QMat chk = sys;
  if (static_cast<int>(rref(chk).size()) != unknowns)
    fail(Err::Internal, "decomposition basis unexpectedly dependent");

  col = 0;
  for (auto& n : dec.nodes) {
    if (!n.conjugate_pair) {
      std::vector<Q> ci;
      for (int j = 0; j < n.multiplicity; ++j) ci.push_back((*sol)[col++]);
      dec.c.push_back(std::move(ci));
      dec.w.emplace_back();
    } else {
      std::vector<GQ> wi;
      for (int j = 0; j < n.multiplicity; ++j) {
        GQ w((*sol)[col], (*sol)[col + 1]);
        col += 2;
        wi.push_back(w);
      }
      dec.w.push_back(std::move(wi));
      dec.c.emplace_back();
    }
  }
  return dec;
}

BinaryForm expand(const Decomposition& dec) {
  int d = dec.source.deg;
  BinaryForm acc(d);
  for (size_t i = 0; i < dec.nodes.size(); ++i) {
    const DecompNode& n = dec.nodes[i];
    for (int j = 0; j < n.multiplicity; ++j) {
      if (!n.conjugate_pair) {
        acc = acc + dec.c[i][j] * real_basis_form(n.point, j, d);
      } else {
        CBinaryForm b = complex_basis_form(n.cre, n.cim, j, d);
        CBinaryForm t = dec.w[i][j] * b;
        acc = acc + Q(2) * t.re;
      }
    }
  }
  return acc;
}

BinaryForm form_from_apolar(const BinaryForm& g, const BinaryForm& h) {
  if (g.is_zero() || h.is_zero()) fail(Err::ZeroForm, "zero generator");
  if (gcd(g, h).deg != 0) fail(Err::NotCoprime, "generators share a factor");
  int a = g.deg, b = h.deg;
  int d = a + b - 2;
  if (d < 0) fail(Err::DegreeTooSmall, "generator degrees too small");
  // rows: coordinates of <g, F> (degree d-a) and <h, F> (degree d-b)
  // as linear functions of the coefficients of F
  auto pairing_rows = [&](const BinaryForm& w, QMat& sys, int row0) {
    int n = w.deg, m = d - n;
    for (int r = 0; r <= m; ++r)
      for (int i = 0; i <= n; ++i) {
        if (is_zero(w.c[i])) continue;
        int j = r + i;
        Z num = factorial(d - j) * factorial(j);
        Z den = factorial(m - r) * factorial(r);
        sys.at(row0 + r, j) = canon(sys.at(row0 + r, j) + w.c[i] * Q(num) / Q(den));
      }
  };
  QMat sys((d - a + 1) + (d - b + 1), d + 1);
  pairing_rows(g, sys, 0);
  pairing_rows(h, sys, d - a + 1);
  auto basis = nullspace(sys);
  if (basis.size() != 1) fail(Err::Internal, "socle kernel dimension != 1");
  BinaryForm F(d, std::move(basis[0]));
  return scale_first_one(F);
}

}  // namespace hankel
