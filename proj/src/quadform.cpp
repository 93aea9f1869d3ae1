#include "hankel/quadform.hpp"

#include "hankel/errors.hpp"

namespace hankel {

SymQuadForm middle_catalecticant(const BinaryForm& L) {
  if (L.deg % 2 != 0) fail(Err::OddDegree, "moment matrix needs even degree");
  int d = L.deg / 2;
  SymQuadForm q;
  q.m = QMat(d + 1, d + 1);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j)
      q.m.at(i, j) = canon(L.c[i + j] / Q(binomial(L.deg, i + j)));
  for (int i = 0; i <= d; ++i)
    q.basis_labels.push_back(print_form(BinaryForm::monomial(d, i)));
  return q;
}

SymQuadForm restrict_to(const SymQuadForm& q, const std::vector<BinaryForm>& basis) {
  if (basis.empty()) fail(Err::DimensionMismatch, "empty restriction basis");
  QMat b(q.dim(), static_cast<int>(basis.size()));
  for (size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].deg + 1 != q.dim())
      fail(Err::DimensionMismatch, "basis form does not live in the form's space");
    for (int i = 0; i < q.dim(); ++i) b.at(i, static_cast<int>(k)) = basis[k].c[i];
  }
  SymQuadForm r;
  r.m = congruence(q.m, b);
  for (const auto& f : basis) r.basis_labels.push_back(print_form(f));
  return r;
}

Inertia inertia(const SymQuadForm& q) { return inertia(q.m); }

std::vector<std::vector<Q>> kernel(const SymQuadForm& q) { return nullspace(q.m); }

std::vector<BinaryForm> kernel_forms(const SymQuadForm& q,
                                     const std::vector<BinaryForm>& basis) {
  if (static_cast<int>(basis.size()) != q.dim())
    fail(Err::DimensionMismatch, "basis size != form dimension");
  std::vector<BinaryForm> out;
  int d = basis.front().deg;
  for (const auto& v : kernel(q)) {
    BinaryForm f(d);
    for (size_t k = 0; k < v.size(); ++k) {
      if (is_zero(v[k])) continue;
      f = f + v[k] * basis[k];
    }
    out.push_back(f);
  }
  return out;
}

BasepointReport basepoint_free(const std::vector<BinaryForm>& forms) {
  if (forms.empty()) fail(Err::EmptyKernel, "no forms to test");
  BasepointReport rep;
  BinaryForm g = forms.front();
  for (size_t i = 1; i < forms.size(); ++i) g = gcd(g, forms[i]);
  rep.common_factor = g.normalized();
  rep.basepoint_free = rep.common_factor.deg == 0 && !rep.common_factor.is_zero();
  return rep;
}

}  // namespace hankel
