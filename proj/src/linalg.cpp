#include "hankel/linalg.hpp"

#include <cassert>

#include "hankel/errors.hpp"

namespace hankel {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Q(1);
  return m;
}

QMat QMat::transposed() const {
  QMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool QMat::is_symmetric() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = i + 1; j < cols; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

QMat operator*(const QMat& x, const QMat& y) {
  if (x.cols != y.rows) fail(Err::DimensionMismatch, "matrix product shape");
  QMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (is_zero(x.at(i, k))) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  for (auto& q : r.a) q.canonicalize();
  return r;
}

bool operator==(const QMat& x, const QMat& y) {
  return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pr = -1;
    for (int i = row; i < m.rows; ++i)
      if (!is_zero(m.at(i, col))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
    Q inv = canon(Q(1) / m.at(row, col));
    for (int j = col; j < m.cols; ++j) m.at(row, j) = canon(m.at(row, j) * inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || is_zero(m.at(i, col))) continue;
      Q f = m.at(i, col);
      for (int j = col; j < m.cols; ++j)
        m.at(i, j) = canon(m.at(i, j) - f * m.at(row, j));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Q>> nullspace(const QMat& m) {
  QMat r = m;
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Q>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Q> v(m.cols, Q(0));
    v[free] = Q(1);
    for (size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = canon(-r.at(static_cast<int>(k), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Q>> row_space_canonical(const std::vector<std::vector<Q>>& vecs) {
  if (vecs.empty()) return {};
  QMat m(static_cast<int>(vecs.size()), static_cast<int>(vecs[0].size()));
  for (size_t i = 0; i < vecs.size(); ++i) {
    if (vecs[i].size() != vecs[0].size())
      fail(Err::DimensionMismatch, "vectors of unequal length");
    for (size_t j = 0; j < vecs[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = vecs[i][j];
  }
  std::vector<int> pivots = rref(m);
  std::vector<std::vector<Q>> rows;
  for (size_t i = 0; i < pivots.size(); ++i) {
    std::vector<Q> v(m.cols);
    for (int j = 0; j < m.cols; ++j) v[j] = m.at(static_cast<int>(i), j);
    rows.push_back(std::move(v));
  }
  return rows;
}

bool same_subspace(const std::vector<std::vector<Q>>& u,
                   const std::vector<std::vector<Q>>& v) {
  return row_space_canonical(u) == row_space_canonical(v);
}

std::optional<std::vector<Q>> solve(const QMat& m, const std::vector<Q>& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows)
    fail(Err::DimensionMismatch, "rhs length != rows");
  QMat aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = rhs[i];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;  // 0 = 1 row
  std::vector<Q> x(m.cols, Q(0));
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(static_cast<int>(k), m.cols);
  return x;
}

QMat congruence(const QMat& a, const QMat& b) {
  if (a.rows != a.cols || a.rows != b.rows)
    fail(Err::DimensionMismatch, "congruence shape");
  return b.transposed() * a * b;
}

Inertia inertia(QMat a) {
  if (!a.is_symmetric()) fail(Err::DimensionMismatch, "inertia needs a symmetric matrix");
  Inertia in;
  std::vector<int> act(a.rows);
  for (int i = 0; i < a.rows; ++i) act[i] = i;

  while (!act.empty()) {
    int n = static_cast<int>(act.size());
    int piv = -1;
    for (int k = 0; k < n; ++k)
      if (!is_zero(a.at(act[k], act[k]))) {
        piv = k;
        break;
      }
    if (piv >= 0) {
      int p = act[piv];
      Q d = a.at(p, p);
      if (sgn(d) > 0)
        ++in.pos;
      else
        ++in.neg;
      act.erase(act.begin() + piv);
      // A <- A - (1/d) a_p a_p^T on the remaining block
      for (int i : act) {
        if (is_zero(a.at(i, p))) continue;
        Q f = canon(a.at(i, p) / d);
        for (int j : act) a.at(i, j) = canon(a.at(i, j) - f * a.at(p, j));
      }
      continue;
    }
    // all active diagonal entries are zero: look for an off-diagonal pivot
    int pi = -1, pj = -1;
    for (int i = 0; i < n && pi < 0; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!is_zero(a.at(act[i], act[j]))) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) {
      in.zero += n;  // zero block
      break;
    }
    int p = act[pi], q = act[pj];
    Q b = a.at(p, q);
    ++in.pos;
    ++in.neg;
    act.erase(act.begin() + pj);
    act.erase(act.begin() + pi);
    // hyperbolic block [[0,b],[b,0]]: A <- A - (u v^T + v u^T)/b
    for (int i : act) {
      Q u = a.at(i, p), v = a.at(i, q);
      if (is_zero(u) && is_zero(v)) continue;
      for (int j : act)
        a.at(i, j) = canon(a.at(i, j) - (u * a.at(q, j) + v * a.at(p, j)) / b);
    }
  }
  return in;
}

}  // namespace hankel
