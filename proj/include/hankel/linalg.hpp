#ifndef HANKEL_LINALG_HPP
#define HANKEL_LINALG_HPP

#include <optional>
#include <tuple>
#include <vector>

#include "hankel/rational.hpp"

namespace hankel {

// Dense exact rational matrix, row major.
struct QMat {
  int rows = 0, cols = 0;
  std::vector<Q> a;

  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Q(0)) {}

  Q& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Q& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static QMat identity(int n);
  QMat transposed() const;
  bool is_symmetric() const;
};

QMat operator*(const QMat& x, const QMat& y);
bool operator==(const QMat& x, const QMat& y);

// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(QMat& m);

// Kernel basis of m (as vectors of length cols), one vector per free column,
// in reduced-echelon shape.
std::vector<std::vector<Q>> nullspace(const QMat& m);

// Canonical basis of the row span (RREF rows, zero rows dropped). Two lists
// of vectors span the same subspace iff their canonical bases are equal.
std::vector<std::vector<Q>> row_space_canonical(const std::vector<std::vector<Q>>& vecs);

bool same_subspace(const std::vector<std::vector<Q>>& u,
                   const std::vector<std::vector<Q>>& v);

// One particular solution of m x = rhs (free variables set to zero), or
// nullopt when inconsistent.
std::optional<std::vector<Q>> solve(const QMat& m, const std::vector<Q>& rhs);

// B^T A B for a basis given by the columns of b.
QMat congruence(const QMat& a, const QMat& b);

struct Inertia {
  int pos = 0, zero = 0, neg = 0;
  bool operator==(const Inertia&) const = default;
  bool psd() const { return neg == 0; }
  int rank() const { return pos + neg; }
};

// Exact inertia of a symmetric matrix by symmetric Gaussian elimination with
// hyperbolic 2x2 pivots for zero diagonals (Sylvester's law).
Inertia inertia(QMat a);

}  // namespace hankel

#endif
