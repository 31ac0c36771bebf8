#include "nilspec/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace nilspec {

EchelonForm rref(QMat m) {
  EchelonForm out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    const Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rat f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const QMat& m) { return rref(m).pivots.size(); }

QMat canonical_column_basis(const QMat& m) {
  const auto ech = rref(m.transpose());
  const std::size_t k = ech.pivots.size();
  return ech.reduced.block(0, 0, k, m.rows()).transpose();
}

QMat image_basis(const QMat& m) { return canonical_column_basis(m); }

QMat kernel_basis(const QMat& m) {
  const auto ech = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<QVec> vectors;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    QVec v(n, Rat(0));
    v[f] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, f);
    vectors.push_back(std::move(v));
  }
  if (vectors.empty()) return QMat(n, 0);
  return canonical_column_basis(QMat::from_columns(n, vectors));
}

Rat determinant(const QMat& input) {
  if (!input.is_square()) throw ShapeError("determinant of non-square matrix");
  QMat m = input;
  const std::size_t n = m.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rat f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Poly char_poly(const QMat& input) {
  if (!input.is_square()) throw ShapeError("characteristic polynomial of non-square matrix");
  QMat h = input;
  const std::size_t n = h.rows();
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h(i, j) == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, j + 1));
    }
    for (std::size_t k = j + 2; k < n; ++k) {
      if (h(k, j) == 0) continue;
      const Rat u = h(k, j) / h(j + 1, j);
      for (std::size_t c = 0; c < n; ++c) h(k, c) -= u * h(j + 1, c);
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) += u * h(r, k);
    }
  }
  // p[m] = det(xI - H[0..m, 0..m]).
  std::vector<Poly> p;
  p.reserve(n + 1);
  p.push_back(Poly::constant(1));
  for (std::size_t m = 1; m <= n; ++m) {
    Poly next = Poly{-h(m - 1, m - 1), 1} * p[m - 1];
    Rat t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t *= h(i, i - 1);
      if (t == 0) break;
      if (h(i - 1, m - 1) != 0) next -= (h(i - 1, m - 1) * t) * p[i - 1];
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

QMat inverse(const QMat& m) {
  if (!m.is_square()) throw ShapeError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  auto ech = rref(hconcat(m, QMat::identity(n)));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) {
    throw std::domain_error("matrix is singular");
  }
  return ech.reduced.block(0, n, n, n);
}

std::optional<QVec> solve(const QMat& a, std::span<const Rat> b) {
  if (b.size() != a.rows()) throw ShapeError("right-hand side length mismatch");
  QMat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto ech = rref(std::move(aug));
  QVec x(a.cols(), Rat(0));
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] == a.cols()) return std::nullopt;
    x[ech.pivots[r]] = ech.reduced(r, a.cols());
  }
  return x;
}

QMat left_inverse(const QMat& m) {
  const QMat mt = m.transpose();
  return inverse(mt * m) * mt;
}

QMat companion(const Poly& p) {
  if (p.degree() < 1 || p.leading() != 1) {
    throw std::invalid_argument("companion matrix needs a monic polynomial of degree >= 1");
  }
  const std::size_t n = static_cast<std::size_t>(p.degree());
  QMat c(n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(i);
  return c;
}

QMat evaluate(const Poly& p, const QMat& m) {
  if (!m.is_square()) throw ShapeError("polynomial evaluated at non-square matrix");
  QMat acc(m.rows(), m.cols());
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * m;
    const Rat& c = p.coeffs()[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += c;
  }
  return acc;
}

}  // namespace nilspec
