#include "nilspec/intertwiner.hpp"

#include "nilspec/linalg.hpp"
#include "nilspec/smith.hpp"

namespace nilspec {

NotExpandingError::NotExpandingError(ExpansionVerdict v)
    : std::invalid_argument("f is not expanding: " + v.describe()), verdict_(std::move(v)) {}

NotUnimodularError::NotUnimodularError(Integer det)
    : std::invalid_argument("g is not unimodular: det g = " + det.get_str()), det_(std::move(det)) {}

std::vector<QMat> intertwiner_space(const QMat& f, const QMat& g) {
  if (!f.is_square() || !g.is_square()) throw ShapeError("intertwiners need square f and g");
  const std::size_t n = f.rows(), m = g.rows();
  // vec(h f) = (f^T (x) I_m) vec(h); vec(g h) = (I_n (x) g) vec(h), column-major.
  // Index of h(i, j) in vec(h) is j * m + i.
  QMat system(m * n, m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = j * m + i;
      // (h f)(i, j) = sum_k h(i, k) f(k, j)
      for (std::size_t k = 0; k < n; ++k) system(row, k * m + i) += f(k, j);
      // (g h)(i, j) = sum_k g(i, k) h(k, j)
      for (std::size_t k = 0; k < m; ++k) system(row, j * m + k) -= g(i, k);
    }
  const QMat kernel = kernel_basis(system);
  std::vector<QMat> out;
  out.reserve(kernel.cols());
  for (std::size_t c = 0; c < kernel.cols(); ++c) {
    QMat h(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) = kernel(j * m + i, c);
    out.push_back(std::move(h));
  }
  return out;
}

IntertwinerCheck verify_no_intertwiner(const ZMat& f, const ZMat& g) {
  if (!f.is_square() || !g.is_square()) throw ShapeError("intertwiners need square f and g");
  const QMat fq = to_rational(f);
  auto verdict = is_expanding_matrix(fq);
  if (!verdict.expanding()) throw NotExpandingError(std::move(verdict));
  Integer det = determinant(g);
  if (abs(det) != 1) throw NotUnimodularError(std::move(det));

  IntertwinerCheck out;
  auto space = intertwiner_space(fq, to_rational(g));
  out.confirmed = space.empty();
  if (!space.empty()) out.witness = std::move(space.front());
  return out;
}

}  // namespace nilspec
