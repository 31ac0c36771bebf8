#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nilspec/matrix.hpp"
#include "nilspec/poly.hpp"

namespace nilspec {

/// Reduced row echelon form together with its pivot columns.
struct EchelonForm {
  QMat reduced;
  std::vector<std::size_t> pivots;
};

EchelonForm rref(QMat m);

std::size_t rank(const QMat& m);

/// Basis of the right null space, returned as the columns of a matrix in
/// reduced column echelon form (its transpose is in RREF). A trivial kernel
/// gives a matrix with zero columns.
QMat kernel_basis(const QMat& m);

/// Basis of the column space in reduced column echelon form; the number of
/// columns equals rank(m).
QMat image_basis(const QMat& m);

/// Canonical reduced-column-echelon basis of the span of the columns of `m`.
QMat canonical_column_basis(const QMat& m);

Rat determinant(const QMat& m);

/// det(xI - m), monic of degree m.rows(). Uses a Hessenberg similarity
/// reduction followed by the Hessenberg determinant recurrence.
Poly char_poly(const QMat& m);

/// Inverse of a square matrix; throws std::domain_error when singular.
QMat inverse(const QMat& m);

/// Some x with a * x = b, or nothing when the system is inconsistent.
std::optional<QVec> solve(const QMat& a, std::span<const Rat> b);

/// Left inverse of a matrix with full column rank: l * m = I.
QMat left_inverse(const QMat& m);

/// Companion matrix of a monic polynomial: ones on the subdiagonal, the
/// negated coefficients in the last column. Its characteristic polynomial is p.
QMat companion(const Poly& p);

/// Polynomial evaluated at a square matrix.
QMat evaluate(const Poly& p, const QMat& m);

}  // namespace nilspec
