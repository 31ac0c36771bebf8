#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nilspec/chain_complex.hpp"
#include "nilspec/matrix.hpp"
#include "nilspec/multilinear.hpp"
#include "nilspec/spectra.hpp"

namespace nilspec {

/// Finite-dimensional Lie algebra over Q in a basis X_1..X_n, given by the
/// structure constants [X_i, X_j] = sum_k c_ij^k X_k for i < j only; the
/// bracket is antisymmetrized from them. Indices are 0-based in the API and
/// 1-based in text.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t dimension);

  static LieAlgebra abelian(std::size_t n);
  /// Heisenberg algebra of dimension 2m+1: [X_i, X_{m+i}] = X_{2m+1}.
  static LieAlgebra heisenberg(std::size_t m);
  /// Standard filiform algebra: [X_1, X_k] = X_{k+1} for k = 2..n-1.
  static LieAlgebra filiform(std::size_t n);

  std::size_t dimension() const { return dim_; }

  /// Sets c_ij^k; requires i < j < n and k < n.
  void set_constant(std::size_t i, std::size_t j, std::size_t k, const Rat& value);
  Rat constant(std::size_t i, std::size_t j, std::size_t k) const;

  /// [X_i, X_j] for any i, j (antisymmetric, zero on the diagonal).
  QVec bracket(std::size_t i, std::size_t j) const;
  /// Bilinear extension to coordinate vectors.
  QVec bracket(const QVec& u, const QVec& v) const;

  /// Nonzero structure constants keyed by (i, j), i < j.
  const std::map<std::pair<std::size_t, std::size_t>, QVec>& constants() const { return constants_; }

 private:
  std::size_t dim_;
  std::map<std::pair<std::size_t, std::size_t>, QVec> constants_;
};

/// Lie algebra text format:
///   # comment
///   dim n
///   i j k c        (c_ij^k = c, 1-based, i < j; omitted entries are zero)
LieAlgebra read_lie_algebra(std::istream& in, const std::string& source = "<input>");
LieAlgebra read_lie_algebra_file(const std::filesystem::path& path);
LieAlgebra parse_lie_algebra(std::string_view text, const std::string& source = "<string>");
std::string format_lie_algebra(const LieAlgebra& g);

/// delta^2 != 0 on the Chevalley-Eilenberg complex, i.e. the Jacobi identity
/// fails. The witness is the entry of d_{degree+1} * d_degree at
/// (row tuple, column tuple). For degree 1 the row tuple is the triple
/// (i, j, k) and the column tuple the generator x_m.
class JacobiViolation : public std::invalid_argument {
 public:
  JacobiViolation(std::size_t degree, IndexTuple row, IndexTuple column, Rat value);

  std::size_t degree() const { return degree_; }
  const IndexTuple& row() const { return row_; }
  const IndexTuple& column() const { return column_; }
  const Rat& value() const { return value_; }

 private:
  std::size_t degree_;
  IndexTuple row_;
  IndexTuple column_;
  Rat value_;
};

/// Chevalley-Eilenberg complex on the exterior algebra of g*, degrees 0..n,
/// C_l spanned by x_I (I from ExteriorBasis(n, l)).
///
/// On generators: delta x_k = - sum_{i<j} c_ij^k x_i ^ x_j.
/// Extension: delta is an antiderivation of degree +1,
///   delta(a ^ b) = delta(a) ^ b + (-1)^|a| a ^ delta(b),
/// so delta(x_{i1} ^ ... ^ x_{il}) = sum_s (-1)^(s-1) x_{i1} ^ .. ^ delta(x_{is}) ^ .. ^ x_{il}.
/// Cohomology dimensions do not depend on this sign convention; induced-map
/// matrices do.
///
/// Throws JacobiViolation when delta^2 != 0.
CochainComplex ce_complex(const LieAlgebra& g);

/// Differentials without the delta^2 check (for diagnostics and tests).
std::vector<QMat> ce_differentials(const LieAlgebra& g);

std::vector<std::size_t> betti(const LieAlgebra& g);

class AutomorphismError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotInvertible : public AutomorphismError {
 public:
  NotInvertible();
};

/// [a X_i, a X_j] != a [X_i, X_j]; `residual` is the difference of the two
/// sides (left minus right) in X-coordinates. Indices are 0-based.
class NotBracketPreserving : public AutomorphismError {
 public:
  NotBracketPreserving(std::size_t i, std::size_t j, QVec lhs, QVec rhs);

  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  const QVec& lhs() const { return lhs_; }
  const QVec& rhs() const { return rhs_; }
  QVec residual() const;

 private:
  std::size_t i_, j_;
  QVec lhs_, rhs_;
};

/// Invertible bracket-preserving linear map of g; column k of `matrix()` is
/// the image of X_k. Only obtainable through check_automorphism. Integrality
/// (needed for the map to descend to a nilmanifold) is not checked.
class LieAutomorphism {
 public:
  const LieAlgebra& algebra() const { return algebra_; }
  const QMat& matrix() const { return matrix_; }

 private:
  friend LieAutomorphism check_automorphism(const LieAlgebra& g, const QMat& a);
  LieAutomorphism(LieAlgebra g, QMat a) : algebra_(std::move(g)), matrix_(std::move(a)) {}

  LieAlgebra algebra_;
  QMat matrix_;
};

/// Throws ShapeError (wrong size), NotInvertible or NotBracketPreserving
/// (first offending pair in lexicographic (i, j) order).
LieAutomorphism check_automorphism(const LieAlgebra& g, const QMat& a);

/// Pullback a* on the CE complex: degree l acts by exterior_power(a^T, l).
/// The chain-map identity is verified; a failure throws std::logic_error.
ChainEndomorphism induced_ce_endomorphism(const LieAutomorphism& aut);

struct CertificateDegree {
  std::size_t degree = 0;
  std::size_t dimension = 0;
  QMat induced;             ///< matrix of a* on H^l in the cohomology() basis
  Poly char_poly;
  ExpansionVerdict verdict;
  QMat representatives;     ///< cocycle representatives of the basis classes
};

struct ExpansionCertificate {
  ExpansionVerdict automorphism_verdict;
  std::vector<std::size_t> betti;
  std::vector<CertificateDegree> degrees;  ///< l = 1..n
  /// The automorphism is expanding yet some positive degree is not.
  bool alarm = false;
  bool all_expanding() const;

  /// Recomputes every verdict from the stored matrices; true when they agree.
  bool reproducible() const;
};

ExpansionCertificate certify_expanding_on_cohomology(const LieAutomorphism& aut);

/// Characteristic polynomials of the homology-side maps f_* on H_l, l = 0..n,
/// computed on the dual chain complex (transposed differentials, transposed
/// maps) independently of the cohomology bases.
std::vector<Poly> homology_char_polys(const LieAutomorphism& aut);

}  // namespace nilspec
