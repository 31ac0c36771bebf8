#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nilspec/matrix.hpp"
#include "nilspec/poly.hpp"

namespace nilspec {

/// Strictly increasing 0-based index tuple (i1 < ... < il).
using IndexTuple = std::vector<std::size_t>;

/// Basis e_I of the degree-l exterior power of an n-dimensional space, one
/// element per strictly increasing tuple I, in lexicographic order. Every
/// module indexes exterior powers through this ordering.
class ExteriorBasis {
 public:
  ExteriorBasis(std::size_t ambient, std::size_t degree);

  std::size_t ambient() const { return ambient_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return tuples_.size(); }
  const IndexTuple& operator[](std::size_t k) const { return tuples_[k]; }
  const std::vector<IndexTuple>& tuples() const { return tuples_; }

  /// Position of a strictly increasing tuple; throws std::out_of_range if absent.
  std::size_t index_of(const IndexTuple& tuple) const;

 private:
  std::size_t ambient_;
  std::size_t degree_;
  std::vector<IndexTuple> tuples_;
};

std::size_t binomial(std::size_t n, std::size_t k);

/// 1-based display of a tuple, e.g. "x1^x3".
std::string tuple_name(const IndexTuple& tuple);

/// Sorts `tuple` in place by adjacent swaps; returns the permutation sign, or
/// 0 when an index repeats.
int sort_with_sign(IndexTuple& tuple);

/// Matrix of the dual map in dual bases: the transpose.
QMat dual_map(const QMat& m);

QMat kronecker(const QMat& a, const QMat& b);

/// l-th compound matrix: entry (I, J) is the minor det m[I, J] with I, J
/// running over ExteriorBasis(n, l). Degree 0 gives the 1x1 identity.
/// Throws std::out_of_range for l > n.
QMat exterior_power(const QMat& m, std::size_t degree);

/// Distinct rational roots of p with multiplicities, when p splits over Q.
std::optional<std::vector<Rat>> rational_roots_if_split(const Poly& p);

struct ExteriorSpectrumReport {
  bool applicable = false;       ///< char_poly(m) splits over Q
  bool confirmed = false;        ///< multisets agree
  std::vector<Rat> base_roots;   ///< roots of char_poly(m)
  std::vector<Rat> predicted;    ///< products over l-element index subsets
  Poly exterior_char_poly;
  std::string message;
};

/// Brute-force check that the roots of char_poly(exterior_power(m, l)) are
/// exactly the products of l roots of char_poly(m) over distinct index
/// subsets. Only applicable when char_poly(m) splits over Q.
ExteriorSpectrumReport char_poly_exterior_check(const QMat& m, std::size_t degree);

}  // namespace nilspec
