#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "nilspec/matrix.hpp"
#include "nilspec/spectra.hpp"

namespace nilspec {

/// Basis of { h (m x n) : h f = g h } for square f (n x n) and g (m x m),
/// obtained from the kernel of (f^T (x) I_m - I_n (x) g) acting on the
/// column-major vectorization of h. An empty result means only h = 0.
std::vector<QMat> intertwiner_space(const QMat& f, const QMat& g);

class NotExpandingError : public std::invalid_argument {
 public:
  explicit NotExpandingError(ExpansionVerdict v);
  const ExpansionVerdict& verdict() const { return verdict_; }

 private:
  ExpansionVerdict verdict_;
};

class NotUnimodularError : public std::invalid_argument {
 public:
  explicit NotUnimodularError(Integer det);
  const Integer& det() const { return det_; }

 private:
  Integer det_;
};

/// Result of checking that no nonzero homomorphism intertwines an expanding
/// integer endomorphism with an integer automorphism.
struct IntertwinerCheck {
  bool confirmed = false;         ///< the intertwiner space is {0}
  std::optional<QMat> witness;    ///< a nonzero h with h f = g h, if one exists
};

/// Throws NotExpandingError when f is not expanding and NotUnimodularError
/// when |det g| != 1; both matrices must be square.
IntertwinerCheck verify_no_intertwiner(const ZMat& f, const ZMat& g);

}  // namespace nilspec
