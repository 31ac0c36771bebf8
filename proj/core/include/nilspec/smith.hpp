#pragma once

#include <vector>

#include "nilspec/matrix.hpp"

namespace nilspec {

/// left * m * right = diag(diagonal), with left and right unimodular and each
/// diagonal entry dividing the next. Zero invariant factors trail.
struct SmithForm {
  std::vector<Integer> diagonal;
  ZMat left;
  ZMat right;
};

SmithForm smith_normal_form(const ZMat& m);

/// Exact integer determinant (fraction-free Bareiss elimination).
Integer determinant(const ZMat& m);

}  // namespace nilspec
