#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <doctest.h>

#include "nilspec/matrix_io.hpp"
#include "nilspec/poly.hpp"
#include "nilspec/rational.hpp"

namespace nilspec::testing {

/// Polynomial from coefficients written highest degree first, as on paper.
inline Poly hp(std::initializer_list<Rat> highest_first) {
  std::vector<Rat> c(highest_first);
  return Poly::from_highest_first(c);
}

inline QMat diag(std::initializer_list<Rat> d) { return QMat::diagonal(d); }

}  // namespace nilspec::testing

namespace doctest {

template <>
struct StringMaker<nilspec::Rat> {
  static String convert(const nilspec::Rat& v) { return nilspec::to_string(v).c_str(); }
};

template <>
struct StringMaker<nilspec::Poly> {
  static String convert(const nilspec::Poly& p) { return p.to_string().c_str(); }
};

template <>
struct StringMaker<nilspec::QMat> {
  static String convert(const nilspec::QMat& m) { return ("\n" + nilspec::format_matrix(m)).c_str(); }
};

}  // namespace doctest
