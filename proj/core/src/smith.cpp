#include "nilspec/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace nilspec {
namespace {

struct Work {
  ZMat a, left, right;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < left.cols(); ++c) std::swap(left(i, c), left(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < right.rows(); ++r) std::swap(right(r, i), right(r, j));
  }
  // row_dst += k * row_src
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) += k * a(src, c);
    for (std::size_t c = 0; c < left.cols(); ++c) left(dst, c) += k * left(src, c);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) += k * a(r, src);
    for (std::size_t r = 0; r < right.rows(); ++r) right(r, dst) += k * right(r, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < left.cols(); ++c) left(i, c) = -left(i, c);
  }
};

// Smallest nonzero entry (by magnitude) in row t / column t beyond the pivot.
std::optional<std::pair<std::size_t, std::size_t>> smallest_in_cross(const ZMat& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  auto consider = [&](std::size_t i, std::size_t j) {
    if (a(i, j) == 0) return;
    Integer v = abs(a(i, j));
    if (!best || v < best_abs) {
      best = {i, j};
      best_abs = v;
    }
  };
  consider(t, t);
  for (std::size_t i = t + 1; i < a.rows(); ++i) consider(i, t);
  for (std::size_t j = t + 1; j < a.cols(); ++j) consider(t, j);
  return best;
}

}  // namespace

SmithForm smith_normal_form(const ZMat& m) {
  Work w{m, ZMat::identity(m.rows()), ZMat::identity(m.cols())};
  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    // Global magnitude pivot for this step.
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    Integer pivot_abs;
    for (std::size_t i = t; i < m.rows(); ++i)
      for (std::size_t j = t; j < m.cols(); ++j) {
        if (w.a(i, j) == 0) continue;
        Integer v = abs(w.a(i, j));
        if (!pivot || v < pivot_abs) {
          pivot = {i, j};
          pivot_abs = v;
        }
      }
    if (!pivot) break;
    w.swap_rows(t, pivot->first);
    w.swap_cols(t, pivot->second);

    for (;;) {
      const auto small = smallest_in_cross(w.a, t);
      w.swap_rows(t, small->first);
      w.swap_cols(t, small->second);
      bool dirty = false;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (w.a(i, t) == 0) continue;
        Integer q = w.a(i, t) / w.a(t, t);
        w.add_row(i, t, -q);
        if (w.a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (w.a(t, j) == 0) continue;
        Integer q = w.a(t, j) / w.a(t, t);
        w.add_col(j, t, -q);
        if (w.a(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // Pivot now isolated; enforce divisibility of the remaining block.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < m.rows() && !offender; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j) {
          if (w.a(i, j) % w.a(t, t) != 0) {
            offender = i;
            break;
          }
        }
      if (!offender) break;
      w.add_row(t, *offender, Integer(1));
    }
    if (w.a(t, t) < 0) w.negate_row(t);
  }

  SmithForm out;
  out.diagonal.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal.push_back(w.a(t, t));
  out.left = std::move(w.left);
  out.right = std::move(w.right);
  return out;
}

Integer determinant(const ZMat& input) {
  if (!input.is_square()) throw ShapeError("determinant of non-square matrix");
  ZMat m = input;
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace nilspec
