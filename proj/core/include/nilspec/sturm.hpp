#pragma once

#include <vector>

#include "nilspec/poly.hpp"

namespace nilspec {

/// Half-open rational interval (lo, hi].
struct Interval {
  Rat lo;
  Rat hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Sturm sequence p0 = p, p1 = p', p(k+1) = -rem(p(k-1), p(k)) of a
/// square-free polynomial. Sign variations at a and b bound the distinct real
/// roots in (a, b] exactly.
class SturmChain {
 public:
  /// Builds the chain of the square-free part of `p`; `p` must be nonzero.
  explicit SturmChain(const Poly& p);

  const std::vector<Poly>& sequence() const { return chain_; }
  const Poly& base() const { return chain_.front(); }

  int variations_at(const Rat& x) const;
  int variations_at_infinity(bool negative_infinity) const;

  /// Number of distinct real roots in (lo, hi].
  int count_roots(const Rat& lo, const Rat& hi) const;
  int count_real_roots() const;

  /// Disjoint intervals in (lo, hi], each containing exactly one root.
  std::vector<Interval> isolate(const Rat& lo, const Rat& hi) const;

 private:
  std::vector<Poly> chain_;
};

}  // namespace nilspec
