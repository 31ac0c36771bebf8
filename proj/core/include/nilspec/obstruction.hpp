#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace nilspec {

class InvalidBettiVector : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Betti numbers b_0..b_p of a closed oriented p-manifold: b_0 = b_p = 1 and
/// b_i = b_{p-i}. Inputs breaking these are rejected.
class BettiVector {
 public:
  explicit BettiVector(std::vector<std::size_t> values);

  /// Betti numbers of the d-torus: binomial(d, i).
  static BettiVector torus(std::size_t d);
  /// Rational homology d-sphere: (1, 0, ..., 0, 1).
  static BettiVector sphere(std::size_t d);
  static BettiVector all_ones(std::size_t d);

  std::size_t dimension() const { return values_.size() - 1; }
  /// b_l, zero outside 0..p.
  std::size_t at(long l) const;
  const std::vector<std::size_t>& values() const { return values_; }

  std::string to_string() const;
  friend bool operator==(const BettiVector&, const BettiVector&) = default;

 private:
  std::vector<std::size_t> values_;
};

/// Betti numbers of the boundary sphere bundle of an oriented q-disk bundle
/// over X with vanishing Euler class: b_l(dN) = b_l(X) + b_{l-q+1}(X).
/// The result has length p + q (a closed (p+q-1)-manifold). Throws
/// std::invalid_argument for q < 2.
BettiVector gysin_boundary_betti(const BettiVector& base, std::size_t q);

class InvalidAttractorSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two attractors of types (p1, q1), (p2, q2) in an ambient closed oriented
/// n-manifold with p_j + q_j = n, with Betti vectors of the bases X_1, X_2.
struct AttractorPairSpec {
  std::size_t n = 0;
  std::size_t q1 = 0;
  std::size_t q2 = 0;
  BettiVector x1 = BettiVector({1});
  BettiVector x2 = BettiVector({1});

  std::size_t p1() const { return n - q1; }
  std::size_t p2() const { return n - q2; }

  /// Builds and validates: q_j >= 2, p_j >= 1, length of x_j = p_j + 1.
  static AttractorPairSpec make(std::size_t n, std::size_t q1, std::size_t q2, BettiVector x1,
                                BettiVector x2);
  void validate() const;
};

/// Dimension count for surjectivity of H_l(dN_2) -> H_l(N_1) (+) H_l(N_2).
struct SurjectivityGap {
  long degree = 0;
  std::size_t boundary_dim = 0;   ///< dim H_l(dN_2) = b_l(X2) + b_{l-q2+1}(X2)
  std::size_t kernel_dim = 0;     ///< dim of the fibre-class subspace forced into the kernel (q2 >= 3)
  std::size_t image_bound = 0;    ///< boundary_dim - kernel_dim
  std::size_t target_dim = 0;     ///< b_l(X1) + b_l(X2)
  bool kernel_bound_applies = false;
  bool impossible = false;        ///< image_bound < target_dim
};

SurjectivityGap mv_surjectivity_gap(const AttractorPairSpec& spec, long degree);

/// One link b_{l-1}(X_a) >= b_l(X_b) of the Case-2 inequality chain.
struct ChainInequality {
  long degree = 0;
  int lhs_base = 0;  ///< 1 or 2
  int rhs_base = 0;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  bool holds() const { return lhs >= rhs; }
  std::string to_string() const;
};

struct Case1Contradiction {
  long degree = 0;                     ///< l = p1 after ordering q1 <= q2
  SurjectivityGap gap;
  std::vector<long> witness_degrees;   ///< every degree with an impossible count
  bool swapped = false;                ///< the input was relabelled so that q1 <= q2
};

struct SphereForced {
  BettiVector manifold_betti = BettiVector({1});
  std::vector<ChainInequality> chain;
};

struct InputInconsistent {
  std::string reason;
  std::optional<long> degree;
  std::optional<ChainInequality> failed;
};

using ObstructionVerdict = std::variant<Case1Contradiction, SphereForced, InputInconsistent>;

const char* verdict_tag(const ObstructionVerdict& v);

/// Replays the Mayer-Vietoris dimension argument. After relabelling so that
/// q1 <= q2: if q2 >= 3, the count at l = p1 is contradictory; if
/// q1 = q2 = 2, the boundary Betti vectors must agree and the chain
/// b_{l-1}(X1) >= b_l(X2), b_{l-1}(X2) >= b_l(X1), l = 1..n-2, must hold,
/// which forces every b_i(X_j) = 1 and M to be a rational homology sphere.
ObstructionVerdict sphere_theorem_check(const AttractorPairSpec& spec);

struct ToricReport {
  std::size_t n = 0;
  std::size_t boundary_b1 = 0;  ///< b_1 of the common boundary, n - 1
  std::size_t target_b1 = 0;    ///< b_1(N1) + b_1(N2) = 2(n - 2)
  bool impossible = false;      ///< boundary_b1 < target_b1
};

/// Torus bases T^{n-2} with 2-disk fibres. Throws std::invalid_argument for n < 3.
ToricReport toric_corollary_check(std::size_t n);

}  // namespace nilspec
