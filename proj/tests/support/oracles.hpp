#pragma once

// Test-only reference implementations and random generators. Nothing here
// calls into the library's algorithms beyond plain data accessors, so the
// checks built on top are independent of the code under test.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nilspec/chain_complex.hpp"
#include "nilspec/lie.hpp"
#include "nilspec/matrix.hpp"
#include "nilspec/poly.hpp"

namespace nilspec::testing {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);
bool coin(Rng& rng, double p = 0.5);

QMat random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo = -4, long hi = 4);
/// Product of random elementary integer operations and sign flips: |det| = 1.
ZMat random_unimodular(Rng& rng, std::size_t n, int steps = 12);

// ---- naive exact linear algebra -------------------------------------------

std::size_t naive_rank(QMat m);
/// Leibniz expansion over all permutations (n <= 7).
Rat leibniz_det(const QMat& m);
/// Faddeev-LeVerrier recursion for det(xI - m).
Poly faddeev_leverrier(const QMat& m);
/// Compound matrix from Leibniz minors over recursively enumerated subsets.
QMat naive_compound(const QMat& m, std::size_t l);
/// Evaluates p at m by Horner's rule.
QMat poly_at(const Poly& p, const QMat& m);
QMat naive_kronecker(const QMat& a, const QMat& b);
/// Polynomial product, convolution of coefficients.
Poly multiply(const Poly& a, const Poly& b);

// ---- polynomials with known roots -----------------------------------------

/// A polynomial assembled from irreducible factors whose root moduli are known
/// in closed form, together with the distinct-root census.
struct KnownRootPoly {
  Poly p;
  std::vector<std::string> factors;  ///< human-readable, for failure messages
  int inside = 0;
  int on = 0;
  int outside = 0;
  bool zero_root = false;
  bool expanding() const { return inside == 0 && on == 0; }
  std::string describe() const;
};

/// Mixed factors: integer and small rational linear roots, complex pairs
/// (a +- bi) with integer or half-integer parts, cyclotomic factors and a few
/// quadratics with irrational real roots. Factors are distinct; one may be
/// repeated to exercise multiplicities.
KnownRootPoly random_known_root_poly(Rng& rng, int max_factors = 4);
/// Same generator restricted to factors whose roots all lie outside the disk.
KnownRootPoly random_expanding_poly(Rng& rng, int max_factors = 3, int max_degree = 5);

// ---- Lie algebras ---------------------------------------------------------

/// [X_i, X_j] coefficient on X_k for any i, j (antisymmetric extension of the
/// stored constants).
Rat structure(const LieAlgebra& g, std::size_t i, std::size_t j, std::size_t k);

struct JacobiFailure {
  std::size_t i, j, k, m;  ///< sum over cyclic (i, j, k) of [[X_i, X_j], X_k] has X_m component != 0
  Rat value;
};
/// Direct triple-sum Jacobi evaluator.
std::optional<JacobiFailure> jacobi_failure(const LieAlgebra& g);
Rat jacobi_component(const LieAlgebra& g, std::size_t i, std::size_t j, std::size_t k, std::size_t m);

/// Structure constants of g in the basis Y_k = sum_i p(i, k) X_i.
LieAlgebra change_basis(const LieAlgebra& g, const QMat& p);
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

// ---- complexes -----------------------------------------------------------

/// A cochain complex in disguise: in normal coordinates C_i = B_i (+) H_i (+) R_i
/// with d mapping R_i identically onto B_{i+1}; a random change of basis per
/// degree hides the splitting. `betti` is known by construction.
struct NormalFormComplex {
  std::vector<std::size_t> b, h, r;
  std::vector<QMat> basis;  ///< S_i, columns are the normal basis in C_i
  CochainComplex complex;
  std::vector<std::size_t> betti() const { return h; }
};
NormalFormComplex random_complex(Rng& rng, std::size_t top, std::size_t max_block = 2);

/// Random chain endomorphism of a normal-form complex: block upper triangular
/// [[M_{i-1}, X, Y], [0, N_i, Z], [0, 0, M_i]] in normal coordinates. `on_h`
/// holds the N_i, whose characteristic polynomials are those of the induced
/// maps on cohomology.
struct KnownChainMap {
  std::vector<QMat> maps;
  std::vector<QMat> on_h;
};
KnownChainMap random_chain_map(Rng& rng, const NormalFormComplex& c, long lo = -3, long hi = 3);

/// Exact A -> B1 (+) B2 -> C built by choosing phi and then psi = R K where the
/// rows of K span the annihilator of im phi and R is injective.
ExactTriple random_exact_triple(Rng& rng, std::size_t max_dim = 3);

}  // namespace nilspec::testing
