#pragma once

#include <string>
#include <vector>

#include "nilspec/matrix.hpp"
#include "nilspec/poly.hpp"
#include "nilspec/sturm.hpp"

namespace nilspec {

enum class Verdict { Expanding, NotExpanding };

/// Why a verdict was reached. `Certified` accompanies every Expanding verdict.
enum class VerdictReason {
  Certified,
  ZeroRoot,
  RootOnUnitCircle,
  RootInsideDisk,
  DeterminantTooSmall,
};

const char* to_string(Verdict v);
const char* to_string(VerdictReason r);

/// Outcome of the exact unit-disk decision. All root counts refer to distinct
/// complex roots of the square-free part of the input.
///
/// Unit-circle evidence: roots at +1 / -1 are listed in `circle_real_roots`.
/// Any other circle roots come from the self-reciprocal factor `circle_factor`
/// of degree 2m, written as x^m * trace_poly(x + 1/x); every interval in
/// `trace_intervals` lies inside (-2, 2) and isolates one real root of
/// `trace_poly`, i.e. one conjugate pair exp(+-i t) on the circle.
///
/// Inside-disk evidence: `reciprocal_factor` is gcd(p, reverse p) with its
/// circle roots removed; each of its roots comes with its inverse, so a
/// nonconstant factor forces a root inside. The coprime remainder is counted
/// by the inertia of its Schur-Cohn matrix (`schur_cohn_inside`).
struct ExpansionVerdict {
  Verdict verdict = Verdict::NotExpanding;
  VerdictReason reason = VerdictReason::Certified;

  Poly analysed;  ///< monic square-free part of the input
  int degree = 0;
  int inside_count = 0;
  int circle_count = 0;
  int outside_count = 0;

  std::vector<int> circle_real_roots;
  Poly circle_factor;
  Poly trace_poly;
  std::vector<Interval> trace_intervals;

  Poly reciprocal_factor;
  int schur_cohn_inside = 0;

  /// |constant term / leading coefficient| of the input, i.e. |product of roots|
  /// with multiplicity.
  Rat determinant_modulus;

  bool expanding() const { return verdict == Verdict::Expanding; }

  /// One-line human summary, e.g. "NotExpanding (RootInsideDisk: 1 inside, ...)".
  std::string describe() const;
};

/// Decides whether every complex root of `p` satisfies |root| > 1.
/// Throws std::invalid_argument for the zero polynomial.
ExpansionVerdict is_expanding_poly(const Poly& p);

/// is_expanding_poly(char_poly(m)); throws ShapeError for non-square input.
ExpansionVerdict is_expanding_matrix(const QMat& m);

/// Re-derives the recorded evidence from `p` without trusting the pipeline:
/// divisibility of the recorded factors, the trace substitution identity,
/// sign changes across each isolating interval and the reciprocal pairing.
/// Returns an empty string when the evidence holds, otherwise a description
/// of the first failed check.
std::string check_evidence(const Poly& p, const ExpansionVerdict& v);

/// Monic polynomial whose roots are all products lambda_i * mu_j of a root of
/// `p` and a root of `q`, computed as the resultant
/// Res_y(p(y), y^deg(q) q(x/y)). Both inputs must be monic.
Poly eigen_product_multiset(const Poly& p, const Poly& q);

/// Symmetric Schur-Cohn matrix of p: with p*(z) = z^n p(1/z), the form
/// (p*(z)p*(w) - p(z)p(w)) / (1 - zw). When p and p* are coprime, its
/// positive/negative inertia equals the number of roots inside/outside the
/// unit disk.
QMat schur_cohn_matrix(const Poly& p);

/// Number of positive eigenvalues of a symmetric rational matrix, by exact
/// symmetric elimination (congruence preserves inertia).
int positive_inertia(const QMat& symmetric);

/// Unique polynomial of degree < xs.size() through the points (xs[i], ys[i]).
Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

}  // namespace nilspec
