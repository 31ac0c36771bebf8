#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilspec/matrix.hpp"
#include "nilspec/spectra.hpp"

namespace nilspec {

/// Raised when d(i+1) * d(i) != 0 or differential shapes disagree with dims.
class ComplexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bounded cochain complex C_0 -> C_1 -> ... -> C_top over Q.
/// differential(i) is the dims[i+1] x dims[i] matrix of d_i : C_i -> C_{i+1}.
class CochainComplex {
 public:
  /// `differentials.size()` must be `dims.size() - 1` (empty dims are rejected).
  CochainComplex(std::vector<std::size_t> dims, std::vector<QMat> differentials);

  /// All differentials zero.
  static CochainComplex with_zero_differentials(std::vector<std::size_t> dims);

  std::size_t top_degree() const { return dims_.size() - 1; }
  std::size_t dim(std::size_t degree) const { return dims_.at(degree); }
  const std::vector<std::size_t>& dims() const { return dims_; }

  /// d_i; for i = top the zero map to the (zero) space above is returned.
  QMat differential(std::size_t degree) const;
  /// d_{i-1}; the zero map from the zero space when i = 0.
  QMat incoming(std::size_t degree) const;

  long euler_characteristic() const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<QMat> diffs_;
};

/// Per-degree square matrices commuting with the differentials.
class ChainEndomorphism {
 public:
  ChainEndomorphism(CochainComplex complex, std::vector<QMat> maps);

  const CochainComplex& complex() const { return complex_; }
  const QMat& map(std::size_t degree) const { return maps_.at(degree); }
  const std::vector<QMat>& maps() const { return maps_; }

  /// Degreewise product (this after other); both must share the complex.
  ChainEndomorphism compose(const ChainEndomorphism& other) const;

 private:
  CochainComplex complex_;
  std::vector<QMat> maps_;
};

/// Cohomology in one degree: columns of `representatives` are cocycles whose
/// classes form a basis of H^i; `projection` maps a cocycle to its
/// coordinates in that basis.
struct CohomologyDegree {
  std::size_t dimension = 0;
  QMat representatives;  ///< dim C_i x dimension
  QMat projection;       ///< dimension x dim C_i (valid on cocycles)
  QMat cocycles;         ///< basis of ker d_i
  QMat coboundaries;     ///< basis of im d_{i-1}
};

/// Representatives are the cocycle basis vectors (reduced column echelon
/// basis of ker d_i) not in the span of the preceding coboundary basis
/// vectors, picked greedily in order, so the output is deterministic.
std::vector<CohomologyDegree> cohomology(const CochainComplex& c);

std::vector<std::size_t> betti_numbers(const CochainComplex& c);

/// Matrix of the induced map on each H^i in the bases chosen by cohomology().
std::vector<QMat> induced_on_cohomology(const ChainEndomorphism& f);
std::vector<QMat> induced_on_cohomology(const ChainEndomorphism& f,
                                        const std::vector<CohomologyDegree>& h);

struct DegreeExpansion {
  std::size_t degree = 0;
  ExpansionVerdict cochain;     ///< verdict for f_i on C_i
  ExpansionVerdict cohomology;  ///< verdict for the induced map on H^i
  QMat induced;
};

struct ChainExpansionReport {
  std::vector<DegreeExpansion> degrees;  ///< positive degrees only
  bool hypothesis_holds = false;         ///< every f_i (i > 0) expanding
  bool conclusion_holds = false;         ///< every induced map (i > 0) expanding
  /// Hypothesis true while conclusion false; never expected.
  bool contradiction() const { return hypothesis_holds && !conclusion_holds; }
};

/// Checks, per positive degree, whether f_i is expanding and whether the
/// induced cohomology map is expanding. Degree 0 is not examined.
ChainExpansionReport chain_exp_check(const ChainEndomorphism& f);

/// A -> B1 (+) B2 -> C with phi = (i1, i2) and psi = j1 - j2.
struct ExactTriple {
  QMat i1;  ///< A -> B1
  QMat i2;  ///< A -> B2
  QMat j1;  ///< B1 -> C
  QMat j2;  ///< B2 -> C

  QMat phi() const;
  QMat psi() const;
};

struct MapProperties {
  bool injective = false;
  bool surjective = false;
  std::size_t rank = 0;
  std::size_t domain = 0;
  std::size_t codomain = 0;
};

struct Implication {
  std::string label;  ///< "a" .. "d", and "e.a" .. "e.d" for the swapped pair
  std::string statement;
  bool premise = false;
  bool conclusion = false;
  bool violated() const { return premise && !conclusion; }
};

struct ExactTripleReport {
  MapProperties i1, i2, j1, j2, phi, psi;
  std::vector<Implication> implications;
  bool any_violation() const;
};

/// Rejects (ComplexError) triples that fail psi * phi = 0 or
/// rank phi + rank psi = dim B1 + dim B2; otherwise evaluates the injectivity
/// and surjectivity implications for both (i1, j2) and (i2, j1).
ExactTripleReport exact_triple_analyze(const ExactTriple& t);

MapProperties map_properties(const QMat& m);

}  // namespace nilspec
