#include "nilspec/obstruction.hpp"

#include <sstream>

#include "nilspec/multilinear.hpp"

namespace nilspec {

BettiVector::BettiVector(std::vector<std::size_t> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidBettiVector("Betti vector must be non-empty");
  const std::size_t p = values_.size() - 1;
  if (values_.front() != 1) throw InvalidBettiVector("b_0 must be 1 (connected), got " + to_string());
  if (values_.back() != 1) throw InvalidBettiVector("b_p must be 1 (closed oriented), got " + to_string());
  for (std::size_t i = 0; i <= p; ++i) {
    if (values_[i] != values_[p - i]) {
      throw InvalidBettiVector("Poincare duality fails: b_" + std::to_string(i) + " != b_" +
                               std::to_string(p - i) + " in " + to_string());
    }
  }
}

BettiVector BettiVector::torus(std::size_t d) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i <= d; ++i) v.push_back(binomial(d, i));
  return BettiVector(std::move(v));
}

BettiVector BettiVector::sphere(std::size_t d) {
  std::vector<std::size_t> v(d + 1, 0);
  v.front() = 1;
  v.back() = 1;
  return BettiVector(std::move(v));
}

BettiVector BettiVector::all_ones(std::size_t d) {
  return BettiVector(std::vector<std::size_t>(d + 1, 1));
}

std::size_t BettiVector::at(long l) const {
  if (l < 0 || l > static_cast<long>(dimension())) return 0;
  return values_[static_cast<std::size_t>(l)];
}

std::string BettiVector::to_string() const {
  std::string out;
  for (auto v : values_) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

BettiVector gysin_boundary_betti(const BettiVector& base, std::size_t q) {
  if (q < 2) throw std::invalid_argument("fibre disk dimension q must be >= 2, got " + std::to_string(q));
  const std::size_t len = base.dimension() + q;
  std::vector<std::size_t> out(len);
  const long shift = static_cast<long>(q) - 1;
  for (std::size_t l = 0; l < len; ++l) {
    const long ll = static_cast<long>(l);
    out[l] = base.at(ll) + base.at(ll - shift);
  }
  return BettiVector(std::move(out));
}

AttractorPairSpec AttractorPairSpec::make(std::size_t n, std::size_t q1, std::size_t q2, BettiVector x1,
                                          BettiVector x2) {
  AttractorPairSpec s;
  s.n = n;
  s.q1 = q1;
  s.q2 = q2;
  s.x1 = std::move(x1);
  s.x2 = std::move(x2);
  s.validate();
  return s;
}

void AttractorPairSpec::validate() const {
  for (int j = 1; j <= 2; ++j) {
    const std::size_t q = j == 1 ? q1 : q2;
    const BettiVector& x = j == 1 ? x1 : x2;
    const std::string tag = std::to_string(j);
    if (q < 2) throw InvalidAttractorSpec("q" + tag + " must be >= 2 (no attractors of type (p,1))");
    if (q >= n) throw InvalidAttractorSpec("p" + tag + " = n - q" + tag + " must be >= 1");
    if (x.dimension() != n - q) {
      throw InvalidAttractorSpec("Betti vector of X" + tag + " has length " + std::to_string(x.dimension() + 1) +
                                 ", expected p" + tag + " + 1 = " + std::to_string(n - q + 1));
    }
  }
}

SurjectivityGap mv_surjectivity_gap(const AttractorPairSpec& spec, long degree) {
  spec.validate();
  SurjectivityGap g;
  g.degree = degree;
  const long shift = static_cast<long>(spec.q2) - 1;
  g.boundary_dim = spec.x2.at(degree) + spec.x2.at(degree - shift);
  g.kernel_bound_applies = spec.q2 >= 3;
  g.kernel_dim = g.kernel_bound_applies ? spec.x2.at(degree - shift) : 0;
  g.image_bound = g.boundary_dim - g.kernel_dim;
  g.target_dim = spec.x1.at(degree) + spec.x2.at(degree);
  g.impossible = g.image_bound < g.target_dim;
  return g;
}

std::string ChainInequality::to_string() const {
  std::ostringstream out;
  out << "b" << degree - 1 << "(X" << lhs_base << ")=" << lhs << (holds() ? " >= " : " < ") << "b" << degree
      << "(X" << rhs_base << ")=" << rhs;
  return out.str();
}

const char* verdict_tag(const ObstructionVerdict& v) {
  switch (v.index()) {
    case 0: return "Case1Contradiction";
    case 1: return "SphereForced";
    default: return "InputInconsistent";
  }
}

ObstructionVerdict sphere_theorem_check(const AttractorPairSpec& input) {
  input.validate();
  AttractorPairSpec spec = input;
  const bool swapped = spec.q1 > spec.q2;
  if (swapped) {
    std::swap(spec.q1, spec.q2);
    std::swap(spec.x1, spec.x2);
  }
  const long n = static_cast<long>(spec.n);

  if (spec.q2 >= 3) {
    Case1Contradiction c;
    c.swapped = swapped;
    c.degree = static_cast<long>(spec.p1());
    c.gap = mv_surjectivity_gap(spec, c.degree);
    if (!c.gap.impossible) {
      throw std::logic_error("Case 1 count at l = p1 unexpectedly admits a surjection");
    }
    for (long l = 1; l < n; ++l) {
      if (mv_surjectivity_gap(spec, l).impossible) c.witness_degrees.push_back(l);
    }
    return c;
  }

  // q1 = q2 = 2: the two boundaries are the same manifold.
  const BettiVector b1 = gysin_boundary_betti(spec.x1, spec.q1);
  const BettiVector b2 = gysin_boundary_betti(spec.x2, spec.q2);
  for (long l = 0; l < n; ++l) {
    if (b1.at(l) != b2.at(l)) {
      InputInconsistent bad;
      bad.reason = "boundary Betti numbers differ at degree " + std::to_string(l) + ": " +
                   std::to_string(b1.at(l)) + " vs " + std::to_string(b2.at(l));
      bad.degree = l;
      return bad;
    }
  }

  SphereForced forced;
  for (long l = 1; l <= n - 2; ++l) {
    const ChainInequality a{l, 1, 2, spec.x1.at(l - 1), spec.x2.at(l)};
    const ChainInequality b{l, 2, 1, spec.x2.at(l - 1), spec.x1.at(l)};
    for (const auto& ineq : {a, b}) {
      if (!ineq.holds()) {
        InputInconsistent bad;
        bad.reason = "surjectivity inequality fails: " + ineq.to_string();
        bad.degree = l;
        bad.failed = ineq;
        return bad;
      }
      forced.chain.push_back(ineq);
    }
  }
  for (long i = 0; i <= n - 2; ++i) {
    if (spec.x1.at(i) != 1 || spec.x2.at(i) != 1) {
      throw std::logic_error("inequality chain held without forcing all Betti numbers to 1");
    }
  }
  forced.manifold_betti = BettiVector::sphere(spec.n);
  return forced;
}

ToricReport toric_corollary_check(std::size_t n) {
  if (n < 3) throw std::invalid_argument("toric check needs n >= 3");
  const BettiVector base = BettiVector::torus(n - 2);
  ToricReport r;
  r.n = n;
  r.boundary_b1 = gysin_boundary_betti(base, 2).at(1);
  r.target_b1 = 2 * base.at(1);
  r.impossible = r.boundary_b1 < r.target_b1;
  return r;
}

}  // namespace nilspec
