#include "nilspec/chain_complex.hpp"

#include "nilspec/linalg.hpp"

namespace nilspec {

CochainComplex::CochainComplex(std::vector<std::size_t> dims, std::vector<QMat> differentials)
    : dims_(std::move(dims)), diffs_(std::move(differentials)) {
  if (dims_.empty()) throw ComplexError("complex needs at least one degree");
  if (diffs_.size() + 1 != dims_.size()) {
    throw ComplexError("expected " + std::to_string(dims_.size() - 1) + " differentials, got " +
                       std::to_string(diffs_.size()));
  }
  for (std::size_t i = 0; i < diffs_.size(); ++i) {
    if (diffs_[i].rows() != dims_[i + 1] || diffs_[i].cols() != dims_[i]) {
      throw ComplexError("d_" + std::to_string(i) + " has shape " + diffs_[i].shape_string() +
                         ", expected " + std::to_string(dims_[i + 1]) + "x" + std::to_string(dims_[i]));
    }
  }
  for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
    if (!(diffs_[i + 1] * diffs_[i]).is_zero()) {
      throw ComplexError("d_" + std::to_string(i + 1) + " * d_" + std::to_string(i) + " != 0");
    }
  }
}

CochainComplex CochainComplex::with_zero_differentials(std::vector<std::size_t> dims) {
  std::vector<QMat> diffs;
  for (std::size_t i = 0; i + 1 < dims.size(); ++i) diffs.emplace_back(dims[i + 1], dims[i]);
  return CochainComplex(std::move(dims), std::move(diffs));
}

QMat CochainComplex::differential(std::size_t degree) const {
  if (degree < diffs_.size()) return diffs_[degree];
  return QMat(0, dims_.at(degree));
}

QMat CochainComplex::incoming(std::size_t degree) const {
  if (degree == 0) return QMat(dims_.at(0), 0);
  return diffs_.at(degree - 1);
}

long CochainComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(dims_[i]);
  }
  return chi;
}

ChainEndomorphism::ChainEndomorphism(CochainComplex complex, std::vector<QMat> maps)
    : complex_(std::move(complex)), maps_(std::move(maps)) {
  if (maps_.size() != complex_.dims().size()) {
    throw ComplexError("chain endomorphism needs one map per degree");
  }
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    const auto n = complex_.dim(i);
    if (maps_[i].rows() != n || maps_[i].cols() != n) {
      throw ComplexError("f_" + std::to_string(i) + " has shape " + maps_[i].shape_string());
    }
  }
  for (std::size_t i = 0; i < complex_.top_degree(); ++i) {
    const QMat& d = complex_.differential(i);
    if (!(d * maps_[i] == maps_[i + 1] * d)) {
      throw ComplexError("f does not commute with d_" + std::to_string(i));
    }
  }
}

ChainEndomorphism ChainEndomorphism::compose(const ChainEndomorphism& other) const {
  std::vector<QMat> maps;
  for (std::size_t i = 0; i < maps_.size(); ++i) maps.push_back(maps_[i] * other.maps_.at(i));
  return ChainEndomorphism(complex_, std::move(maps));
}

std::vector<CohomologyDegree> cohomology(const CochainComplex& c) {
  std::vector<CohomologyDegree> out;
  for (std::size_t i = 0; i <= c.top_degree(); ++i) {
    CohomologyDegree h;
    const std::size_t n = c.dim(i);
    h.cocycles = kernel_basis(c.differential(i));
    h.coboundaries = image_basis(c.incoming(i));

    QMat span = h.coboundaries;
    std::size_t span_rank = span.cols();
    std::vector<QVec> reps;
    for (std::size_t k = 0; k < h.cocycles.cols(); ++k) {
      QMat candidate = hconcat(span, h.cocycles.block(0, k, n, 1));
      const std::size_t r = rank(candidate);
      if (r > span_rank) {
        span = std::move(candidate);
        span_rank = r;
        reps.push_back(h.cocycles.column(k));
      }
    }
    h.dimension = reps.size();
    h.representatives = reps.empty() ? QMat(n, 0) : QMat::from_columns(n, reps);
    if (h.dimension == 0) {
      h.projection = QMat(0, n);
    } else {
      const QMat left = left_inverse(span);
      h.projection = left.block(h.coboundaries.cols(), 0, h.dimension, n);
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<std::size_t> betti_numbers(const CochainComplex& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= c.top_degree(); ++i) {
    const std::size_t nullity = c.dim(i) - rank(c.differential(i));
    out.push_back(nullity - rank(c.incoming(i)));
  }
  return out;
}

std::vector<QMat> induced_on_cohomology(const ChainEndomorphism& f,
                                        const std::vector<CohomologyDegree>& h) {
  std::vector<QMat> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i].dimension == 0) {
      out.emplace_back(0, 0);
      continue;
    }
    out.push_back(h[i].projection * (f.map(i) * h[i].representatives));
  }
  return out;
}

std::vector<QMat> induced_on_cohomology(const ChainEndomorphism& f) {
  return induced_on_cohomology(f, cohomology(f.complex()));
}

ChainExpansionReport chain_exp_check(const ChainEndomorphism& f) {
  ChainExpansionReport report;
  const auto induced = induced_on_cohomology(f);
  report.hypothesis_holds = true;
  report.conclusion_holds = true;
  for (std::size_t i = 1; i < induced.size(); ++i) {
    DegreeExpansion d;
    d.degree = i;
    d.cochain = is_expanding_matrix(f.map(i));
    d.cohomology = is_expanding_matrix(induced[i]);
    d.induced = induced[i];
    report.hypothesis_holds = report.hypothesis_holds && d.cochain.expanding();
    report.conclusion_holds = report.conclusion_holds && d.cohomology.expanding();
    report.degrees.push_back(std::move(d));
  }
  return report;
}

QMat ExactTriple::phi() const { return vconcat(i1, i2); }

QMat ExactTriple::psi() const { return hconcat(j1, -j2); }

MapProperties map_properties(const QMat& m) {
  MapProperties p;
  p.rank = rank(m);
  p.domain = m.cols();
  p.codomain = m.rows();
  p.injective = p.rank == p.domain;
  p.surjective = p.rank == p.codomain;
  return p;
}

bool ExactTripleReport::any_violation() const {
  for (const auto& imp : implications) {
    if (imp.violated()) return true;
  }
  return false;
}

ExactTripleReport exact_triple_analyze(const ExactTriple& t) {
  if (t.i1.cols() != t.i2.cols() || t.j1.rows() != t.j2.rows() || t.j1.cols() != t.i1.rows() ||
      t.j2.cols() != t.i2.rows()) {
    throw ComplexError("exact triple maps have inconsistent shapes");
  }
  const QMat phi = t.phi(), psi = t.psi();
  if (!(psi * phi).is_zero()) throw ComplexError("psi * phi != 0");
  ExactTripleReport r;
  r.i1 = map_properties(t.i1);
  r.i2 = map_properties(t.i2);
  r.j1 = map_properties(t.j1);
  r.j2 = map_properties(t.j2);
  r.phi = map_properties(phi);
  r.psi = map_properties(psi);
  const std::size_t middle = phi.rows();
  if (r.phi.rank + r.psi.rank != middle) {
    throw ComplexError("not exact at B1+B2: rank phi = " + std::to_string(r.phi.rank) +
                       ", rank psi = " + std::to_string(r.psi.rank) + ", dim = " +
                       std::to_string(middle));
  }
  auto add = [&](std::string prefix, const MapProperties& i, const MapProperties& j,
                 const std::string& in, const std::string& jn) {
    r.implications.push_back({prefix + "a", in + " injective => " + jn + " injective", i.injective,
                              j.injective});
    r.implications.push_back({prefix + "b", jn + " injective and phi injective => " + in + " injective",
                              j.injective && r.phi.injective, i.injective});
    r.implications.push_back({prefix + "c", in + " surjective and psi surjective => " + jn + " surjective",
                              i.surjective && r.psi.surjective, j.surjective});
    r.implications.push_back({prefix + "d", jn + " surjective => " + in + " surjective", j.surjective,
                              i.surjective});
  };
  add("", r.i1, r.j2, "i1", "j2");
  add("e.", r.i2, r.j1, "i2", "j1");
  return r;
}

}  // namespace nilspec
