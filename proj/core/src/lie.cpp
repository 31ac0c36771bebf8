#include "nilspec/lie.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <tuple>
#include <sstream>

#include "nilspec/linalg.hpp"
#include "nilspec/matrix_io.hpp"

namespace nilspec {

LieAlgebra::LieAlgebra(std::size_t dimension) : dim_(dimension) {}

LieAlgebra LieAlgebra::abelian(std::size_t n) { return LieAlgebra(n); }

LieAlgebra LieAlgebra::heisenberg(std::size_t m) {
  LieAlgebra g(2 * m + 1);
  for (std::size_t i = 0; i < m; ++i) g.set_constant(i, m + i, 2 * m, 1);
  return g;
}

LieAlgebra LieAlgebra::filiform(std::size_t n) {
  LieAlgebra g(n);
  for (std::size_t k = 1; k + 1 < n; ++k) g.set_constant(0, k, k + 1, 1);
  return g;
}

void LieAlgebra::set_constant(std::size_t i, std::size_t j, std::size_t k, const Rat& value) {
  if (!(i < j) || j >= dim_ || k >= dim_) {
    throw std::out_of_range("structure constant index out of range");
  }
  auto& vec = constants_[{i, j}];
  if (vec.empty()) vec.assign(dim_, Rat(0));
  vec[k] = value;
  bool all_zero = true;
  for (const auto& c : vec) all_zero = all_zero && c == 0;
  if (all_zero) constants_.erase({i, j});
}

Rat LieAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = constants_.find({i, j});
  return it == constants_.end() ? Rat(0) : it->second.at(k);
}

QVec LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  QVec out(dim_, Rat(0));
  if (i == j) return out;
  const bool swapped = i > j;
  auto it = constants_.find({std::min(i, j), std::max(i, j)});
  if (it == constants_.end()) return out;
  for (std::size_t k = 0; k < dim_; ++k) out[k] = swapped ? Rat(-it->second[k]) : it->second[k];
  return out;
}

QVec LieAlgebra::bracket(const QVec& u, const QVec& v) const {
  QVec out(dim_, Rat(0));
  for (const auto& [key, c] : constants_) {
    const auto [i, j] = key;
    // u_i v_j [X_i, X_j] + u_j v_i [X_j, X_i]
    const Rat w = u[i] * v[j] - u[j] * v[i];
    if (w == 0) continue;
    for (std::size_t k = 0; k < dim_; ++k) out[k] += w * c[k];
  }
  return out;
}

LieAlgebra read_lie_algebra(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<LieAlgebra> g;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> seen;
  auto index = [&](const Token& tok, std::size_t n) {
    Integer v;
    try {
      v = parse_integer(tok.text);
    } catch (const std::invalid_argument&) {
      throw ParseError(source, line_no, tok.column, "expected an index, got '" + std::string(tok.text) + "'");
    }
    if (v < 1 || v > static_cast<long>(n)) {
      throw ParseError(source, line_no, tok.column,
                       "index " + v.get_str() + " outside 1.." + std::to_string(n));
    }
    return static_cast<std::size_t>(v.get_ui() - 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize_line(line);
    if (tokens.empty()) continue;
    if (!g) {
      if (tokens.size() != 2 || tokens[0].text != "dim") {
        throw ParseError(source, line_no, tokens[0].column, "first line must be 'dim n'");
      }
      Integer n;
      try {
        n = parse_integer(tokens[1].text);
      } catch (const std::invalid_argument&) {
        n = -1;
      }
      if (n < 0 || !n.fits_ulong_p()) {
        throw ParseError(source, line_no, tokens[1].column, "dimension must be a non-negative integer");
      }
      g.emplace(n.get_ui());
      continue;
    }
    if (tokens.size() != 4) {
      throw ParseError(source, line_no, tokens[0].column, "expected 'i j k c'");
    }
    const std::size_t n = g->dimension();
    const std::size_t i = index(tokens[0], n), j = index(tokens[1], n), k = index(tokens[2], n);
    if (!(i < j)) {
      throw ParseError(source, line_no, tokens[1].column, "structure constants need i < j");
    }
    Rat c;
    try {
      c = parse_rat(tokens[3].text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, line_no, tokens[3].column, e.what());
    }
    auto [it, fresh] = seen.emplace(std::make_tuple(i, j, k), line_no);
    if (!fresh) {
      throw ParseError(source, line_no, tokens[0].column,
                       "duplicate constant, first given on line " + std::to_string(it->second));
    }
    g->set_constant(i, j, k, c);
  }
  if (!g) throw ParseError(source, line_no + 1, 1, "missing 'dim n' line");
  return *g;
}

LieAlgebra read_lie_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open Lie algebra file " + path.string());
  return read_lie_algebra(in, path.string());
}

LieAlgebra parse_lie_algebra(std::string_view text, const std::string& source) {
  std::istringstream in{std::string(text)};
  return read_lie_algebra(in, source);
}

std::string format_lie_algebra(const LieAlgebra& g) {
  std::ostringstream out;
  out << "dim " << g.dimension() << '\n';
  for (const auto& [key, c] : g.constants()) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      out << key.first + 1 << ' ' << key.second + 1 << ' ' << k + 1 << ' ' << to_string(c[k]) << '\n';
    }
  }
  return out.str();
}

JacobiViolation::JacobiViolation(std::size_t degree, IndexTuple row, IndexTuple column, Rat value)
    : std::invalid_argument("Jacobi identity fails: delta^2 " + tuple_name(column) + " has coefficient " +
                            to_string(value) + " on " + tuple_name(row)),
      degree_(degree),
      row_(std::move(row)),
      column_(std::move(column)),
      value_(std::move(value)) {}

std::vector<QMat> ce_differentials(const LieAlgebra& g) {
  const std::size_t n = g.dimension();
  // delta x_k as a list of (i, j, coefficient), i < j.
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rat>>> gen(n);
  for (const auto& [key, c] : g.constants()) {
    for (std::size_t k = 0; k < n; ++k) {
      if (c[k] != 0) gen[k].emplace_back(key.first, key.second, -c[k]);
    }
  }
  std::vector<QMat> diffs;
  for (std::size_t l = 0; l < n; ++l) {
    const ExteriorBasis src(n, l), dst(n, l + 1);
    QMat d(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      const IndexTuple& tuple = src[col];
      for (std::size_t s = 0; s < l; ++s) {
        const int position_sign = (s % 2 == 0) ? 1 : -1;
        for (const auto& [i, j, coeff] : gen[tuple[s]]) {
          IndexTuple t;
          t.reserve(l + 1);
          t.insert(t.end(), tuple.begin(), tuple.begin() + static_cast<long>(s));
          t.push_back(i);
          t.push_back(j);
          t.insert(t.end(), tuple.begin() + static_cast<long>(s) + 1, tuple.end());
          const int perm = sort_with_sign(t);
          if (perm == 0) continue;
          d(dst.index_of(t), col) += (position_sign * perm) * coeff;
        }
      }
    }
    diffs.push_back(std::move(d));
  }
  return diffs;
}

CochainComplex ce_complex(const LieAlgebra& g) {
  const std::size_t n = g.dimension();
  auto diffs = ce_differentials(g);
  for (std::size_t l = 0; l + 1 < diffs.size(); ++l) {
    const QMat sq = diffs[l + 1] * diffs[l];
    for (std::size_t r = 0; r < sq.rows(); ++r)
      for (std::size_t c = 0; c < sq.cols(); ++c) {
        if (sq(r, c) != 0) {
          throw JacobiViolation(l, ExteriorBasis(n, l + 2)[r], ExteriorBasis(n, l)[c], sq(r, c));
        }
      }
  }
  std::vector<std::size_t> dims;
  for (std::size_t l = 0; l <= n; ++l) dims.push_back(binomial(n, l));
  return CochainComplex(std::move(dims), std::move(diffs));
}

std::vector<std::size_t> betti(const LieAlgebra& g) { return betti_numbers(ce_complex(g)); }

NotInvertible::NotInvertible() : AutomorphismError("automorphism matrix is singular") {}

namespace {

std::string vec_string(const QVec& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += to_string(v[k]);
  }
  return out + ")";
}

}  // namespace

NotBracketPreserving::NotBracketPreserving(std::size_t i, std::size_t j, QVec lhs, QVec rhs)
    : AutomorphismError("bracket not preserved on (X" + std::to_string(i + 1) + ", X" +
                        std::to_string(j + 1) + "): [aX" + std::to_string(i + 1) + ", aX" +
                        std::to_string(j + 1) + "] = " + vec_string(lhs) + " but a[X" +
                        std::to_string(i + 1) + ", X" + std::to_string(j + 1) + "] = " + vec_string(rhs)),
      i_(i),
      j_(j),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {}

QVec NotBracketPreserving::residual() const {
  QVec r(lhs_.size());
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = lhs_[k] - rhs_[k];
  return r;
}

LieAutomorphism check_automorphism(const LieAlgebra& g, const QMat& a) {
  const std::size_t n = g.dimension();
  if (a.rows() != n || a.cols() != n) {
    throw ShapeError("automorphism must be " + std::to_string(n) + "x" + std::to_string(n) + ", got " +
                     a.shape_string());
  }
  if (determinant(a) == 0) throw NotInvertible();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      QVec lhs = g.bracket(a.column(i), a.column(j));
      QVec rhs = a.apply(g.bracket(i, j));
      if (lhs != rhs) throw NotBracketPreserving(i, j, std::move(lhs), std::move(rhs));
    }
  return LieAutomorphism(g, a);
}

ChainEndomorphism induced_ce_endomorphism(const LieAutomorphism& aut) {
  const QMat dual = dual_map(aut.matrix());
  std::vector<QMat> maps;
  for (std::size_t l = 0; l <= aut.algebra().dimension(); ++l) maps.push_back(exterior_power(dual, l));
  try {
    return ChainEndomorphism(ce_complex(aut.algebra()), std::move(maps));
  } catch (const ComplexError& e) {
    throw std::logic_error(std::string("induced CE map is not a chain map: ") + e.what());
  }
}

bool ExpansionCertificate::all_expanding() const {
  for (const auto& d : degrees) {
    if (!d.verdict.expanding()) return false;
  }
  return true;
}

bool ExpansionCertificate::reproducible() const {
  for (const auto& d : degrees) {
    const auto again = is_expanding_matrix(d.induced);
    if (again.verdict != d.verdict.verdict || again.reason != d.verdict.reason) return false;
    if (!(char_poly(d.induced) == d.char_poly)) return false;
  }
  return true;
}

ExpansionCertificate certify_expanding_on_cohomology(const LieAutomorphism& aut) {
  ExpansionCertificate cert;
  cert.automorphism_verdict = is_expanding_matrix(aut.matrix());
  const ChainEndomorphism f = induced_ce_endomorphism(aut);
  const auto h = cohomology(f.complex());
  const auto induced = induced_on_cohomology(f, h);
  for (const auto& hd : h) cert.betti.push_back(hd.dimension);
  for (std::size_t l = 1; l < induced.size(); ++l) {
    CertificateDegree d;
    d.degree = l;
    d.dimension = h[l].dimension;
    d.induced = induced[l];
    d.char_poly = char_poly(induced[l]);
    d.verdict = is_expanding_poly(d.char_poly);
    d.representatives = h[l].representatives;
    cert.degrees.push_back(std::move(d));
  }
  cert.alarm = cert.automorphism_verdict.expanding() && !cert.all_expanding();
  return cert;
}

std::vector<Poly> homology_char_polys(const LieAutomorphism& aut) {
  const ChainEndomorphism f = induced_ce_endomorphism(aut);
  const CochainComplex& c = f.complex();
  const std::size_t top = c.top_degree();
  // Dual complex D_k = C_{top-k} with differential d_{top-k-1}^T and maps f_{top-k}^T;
  // H^k(D) is the homology H_{top-k}.
  std::vector<std::size_t> dims;
  std::vector<QMat> diffs, maps;
  for (std::size_t k = 0; k <= top; ++k) {
    dims.push_back(c.dim(top - k));
    maps.push_back(f.map(top - k).transpose());
    if (k < top) diffs.push_back(c.differential(top - k - 1).transpose());
  }
  const ChainEndomorphism dual(CochainComplex(std::move(dims), std::move(diffs)), std::move(maps));
  const auto induced = induced_on_cohomology(dual);
  std::vector<Poly> out(top + 1);
  for (std::size_t k = 0; k <= top; ++k) out[top - k] = char_poly(induced[k]);
  return out;
}

}  // namespace nilspec
