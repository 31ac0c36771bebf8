#include "nilspec/multilinear.hpp"
#include "nilspec/sturm.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "nilspec/linalg.hpp"

namespace nilspec {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ExteriorBasis::ExteriorBasis(std::size_t ambient, std::size_t degree)
    : ambient_(ambient), degree_(degree) {
  if (degree > ambient) {
    throw std::out_of_range("exterior degree " + std::to_string(degree) + " exceeds dimension " +
                            std::to_string(ambient));
  }
  tuples_.reserve(binomial(ambient, degree));
  IndexTuple t(degree);
  for (std::size_t i = 0; i < degree; ++i) t[i] = i;
  for (;;) {
    tuples_.push_back(t);
    std::size_t k = degree;
    while (k > 0 && t[k - 1] == ambient - degree + k - 1) --k;
    if (k == 0) break;
    ++t[k - 1];
    for (std::size_t j = k; j < degree; ++j) t[j] = t[j - 1] + 1;
  }
}

std::size_t ExteriorBasis::index_of(const IndexTuple& tuple) const {
  auto it = std::lower_bound(tuples_.begin(), tuples_.end(), tuple);
  if (it == tuples_.end() || *it != tuple) throw std::out_of_range("tuple not in exterior basis");
  return static_cast<std::size_t>(it - tuples_.begin());
}

std::string tuple_name(const IndexTuple& tuple) {
  if (tuple.empty()) return "1";
  std::string out;
  for (auto i : tuple) {
    if (!out.empty()) out += '^';
    out += 'x' + std::to_string(i + 1);
  }
  return out;
}

int sort_with_sign(IndexTuple& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return 0;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  return sign;
}

QMat dual_map(const QMat& m) { return m.transpose(); }

QMat kronecker(const QMat& a, const QMat& b) {
  QMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

QMat exterior_power(const QMat& m, std::size_t degree) {
  if (!m.is_square()) throw ShapeError("exterior power of non-square matrix");
  const ExteriorBasis basis(m.rows(), degree);
  const std::size_t dim = basis.size();
  QMat out(dim, dim);
  QMat minor(degree, degree);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      const auto& rows = basis[r];
      const auto& cols = basis[c];
      for (std::size_t i = 0; i < degree; ++i)
        for (std::size_t j = 0; j < degree; ++j) minor(i, j) = m(rows[i], cols[j]);
      out(r, c) = determinant(minor);
    }
  return out;
}

namespace {

// Integer roots of a monic integer polynomial: Sturm-isolate the real roots
// inside the Cauchy bound, shrink each interval below width 1 and test the
// single integer it can contain.
std::vector<Integer> integer_roots(const Poly& q) {
  // Fujiwara: every root has modulus at most 2 max_k |c_{n-k}|^(1/k).
  const int n = q.degree();
  Integer bound = 1;
  for (int k = 1; k <= n; ++k) {
    const Integer c = abs(q.coeff(n - k).get_num());
    Integer r;
    mpz_root(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
    bound = std::max(bound, Integer(2 * (r + 1)));
  }
  const SturmChain chain(q);
  std::vector<Integer> out;
  for (Interval iv : chain.isolate(Rat(-bound - 1), Rat(bound))) {
    while (iv.hi - iv.lo >= 1) {
      const Rat mid = (iv.lo + iv.hi) / 2;
      if (chain.count_roots(iv.lo, mid) == 1) {
        iv.hi = mid;
      } else {
        iv.lo = mid;
      }
    }
    Integer k;
    mpz_fdiv_q(k.get_mpz_t(), iv.hi.get_num_mpz_t(), iv.hi.get_den_mpz_t());
    if (k > iv.lo && q(Rat(k)) == 0) out.push_back(k);
  }
  return out;
}

}  // namespace

std::optional<std::vector<Rat>> rational_roots_if_split(const Poly& input) {
  if (input.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<Rat> roots;
  Poly p = input.monic();
  while (p.degree() >= 1 && p.coeff(0) == 0) {
    roots.push_back(0);
    p = exact_divide(p, Poly{0, 1});
  }
  if (p.degree() < 1) return roots;
  // With L the lcm of the denominators, q(y) = L^(n-1) (L p)(y / L) is monic
  // over Z and its integer roots are L times the rational roots of p.
  Integer lcm_den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  const int n = p.degree();
  std::vector<Rat> qc(n + 1);
  Rat scale = 1;
  for (int k = n; k >= 0; --k) {
    qc[k] = p.coeff(k) * scale;
    scale *= lcm_den;
  }
  qc[n] = 1;
  for (const auto& y : integer_roots(Poly(qc))) {
    const Rat c = Rat(y) / lcm_den;
    while (p.degree() >= 1 && p(c) == 0) {
      roots.push_back(c);
      p = exact_divide(p, Poly{-c, 1});
    }
  }
  if (p.degree() >= 1) return std::nullopt;
  std::sort(roots.begin(), roots.end());
  return roots;
}

ExteriorSpectrumReport char_poly_exterior_check(const QMat& m, std::size_t degree) {
  ExteriorSpectrumReport report;
  const auto roots = rational_roots_if_split(char_poly(m));
  report.exterior_char_poly = char_poly(exterior_power(m, degree));
  if (!roots) {
    report.message = "oracle inapplicable: characteristic polynomial does not split over Q";
    return report;
  }
  report.applicable = true;
  report.base_roots = *roots;
  const ExteriorBasis subsets(roots->size(), degree);
  for (const auto& subset : subsets.tuples()) {
    Rat prod = 1;
    for (auto i : subset) prod *= (*roots)[i];
    report.predicted.push_back(prod);
  }
  std::sort(report.predicted.begin(), report.predicted.end());
  report.confirmed = Poly::from_roots(report.predicted) == report.exterior_char_poly;
  report.message = report.confirmed ? "confirmed" : "multiset mismatch";
  return report;
}

}  // namespace nilspec
