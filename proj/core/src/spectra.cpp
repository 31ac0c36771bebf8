#include "nilspec/spectra.hpp"

#include <sstream>
#include <stdexcept>

#include "nilspec/linalg.hpp"

namespace nilspec {

const char* to_string(Verdict v) {
  return v == Verdict::Expanding ? "Expanding" : "NotExpanding";
}

const char* to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::Certified: return "Certified";
    case VerdictReason::ZeroRoot: return "ZeroRoot";
    case VerdictReason::RootOnUnitCircle: return "RootOnUnitCircle";
    case VerdictReason::RootInsideDisk: return "RootInsideDisk";
    case VerdictReason::DeterminantTooSmall: return "DeterminantTooSmall";
  }
  return "?";
}

std::string ExpansionVerdict::describe() const {
  std::ostringstream out;
  out << to_string(verdict);
  if (verdict == Verdict::NotExpanding) out << " (" << to_string(reason) << ")";
  out << ": " << inside_count << " inside, " << circle_count << " on circle, " << outside_count
      << " outside the unit disk";
  return out.str();
}

namespace {

const Poly kX{0, 1};

// x^k + x^-k expressed in y = x + 1/x.
std::vector<Poly> trace_basis(int m) {
  std::vector<Poly> d;
  d.push_back(Poly::constant(2));
  if (m >= 1) d.push_back(Poly{0, 1});
  for (int k = 2; k <= m; ++k) d.push_back(Poly{0, 1} * d[k - 1] - d[k - 2]);
  return d;
}

// For self-reciprocal g of degree 2m: the Q with g(x) = x^m Q(x + 1/x).
Poly trace_polynomial(const Poly& g) {
  const int m = g.degree() / 2;
  const auto d = trace_basis(m);
  Poly q = Poly::constant(g.coeff(static_cast<std::size_t>(m)));
  for (int k = 1; k <= m; ++k) q += g.coeff(static_cast<std::size_t>(m + k)) * d[k];
  return q;
}

// x^m Q(x + 1/x) as an ordinary polynomial.
Poly untrace(const Poly& q) {
  const int m = q.degree();
  // (x^2 + 1)^k * x^(m-k)
  Poly out;
  Poly power = Poly::constant(1);
  const Poly x2p1{1, 0, 1};
  for (int k = 0; k <= m; ++k) {
    out += q.coeff(static_cast<std::size_t>(k)) * (power * Poly::monomial(static_cast<unsigned>(m - k)));
    power = power * x2p1;
  }
  return out;
}

struct RootCounts {
  int inside = 0;
  int circle = 0;
  std::vector<int> circle_real_roots;
  Poly circle_factor;
  Poly trace_poly;
  std::vector<Interval> trace_intervals;
  Poly reciprocal_factor;
  int schur_cohn_inside = 0;
};

// `p` monic, square-free, p(0) != 0.
RootCounts count_roots(const Poly& p) {
  RootCounts rc;
  const Poly g = gcd(p, p.reverse());
  rc.reciprocal_factor = g;

  Poly rest = g;
  for (int r : {1, -1}) {
    if (rest.degree() >= 1 && rest(Rat(r)) == 0) {
      rc.circle_real_roots.push_back(r);
      rest = exact_divide(rest, Poly{-r, 1});
    }
  }
  rc.circle = static_cast<int>(rc.circle_real_roots.size());
  if (rest.degree() >= 1) {
    if (rest.degree() % 2 != 0 || !(rest.reverse() == rest)) {
      throw std::logic_error("reciprocal factor is not self-reciprocal: " + rest.to_string());
    }
    rc.circle_factor = rest;
    rc.trace_poly = trace_polynomial(rest);
    const SturmChain chain(rc.trace_poly);
    rc.trace_intervals = chain.isolate(Rat(-2), Rat(2));
    rc.circle += 2 * static_cast<int>(rc.trace_intervals.size());
  }
  // Off-circle roots of g pair up as (lambda, 1/lambda).
  rc.inside = (g.degree() - rc.circle) / 2;

  const Poly h = exact_divide(p, g);
  if (h.degree() >= 1) {
    const QMat sc = schur_cohn_matrix(h);
    if (determinant(sc) == 0) {
      throw std::logic_error("Schur-Cohn matrix singular for coprime factor " + h.to_string());
    }
    rc.schur_cohn_inside = positive_inertia(sc);
    rc.inside += rc.schur_cohn_inside;
  }
  return rc;
}

}  // namespace

QMat schur_cohn_matrix(const Poly& p) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("Schur-Cohn matrix needs degree >= 1");
  const auto un = static_cast<std::size_t>(n);
  std::vector<Rat> a(un + 1), as(un + 1);
  for (std::size_t k = 0; k <= un; ++k) {
    a[k] = p.coeff(k);
    as[k] = p.coeff(un - k);
  }
  QMat c(un, un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) {
      Rat acc = as[i] * as[j] - a[i] * a[j];
      if (i > 0 && j > 0) acc += c(i - 1, j - 1);
      c(i, j) = acc;
    }
  return c;
}

int positive_inertia(const QMat& symmetric) {
  if (!(symmetric == symmetric.transpose())) {
    throw std::invalid_argument("inertia requires a symmetric matrix");
  }
  // Symmetric elimination is a congruence, so by Sylvester's law the signs of
  // the pivots give the inertia. Where the diagonal vanishes a 2x2 pivot
  // [[0, b], [b, 0]] contributes one positive and one negative direction.
  QMat a = symmetric;
  const std::size_t n = a.rows();
  auto swap_sym = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  int positive = 0;
  std::size_t k = 0;
  while (k < n) {
    std::size_t piv = k;
    while (piv < n && a(piv, piv) == 0) ++piv;
    if (piv < n) {
      swap_sym(k, piv);
      const Rat d = a(k, k);
      if (d > 0) ++positive;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a(i, k) == 0) continue;
        const Rat f = a(i, k) / d;
        for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      }
      ++k;
      continue;
    }
    std::size_t pi = n, pj = n;
    for (std::size_t i = k; i < n && pi == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (a(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == n) break;  // remaining block is zero
    swap_sym(k, pi);
    swap_sym(k + 1, pj);
    const Rat b = a(k, k + 1);
    ++positive;
    for (std::size_t i = k + 2; i < n; ++i)
      for (std::size_t j = k + 2; j < n; ++j)
        a(i, j) -= (a(i, k) * a(k + 1, j) + a(i, k + 1) * a(k, j)) / b;
    k += 2;
  }
  return positive;
}

ExpansionVerdict is_expanding_poly(const Poly& input) {
  if (input.is_zero()) throw std::invalid_argument("zero polynomial has no spectrum");
  ExpansionVerdict v;
  const Poly p = input.monic();
  v.degree = p.degree();
  v.determinant_modulus = abs(p.coeff(0));
  v.analysed = square_free_part(p);
  const int distinct = v.analysed.degree();

  Poly core = v.analysed;
  const bool zero_root = core.coeff(0) == 0;
  if (zero_root) core = exact_divide(core, kX);

  RootCounts rc;
  if (core.degree() >= 1) rc = count_roots(core);
  v.inside_count = rc.inside + (zero_root ? 1 : 0);
  v.circle_count = rc.circle;
  v.outside_count = distinct - v.inside_count - v.circle_count;
  v.circle_real_roots = std::move(rc.circle_real_roots);
  v.circle_factor = std::move(rc.circle_factor);
  v.trace_poly = std::move(rc.trace_poly);
  v.trace_intervals = std::move(rc.trace_intervals);
  v.reciprocal_factor = std::move(rc.reciprocal_factor);
  v.schur_cohn_inside = rc.schur_cohn_inside;

  v.verdict = Verdict::NotExpanding;
  if (zero_root) {
    v.reason = VerdictReason::ZeroRoot;
  } else if (v.circle_count > 0) {
    v.reason = VerdictReason::RootOnUnitCircle;
  } else if (v.degree >= 1 && v.determinant_modulus < 1) {
    v.reason = VerdictReason::DeterminantTooSmall;
  } else if (v.inside_count > 0) {
    v.reason = VerdictReason::RootInsideDisk;
  } else {
    v.verdict = Verdict::Expanding;
    v.reason = VerdictReason::Certified;
  }
  return v;
}

ExpansionVerdict is_expanding_matrix(const QMat& m) {
  if (!m.is_square()) throw ShapeError("expansion test needs a square matrix, got " + m.shape_string());
  return is_expanding_poly(char_poly(m));
}

std::string check_evidence(const Poly& input, const ExpansionVerdict& v) {
  const Poly p = square_free_part(input);
  auto divides = [&](const Poly& f) { return f.degree() < 1 || divmod(p, f).second.is_zero(); };
  switch (v.reason) {
    case VerdictReason::Certified:
      if (v.inside_count != 0 || v.circle_count != 0) return "certified verdict with roots in the closed disk";
      if (abs(input.coeff(0) / input.leading()) <= 1 && input.degree() >= 1) {
        return "certified verdict but |product of roots| <= 1";
      }
      return {};
    case VerdictReason::ZeroRoot:
      return p.coeff(0) == 0 ? std::string{} : "p(0) != 0";
    case VerdictReason::DeterminantTooSmall:
      return abs(input.coeff(0) / input.leading()) < 1 ? std::string{} : "|product of roots| >= 1";
    case VerdictReason::RootOnUnitCircle: {
      for (int r : v.circle_real_roots) {
        if (p(Rat(r)) != 0) return "recorded root " + std::to_string(r) + " is not a root";
      }
      if (!v.trace_intervals.empty()) {
        if (!divides(v.circle_factor)) return "circle factor does not divide p";
        if (!(untrace(v.trace_poly) == v.circle_factor)) return "trace substitution mismatch";
        for (const auto& iv : v.trace_intervals) {
          if (iv.lo < -2 || iv.hi > 2 || !(iv.lo < iv.hi)) return "interval outside [-2, 2]";
          // intervals are (lo, hi]: a root exactly at hi is fine; a root at the
          // excluded lo is divided out so the sign test sees only (lo, hi]
          Poly t = v.trace_poly;
          while (t.degree() >= 1 && t(iv.lo) == 0) t = exact_divide(t, Poly{-iv.lo, 1});
          const int slo = t.sign_at(iv.lo), shi = t.sign_at(iv.hi);
          if (!(shi == 0 || slo * shi < 0)) return "no sign change across isolating interval";
        }
      }
      if (v.circle_real_roots.empty() && v.trace_intervals.empty()) return "no circle root recorded";
      return {};
    }
    case VerdictReason::RootInsideDisk: {
      const Poly& g = v.reciprocal_factor;
      if (!divides(g)) return "reciprocal factor does not divide p";
      if (g.degree() > v.circle_count) {
        if (!(g.reverse().monic() == g)) return "reciprocal factor not closed under inversion";
        return {};
      }
      const Poly h = exact_divide(p, g);
      if (h.degree() < 1) return "no root left for the Schur-Cohn count";
      const int inside = positive_inertia(schur_cohn_matrix(h));
      return inside > 0 ? std::string{} : "Schur-Cohn inertia shows no root inside";
    }
  }
  return "unknown reason";
}

Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolation size mismatch");
  const std::size_t n = xs.size();
  std::vector<Rat> dd = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  Poly out;
  for (std::size_t k = n; k-- > 0;) {
    out = out * Poly{-xs[k], 1} + Poly::constant(dd[k]);
  }
  return out;
}

Poly eigen_product_multiset(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero() || p.leading() != 1 || q.leading() != 1) {
    throw std::invalid_argument("eigen_product_multiset needs monic inputs");
  }
  if (p.degree() == 0 || q.degree() == 0) return Poly::constant(1);
  const auto n = static_cast<std::size_t>(p.degree());
  const auto m = static_cast<std::size_t>(q.degree());
  const QMat cp = companion(p);
  const std::size_t points = n * m + 1;
  std::vector<Rat> xs(points), ys(points);
  for (std::size_t t = 0; t < points; ++t) {
    const Rat x = static_cast<long>(t);
    // r(y) = y^m q(x / y) = sum_k q_k x^k y^(m-k)
    std::vector<Rat> r(m + 1, Rat(0));
    Rat xk = 1;
    for (std::size_t k = 0; k <= m; ++k) {
      r[m - k] = q.coeff(k) * xk;
      xk *= x;
    }
    xs[t] = x;
    // Res_y(p, r) = prod r(lambda_i) = det r(C_p) for monic p.
    ys[t] = determinant(evaluate(Poly(std::move(r)), cp));
  }
  Poly out = interpolate(xs, ys);
  if (out.degree() != static_cast<int>(n * m) || out.leading() != 1) {
    throw std::logic_error("resultant interpolation produced a non-monic result");
  }
  return out;
}

}  // namespace nilspec
