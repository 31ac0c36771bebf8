#include "nilspec/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace nilspec {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(unsigned k, const Rat& c) {
  std::vector<Rat> v(k + 1, Rat(0));
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::from_roots(std::span<const Rat> roots) {
  Poly p = constant(1);
  for (const auto& r : roots) p = p * Poly{-r, 1};
  return p;
}

Poly Poly::from_highest_first(std::span<const Rat> coeffs) {
  return Poly(std::vector<Rat>(coeffs.rbegin(), coeffs.rend()));
}

const Rat& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

int Poly::sign_at(const Rat& x) const { return sgn((*this)(x)); }

int Poly::sign_at_infinity(bool negative_infinity) const {
  if (coeffs_.empty()) return 0;
  int s = sgn(coeffs_.back());
  if (negative_infinity && degree() % 2 == 1) s = -s;
  return s;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Poly(std::move(d));
}

Poly Poly::reverse() const {
  return Poly(std::vector<Rat>(coeffs_.rbegin(), coeffs_.rend()));
}

Poly Poly::monic() const {
  if (coeffs_.empty()) return {};
  Poly out = *this;
  const Rat lc = coeffs_.back();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

Poly Poly::negate_variable() const {
  Poly out = *this;
  for (std::size_t k = 1; k < out.coeffs_.size(); k += 2) out.coeffs_[k] = -out.coeffs_[k];
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

std::string Poly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) out << nilspec::to_string(mag);
    if (k >= 1) out << var;
    if (k >= 2) out << '^' << k;
    first = false;
  }
  return out.str();
}

std::string Poly::to_coefficient_list() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!out.empty()) out += ',';
    out += nilspec::to_string(*it);
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.degree() < den.degree()) return {Poly{}, num};
  std::vector<Rat> rem = num.coeffs();
  const std::size_t dd = static_cast<std::size_t>(den.degree());
  std::vector<Rat> quot(rem.size() - dd, Rat(0));
  const Rat& lc = den.leading();
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    Rat q = rem[k] / lc;
    quot[k - dd] = q;
    for (std::size_t i = 0; i <= dd; ++i) rem[k - dd + i] -= q * den.coeffs()[i];
  }
  rem.resize(dd);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly square_free_part(const Poly& p) {
  if (p.degree() <= 0) return p.monic();
  return exact_divide(p, gcd(p, p.derivative())).monic();
}

Poly exact_divide(const Poly& num, const Poly& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

}  // namespace nilspec
