#include "nilspec/sturm.hpp"

#include <stdexcept>

namespace nilspec {
namespace {

int count_variations(const std::vector<int>& signs) {
  int variations = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

SturmChain::SturmChain(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  chain_.push_back(square_free_part(p));
  if (chain_.front().degree() == 0) return;
  chain_.push_back(chain_.front().derivative());
  while (chain_.back().degree() > 0) {
    Poly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back(-r);
  }
}

int SturmChain::variations_at(const Rat& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(q.sign_at(x));
  return count_variations(signs);
}

int SturmChain::variations_at_infinity(bool negative_infinity) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(q.sign_at_infinity(negative_infinity));
  return count_variations(signs);
}

int SturmChain::count_roots(const Rat& lo, const Rat& hi) const {
  if (hi < lo) throw std::invalid_argument("empty interval");
  return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_real_roots() const {
  return variations_at_infinity(true) - variations_at_infinity(false);
}

std::vector<Interval> SturmChain::isolate(const Rat& lo, const Rat& hi) const {
  std::vector<Interval> out;
  std::vector<Interval> pending{{lo, hi}};
  while (!pending.empty()) {
    Interval iv = pending.back();
    pending.pop_back();
    const int n = count_roots(iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back(iv);
      continue;
    }
    const Rat mid = (iv.lo + iv.hi) / 2;
    pending.push_back({mid, iv.hi});
    pending.push_back({iv.lo, mid});
  }
  return out;
}

}  // namespace nilspec
