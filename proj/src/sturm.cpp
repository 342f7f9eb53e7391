#include "queenpoly/sturm.hpp"

#include <stdexcept>

namespace queenpoly {

bool operator<(const Bound& a, const Bound& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  return a.finite() && a.value_ < b.value_;
}

int sign_at(const IntPoly& p, const Bound& x) {
  if (p.is_zero()) return 0;
  switch (x.kind()) {
    case Bound::Kind::PosInf:
      return sgn(p.lead());
    case Bound::Kind::NegInf:
      return (p.degree() % 2 == 0) ? sgn(p.lead()) : -sgn(p.lead());
    case Bound::Kind::Finite:
      break;
  }
  // Homogeneous Horner: den^n * p(num/den) with den > 0 keeps the sign.
  const Integer& num = x.value().get_num();
  const Integer& den = x.value().get_den();
  const auto& c = p.coeffs();
  Integer acc = c.back();
  Integer den_pow = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc = acc * num + c[i] * den_pow;
  }
  return sgn(acc);
}

SturmChain::SturmChain(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("sturm: zero polynomial");
  source_ = squarefree_part(p);
  chain_.push_back(source_);
  if (source_.degree() < 1) return;
  chain_.push_back(primitive_part(source_.derivative()));
  for (;;) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem scales by lead(b)^(da-db+1); undo its sign, then negate.
    const int e = a.degree() - b.degree() + 1;
    const bool flip = sgn(b.lead()) < 0 && (e % 2 == 1);
    IntPoly next = primitive_part(flip ? r : -r);
    chain_.push_back(std::move(next));
  }
  if (chain_.back().degree() != 0)
    throw std::logic_error("sturm: chain of a squarefree polynomial must end in a constant");
}

int SturmChain::variations(const Bound& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::count(const Bound& lo, const Bound& hi) const {
  if (!(lo < hi)) throw std::invalid_argument("sturm: empty interval, need lo < hi");
  return variations(lo) - variations(hi);
}

int sturm_count(const IntPoly& p, const Bound& lo, const Bound& hi) {
  return SturmChain(p).count(lo, hi);
}

int sturm_count(const RatPoly& p, const Bound& lo, const Bound& hi) {
  if (p.is_zero()) throw std::domain_error("sturm: zero polynomial");
  return sturm_count(clear_denominators(p), lo, hi);
}

}  // namespace queenpoly
