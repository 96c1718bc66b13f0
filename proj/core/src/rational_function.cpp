#include "hyperdet/rational_function.hpp"

namespace hyperdet {

RationalFunction::RationalFunction(const MultiPoly& num)
    : num_(num), den_(MultiPoly::constant(num.vars(), Rat(1))) {}

RationalFunction::RationalFunction(const MultiPoly& num, const MultiPoly& den)
    : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.vars(), Rat(1));
    return;
  }
  // Scale so the denominator is integer-primitive with positive leading
  // (graded-lex) coefficient: a deterministic representative of the class.
  const MultiPoly::Exponents* lead = nullptr;
  for (const auto& [e, c] : den_.terms())
    if (lead == nullptr || grlex_less(*lead, e)) lead = &e;
  Rat lc = den_.terms().at(*lead);
  Int g(0), l(1);
  for (const auto& [e, c] : den_.terms()) {
    g = gcd(g, c.get_num());
    l = lcm(l, c.get_den());
  }
  Rat scale = rat(l, g);
  if (lc < 0) scale = -scale;
  num_ = num_ * scale;
  den_ = den_ * scale;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  if (a.is_zero()) return a;
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction operator*(const RationalFunction& a, const Rat& s) {
  if (s == 0) return RationalFunction(MultiPoly(a.vars()), a.den_ * Rat(1));
  return RationalFunction(a.num_ * s, a.den_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFunction RationalFunction::pow(unsigned e) const {
  RationalFunction r(MultiPoly::constant(vars(), Rat(1)));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

MultiPoly RationalFunction::to_poly() const {
  if (num_.is_zero()) return MultiPoly(num_.vars());
  return num_.exact_divide(den_);
}

std::string RationalFunction::str() const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace hyperdet
