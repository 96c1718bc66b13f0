#pragma once

#include "hyperdet/multipoly.hpp"

namespace hyperdet {

// Quotient of two multivariate polynomials. The representation is not fully
// reduced (multivariate gcd is deliberately avoided); instead the denominator
// is normalized to integer-primitive form with positive leading coefficient,
// equality compares cross products, and addition keeps a shared denominator
// when both sides already agree on one. This is exactly what the
// hypergeometric moment sequences need: every moment carries the same
// structured denominator, so sums never expand.
class RationalFunction {
 public:
  RationalFunction() = default;  // zero over the empty variable list
  explicit RationalFunction(const MultiPoly& num);
  RationalFunction(const MultiPoly& num, const MultiPoly& den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  const std::vector<std::string>& vars() const { return num_.vars(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const Rat& s);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

  RationalFunction pow(unsigned e) const;

  // Exact conversion back to a polynomial; throws if the denominator does
  // not divide the numerator.
  MultiPoly to_poly() const;

  std::string str() const;

 private:
  void normalize();
  MultiPoly num_, den_;
};

}  // namespace hyperdet
