#pragma once

#include <string>
#include <vector>

#include "hyperdet/exact_scalar.hpp"

namespace hyperdet {

// Dense univariate polynomial over the rationals. Coefficients are stored
// from degree 0 up with a nonzero leading coefficient (the zero polynomial
// is the empty vector). The indeterminate carries a name so that values in
// different variables (a, x, u, y) don't mix silently.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const Rat& constant, std::string var = "x");
  UniPoly(std::vector<Rat> coeffs, std::string var = "x");

  static UniPoly variable(const std::string& name = "x");

  const std::vector<Rat>& coeffs() const { return c_; }
  const std::string& var() const { return var_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const Rat& s);
  friend bool operator==(const UniPoly& a, const UniPoly& b);
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }
  UniPoly& operator+=(const UniPoly& b) { return *this = *this + b; }
  UniPoly& operator-=(const UniPoly& b) { return *this = *this - b; }
  UniPoly& operator*=(const UniPoly& b) { return *this = *this * b; }

  UniPoly pow(unsigned e) const;
  UniPoly derivative() const;
  Rat eval(const Rat& x) const;
  ExactScalar eval(const ExactScalar& x) const;

  // Quotient of an exact division; throws if the remainder is nonzero.
  UniPoly exact_divide(const UniPoly& d) const;

  // Canonical text form, graded (here: degree) descending, e.g. "6*a^2+a".
  std::string str() const;

 private:
  void trim();
  void check_compatible(const UniPoly& other) const;
  std::vector<Rat> c_;
  std::string var_ = "x";
};

}  // namespace hyperdet
