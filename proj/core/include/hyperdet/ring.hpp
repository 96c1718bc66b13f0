#pragma once

#include "hyperdet/rational_function.hpp"

namespace hyperdet {

// The evaluation kernels are generic over commutative Q-algebras: rationals,
// pi-tracked scalars, dense/sparse polynomials and rational functions. The
// helpers below supply the ring constants and rational scaling that operator
// overloads alone cannot express uniformly.

template <class T>
T zero_like(const T& witness) {
  return witness - witness;
}

inline Rat one_like(const Rat&) { return Rat(1); }
inline ExactScalar one_like(const ExactScalar&) { return ExactScalar(Rat(1)); }
inline UniPoly one_like(const UniPoly& w) { return UniPoly(Rat(1), w.var()); }
inline MultiPoly one_like(const MultiPoly& w) {
  return MultiPoly::constant(w.vars(), Rat(1));
}
inline RationalFunction one_like(const RationalFunction& w) {
  return RationalFunction(MultiPoly::constant(w.vars(), Rat(1)));
}

inline Rat scale(const Rat& x, const Rat& s) { return x * s; }
inline ExactScalar scale(const ExactScalar& x, const Rat& s) {
  return x * ExactScalar(s);
}
inline UniPoly scale(const UniPoly& x, const Rat& s) { return x * s; }
inline MultiPoly scale(const MultiPoly& x, const Rat& s) { return x * s; }
inline RationalFunction scale(const RationalFunction& x, const Rat& s) { return x * s; }

// Division as used by Gram-Schmidt: true division in fields, exact division
// (throwing on remainders) in polynomial rings.
inline Rat field_div(const Rat& a, const Rat& b) {
  if (b == 0) throw std::domain_error("division by zero");
  return a / b;
}
inline ExactScalar field_div(const ExactScalar& a, const ExactScalar& b) { return a / b; }
inline UniPoly field_div(const UniPoly& a, const UniPoly& b) { return a.exact_divide(b); }
inline MultiPoly field_div(const MultiPoly& a, const MultiPoly& b) {
  return a.exact_divide(b);
}
inline RationalFunction field_div(const RationalFunction& a, const RationalFunction& b) {
  return a / b;
}

inline bool is_zero_value(const Rat& x) { return x == 0; }
inline bool is_zero_value(const ExactScalar& x) { return x.is_zero(); }
inline bool is_zero_value(const UniPoly& x) { return x.is_zero(); }
inline bool is_zero_value(const MultiPoly& x) { return x.is_zero(); }
inline bool is_zero_value(const RationalFunction& x) { return x.is_zero(); }

// Dense polynomial in one distinguished variable with coefficients in an
// arbitrary ring F. Used for orthogonal polynomial families, Wronskians and
// Hankel matrices of moment polynomials, where the main variable is implicit.
template <class F>
struct DPoly {
  std::vector<F> c;  // degree 0 first; trailing zeros allowed transiently

  DPoly() = default;
  explicit DPoly(std::vector<F> coeffs) : c(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c.empty() && is_zero_value(c.back())) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  friend DPoly operator+(const DPoly& a, const DPoly& b) {
    DPoly r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), zero_like(b.c[0]));
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    r.trim();
    return r;
  }
  friend DPoly operator-(const DPoly& a) {
    DPoly r = a;
    for (auto& x : r.c) x = zero_like(x) - x;
    return r;
  }
  friend DPoly operator-(const DPoly& a, const DPoly& b) { return a + (-b); }
  friend DPoly operator*(const DPoly& a, const DPoly& b) {
    if (a.is_zero() || b.is_zero()) return DPoly();
    DPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, zero_like(a.c[0]));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  friend bool operator==(const DPoly& a, const DPoly& b) {
    DPoly d = a - b;
    return d.is_zero();
  }

  DPoly derivative() const {
    if (c.size() <= 1) return DPoly();
    DPoly r;
    r.c.reserve(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r.c.push_back(scale(c[i], Rat(static_cast<long>(i))));
    r.trim();
    return r;
  }
  F eval(const F& x) const {
    F r = zero_like(x);
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
  }
  F at0(const F& witness) const { return c.empty() ? zero_like(witness) : c[0]; }
};

template <class F>
DPoly<F> scale(const DPoly<F>& p, const Rat& s) {
  DPoly<F> r = p;
  for (auto& x : r.c) x = scale(x, s);
  r.trim();
  return r;
}
template <class F>
bool is_zero_value(const DPoly<F>& p) {
  return p.is_zero();
}

// Determinant by cofactor expansion; exact in any commutative ring, intended
// for the small matrices that arise here (n <= 6).
template <class T>
T det_cofactor(const std::vector<std::vector<T>>& m) {
  size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 1) return m[0][0];
  T acc = zero_like(m[0][0]);
  std::vector<std::vector<T>> minor(n - 1, std::vector<T>(n - 1, m[0][0]));
  for (size_t j = 0; j < n; ++j) {
    for (size_t r = 1; r < n; ++r) {
      size_t cc = 0;
      for (size_t col = 0; col < n; ++col) {
        if (col == j) continue;
        minor[r - 1][cc++] = m[r][col];
      }
    }
    T term = m[0][j] * det_cofactor(minor);
    if (j % 2 == 0)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc;
}

}  // namespace hyperdet
