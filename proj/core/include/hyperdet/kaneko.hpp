#pragma once

#include "hyperdet/orthopoly.hpp"

namespace hyperdet {

// Weight kinds for exactly integrable Selberg-type measures:
//   jacobi  : x^{a-1}(1-x)^{b-1} on [0,1]
//   laguerre: x^{a-1} e^{-x}     on (0,inf)
//   hermite : e^{-x^2}           on R
// a, b must have denominator 1 or 2 so every monomial integral is an
// ExactScalar; for fixed parameters all nonzero monomial integrals carry the
// same power of pi, which is what keeps Gram-Schmidt rational.
enum class MeasureKind { jacobi, laguerre, hermite };

struct SelbergMeasure {
  MeasureKind kind = MeasureKind::jacobi;
  Rat a, b;
  int two_k = 2;  // even Vandermonde power
  int r = 1;      // variable count
};

ExactScalar measure_moment_1d(MeasureKind kind, const Rat& a, const Rat& b, long m);

// Exact integral of (monomial) * Delta^{two_k} * prod w(y_i) dy.
ExactScalar measure_moment(const SelbergMeasure& mu, const std::vector<int>& mono);

using Partition = std::vector<int>;  // weakly decreasing, no trailing zeros

// Partition order used for the multivariate Gram-Schmidt: by weight first,
// then within a weight the partition with the larger part at the first
// difference from the right comes first (so the rectangle (n^r) leads its
// weight class).
bool sym_partition_precedes(const Partition& mu, const Partition& nu, int r);
std::vector<Partition> partitions_up_to(int max_weight, int max_len);

struct SymOrthoBasis {
  std::vector<Partition> order;
  std::vector<MultiPoly> polys;  // over y1..yr, leading term m_kappa
  const MultiPoly& at(const Partition& kappa) const;
};

// Gram-Schmidt on monomial symmetric functions under the measure pairing.
SymOrthoBasis gram_schmidt_sym(const SelbergMeasure& mu, int max_weight);

// m_kappa in the given variables.
MultiPoly monomial_sym_poly(const std::vector<std::string>& vars, const Partition& kappa);

std::vector<std::string> y_vars(int r);

// Exact value of int R(x,y) Delta(x)^{2k} prod w(x_i) dx as a polynomial in
// y_1..y_r; a reserved variable "sqrtpi" carries any surviving power of pi
// (hermite weight, or half-integer jacobi parameters).
MultiPoly kaneko_lhs(int n, int r, const Rat& a, const Rat& b, int k, MeasureKind variant);

// Both sides of the rectangular-shape evaluation of the Jacobi-type
// R-insertion integral: left the direct integral, right
// 2^{-nr} S_n(a,b,k) p_{(n^r)}(1-2y) with p built by gram_schmidt_sym on the
// [0,1] side and carried to [-1,1] by the affine bridge.
std::pair<MultiPoly, MultiPoly> kaneko_check(int n, int r, const Rat& a, const Rat& b,
                                             int k);

// Rectangular multivariate Jacobi polynomials as hyperdeterminants:
// Z p_{(n^r)}(t) vs n! D_n^{(k)}(c(t)) with c_m(t) = int x^m prod(t_j - x) w dx
// on [-1,1] and Z = 2^{kn(n-1)+n(a+b+r-2)} S_n(a,b,k).
std::pair<MultiPoly, MultiPoly> heine_hyperdet_check(int n, int r, int k, const Rat& a,
                                                     const Rat& b);

// <1, R(y,x)>_1 vs mu_n(Delta^2) p_{(n^r)}(y) for an arbitrary rational
// moment functional; the right side uses the alternant/Vandermonde quotient
// of the one-variable monic orthogonal polynomials.
std::pair<MultiPoly, MultiPoly> leclerc_check(const std::vector<Rat>& moments, int n,
                                              int r);

// The [0,1] <-> [-1,1] bridge: q on [0,1] with leading term m_kappa maps to
// p(t) = (-2)^{|kappa|} q((1-t)/2), the [-1,1]-side polynomial.
MultiPoly affine_to_pm1(const MultiPoly& q, int weight);

}  // namespace hyperdet
