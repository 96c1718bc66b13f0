#pragma once

#include "hyperdet/kaneko.hpp"

namespace hyperdet {

enum class SymBasis { monomial, schur, h, e, p };

// Symmetric function at a fixed variable count, stored as partition ->
// coefficient in the declared basis. Partitions fit in nvars rows.
struct SymExpansion {
  SymBasis basis = SymBasis::monomial;
  int nvars = 0;
  std::map<Partition, Rat> coeffs;

  friend bool operator==(const SymExpansion& a, const SymExpansion& b) {
    return a.basis == b.basis && a.nvars == b.nvars && a.coeffs == b.coeffs;
  }
};

std::vector<std::string> x_vars(int n);

// Basis elements expanded in x1..xn.
MultiPoly sym_basis_poly(SymBasis basis, const Partition& lambda, int n);
MultiPoly sym_expand(const SymExpansion& f);

// Extraction from an expanded symmetric polynomial.
SymExpansion monomial_extract(const MultiPoly& f, int n);
SymExpansion schur_extract(const MultiPoly& f, int n);

// Basis change. Supported: monomial <-> schur (bialternant at fixed n),
// schur <-> h (Jacobi-Trudi / expansion), e or p sources to any of those.
SymExpansion schur_convert(const SymExpansion& f, SymBasis target);

// Delta(x)^{2k} in n variables as a symmetric expansion.
SymExpansion vandermonde_power(int n, int k, SymBasis basis = SymBasis::monomial);

// D_n^{(k)}(h) two ways: the shifted-Vandermonde expansion
// (-1)^{n(n-1)/2} (x1..xn)^{n-1} Delta^{2(k-1)} and the e/p route
// (-1)^{n(n-1)/2} e_n^{n-k} det(p_{1+i+j})_{0..n-1}^{k-1}, both in the Schur
// basis. They must agree; the pair is returned for cross-validation.
std::pair<SymExpansion, SymExpansion> hankel_hyperdet_schur(int n, int k);

// Specialization h_m -> c_m of a schur- or h-basis expansion.
Rat specialize_hankel(const SymExpansion& f, const std::vector<Rat>& c);

// Alternant sum_sigma eps(sigma) x^{sigma lambda} for an integer vector.
MultiPoly alternant(const std::vector<std::string>& vars, const std::vector<int>& lambda);

// The linear map sending augmented monomials m~_lambda to h_lambda and any
// monomial with a negative exponent to zero; input must be symmetric.
SymExpansion phi_map(const MultiPoly& f, int n);

// 1/2 sum (-1)^j binom(m,j) U_j U_{m-j} and its closed form
// -[4(x^2-1)]^{m/2-1} (zero for odd m), as polynomials in x.
std::pair<UniPoly, UniPoly> chebyshev_identity(int m);

// 1/2 sum (-1)^j binom(2k,j) f_j f_{2k-j} = 5^{k-1} for f = 1,1,2,3,5,...
std::pair<Rat, Rat> fibonacci_identity(int k);

}  // namespace hyperdet
