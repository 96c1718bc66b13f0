#pragma once

#include "hyperdet/hankel.hpp"

namespace hyperdet {

struct SelbergParams {
  int n;
  Rat a, b;
  int k;
};

// Closed form of the n-dimensional Beta-type integral with |Delta|^{2k}
// interaction; exact for a, b with denominator 1 or 2.
ExactScalar selberg_value(const SelbergParams& p);
ExactScalar selberg_value(int n, const Rat& a, const Rat& b, int k);

// The (0,inf) Gamma-weight analogue.
ExactScalar laguerre_selberg_value(int n, const Rat& alpha, int k);

enum class FamilyTag {
  factorial,
  gamma_shifted,      // c_n = Gamma(n+1+alpha), integer alpha >= 0
  catalan,
  central_binomial,
  two_n_over_n,       // c_n = (2n)!/n!
  hilbert,            // c_n = 1/(n+1)
  hilbert_shifted,    // c_n = 1/(n+alpha+1)
  inverse_factorial,  // c_n = 1/n!
  bell,               // c_n = b_n(a), symbolic
  pochhammer_ratio,   // c_n = (a)_n/(b)_n
};

struct SequenceFamily {
  FamilyTag tag = FamilyTag::factorial;
  Rat alpha;  // gamma_shifted / hilbert_shifted parameter
  Rat a, b;   // pochhammer_ratio parameters

  static SequenceFamily simple(FamilyTag t) { return {t, Rat(0), Rat(0), Rat(0)}; }
  static SequenceFamily shifted(FamilyTag t, const Rat& alpha) {
    return {t, alpha, Rat(0), Rat(0)};
  }
  static SequenceFamily ratio(const Rat& a, const Rat& b) {
    return {FamilyTag::pochhammer_ratio, Rat(0), a, b};
  }
};

FamilyTag family_tag_from_string(const std::string& name);
std::string family_tag_to_string(FamilyTag tag);

// Rational moments c_0..c_{count-1}; throws for the symbolic Bell family.
std::vector<Rat> family_moments(const SequenceFamily& fam, size_t count);

// Bell polynomials b_0..b_{count-1}(a), the moments of the Poisson-type
// discrete measure, via b_{n+1} = a (b_n + b_n').
std::vector<UniPoly> bell_polynomials(size_t count);

// The paper-level closed forms for D_{n;r}^{(k)} of the named families. All
// powers of pi cancel; the result of a combinatorial family is rational.
// Throws std::domain_error for unsupported (family, r) combinations.
ExactScalar closed_form_hankel(const SequenceFamily& fam, int n, int k, int r);

// Selberg's evaluation recovered three ways from the hyperdeterminants of
// the Pochhammer-ratio sequence c_m = (a)_m/(b)_m, plus the direct kernel.
struct AppendixAReport {
  Rat direct, via_hilbert, via_inverse_factorial, via_factorial;
  bool all_equal() const {
    return direct == via_hilbert && direct == via_inverse_factorial &&
           direct == via_factorial;
  }
};
AppendixAReport appendixA_consistency(int n, const Rat& a, const Rat& b, int k);

// A coefficient of the hypergeometric ratio polynomials P, Q: either a named
// symbol or a fixed rational.
struct RCoeff {
  bool symbolic = true;
  Rat value;
  static RCoeff sym() { return {true, Rat(0)}; }
  static RCoeff val(const Rat& v) { return {false, v}; }
};

// For the moment recurrence c_m = c_{m-1} P(m)/Q(m), strips the closed-form
// prefactor off D_n^{(k)}(c) and returns the residual polynomial R with
// integer coefficients in the symbolic P/Q coefficients (a0..adegP, b0..bdegQ).
MultiPoly hypergeom_R_extract(const std::vector<RCoeff>& P_coeffs,
                              const std::vector<RCoeff>& Q_coeffs, int n, int k);

// Closed forms for the odd-order pseudo-hyperdeterminants with exponent
// patterns (1^s, 0^{n-s}) and, for the factorial case, (2^m, 1^s, 0^{n-m-s}).
//   case 1: c_n = 1/(n+1);  case 2: c_n = Gamma(a+n)/Gamma(b+n);  case 3: c_n = n!.
ExactScalar pseudo_closed_form(int kase, int n, int k, int s, int m, const Rat& a,
                               const Rat& b);

// The matching moment sequences, for the brute-force oracle.
std::vector<ExactScalar> pseudo_moments(int kase, const Rat& a, const Rat& b,
                                        size_t count);

}  // namespace hyperdet
