#pragma once

#include "hyperdet/orthopoly.hpp"

namespace hyperdet {

// Hankel hyperdeterminants whose entries are orthogonal polynomials in x.
// Families follow the normalizations under which the closed forms hold:
// Legendre is standard (P_m(1) = 1), Laguerre is 1F1(-m; alpha+1; x),
// Hermite and Charlier are monic, Meixner and Krawtchouk are hypergeometric.
enum class TuranianFamily { legendre, laguerre, hermite, charlier, meixner, krawtchouk };

struct TuranianSpec {
  TuranianFamily family;
  int n = 1;
  int k = 1;
  int r = 0;
  Rat alpha;        // laguerre: integer alpha keeps moments rational
  Rat beta, gamma;  // meixner
  Rat p;            // krawtchouk
  int N = 0;        // krawtchouk
};

TuranianFamily turanian_family_from_string(const std::string& name);

// Q_0..Q_{count-1} as polynomials in x (Charlier also carries the symbol a).
std::vector<MultiPoly> turanian_moment_polys(const TuranianSpec& spec, size_t count);

// D_{n;r}^{(k)} of the polynomial moment sequence, by the fast Hankel kernel.
MultiPoly turanian_bruteforce(const TuranianSpec& spec);

// Closed forms: r = 0 for all six families; r > 0 at k = 1 for Charlier,
// Meixner and Krawtchouk through the Wronskian of the representing
// functional's orthogonal polynomials. Everything else is out of scope here.
MultiPoly turanian_closed_form(const TuranianSpec& spec);

// Applies (sum_j d^2/dx_j^2)^{kn(n-1)/2} to the expanded Delta(x)^{2k},
// evaluates at 0, and returns it next to 2^N N! prod_j (jk)!/k!^n.
std::pair<Rat, Rat> laplacian_power_check(int n, int k);

}  // namespace hyperdet
