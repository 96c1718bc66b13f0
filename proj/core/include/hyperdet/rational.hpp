#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hyperdet {

// All scalar arithmetic in this library is exact. Integers and rationals are
// GMP arbitrary-precision values; mpq_class values are kept canonical
// (lowest terms, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat q(num);
  q /= Rat(den);
  return q;
}

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);

// Odd double factorial with the convention (-1)!! = 1.
Int double_factorial(long n);

// Signed Stirling numbers of the first kind s(n,k) and Stirling numbers of
// the second kind S(n,k), by their triangular recurrences. k > n is an error.
Int stirling_first(unsigned n, unsigned k);
Int stirling_second(unsigned n, unsigned k);

// Rising factorial (a)_n = a(a+1)...(a+n-1); 1 for n = 0.
Rat pochhammer(const Rat& a, unsigned long n);

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

}  // namespace hyperdet
