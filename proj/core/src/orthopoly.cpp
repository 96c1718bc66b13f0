#include "hyperdet/orthopoly.hpp"

#include "hyperdet/selberg.hpp"

namespace hyperdet {

std::vector<Int> bell_triangle(int k) {
  if (k < 1) throw std::invalid_argument("bell_triangle: k >= 1");
  const size_t deg = size_t(2 * k);
  const UniPoly zero(Rat(0), "a");
  // S(x) = a (e^x + e^{-x} - 2) truncated at x^{2k}; coefficients in Q[a].
  std::vector<UniPoly> S(deg + 1, zero);
  for (int m = 1; m <= k; ++m)
    S[size_t(2 * m)] = UniPoly::variable("a") * rat(2, 1) * rat(Int(1), factorial(unsigned(2 * m)));
  std::vector<UniPoly> E(deg + 1, zero), Spow(deg + 1, zero);
  E[0] = UniPoly(Rat(1), "a");
  Spow[0] = UniPoly(Rat(1), "a");
  Rat jfact(1);
  for (int j = 1; j <= k; ++j) {
    std::vector<UniPoly> next(deg + 1, zero);
    for (size_t t1 = 0; t1 <= deg; ++t1) {
      if (Spow[t1].is_zero()) continue;
      for (size_t t2 = 2; t1 + t2 <= deg; ++t2)
        next[t1 + t2] += Spow[t1] * S[t2];
    }
    Spow = std::move(next);
    jfact *= Rat(j);
    for (size_t t = 0; t <= deg; ++t) E[t] += Spow[t] * (1 / jfact);
  }
  UniPoly d2k = E[deg] * (Rat(factorial(unsigned(2 * k))) / 2);
  std::vector<Int> row;
  for (int j = 1; j <= k; ++j) {
    Rat c = d2k.coeff(size_t(j));
    if (c.get_den() != 1) throw std::logic_error("bell triangle coefficient not integral");
    row.push_back(c.get_num());
  }
  return row;
}

std::pair<UniPoly, UniPoly> falling_factorial_check(int r, int n, int k) {
  if (r < 0 || n < 1 || k < 1) throw std::invalid_argument("falling_factorial_check");
  const size_t base = size_t(2 * k * (n - 1)) + 1;
  auto b = bell_polynomials(base + size_t(r));
  std::vector<UniPoly> shifted;
  for (size_t m = 0; m < base; ++m) {
    UniPoly v(Rat(0), "a");
    for (int j = 0; j <= r; ++j)
      v += b[m + size_t(j)] * Rat(stirling_first(unsigned(r), unsigned(j)));
    shifted.push_back(v);
  }
  UniPoly lhs = hankel_fast(shifted, n, k, 0);
  UniPoly rhs = hankel_fast(b, n, k, 0) * UniPoly::variable("a").pow(unsigned(n * r));
  return {lhs, rhs};
}

std::vector<UniPoly> binomial_u_moments(int N, size_t count) {
  std::vector<UniPoly> c;
  c.reserve(count);
  for (size_t m = 0; m < count; ++m) {
    std::vector<Rat> coeffs(size_t(N) + 1, Rat(0));
    for (int j = 0; j <= N; ++j) {
      Rat jm(1);
      for (size_t t = 0; t < m; ++t) jm *= Rat(j);
      coeffs[size_t(j)] = jm * Rat(binomial(unsigned(N), unsigned(j)));
    }
    c.emplace_back(std::move(coeffs), "u");
  }
  return c;
}

namespace {

// a_m(N) = sum_j (-j)^m (-1)^j binom(N,j) u^j, the derivative sequence of
// (1 - e^{-t})^N in u = e^{-t}; with the extra factor Q(-j) = (-1)^r binom(j,r)
// when the falling-factorial insertion Q(s) = (s)_r / r! is present.
std::vector<UniPoly> shifted_binomial_moments(int N, int r, size_t count) {
  std::vector<UniPoly> c;
  c.reserve(count);
  for (size_t m = 0; m < count; ++m) {
    std::vector<Rat> coeffs(size_t(N) + 1, Rat(0));
    for (int j = 0; j <= N; ++j) {
      Rat v(binomial(unsigned(N), unsigned(j)));
      if (j % 2 != 0) v = -v;
      Rat mj(1);
      for (size_t t = 0; t < m; ++t) mj *= Rat(-j);
      v *= mj;
      if (r > 0) {
        Rat q(binomial(unsigned(j), unsigned(r)));
        if (r % 2 != 0) q = -q;
        v *= q;
      }
      coeffs[size_t(j)] = v;
    }
    c.emplace_back(std::move(coeffs), "u");
  }
  return c;
}

}  // namespace

std::pair<UniPoly, UniPoly> binomial_shift_check(int r, int N, int n, int k) {
  if (r < 0 || r > N || n < 1 || k < 1)
    throw std::invalid_argument("binomial_shift_check: need 0 <= r <= N");
  const size_t need = size_t(2 * k * (n - 1)) + 1;
  UniPoly lhs = hankel_fast(shifted_binomial_moments(N, r, need), n, k, 0);
  UniPoly d0 = hankel_fast(shifted_binomial_moments(N - r, 0, need), n, k, 0);
  Rat pre(1);
  for (int i = 0; i < n; ++i) pre *= Rat(binomial(unsigned(N), unsigned(r)));
  UniPoly rhs = d0 * UniPoly::variable("u").pow(unsigned(n * r)) * pre;
  return {lhs, rhs};
}

MonicFamily<MultiPoly> classical_family(ClassicalTag tag, const ClassicalParams& par,
                                        int N) {
  std::vector<std::string> vars;
  if (tag == ClassicalTag::charlier && par.symbolic_a) vars.push_back("a");
  auto cst = [&](const Rat& v) { return MultiPoly::constant(vars, v); };
  std::vector<MultiPoly> A(size_t(N) + 1, cst(Rat(0))), B(size_t(N) + 1, cst(Rat(0)));
  for (int i = 0; i <= N; ++i) {
    const Rat ri(static_cast<long>(i));
    switch (tag) {
      case ClassicalTag::charlier: {
        MultiPoly a = par.symbolic_a ? MultiPoly::variable(vars, "a") : cst(par.a);
        A[size_t(i)] = a + cst(ri);
        B[size_t(i)] = a * ri;
        break;
      }
      case ClassicalTag::laguerre:
        A[size_t(i)] = cst(2 * ri + par.alpha + 1);
        B[size_t(i)] = cst(ri * (ri + par.alpha));
        break;
      case ClassicalTag::hermite:
        B[size_t(i)] = cst(ri / 2);
        break;
      case ClassicalTag::legendre:
        if (i >= 1) B[size_t(i)] = cst(ri * ri / (4 * ri * ri - 1));
        break;
      case ClassicalTag::chebyshevU:
        if (i >= 1) B[size_t(i)] = cst(rat(1, 4));
        break;
      case ClassicalTag::krawtchouk:
        A[size_t(i)] = cst(par.p * (par.N - ri) + ri * (1 - par.p));
        B[size_t(i)] = cst(ri * par.p * (1 - par.p) * (par.N + 1 - ri));
        break;
      case ClassicalTag::meixner: {
        Rat g = par.gamma;
        if (g == 1) throw std::domain_error("meixner: gamma != 1");
        A[size_t(i)] = cst((ri + (ri + par.beta) * g) / (1 - g));
        B[size_t(i)] = cst(ri * (ri + par.beta - 1) * g / ((1 - g) * (1 - g)));
        break;
      }
    }
  }
  auto fam = family_from_recurrence(A, B, N, cst(Rat(1)));
  fam.A = std::move(A);
  fam.B = std::move(B);
  return fam;
}

}  // namespace hyperdet
