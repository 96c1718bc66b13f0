#pragma once

#include "hyperdet/hankel.hpp"
#include "hyperdet/pfaffian.hpp"

namespace hyperdet {

// Monic orthogonal polynomial family over a coefficient ring F, produced by
// Gram-Schmidt from moments or from a classical three-term recurrence
// x P_i = P_{i+1} + A_i P_i + B_i P_{i-1}. Polynomials are dense in the main
// variable; F carries any symbolic parameters.
template <class F>
struct MonicFamily {
  std::vector<DPoly<F>> polys;
  std::vector<F> A, B;      // B[0] is unused
  std::vector<F> norms;     // <P_i, P_i>, present when built from moments
};

// <x^shift f, g> under the functional with moments c.
template <class F>
F moment_pair(const std::vector<F>& c, const DPoly<F>& f, const DPoly<F>& g,
              int shift = 0) {
  F acc = zero_like(c.at(0));
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (is_zero_value(f.c[i])) continue;
    for (size_t j = 0; j < g.c.size(); ++j) {
      if (is_zero_value(g.c[j])) continue;
      acc = acc + f.c[i] * g.c[j] * c.at(i + j + size_t(shift));
    }
  }
  return acc;
}

template <class F>
DPoly<F> dp_scale_by(const DPoly<F>& p, const F& s) {
  DPoly<F> r = p;
  for (auto& x : r.c) x = x * s;
  r.trim();
  return r;
}

// Exact Gram-Schmidt on 1, x, x^2, ... under <f,g> = sum f_i g_j c_{i+j}.
// Needs moments up to c_{2N}. Divisions use field_div, so F may be a field
// or a polynomial ring in which the arising divisions are exact (Bell a).
// A vanishing squared norm (zero Hankel minor) is reported as degeneracy.
template <class F>
MonicFamily<F> monic_from_moments(const std::vector<F>& c, int N) {
  if (c.size() < size_t(2 * N + 1))
    throw std::invalid_argument("monic_from_moments: need moments up to 2N");
  MonicFamily<F> fam;
  const F zero = zero_like(c[0]);
  const F one = one_like(c[0]);
  fam.polys.push_back(DPoly<F>({one}));
  fam.norms.push_back(c[0]);
  if (is_zero_value(c[0])) throw std::domain_error("degenerate moment sequence");
  for (int m = 1; m <= N; ++m) {
    DPoly<F> cur;
    cur.c.assign(size_t(m) + 1, zero);
    cur.c.back() = one;
    for (int j = 0; j < m; ++j) {
      F num = moment_pair(c, cur, fam.polys[size_t(j)]);
      if (is_zero_value(num)) continue;
      F coef = field_div(num, fam.norms[size_t(j)]);
      cur = cur - dp_scale_by(fam.polys[size_t(j)], coef);
    }
    F nm = moment_pair(c, cur, cur);
    if (is_zero_value(nm) && m < N)  // the last norm may be unused downstream
      throw std::domain_error("degenerate moment sequence at order " + std::to_string(m));
    fam.polys.push_back(cur);
    fam.norms.push_back(nm);
  }
  fam.A.resize(size_t(N) + 1, zero);
  fam.B.resize(size_t(N) + 1, zero);
  for (int i = 0; i < N; ++i) {
    fam.A[size_t(i)] =
        field_div(moment_pair(c, fam.polys[size_t(i)], fam.polys[size_t(i)], 1),
                  fam.norms[size_t(i)]);
    if (i >= 1)
      fam.B[size_t(i)] = field_div(fam.norms[size_t(i)], fam.norms[size_t(i) - 1]);
  }
  return fam;
}

// Family from explicit recurrence coefficients; A and B sized >= N.
template <class F>
MonicFamily<F> family_from_recurrence(const std::vector<F>& A, const std::vector<F>& B,
                                      int N, const F& witness) {
  MonicFamily<F> fam;
  fam.A = A;
  fam.B = B;
  const F zero = zero_like(witness);
  const F one = one_like(witness);
  fam.polys.push_back(DPoly<F>({one}));
  for (int i = 0; i < N; ++i) {
    DPoly<F> x_pi;
    x_pi.c.assign(fam.polys.back().c.size() + 1, zero);
    for (size_t t = 0; t < fam.polys.back().c.size(); ++t)
      x_pi.c[t + 1] = fam.polys.back().c[t];
    DPoly<F> next = x_pi - dp_scale_by(fam.polys.back(), A.at(size_t(i)));
    if (i >= 1)
      next = next - dp_scale_by(fam.polys[size_t(i) - 1], B.at(size_t(i)));
    fam.polys.push_back(next);
  }
  return fam;
}

// Moments induced by a recurrence: c_m = (coefficient of P_0 in x^m) * c0.
template <class F>
std::vector<F> moments_from_recurrence(const std::vector<F>& A, const std::vector<F>& B,
                                       const F& c0, int count) {
  std::vector<F> c;
  c.reserve(size_t(count));
  const F zero = zero_like(c0);
  std::vector<F> coef{one_like(c0)};  // x^0 = P_0
  for (int m = 0; m < count; ++m) {
    c.push_back(coef[0] * c0);
    std::vector<F> next(coef.size() + 1, zero);
    for (size_t j = 0; j < coef.size(); ++j) {
      if (is_zero_value(coef[j])) continue;
      next[j + 1] = next[j + 1] + coef[j];
      next[j] = next[j] + coef[j] * A.at(j);
      if (j >= 1) next[j - 1] = next[j - 1] + coef[j] * B.at(j);
    }
    coef = std::move(next);
  }
  return c;
}

// Skew Gram data for the order-4 Pfaffian route: entries built from
// <x^r P_i, P_j'> - <x^r P_j, P_i'>. Checks the family is orthogonal for c.
template <class F>
SkewMatrix<F> pprime_gram(const std::vector<F>& c, const MonicFamily<F>& fam, int r,
                          int size) {
  if (size % 2 != 0 || size < 2) throw std::invalid_argument("pprime_gram: even size");
  if (fam.polys.size() < size_t(size))
    throw std::invalid_argument("pprime_gram: need " + std::to_string(size) +
                                " polynomials");
  const F zero = zero_like(c.at(0));
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      if (!is_zero_value(moment_pair(c, fam.polys[size_t(i)], fam.polys[size_t(j)])))
        throw std::domain_error("family is not orthogonal for these moments");
  std::vector<std::vector<F>> G(size_t(size), std::vector<F>(size_t(size), zero));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      G[size_t(i)][size_t(j)] =
          moment_pair(c, fam.polys[size_t(i)], fam.polys[size_t(j)].derivative(), r);
  SkewMatrix<F> M(size, zero);
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      M.set(i, j, G[size_t(i)][size_t(j)] - G[size_t(j)][size_t(i)]);
  return M;
}

// D_{n;r}^{(2)} via the de Bruijn Pfaffian of the P/P' bimoment matrix.
template <class F>
F det4_via_pfaffian(const std::vector<F>& c, const MonicFamily<F>& fam, int n, int r) {
  return pfaffian(pprime_gram(c, fam, r, 2 * n));
}

// Matrix of x^r-multiplication compressed to the first n basis directions,
// read off the three-term recurrence; D_{n;r}^{(1)} = det * D_n^{(1)}.
template <class T>
std::vector<std::vector<T>> projected_mult_matrix(const std::vector<T>& A,
                                                  const std::vector<T>& B, int r, int n) {
  if (r < 1) throw std::invalid_argument("projected_mult_matrix: r >= 1");
  const T zero = zero_like(A.at(0));
  std::vector<std::vector<T>> X(size_t(n), std::vector<T>(size_t(n), zero));
  for (int i = 0; i < n; ++i) {
    std::vector<T> coef(size_t(i) + 1, zero);
    coef[size_t(i)] = one_like(A.at(0));
    for (int t = 0; t < r; ++t) {
      std::vector<T> next(coef.size() + 1, zero);
      for (size_t j = 0; j < coef.size(); ++j) {
        if (is_zero_value(coef[j])) continue;
        next[j + 1] = next[j + 1] + coef[j];
        next[j] = next[j] + coef[j] * A.at(j);
        if (j >= 1) next[j - 1] = next[j - 1] + coef[j] * B.at(j);
      }
      coef = std::move(next);
    }
    for (int j = 0; j < n && j < static_cast<int>(coef.size()); ++j)
      X[size_t(i)][size_t(j)] = coef[size_t(j)];
  }
  return X;
}

template <class T>
T projected_mult_det(const std::vector<T>& A, const std::vector<T>& B, int r, int n) {
  return det_cofactor(projected_mult_matrix(A, B, r, n));
}

// Wronskian with rows indexed by derivative order 0..m-1.
template <class F>
DPoly<F> wronskian(const std::vector<DPoly<F>>& polys) {
  if (polys.empty()) throw std::invalid_argument("wronskian of empty list");
  const size_t m = polys.size();
  std::vector<std::vector<DPoly<F>>> mat(m, polys);
  for (size_t i = 1; i < m; ++i)
    for (size_t j = 0; j < m; ++j) mat[i][j] = mat[i - 1][j].derivative();
  return det_cofactor(mat);
}

// Both sides of the shifted-Hankel vs Wronskian identity, symbolic in y:
//   (-1)^{nr} n! det(c_{r+i+j}(y))  vs  mu_n(Delta^2) W(p_n..p_{n+r-1})(y)/prod j!
// with c_m(y) the centered moments of the functional. Needs moments up to
// 2(n+r-1). For r = 0 both sides are n! D_n^{(1)}.
template <class F>
std::pair<DPoly<F>, DPoly<F>> karlin_szego_check(const std::vector<F>& c, int n, int r,
                                                 int threads = 0) {
  const Rat nfact(factorial(unsigned(n)));
  F dn1 = hankel_fast(c, n, 1, 0, threads);
  if (r == 0) {
    DPoly<F> v({scale(dn1, nfact)});
    return {v, v};
  }
  const F zero = zero_like(c.at(0));
  auto centered = [&](int m) {
    DPoly<F> p;
    p.c.assign(size_t(m) + 1, zero);
    for (int t = 0; t <= m; ++t) {
      Rat s(binomial(unsigned(m), unsigned(t)));
      if (t % 2 != 0) s = -s;
      p.c[size_t(t)] = scale(c.at(size_t(m - t)), s);
    }
    p.trim();
    return p;
  };
  std::vector<std::vector<DPoly<F>>> mat;
  mat.assign(size_t(n), std::vector<DPoly<F>>(size_t(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mat[size_t(i)][size_t(j)] = centered(r + i + j);
  Rat lhs_scale = nfact;
  if ((n * r) % 2 != 0) lhs_scale = -lhs_scale;
  DPoly<F> lhs = scale(det_cofactor(mat), lhs_scale);

  auto fam = monic_from_moments(c, n + r - 1);
  std::vector<DPoly<F>> tail(fam.polys.begin() + n, fam.polys.end());
  DPoly<F> w = wronskian(tail);
  Rat fct(1);
  for (int j = 1; j < r; ++j) fct *= Rat(factorial(unsigned(j)));
  DPoly<F> rhs = dp_scale_by(scale(w, nfact / fct), dn1);
  return {lhs, rhs};
}

// Coefficient triangle of the order-2 Bell hyperdeterminants: row k lists
// T_{k,1..k} with D_2^{(k)}(b(a)) = sum_j T_{k,j} a^j, extracted from the
// exponential generating function exp[a(e^x + e^{-x} - 2)]/2.
std::vector<Int> bell_triangle(int k);

// Identity checks returning both sides as polynomials.
//   falling_factorial: D_n^{(k)} of sum_j s(r,j) b_{m+j}(a)  vs  a^{nr} D_n^{(k)}(b).
std::pair<UniPoly, UniPoly> falling_factorial_check(int r, int n, int k);
//   binomial_shift: d_n^{(k)}(r;N)  vs  binom(N,r)^n u^{nr} d_n^{(k)}(0;N-r).
std::pair<UniPoly, UniPoly> binomial_shift_check(int r, int N, int n, int k);

// Moments of the binomial-distribution derivative sequence in u = e^t:
// c_m = sum_j j^m binom(N,j) u^j.
std::vector<UniPoly> binomial_u_moments(int N, size_t count);

enum class ClassicalTag { charlier, laguerre, hermite, legendre, chebyshevU, krawtchouk, meixner };

struct ClassicalParams {
  Rat alpha;        // laguerre
  Rat p;            // krawtchouk
  Rat N;            // krawtchouk
  Rat beta, gamma;  // meixner
  bool symbolic_a = false;  // charlier: keep a as a symbol
  Rat a;                    // charlier numeric value when not symbolic
};

// Monic classical family by its three-term recurrence; coefficients live in
// Q[a] for the symbolic Charlier case and are constants otherwise.
MonicFamily<MultiPoly> classical_family(ClassicalTag tag, const ClassicalParams& par,
                                        int N);

}  // namespace hyperdet
