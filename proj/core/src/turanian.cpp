#include "hyperdet/turanian.hpp"

#include "hyperdet/selberg.hpp"

namespace hyperdet {

TuranianFamily turanian_family_from_string(const std::string& name) {
  if (name == "legendre") return TuranianFamily::legendre;
  if (name == "laguerre") return TuranianFamily::laguerre;
  if (name == "hermite") return TuranianFamily::hermite;
  if (name == "charlier") return TuranianFamily::charlier;
  if (name == "meixner") return TuranianFamily::meixner;
  if (name == "krawtchouk") return TuranianFamily::krawtchouk;
  throw std::invalid_argument("unknown turanian family: " + name);
}

namespace {

std::vector<std::string> spec_vars(const TuranianSpec& spec) {
  if (spec.family == TuranianFamily::charlier) return {"a", "x"};
  return {"x"};
}

}  // namespace

std::vector<MultiPoly> turanian_moment_polys(const TuranianSpec& spec, size_t count) {
  const auto vars = spec_vars(spec);
  const MultiPoly x = MultiPoly::variable(vars, "x");
  auto cst = [&](const Rat& v) { return MultiPoly::constant(vars, v); };
  std::vector<MultiPoly> q;
  q.reserve(count);
  switch (spec.family) {
    case TuranianFamily::legendre: {
      q.push_back(cst(Rat(1)));
      if (count > 1) q.push_back(x);
      for (size_t m = 1; m + 1 < count; ++m) {
        long lm = static_cast<long>(m);
        q.push_back((x * q[m] * Rat(2 * lm + 1) - q[m - 1] * Rat(lm)) * rat(1, lm + 1));
      }
      break;
    }
    case TuranianFamily::laguerre: {
      for (size_t m = 0; m < count; ++m) {
        MultiPoly v = cst(Rat(0));
        for (size_t j = 0; j <= m; ++j) {
          Rat coef = pochhammer(Rat(-static_cast<long>(m)), j) /
                     (pochhammer(spec.alpha + 1, j) * Rat(factorial(j)));
          v += x.pow(unsigned(j)) * coef;
        }
        q.push_back(v);
      }
      break;
    }
    case TuranianFamily::hermite: {
      q.push_back(cst(Rat(1)));
      if (count > 1) q.push_back(x);
      for (size_t m = 1; m + 1 < count; ++m)
        q.push_back(x * q[m] - q[m - 1] * rat(static_cast<long>(m), 2));
      break;
    }
    case TuranianFamily::charlier: {
      const MultiPoly a = MultiPoly::variable(vars, "a");
      q.push_back(cst(Rat(1)));
      if (count > 1) q.push_back(x - a);
      for (size_t m = 1; m + 1 < count; ++m)
        q.push_back((x - a - cst(Rat(static_cast<long>(m)))) * q[m] -
                    a * q[m - 1] * Rat(static_cast<long>(m)));
      break;
    }
    case TuranianFamily::meixner: {
      if (spec.gamma == 0 || spec.gamma == 1)
        throw std::domain_error("meixner: gamma not in {0,1}");
      const Rat lam = (1 - spec.gamma) / spec.gamma;
      for (size_t m = 0; m < count; ++m) {
        MultiPoly v = cst(Rat(0));
        Rat lj(1);
        for (size_t j = 0; j <= m; ++j) {
          Rat coef = Rat(binomial(m, j)) * lj / pochhammer(spec.beta, j);
          v += poch_poly(x, j) * coef;
          lj *= lam;
        }
        q.push_back(v);
      }
      break;
    }
    case TuranianFamily::krawtchouk: {
      if (spec.p == 0) throw std::domain_error("krawtchouk: p != 0");
      if (count > size_t(spec.N) + 1)
        throw std::domain_error("krawtchouk: K_m defined only for m <= N");
      for (size_t m = 0; m < count; ++m) {
        MultiPoly v = cst(Rat(0));
        Rat pj(1);
        for (size_t j = 0; j <= m; ++j) {
          Rat denom = pochhammer(Rat(-spec.N), j) * Rat(factorial(j));
          Rat coef = pochhammer(Rat(-static_cast<long>(m)), j) / (denom * pj);
          v += poch_poly(-x, j) * coef;
          pj *= spec.p;
        }
        q.push_back(v);
      }
      break;
    }
  }
  return q;
}

MultiPoly turanian_bruteforce(const TuranianSpec& spec) {
  const size_t need = size_t(2 * spec.k * (spec.n - 1) + spec.r) + 1;
  return hankel_fast(turanian_moment_polys(spec, need), spec.n, spec.k, spec.r);
}

namespace {

// r = 0 closed forms, validated against the brute-force kernel in the tests.
MultiPoly turanian_closed_r0(const TuranianSpec& spec) {
  const auto vars = spec_vars(spec);
  const MultiPoly x = MultiPoly::variable(vars, "x");
  auto cst = [&](const Rat& v) { return MultiPoly::constant(vars, v); };
  const long n = spec.n, k = spec.k;
  const long w = k * n * (n - 1);  // isobaric weight, always even
  const Rat nfact(factorial(unsigned(n)));
  Rat kfn(1);
  for (long j = 0; j < n; ++j) kfn *= Rat(factorial(unsigned(k)));
  switch (spec.family) {
    case TuranianFamily::legendre: {
      ExactScalar s = selberg_value(spec.n, rat(1, 2), rat(1, 2), spec.k);
      Rat c = (s / ExactScalar(Rat(1), 2 * spec.n)).as_rat();  // S / pi^n
      Int two_w;
      mpz_ui_pow_ui(two_w.get_mpz_t(), 2, unsigned(w));
      c *= Rat(two_w) / nfact;
      return (x * x - cst(Rat(1))).pow(unsigned(w / 2)) * c;
    }
    case TuranianFamily::laguerre: {
      Rat c(1);
      for (long j = 0; j < n; ++j)
        c *= Rat(factorial(unsigned(j * k + k))) /
             pochhammer(spec.alpha + 1, unsigned(k * (n + j - 1)));
      c /= nfact * kfn;
      if ((w / 2) % 2 != 0) c = -c;
      return x.pow(unsigned(w)) * c;
    }
    case TuranianFamily::hermite: {
      Rat c(1);
      for (long j = 1; j <= n; ++j) c *= Rat(factorial(unsigned(j * k)));
      c /= nfact * kfn;
      Rat half = rat(1, 2);
      for (long t = 0; t < w / 2; ++t) c *= -half;
      return cst(c);
    }
    case TuranianFamily::charlier: {
      Rat c(1);
      for (long j = 0; j < n; ++j) c *= Rat(factorial(unsigned(j * k + k)));
      c /= nfact * kfn;
      MultiPoly prod = cst(c);
      for (long j = 0; j < n; ++j) prod *= poch_poly(-x, unsigned(j * k));
      return prod;
    }
    case TuranianFamily::meixner: {
      const Rat lam = (1 - spec.gamma) / spec.gamma;
      Rat c(1);
      for (long t = 0; t < w; ++t) c *= lam;
      c /= nfact * kfn;
      MultiPoly prod = cst(c);
      for (long j = 0; j < n; ++j) {
        prod *= poch_poly(x, unsigned(j * k)) * poch_poly(cst(spec.beta) - x, unsigned(j * k));
        prod = prod * (Rat(factorial(unsigned(j * k + k))) /
                       pochhammer(spec.beta, unsigned((n + j - 1) * k)));
      }
      return prod;
    }
    case TuranianFamily::krawtchouk: {
      Rat c(1);
      for (long t = 0; t < w; ++t) c /= spec.p;
      c /= nfact * kfn;
      MultiPoly prod = cst(c);
      for (long j = 0; j < n; ++j) {
        prod *= poch_poly(-x, unsigned(j * k)) * poch_poly(x - cst(Rat(spec.N)), unsigned(j * k));
        prod = prod * (Rat(factorial(unsigned(j * k + k))) /
                       pochhammer(Rat(-spec.N), unsigned((n + j - 1) * k)));
      }
      return prod;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

MultiPoly turanian_closed_form(const TuranianSpec& spec) {
  if (spec.r == 0) return turanian_closed_r0(spec);
  if (spec.k != 1 || spec.family == TuranianFamily::legendre ||
      spec.family == TuranianFamily::laguerre || spec.family == TuranianFamily::hermite)
    throw std::domain_error("turanian_closed_form: shifted case out of scope here");

  // k = 1, r > 0: D_{n;r} = (-1)^{nr} W(p_n..p_{n+r-1})(0)/(1!..(r-1)!) * D_n,
  // with p_i the monic orthogonal polynomials of the functional whose moments
  // are the Q_m(x); their coefficients are rational functions of x.
  const int n = spec.n, r = spec.r;
  TuranianSpec base = spec;
  base.r = 0;
  const size_t need = size_t(2 * (n + r - 1)) + 1;
  auto q = turanian_moment_polys(spec, need);
  std::vector<RationalFunction> c;
  c.reserve(q.size());
  for (const auto& m : q) c.emplace_back(m);
  auto fam = monic_from_moments(c, n + r - 1);
  std::vector<DPoly<RationalFunction>> tail(fam.polys.begin() + n, fam.polys.end());
  RationalFunction w0 = wronskian(tail).at0(c[0]);
  Rat fct(1);
  for (int j = 1; j < r; ++j) fct *= Rat(factorial(unsigned(j)));
  if ((n * r) % 2 != 0) fct = -fct;
  RationalFunction total = w0 * RationalFunction(turanian_closed_r0(base).promote(q[0].vars())) * (1 / fct);
  return total.to_poly();
}

std::pair<Rat, Rat> laplacian_power_check(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("laplacian_power_check");
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  MultiPoly f = vandermonde_poly(vars, unsigned(2 * k));
  const long N = long(k) * n * (n - 1) / 2;
  for (long t = 0; t < N; ++t) {
    MultiPoly lap(vars);
    for (const auto& v : vars) lap += f.derivative(v).derivative(v);
    f = lap;
  }
  Rat lhs = f.coeff(MultiPoly::Exponents(vars.size(), 0));
  Int twoN;
  mpz_ui_pow_ui(twoN.get_mpz_t(), 2, unsigned(N));
  Rat rhs = Rat(twoN * factorial(unsigned(N)));
  for (int j = 1; j <= n; ++j)
    rhs *= rat(factorial(unsigned(j * k)), factorial(unsigned(k)));
  return {lhs, rhs};
}

}  // namespace hyperdet
