#include "hyperdet/selberg.hpp"

#include <algorithm>

namespace hyperdet {

namespace {

Rat pow2(long e) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e >= 0 ? e : -e));
  return e >= 0 ? Rat(p) : rat(Int(1), p);
}

Rat pow_rat(const Rat& base, long e) {
  Rat r(1);
  for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= base;
  if (e < 0) {
    if (r == 0) throw std::domain_error("zero to a negative power");
    r = 1 / r;
  }
  return r;
}

ExactScalar pi_power(int half_power) { return ExactScalar(Rat(1), half_power); }

}  // namespace

ExactScalar selberg_value(const SelbergParams& p) {
  return selberg_value(p.n, p.a, p.b, p.k);
}

ExactScalar selberg_value(int n, const Rat& a, const Rat& b, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("selberg_value: n, k >= 1");
  if (a <= 0 || b <= 0) throw std::domain_error("selberg_value: a, b > 0");
  ExactScalar r(Rat(1));
  const Rat kk(static_cast<long>(k));
  const ExactScalar gk1 = gamma_exact(kk + 1);
  for (int j = 0; j < n; ++j) {
    const Rat jk = Rat(static_cast<long>(j)) * kk;
    ExactScalar num = gamma_exact(a + jk) * gamma_exact(b + jk) *
                      gamma_exact(Rat(static_cast<long>(j + 1)) * kk + 1);
    ExactScalar den = gamma_exact(a + b + Rat(static_cast<long>(n + j - 1)) * kk) * gk1;
    r = r * (num / den);
  }
  return r;
}

ExactScalar laguerre_selberg_value(int n, const Rat& alpha, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("laguerre_selberg_value: n, k >= 1");
  if (alpha <= 0) throw std::domain_error("laguerre_selberg_value: alpha > 0");
  ExactScalar r(Rat(1));
  const Rat kk(static_cast<long>(k));
  const ExactScalar gk1 = gamma_exact(kk + 1);
  for (int j = 0; j < n; ++j) {
    const Rat jk = Rat(static_cast<long>(j)) * kk;
    r = r * (gamma_exact(kk + jk + 1) * gamma_exact(alpha + jk) / gk1);
  }
  return r;
}

FamilyTag family_tag_from_string(const std::string& name) {
  if (name == "factorial") return FamilyTag::factorial;
  if (name == "gamma_shifted") return FamilyTag::gamma_shifted;
  if (name == "catalan") return FamilyTag::catalan;
  if (name == "central_binomial") return FamilyTag::central_binomial;
  if (name == "two_n_over_n") return FamilyTag::two_n_over_n;
  if (name == "hilbert") return FamilyTag::hilbert;
  if (name == "hilbert_shifted") return FamilyTag::hilbert_shifted;
  if (name == "inverse_factorial") return FamilyTag::inverse_factorial;
  if (name == "bell") return FamilyTag::bell;
  if (name == "pochhammer_ratio") return FamilyTag::pochhammer_ratio;
  throw std::invalid_argument("unknown family: " + name);
}

std::string family_tag_to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::factorial: return "factorial";
    case FamilyTag::gamma_shifted: return "gamma_shifted";
    case FamilyTag::catalan: return "catalan";
    case FamilyTag::central_binomial: return "central_binomial";
    case FamilyTag::two_n_over_n: return "two_n_over_n";
    case FamilyTag::hilbert: return "hilbert";
    case FamilyTag::hilbert_shifted: return "hilbert_shifted";
    case FamilyTag::inverse_factorial: return "inverse_factorial";
    case FamilyTag::bell: return "bell";
    case FamilyTag::pochhammer_ratio: return "pochhammer_ratio";
  }
  throw std::logic_error("unreachable");
}

std::vector<Rat> family_moments(const SequenceFamily& fam, size_t count) {
  std::vector<Rat> c;
  c.reserve(count);
  for (size_t m = 0; m < count; ++m) {
    const unsigned long mu = static_cast<unsigned long>(m);
    switch (fam.tag) {
      case FamilyTag::factorial:
        c.emplace_back(factorial(mu));
        break;
      case FamilyTag::gamma_shifted: {
        if (fam.alpha.get_den() != 1 || fam.alpha < 0)
          throw std::domain_error("gamma_shifted: alpha must be a nonnegative integer");
        c.emplace_back(factorial(mu + fam.alpha.get_num().get_ui()));
        break;
      }
      case FamilyTag::catalan:
        c.push_back(rat(binomial(2 * mu, mu), Int(static_cast<long>(m + 1))));
        break;
      case FamilyTag::central_binomial:
        c.emplace_back(binomial(2 * mu, mu));
        break;
      case FamilyTag::two_n_over_n:
        c.push_back(rat(factorial(2 * mu), factorial(mu)));
        break;
      case FamilyTag::hilbert:
        c.push_back(rat(1, static_cast<long>(m + 1)));
        break;
      case FamilyTag::hilbert_shifted:
        c.push_back(1 / (Rat(static_cast<long>(m + 1)) + fam.alpha));
        break;
      case FamilyTag::inverse_factorial:
        c.push_back(rat(Int(1), factorial(mu)));
        break;
      case FamilyTag::pochhammer_ratio:
        c.push_back(pochhammer(fam.a, mu) / pochhammer(fam.b, mu));
        break;
      case FamilyTag::bell:
        throw std::domain_error("bell moments are symbolic; use bell_polynomials");
    }
  }
  return c;
}

std::vector<UniPoly> bell_polynomials(size_t count) {
  std::vector<UniPoly> b;
  b.reserve(count);
  const UniPoly a = UniPoly::variable("a");
  b.emplace_back(Rat(1), "a");
  for (size_t m = 1; m < count; ++m) b.push_back(a * (b.back() + b.back().derivative()));
  return b;
}

namespace {

// F(n,k): factorial family at r = 0.
Rat factorial_closed(int n, int k) {
  Rat prod(1);
  for (int j = 0; j < n; ++j)
    prod *= Rat(factorial(unsigned(k + k * j)) * factorial(unsigned(k * j)));
  Rat kf(factorial(unsigned(k)));
  return prod / (Rat(factorial(unsigned(n))) * pow_rat(kf, n));
}

// I(k,n): inverse factorials at r = 0.
Rat inverse_factorial_closed(int n, int k) {
  Rat prod(1);
  for (int i = 0; i < n; ++i)
    prod *= rat(factorial(unsigned(k * i)), factorial(unsigned(k * (n + i - 1))));
  Rat kf(factorial(unsigned(k)));
  Rat r = Rat(factorial(unsigned(k * n))) * prod /
          (Rat(factorial(unsigned(n))) * pow_rat(kf, n));
  if ((long(k) * n * (n - 1) / 2) % 2 != 0) r = -r;
  return r;
}

}  // namespace

ExactScalar closed_form_hankel(const SequenceFamily& fam, int n, int k, int r) {
  if (n < 1 || k < 1 || r < 0)
    throw std::invalid_argument("closed_form_hankel: bad shape");
  const long N = n, K = k, R = r;
  const Rat nfact(factorial(unsigned(n)));
  switch (fam.tag) {
    case FamilyTag::factorial:
    case FamilyTag::gamma_shifted: {
      Rat alpha = fam.tag == FamilyTag::factorial ? Rat(0) : fam.alpha;
      if (alpha.get_den() != 1 || alpha < 0)
        throw std::domain_error("gamma_shifted: alpha must be a nonnegative integer");
      long a = alpha.get_num().get_si() + R;
      Rat prod(1);
      for (long j = 0; j < N; ++j)
        prod *= Rat(factorial(unsigned(K + j * K)) * factorial(unsigned(a + j * K)));
      Rat kf(factorial(unsigned(k)));
      return ExactScalar(prod / (nfact * pow_rat(kf, N)));
    }
    case FamilyTag::catalan: {
      ExactScalar s = selberg_value(n, Rat(R) + rat(1, 2), rat(3, 2), k);
      Rat pre = pow2(2 * K * N * (N - 1) + N * (2 * R + 1)) / nfact;
      return scale(s / pi_power(2 * n), pre);
    }
    case FamilyTag::central_binomial: {
      ExactScalar s = selberg_value(n, Rat(R) + rat(1, 2), rat(1, 2), k);
      Rat pre = pow2(2 * (K * N * (N - 1) + N * R)) / nfact;
      return scale(s / pi_power(2 * n), pre);
    }
    case FamilyTag::two_n_over_n: {
      ExactScalar s = laguerre_selberg_value(n, Rat(R) + rat(1, 2), k);
      Rat pre = pow2(2 * N * (K * (N - 1) + R)) / nfact;
      return scale(s / pi_power(n), pre);
    }
    case FamilyTag::hilbert:
      return scale(selberg_value(n, Rat(1 + R), Rat(1), k), 1 / nfact);
    case FamilyTag::hilbert_shifted:
      return scale(selberg_value(n, Rat(1 + R) + fam.alpha, Rat(1), k), 1 / nfact);
    case FamilyTag::inverse_factorial:
      if (r != 0) throw std::domain_error("inverse_factorial: only r = 0 is closed");
      return ExactScalar(inverse_factorial_closed(n, k));
    case FamilyTag::pochhammer_ratio: {
      // Shifts fold into the parameters: c_{m+r} = ((a)_r/(b)_r) (a+r)_m/(b+r)_m,
      // and the hyperdeterminant is homogeneous of degree n.
      Rat a = fam.a + Rat(R), b = fam.b + Rat(R);
      Rat lam = pochhammer(fam.a, unsigned(r)) / pochhammer(fam.b, unsigned(r));
      Rat prod = factorial_closed(n, k);
      for (long m = 1; m <= N; ++m) {
        unsigned long e = static_cast<unsigned long>(K * (m - 1));
        prod *= pochhammer(a, e) * pochhammer(b - a, e) /
                (Rat(factorial(e)) * pochhammer(b, unsigned(K * (N + m - 2))));
      }
      return ExactScalar(pow_rat(lam, N) * prod);
    }
    case FamilyTag::bell:
      throw std::domain_error("bell: no closed form; evaluate with hankel_fast");
  }
  throw std::logic_error("unreachable");
}

AppendixAReport appendixA_consistency(int n, const Rat& a, const Rat& b, int k) {
  if (!(b > a) || a <= 0) throw std::domain_error("appendixA: need 0 < a < b");
  const long N = n, K = k;
  auto c = family_moments(SequenceFamily::ratio(a, b), size_t(2 * k * (n - 1) + 1));
  AppendixAReport rep;
  rep.direct = hankel_fast(c, n, k, 0);

  Rat base(1);  // prod (a)_{k(m-1)} (b-a)_{k(m-1)} / (b)_{k(n+m-2)}
  for (long m = 1; m <= N; ++m) {
    unsigned long e = static_cast<unsigned long>(K * (m - 1));
    base *= pochhammer(a, e) * pochhammer(b - a, e) /
            pochhammer(b, unsigned(K * (N + m - 2)));
  }

  Rat hilbert_extra(1), factorial_extra(1), invfact_extra(1);
  for (long m = 1; m <= N; ++m) {
    Rat f1(factorial(unsigned(K * (m - 1))));
    Rat f2(factorial(unsigned(1 + K * (m + N - 2))));
    Rat f3(factorial(unsigned(K * (N + m - 2))));
    hilbert_extra *= f2 / (f1 * f1);
    factorial_extra *= 1 / f1;
    invfact_extra *= f3;
  }
  Rat H = closed_form_hankel(SequenceFamily::simple(FamilyTag::hilbert), n, k, 0).as_rat();
  Rat F = factorial_closed(n, k);
  Rat I = inverse_factorial_closed(n, k);
  rep.via_hilbert = base * hilbert_extra * H;
  rep.via_factorial = base * factorial_extra * F;
  Rat signed_I = ((K * N * (N - 1) / 2) % 2 != 0) ? -I : I;
  rep.via_inverse_factorial = base * invfact_extra * signed_I;
  return rep;
}

MultiPoly hypergeom_R_extract(const std::vector<RCoeff>& P_coeffs,
                              const std::vector<RCoeff>& Q_coeffs, int n, int k) {
  std::vector<std::string> vars;
  for (size_t i = 0; i < P_coeffs.size(); ++i)
    if (P_coeffs[i].symbolic) vars.push_back("a" + std::to_string(i));
  for (size_t i = 0; i < Q_coeffs.size(); ++i)
    if (Q_coeffs[i].symbolic) vars.push_back("b" + std::to_string(i));

  auto poly_at = [&](const std::vector<RCoeff>& coeffs, const char* stem, long j) {
    MultiPoly v(vars);
    Rat jp(1);
    for (size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i].symbolic)
        v += MultiPoly::variable(vars, stem + std::to_string(i)) * jp;
      else
        v += MultiPoly::constant(vars, coeffs[i].value * jp);
      jp *= Rat(j);
    }
    return v;
  };

  const int K = 2 * k * (n - 1);
  std::vector<MultiPoly> P(K + 1, MultiPoly::constant(vars, Rat(1)));
  std::vector<MultiPoly> Q(K + 1, MultiPoly::constant(vars, Rat(1)));
  for (int j = 1; j <= K; ++j) {
    P[size_t(j)] = poly_at(P_coeffs, "a", j);
    Q[size_t(j)] = poly_at(Q_coeffs, "b", j);
  }

  // Cleared moments: c_m * prod_{j<=K} Q(j), polynomial for every m.
  std::vector<MultiPoly> cleared(size_t(K) + 1, MultiPoly::constant(vars, Rat(1)));
  for (int m = 0; m <= K; ++m) {
    MultiPoly v = MultiPoly::constant(vars, Rat(1));
    for (int j = 1; j <= m; ++j) v *= P[size_t(j)];
    for (int j = m + 1; j <= K; ++j) v *= Q[size_t(j)];
    cleared[size_t(m)] = v;
  }

  MultiPoly numer = hankel_fast(cleared, n, k, 0);
  MultiPoly denom = MultiPoly::constant(vars, Rat(1));
  for (int m = 0; m < n; ++m) {
    for (int j = 1; j <= k * m; ++j) denom *= P[size_t(j)];
    for (int j = k * (n + m - 1) + 1; j <= K; ++j) denom *= Q[size_t(j)];
  }
  return numer.exact_divide(denom);
}

ExactScalar pseudo_closed_form(int kase, int n, int k, int s, int m, const Rat& a,
                               const Rat& b) {
  if (n < 1 || k < 1 || s < 0 || m < 0 || s + m > n)
    throw std::invalid_argument("pseudo_closed_form: bad pattern");
  if (kase != 3 && m != 0)
    throw std::domain_error("pseudo_closed_form: pattern 2^m only for the factorial case");
  const long N = n, K = k;
  Rat kf(factorial(unsigned(k)));
  switch (kase) {
    case 1: {
      Rat prod(1);
      for (long j = 1; j <= s; ++j)
        prod *= Rat(1 + (N - j) * K) / Rat(2 + (2 * N - j - 1) * K);
      for (long j = 0; j < N; ++j) {
        Rat f(factorial(unsigned(K * (1 + j))));
        Rat g(factorial(unsigned(K * j)));
        prod *= f * g * g / Rat(factorial(unsigned(1 + (N + j - 1) * K)));
      }
      return ExactScalar(prod / pow_rat(kf, N));
    }
    case 2: {
      if (!(b > a) || a <= 0) throw std::domain_error("pseudo case 2: need 0 < a < b");
      ExactScalar prod(Rat(1));
      for (long j = 1; j <= s; ++j)
        prod = scale(prod, (a + Rat(K * (N - j))) / (b + Rat((2 * N - j - 1) * K)));
      ExactScalar gba = gamma_exact(b - a);
      for (long j = 0; j < N; ++j) {
        Rat jk = Rat(j * K);
        ExactScalar num = scale(gamma_exact(a + jk) * gamma_exact(b - a + jk),
                                Rat(factorial(unsigned(K * (1 + j)))));
        prod = prod * (num / (gamma_exact(b + Rat((N + j - 1) * K)) * gba));
      }
      return scale(prod, 1 / pow_rat(kf, N));
    }
    case 3: {
      Rat prod(1);
      for (long j = 1; j <= m; ++j) prod *= Rat(2 + K * (2 * N - m - j));
      for (long j = 1; j <= m + s; ++j) prod *= Rat(1 + K * (N - j));
      for (long j = 0; j < N; ++j)
        prod *= Rat(factorial(unsigned(K * (1 + j))) * factorial(unsigned(K * j)));
      return ExactScalar(prod / pow_rat(kf, N));
    }
    default:
      throw std::invalid_argument("pseudo_closed_form: case must be 1, 2 or 3");
  }
}

std::vector<ExactScalar> pseudo_moments(int kase, const Rat& a, const Rat& b,
                                        size_t count) {
  std::vector<ExactScalar> c;
  c.reserve(count);
  for (size_t mth = 0; mth < count; ++mth) {
    switch (kase) {
      case 1:
        c.emplace_back(rat(1, static_cast<long>(mth + 1)));
        break;
      case 2:
        c.push_back(gamma_exact(a + Rat(static_cast<long>(mth))) /
                    gamma_exact(b + Rat(static_cast<long>(mth))));
        break;
      case 3:
        c.emplace_back(Rat(factorial(mth)));
        break;
      default:
        throw std::invalid_argument("pseudo_moments: case must be 1, 2 or 3");
    }
  }
  return c;
}

}  // namespace hyperdet
