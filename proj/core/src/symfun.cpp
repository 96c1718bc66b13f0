#include "hyperdet/symfun.hpp"

#include <algorithm>
#include <functional>

#include "hyperdet/tensor.hpp"

namespace hyperdet {

std::vector<std::string> x_vars(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

namespace {

// h_m, e_m, p_m in n variables.
MultiPoly one_part_poly(SymBasis basis, int m, int n) {
  auto vars = x_vars(n);
  if (m == 0) return MultiPoly::constant(vars, Rat(1));
  MultiPoly out(vars);
  switch (basis) {
    case SymBasis::h: {
      std::vector<int> e(size_t(n), 0);
      std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
          e[size_t(pos)] = left;
          out.add_term(e, Rat(1));
          return;
        }
        for (int v = 0; v <= left; ++v) {
          e[size_t(pos)] = v;
          rec(pos + 1, left - v);
        }
      };
      rec(0, m);
      return out;
    }
    case SymBasis::e: {
      if (m > n) return out;  // zero
      std::vector<int> e(size_t(n), 0);
      std::function<void(int, int)> rec = [&](int from, int left) {
        if (left == 0) {
          out.add_term(e, Rat(1));
          return;
        }
        for (int v = from; v <= n - left; ++v) {
          e[size_t(v)] = 1;
          rec(v + 1, left - 1);
          e[size_t(v)] = 0;
        }
      };
      rec(0, m);
      return out;
    }
    case SymBasis::p: {
      std::vector<int> e(size_t(n), 0);
      for (int i = 0; i < n; ++i) {
        e[size_t(i)] = m;
        out.add_term(e, Rat(1));
        e[size_t(i)] = 0;
      }
      return out;
    }
    default:
      throw std::logic_error("one_part_poly: not a multiplicative basis");
  }
}

Partition delta_staircase(int n) {
  Partition d(size_t(n), 0);
  for (int i = 0; i < n; ++i) d[size_t(i)] = n - 1 - i;
  return d;
}

}  // namespace

MultiPoly alternant(const std::vector<std::string>& vars, const std::vector<int>& lambda) {
  if (lambda.size() != vars.size()) throw std::invalid_argument("alternant arity");
  const auto& pt = perm_table(static_cast<int>(vars.size()));
  MultiPoly out(vars);
  std::vector<int> e(lambda.size());
  for (size_t s = 0; s < pt.perms.size(); ++s) {
    for (size_t i = 0; i < lambda.size(); ++i) e[i] = lambda[size_t(pt.perms[s][i])];
    out.add_term(e, Rat(pt.signs[s]));
  }
  return out;
}

MultiPoly sym_basis_poly(SymBasis basis, const Partition& lambda, int n) {
  auto vars = x_vars(n);
  if (static_cast<int>(lambda.size()) > n)
    throw std::domain_error("partition exceeds variable count");
  switch (basis) {
    case SymBasis::monomial:
      return monomial_sym_poly(vars, lambda);
    case SymBasis::schur: {
      Partition shifted = lambda;
      shifted.resize(size_t(n), 0);
      auto d = delta_staircase(n);
      for (int i = 0; i < n; ++i) shifted[size_t(i)] += d[size_t(i)];
      MultiPoly num = alternant(vars, shifted);
      MultiPoly den = alternant(vars, d);
      return num.exact_divide(den);
    }
    case SymBasis::h:
    case SymBasis::e:
    case SymBasis::p: {
      MultiPoly out = MultiPoly::constant(vars, Rat(1));
      for (int part : lambda) out *= one_part_poly(basis, part, n);
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

MultiPoly sym_expand(const SymExpansion& f) {
  auto vars = x_vars(f.nvars);
  MultiPoly out(vars);
  for (const auto& [lam, c] : f.coeffs)
    out += sym_basis_poly(f.basis, lam, f.nvars) * c;
  return out;
}

SymExpansion monomial_extract(const MultiPoly& f, int n) {
  SymExpansion out{SymBasis::monomial, n, {}};
  for (const auto& [e, c] : f.terms()) {
    bool sorted = true;
    for (size_t i = 0; i + 1 < e.size(); ++i)
      if (e[i] < e[i + 1]) {
        sorted = false;
        break;
      }
    if (!sorted) continue;
    if (!e.empty() && e.back() < 0) throw std::domain_error("negative exponents");
    Partition lam(e.begin(), e.end());
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    out.coeffs[lam] = c;
  }
  return out;
}

SymExpansion schur_extract(const MultiPoly& f, int n) {
  auto vars = x_vars(n);
  MultiPoly g = f * alternant(vars, delta_staircase(n));
  SymExpansion out{SymBasis::schur, n, {}};
  for (const auto& [e, c] : g.terms()) {
    bool strict = true;
    for (size_t i = 0; i + 1 < e.size(); ++i)
      if (e[i] <= e[i + 1]) {
        strict = false;
        break;
      }
    if (!strict) continue;
    Partition lam(e.begin(), e.end());
    for (int i = 0; i < n; ++i) lam[size_t(i)] -= n - 1 - i;
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    out.coeffs[lam] = c;
  }
  return out;
}

namespace {

// Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}) expanded as a formal
// h-product combination, independent of the variable count.
std::map<Partition, Rat> schur_to_h_one(const Partition& lam) {
  const int l = static_cast<int>(lam.size());
  std::map<Partition, Rat> out;
  if (l == 0) {
    out[{}] = 1;
    return out;
  }
  const auto& pt = perm_table(l);
  for (size_t s = 0; s < pt.perms.size(); ++s) {
    Partition prod;
    bool zero = false;
    for (int i = 0; i < l && !zero; ++i) {
      int idx = lam[size_t(i)] - (i + 1) + (pt.perms[s][size_t(i)] + 1);
      if (idx < 0) zero = true;
      else if (idx > 0) prod.push_back(idx);
    }
    if (zero) continue;
    std::sort(prod.rbegin(), prod.rend());
    out[prod] += Rat(pt.signs[s]);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

SymExpansion schur_convert(const SymExpansion& f, SymBasis target) {
  if (f.basis == target) return f;
  for (const auto& [lam, c] : f.coeffs)
    if (static_cast<int>(lam.size()) > f.nvars)
      throw std::domain_error("partition exceeds variable count");
  if (f.basis == SymBasis::schur && target == SymBasis::h) {
    SymExpansion out{SymBasis::h, f.nvars, {}};
    for (const auto& [lam, c] : f.coeffs)
      for (const auto& [hp, w] : schur_to_h_one(lam)) {
        auto& slot = out.coeffs[hp];
        slot += c * w;
        if (slot == 0) out.coeffs.erase(hp);
      }
    return out;
  }
  if (target == SymBasis::monomial) return monomial_extract(sym_expand(f), f.nvars);
  if (target == SymBasis::schur) return schur_extract(sym_expand(f), f.nvars);
  if (f.basis == SymBasis::h && target == SymBasis::e)
    throw std::domain_error("unsupported basis pair");
  throw std::domain_error("unsupported basis pair");
}

SymExpansion vandermonde_power(int n, int k, SymBasis basis) {
  MultiPoly d = vandermonde_poly(x_vars(n), unsigned(2 * k));
  if (basis == SymBasis::monomial) return monomial_extract(d, n);
  if (basis == SymBasis::schur) return schur_extract(d, n);
  throw std::domain_error("vandermonde_power: monomial or schur basis");
}

std::pair<SymExpansion, SymExpansion> hankel_hyperdet_schur(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("hankel_hyperdet_schur");
  auto vars = x_vars(n);
  const Rat sign = (n * (n - 1) / 2) % 2 == 0 ? Rat(1) : Rat(-1);

  MultiPoly en = MultiPoly::constant(vars, Rat(1));
  for (const auto& v : vars) en *= MultiPoly::variable(vars, v);

  MultiPoly direct = en.pow(unsigned(n - 1)) * vandermonde_poly(vars, unsigned(2 * (k - 1))) * sign;

  // det of the shifted power-sum Hankel matrix (p_{1+i+j})_{i,j=0..n-1}.
  std::vector<std::vector<MultiPoly>> pm;
  pm.assign(size_t(n), std::vector<MultiPoly>(size_t(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      pm[size_t(i)][size_t(j)] = one_part_poly(SymBasis::p, 1 + i + j, n);
  MultiPoly A = det_cofactor(pm);
  MultiPoly route2 = A.pow(unsigned(k - 1)) * sign;
  if (n >= k)
    route2 *= en.pow(unsigned(n - k));
  else
    route2 = route2.exact_divide(en.pow(unsigned(k - n)));

  return {schur_extract(direct, n), schur_extract(route2, n)};
}

Rat specialize_hankel(const SymExpansion& f, const std::vector<Rat>& c) {
  auto h_value = [&](int m) -> Rat {
    if (m < 0) return Rat(0);
    if (m == 0) return Rat(1);
    return c.at(size_t(m));
  };
  Rat total(0);
  if (f.basis == SymBasis::h) {
    for (const auto& [lam, w] : f.coeffs) {
      Rat prod(1);
      for (int part : lam) prod *= h_value(part);
      total += w * prod;
    }
    return total;
  }
  if (f.basis != SymBasis::schur)
    throw std::domain_error("specialize_hankel: schur or h basis");
  for (const auto& [lam, w] : f.coeffs) {
    const int l = static_cast<int>(lam.size());
    if (l == 0) {
      total += w;
      continue;
    }
    std::vector<std::vector<Rat>> m;
    m.assign(size_t(l), std::vector<Rat>(size_t(l)));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) m[size_t(i)][size_t(j)] = h_value(lam[size_t(i)] - i + j);
    total += w * det_cofactor(m);
  }
  return total;
}

SymExpansion phi_map(const MultiPoly& f, int n) {
  if (static_cast<int>(f.vars().size()) != n)
    throw std::invalid_argument("phi_map: variable count mismatch");
  SymExpansion out{SymBasis::h, n, {}};
  for (const auto& [e, c] : f.terms()) {
    bool sorted = true;
    for (size_t i = 0; i + 1 < e.size(); ++i)
      if (e[i] < e[i + 1]) {
        sorted = false;
        break;
      }
    if (!sorted) continue;
    if (e.back() < 0) continue;  // negative exponents map to zero
    // stabilizer size of the exponent vector
    Rat stab(1);
    int run = 1;
    for (size_t i = 1; i <= e.size(); ++i) {
      if (i < e.size() && e[i] == e[i - 1]) {
        ++run;
      } else {
        stab *= Rat(factorial(unsigned(run)));
        run = 1;
      }
    }
    Partition lam(e.begin(), e.end());
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    auto& slot = out.coeffs[lam];
    slot += c / stab;
    if (slot == 0) out.coeffs.erase(lam);
  }
  return out;
}

std::pair<UniPoly, UniPoly> chebyshev_identity(int m) {
  if (m < 1) throw std::invalid_argument("chebyshev_identity: m >= 1");
  const UniPoly x = UniPoly::variable("x");
  std::vector<UniPoly> U{UniPoly(Rat(1), "x"), x * Rat(2)};
  for (int j = 1; j < m; ++j) U.push_back(x * U.back() * Rat(2) - U[size_t(j) - 1]);
  UniPoly lhs(Rat(0), "x");
  for (int j = 0; j <= m; ++j) {
    Rat c(binomial(unsigned(m), unsigned(j)));
    if (j % 2 != 0) c = -c;
    lhs += U[size_t(j)] * U[size_t(m - j)] * c;
  }
  lhs = lhs * rat(1, 2);
  if (m % 2 != 0) return {lhs, UniPoly(Rat(0), "x")};
  UniPoly rhs = (x * x * Rat(4) - UniPoly(Rat(4), "x")).pow(unsigned(m / 2 - 1)) * Rat(-1);
  return {lhs, rhs};
}

std::pair<Rat, Rat> fibonacci_identity(int k) {
  if (k < 1) throw std::invalid_argument("fibonacci_identity: k >= 1");
  std::vector<Rat> f{Rat(1), Rat(1)};
  for (int j = 2; j <= 2 * k; ++j) f.push_back(f[size_t(j) - 1] + f[size_t(j) - 2]);
  Rat lhs(0);
  for (int j = 0; j <= 2 * k; ++j) {
    Rat c(binomial(unsigned(2 * k), unsigned(j)));
    if (j % 2 != 0) c = -c;
    lhs += c * f[size_t(j)] * f[size_t(2 * k - j)];
  }
  lhs /= 2;
  Rat rhs(1);
  for (int t = 1; t < k; ++t) rhs *= 5;
  return {lhs, rhs};
}

}  // namespace hyperdet
