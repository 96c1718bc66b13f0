#include "hyperdet/kaneko.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "hyperdet/selberg.hpp"

namespace hyperdet {

ExactScalar measure_moment_1d(MeasureKind kind, const Rat& a, const Rat& b, long m) {
  if (m < 0) throw std::domain_error("negative monomial exponent");
  switch (kind) {
    case MeasureKind::jacobi: {
      // B(a+m, b)
      ExactScalar num = gamma_exact(a + Rat(m)) * gamma_exact(b);
      return num / gamma_exact(a + b + Rat(m));
    }
    case MeasureKind::laguerre:
      return gamma_exact(a + Rat(m));
    case MeasureKind::hermite:
      if (m % 2 != 0) return ExactScalar();
      return gamma_exact(rat(m + 1, 2));
  }
  throw std::logic_error("unreachable");
}

std::vector<std::string> y_vars(int r) {
  std::vector<std::string> v;
  for (int i = 1; i <= r; ++i) v.push_back("y" + std::to_string(i));
  return v;
}

namespace {

// Integrates every variable of an expanded polynomial against the 1-D weight.
ExactScalar integrate_poly(const MultiPoly& f, MeasureKind kind, const Rat& a,
                           const Rat& b) {
  ExactScalar total;
  for (const auto& [e, c] : f.terms()) {
    ExactScalar t(c);
    for (int exp : e) t = t * measure_moment_1d(kind, a, b, exp);
    total += t;
  }
  return total;
}

const MultiPoly& cached_vandermonde(const std::vector<std::string>& vars, int power) {
  static std::map<std::pair<std::vector<std::string>, int>, MultiPoly> cache;
  static std::mutex mx;
  std::lock_guard<std::mutex> lock(mx);
  auto key = std::make_pair(vars, power);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, vandermonde_poly(vars, unsigned(power))).first;
  return it->second;
}

}  // namespace

ExactScalar measure_moment(const SelbergMeasure& mu, const std::vector<int>& mono) {
  if (static_cast<int>(mono.size()) != mu.r)
    throw std::invalid_argument("measure_moment: arity mismatch");
  if (mu.two_k % 2 != 0) throw std::invalid_argument("vandermonde power must be even");
  auto vars = y_vars(mu.r);
  MultiPoly f = cached_vandermonde(vars, mu.two_k);
  MultiPoly m(vars);
  m.add_term(mono, Rat(1));
  return integrate_poly(f * m, mu.kind, mu.a, mu.b);
}

bool sym_partition_precedes(const Partition& mu, const Partition& nu, int r) {
  int wm = 0, wn = 0;
  for (int x : mu) wm += x;
  for (int x : nu) wn += x;
  if (wm != wn) return wm < wn;
  Partition a = mu, b = nu;
  a.resize(size_t(r), 0);
  b.resize(size_t(r), 0);
  for (int i = r - 1; i >= 0; --i)
    if (a[size_t(i)] != b[size_t(i)]) return a[size_t(i)] > b[size_t(i)];
  return false;
}

std::vector<Partition> partitions_up_to(int max_weight, int max_len) {
  std::vector<Partition> all;
  Partition cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (static_cast<int>(cur.size()) > max_len) return;
    all.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(max_weight, max_weight);
  std::sort(all.begin(), all.end(), [&](const Partition& x, const Partition& y) {
    return sym_partition_precedes(x, y, max_len);
  });
  return all;
}

MultiPoly monomial_sym_poly(const std::vector<std::string>& vars, const Partition& kappa) {
  MultiPoly m(vars);
  std::vector<int> e(vars.size(), 0);
  for (size_t i = 0; i < kappa.size(); ++i) e[i] = kappa[i];
  std::sort(e.begin(), e.end());
  do {
    m.add_term(e, Rat(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return m;
}

const MultiPoly& SymOrthoBasis::at(const Partition& kappa) const {
  for (size_t i = 0; i < order.size(); ++i)
    if (order[i] == kappa) return polys[i];
  throw std::invalid_argument("partition not in basis");
}

SymOrthoBasis gram_schmidt_sym(const SelbergMeasure& mu, int max_weight) {
  auto vars = y_vars(mu.r);
  const MultiPoly& weight = cached_vandermonde(vars, mu.two_k);
  auto inner = [&](const MultiPoly& f, const MultiPoly& g) {
    return integrate_poly(f * g * weight, mu.kind, mu.a, mu.b);
  };
  SymOrthoBasis basis;
  basis.order = partitions_up_to(max_weight, mu.r);
  std::vector<ExactScalar> norms;
  for (const auto& kappa : basis.order) {
    MultiPoly cur = monomial_sym_poly(vars, kappa);
    for (size_t j = 0; j < basis.polys.size(); ++j) {
      ExactScalar num = inner(cur, basis.polys[j]);
      if (num.is_zero()) continue;
      Rat coef = (num / norms[j]).as_rat();
      cur -= basis.polys[j] * coef;
    }
    ExactScalar nm = inner(cur, cur);
    if (nm.is_zero()) throw std::domain_error("degenerate symmetric measure");
    basis.polys.push_back(cur);
    norms.push_back(nm);
  }
  return basis;
}

namespace {

// Expanded R(x,y) * Delta(x)^{2k} over x1..xn, y1..yr, cached per (n, r, k).
const MultiPoly& cached_kernel(int n, int r, int k) {
  static std::map<std::tuple<int, int, int>, MultiPoly> cache;
  static std::mutex mx;
  std::lock_guard<std::mutex> lock(mx);
  auto key = std::make_tuple(n, r, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  for (int j = 1; j <= r; ++j) vars.push_back("y" + std::to_string(j));
  MultiPoly R = MultiPoly::constant(vars, Rat(1));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= r; ++j)
      R *= MultiPoly::variable(vars, "x" + std::to_string(i)) -
           MultiPoly::variable(vars, "y" + std::to_string(j));
  std::vector<std::string> xv;
  for (int i = 1; i <= n; ++i) xv.push_back("x" + std::to_string(i));
  MultiPoly delta = vandermonde_poly(xv, unsigned(2 * k));
  std::vector<std::string> promoted = vars;
  R *= delta.promote(promoted);
  return cache.emplace(key, std::move(R)).first->second;
}

}  // namespace

MultiPoly kaneko_lhs(int n, int r, const Rat& a, const Rat& b, int k,
                     MeasureKind variant) {
  if (n < 1 || r < 0 || k < 1) throw std::invalid_argument("kaneko_lhs: bad shape");
  const MultiPoly& kern = cached_kernel(n, r, k);
  std::vector<std::string> out_vars = y_vars(r);
  out_vars.push_back("sqrtpi");
  MultiPoly out(out_vars);
  std::vector<int> oe(out_vars.size(), 0);
  for (const auto& [e, c] : kern.terms()) {
    ExactScalar t(c);
    for (int i = 0; i < n; ++i)
      t = t * measure_moment_1d(variant, a, b, e[size_t(i)]);
    if (t.is_zero()) continue;
    for (int j = 0; j < r; ++j) oe[size_t(j)] = e[size_t(n + j)];
    oe[size_t(r)] = t.pi_half_power();
    out.add_term(oe, t.coeff());
  }
  return out;
}

std::pair<MultiPoly, MultiPoly> kaneko_check(int n, int r, const Rat& a, const Rat& b,
                                             int k) {
  MultiPoly lhs = kaneko_lhs(n, r, a, b, k, MeasureKind::jacobi);
  SelbergMeasure pm{MeasureKind::jacobi, a / k, b / k, 2 * k, r};
  auto basis = gram_schmidt_sym(pm, n * r);
  Partition rect(size_t(r), n);
  MultiPoly p = affine_to_pm1(basis.at(rect), n * r);
  // p(1 - 2y), then the 2^{-nr} S_n prefactor.
  for (const auto& v : y_vars(r)) p = p.affine_substitute(v, Rat(-2), Rat(1));
  Rat pre = selberg_value(n, a, b, k).as_rat();
  for (int t = 0; t < n * r; ++t) pre /= 2;
  return {lhs, p * pre};
}

MultiPoly affine_to_pm1(const MultiPoly& q, int weight) {
  MultiPoly p = q;
  for (const auto& v : q.vars())
    p = p.affine_substitute(v, rat(-1, 2), rat(1, 2));
  Rat s(1);
  for (int t = 0; t < weight; ++t) s *= Rat(-2);
  return p * s;
}

std::pair<MultiPoly, MultiPoly> heine_hyperdet_check(int n, int r, int k, const Rat& a,
                                                     const Rat& b) {
  if (a.get_den() != 1 || b.get_den() != 1 || a <= 0 || b <= 0)
    throw std::domain_error("heine_hyperdet_check: integer a, b > 0");
  auto vars = y_vars(r);
  // J_p = int_{-1}^{1} x^p (1-x)^{a-1} (1+x)^{b-1} dx, rational.
  const int maxp = 2 * k * (n - 1) + r;
  std::vector<Rat> J(size_t(maxp) + 1, Rat(0));
  for (int p = 0; p <= maxp; ++p) {
    ExactScalar s;
    for (int q = 0; q <= p; ++q) {
      Rat c(binomial(unsigned(p), unsigned(q)));
      Rat pw(1);
      for (int t = 0; t < q; ++t) pw *= Rat(-2);
      s += scale(measure_moment_1d(MeasureKind::jacobi, a, b, q), c * pw);
    }
    Rat two_ab(1);
    for (Rat t(0); t < a + b - 1; t += 1) two_ab *= 2;
    J[size_t(p)] = s.as_rat() * two_ab;
  }
  // Elementary symmetric polynomials in t.
  std::vector<MultiPoly> e(size_t(r) + 1, MultiPoly::constant(vars, Rat(1)));
  for (int i = 1; i <= r; ++i) {
    MultiPoly acc(vars);
    std::function<void(int, int, MultiPoly)> rec = [&](int pos, int from, MultiPoly prod) {
      if (pos == i) {
        acc += prod;
        return;
      }
      for (int v = from; v <= r; ++v)
        rec(pos + 1, v + 1, prod * MultiPoly::variable(vars, "y" + std::to_string(v)));
    };
    rec(0, 1, MultiPoly::constant(vars, Rat(1)));
    e[size_t(i)] = acc;
  }
  std::vector<MultiPoly> c;
  for (int m = 0; m <= 2 * k * (n - 1); ++m) {
    MultiPoly v(vars);
    for (int i = 0; i <= r; ++i) {
      Rat sgn(1);
      if ((r - i) % 2 != 0) sgn = -1;
      v += e[size_t(i)] * (sgn * J[size_t(m + r - i)]);
    }
    c.push_back(v);
  }
  MultiPoly lhs = hankel_fast(c, n, k, 0) * Rat(factorial(unsigned(n)));

  SelbergMeasure pm{MeasureKind::jacobi, a / k, b / k, 2 * k, r};
  auto basis = gram_schmidt_sym(pm, n * r);
  Partition rect(size_t(r), n);
  MultiPoly p = affine_to_pm1(basis.at(rect), n * r);
  Rat Z = selberg_value(n, a, b, k).as_rat();
  long e2 = long(k) * n * (n - 1) + long(n) * (a.get_num().get_si() + b.get_num().get_si() + r - 2);
  for (long t = 0; t < e2; ++t) Z *= 2;
  return {lhs, p * Z};
}

std::pair<MultiPoly, MultiPoly> leclerc_check(const std::vector<Rat>& moments, int n,
                                              int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("leclerc_check: n, r >= 1");
  const MultiPoly& kern = cached_kernel(n, r, 1);  // R(x,y) Delta(x)^2
  auto vars = y_vars(r);
  MultiPoly lhs(vars);
  std::vector<int> oe(vars.size(), 0);
  // R(y,x) = (-1)^{nr} R(x,y); mu_n integrates the x's as a product.
  for (const auto& [e, c] : kern.terms()) {
    Rat t = c;
    for (int i = 0; i < n; ++i) t *= moments.at(size_t(e[size_t(i)]));
    if (t == 0) continue;
    for (int j = 0; j < r; ++j) oe[size_t(j)] = e[size_t(n + j)];
    lhs.add_term(oe, t);
  }
  if ((n * r) % 2 != 0) lhs = -lhs;

  auto fam = monic_from_moments(moments, n + r - 1);
  std::vector<std::vector<MultiPoly>> mat;
  mat.assign(size_t(r), std::vector<MultiPoly>(size_t(r)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const auto& pol = fam.polys[size_t(n + j)];
      MultiPoly entry(vars);
      MultiPoly yi = MultiPoly::variable(vars, "y" + std::to_string(i + 1));
      for (size_t t = 0; t < pol.c.size(); ++t)
        entry += yi.pow(unsigned(t)) * pol.c[t];
      mat[size_t(i)][size_t(j)] = entry;
    }
  MultiPoly alt = det_cofactor(mat);
  MultiPoly delta_y = vandermonde_poly(vars, 1);
  MultiPoly p_rect = alt.exact_divide(delta_y);
  Rat mu_delta2 = hankel_fast(moments, n, 1, 0) * Rat(factorial(unsigned(n)));
  return {lhs, p_rect * mu_delta2};
}

}  // namespace hyperdet
