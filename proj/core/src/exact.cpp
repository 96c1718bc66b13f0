#include "hyperdet/exact_scalar.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace hyperdet {

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int double_factorial(long n) {
  if (n == -1 || n == 0) return 1;
  if (n < -1) throw std::domain_error("double factorial below -1");
  Int r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

namespace {

// Triangular tables, grown on demand. Guarded: stirling numbers are queried
// from tests and identity checks that may run concurrently.
std::mutex g_stirling_mutex;
std::vector<std::vector<Int>> g_s1, g_s2;

void grow_stirling(unsigned n) {
  if (g_s1.size() > n) return;
  for (unsigned m = g_s1.size(); m <= n; ++m) {
    std::vector<Int> row1(m + 1), row2(m + 1);
    row1[0] = (m == 0) ? 1 : 0;
    row2[0] = (m == 0) ? 1 : 0;
    for (unsigned k = 1; k <= m; ++k) {
      const Int& a1 = g_s1[m - 1][k - 1];
      const Int b1 = (k <= m - 1) ? g_s1[m - 1][k] : Int(0);
      row1[k] = a1 - Int(static_cast<long>(m - 1)) * b1;
      const Int& a2 = g_s2[m - 1][k - 1];
      const Int b2 = (k <= m - 1) ? g_s2[m - 1][k] : Int(0);
      row2[k] = a2 + Int(static_cast<long>(k)) * b2;
    }
    g_s1.push_back(std::move(row1));
    g_s2.push_back(std::move(row2));
  }
}

}  // namespace

Int stirling_first(unsigned n, unsigned k) {
  if (k > n) throw std::out_of_range("stirling: k > n");
  std::lock_guard<std::mutex> lock(g_stirling_mutex);
  grow_stirling(n);
  return g_s1[n][k];
}

Int stirling_second(unsigned n, unsigned k) {
  if (k > n) throw std::out_of_range("stirling: k > n");
  std::lock_guard<std::mutex> lock(g_stirling_mutex);
  grow_stirling(n);
  return g_s2[n][k];
}

Rat pochhammer(const Rat& a, unsigned long n) {
  Rat r(1);
  Rat t = a;
  for (unsigned long i = 0; i < n; ++i, t += 1) r *= t;
  return r;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

std::string ExactScalar::str() const {
  if (pi_half_ == 0) return rat_to_string(coeff_);
  return rat_to_string(coeff_) + "*pi^(" + std::to_string(pi_half_) + "/2)";
}

ExactScalar ExactScalar::parse(const std::string& s) {
  auto star = s.find("*pi^(");
  if (star == std::string::npos) return ExactScalar(rat_from_string(s));
  Rat c = rat_from_string(s.substr(0, star));
  auto close = s.find("/2)", star);
  if (close == std::string::npos) throw std::invalid_argument("bad scalar: " + s);
  int h = std::stoi(s.substr(star + 5, close - (star + 5)));
  return ExactScalar(c, h);
}

ExactScalar gamma_exact(const Rat& x) {
  if (x <= 0) throw std::domain_error("gamma_exact: argument must be positive");
  const Int num = x.get_num(), den = x.get_den();
  if (den == 1) {
    unsigned long n = mpz_get_ui(num.get_mpz_t());
    return ExactScalar(Rat(factorial(n - 1)));
  }
  if (den == 2) {
    // x = m + 1/2 with m >= 0: Gamma(x) = (2m)!/(4^m m!) sqrt(pi).
    Int m2 = (num - 1) / 2;
    unsigned long m = mpz_get_ui(m2.get_mpz_t());
    Rat c(factorial(2 * m));
    Int four_m;
    mpz_ui_pow_ui(four_m.get_mpz_t(), 4, m);
    c /= Rat(four_m * factorial(m));
    return ExactScalar(c, 1);
  }
  throw std::domain_error("gamma_exact: denominator must be 1 or 2");
}

}  // namespace hyperdet
