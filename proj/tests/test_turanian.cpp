#include <doctest.h>

#include "hyperdet/turanian.hpp"

using namespace hyperdet;

namespace {

TuranianSpec make(TuranianFamily fam, int n, int k, int r = 0) {
  TuranianSpec s;
  s.family = fam;
  s.n = n;
  s.k = k;
  s.r = r;
  s.alpha = Rat(1);
  s.beta = Rat(3);
  s.gamma = rat(1, 2);
  s.p = rat(1, 3);
  s.N = 9;
  return s;
}

}  // namespace

TEST_CASE("turanian brute force examples") {
  auto ch = make(TuranianFamily::charlier, 2, 1);
  std::vector<std::string> ax{"a", "x"};
  MultiPoly x = MultiPoly::variable(ax, "x");
  CHECK(turanian_bruteforce(ch) == -x);

  auto he = make(TuranianFamily::hermite, 2, 1);
  CHECK(turanian_bruteforce(he) == MultiPoly::constant({"x"}, rat(-1, 2)));

  auto le = make(TuranianFamily::legendre, 1, 2, 3);
  auto polys = turanian_moment_polys(le, 4);
  CHECK(turanian_bruteforce(le) == polys[3]);  // n = 1 gives Q_r
}

TEST_CASE("legendre moment polynomials are standard Legendre") {
  auto q = turanian_moment_polys(make(TuranianFamily::legendre, 1, 1), 4);
  std::vector<std::string> vx{"x"};
  MultiPoly x = MultiPoly::variable(vx, "x");
  CHECK(q[2] == (x * x * Rat(3) - MultiPoly::constant(vx, Rat(1))) * rat(1, 2));
  CHECK(q[3] == (x.pow(3) * Rat(5) - x * Rat(3)) * rat(1, 2));
}

TEST_CASE("closed forms equal brute force at r = 0") {
  using TF = TuranianFamily;
  for (TF fam : {TF::legendre, TF::hermite, TF::charlier, TF::meixner, TF::krawtchouk}) {
    for (int n : {1, 2, 3}) {
      for (int k : {1, 2}) {
        auto spec = make(fam, n, k);
        CHECK(turanian_closed_form(spec) == turanian_bruteforce(spec));
      }
    }
  }
  // Laguerre moments are rational in alpha; sample integer alpha.
  for (long alpha : {0, 1, 2}) {
    for (int n : {1, 2, 3}) {
      for (int k : {1, 2}) {
        auto spec = make(TF::laguerre, n, k);
        spec.alpha = Rat(alpha);
        CHECK(turanian_closed_form(spec) == turanian_bruteforce(spec));
      }
    }
  }
}

TEST_CASE("hermite turanian is independent of x") {
  for (int n : {1, 2, 3})
    for (int k : {1, 2}) {
      MultiPoly v = turanian_bruteforce(make(TuranianFamily::hermite, n, k));
      CHECK(v.degree_in("x") == 0);
    }
  // printed: D_n^{(k)}(H~) = (-1/2)^{kn(n-1)/2} prod (jk)!/(n! k!^n)
  MultiPoly v = turanian_bruteforce(make(TuranianFamily::hermite, 2, 1));
  CHECK(v.constant_value() == rat(-1, 2));
}

TEST_CASE("charlier turanian at k = 1 is prod j! (-x)_j") {
  for (int n = 1; n <= 4; ++n) {
    auto spec = make(TuranianFamily::charlier, n, 1);
    MultiPoly got = turanian_bruteforce(spec);
    std::vector<std::string> ax{"a", "x"};
    MultiPoly x = MultiPoly::variable(ax, "x");
    MultiPoly expect = MultiPoly::constant(ax, Rat(1));
    for (int j = 0; j < n; ++j)
      expect *= poch_poly(-x, unsigned(j)) * Rat(factorial(unsigned(j)));
    CHECK(got == expect);
  }
}

TEST_CASE("shifted turanians at k = 1 via the Wronskian route") {
  using TF = TuranianFamily;
  for (TF fam : {TF::charlier, TF::meixner, TF::krawtchouk}) {
    for (int n : {1, 2}) {
      for (int r : {1, 2}) {
        auto spec = make(fam, n, 1, r);
        CHECK(turanian_closed_form(spec) == turanian_bruteforce(spec));
      }
    }
  }
  auto out_of_scope = make(TF::legendre, 2, 1, 1);
  CHECK_THROWS_AS(turanian_closed_form(out_of_scope), std::domain_error);
  auto out2 = make(TF::charlier, 2, 2, 1);
  CHECK_THROWS_AS(turanian_closed_form(out2), std::domain_error);
}

TEST_CASE("iterated laplacian of the squared vandermonde") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
    auto [lhs, rhs] = laplacian_power_check(n, k);
    CHECK(lhs == rhs);
  }
  auto [l21, r21] = laplacian_power_check(2, 1);
  CHECK(l21 == Rat(4));
  auto [l22, r22] = laplacian_power_check(2, 2);
  CHECK(l22 == Rat(96));
}
