#include <doctest.h>

#include <random>

#include "hyperdet/orthopoly.hpp"
#include "hyperdet/selberg.hpp"

using namespace hyperdet;

namespace {

std::vector<MultiPoly> bells_multi(size_t count) {
  std::vector<MultiPoly> out;
  for (const auto& b : bell_polynomials(count)) out.push_back(MultiPoly::from_unipoly(b));
  return out;
}

}  // namespace

TEST_CASE("gram-schmidt from factorial moments gives monic Laguerre") {
  auto c = family_moments(SequenceFamily::simple(FamilyTag::factorial), 9);
  auto fam = monic_from_moments(c, 4);
  // P_2 = x^2 - 4x + 2
  CHECK(fam.polys[2].c == std::vector<Rat>{Rat(2), Rat(-4), Rat(1)});
  // recurrence A_i = 2i+1, B_i = i^2, norms (i!)^2
  for (int i = 0; i < 4; ++i) CHECK(fam.A[size_t(i)] == Rat(2 * i + 1));
  for (int i = 1; i < 4; ++i) CHECK(fam.B[size_t(i)] == Rat(i * i));
  for (int i = 0; i <= 4; ++i) {
    Rat f(factorial(unsigned(i)));
    CHECK(fam.norms[size_t(i)] == f * f);
  }
}

TEST_CASE("orthogonality and norm product invariants") {
  std::mt19937 rng(41);
  std::vector<Rat> c;
  for (int i = 0; i < 11; ++i) c.push_back(rat(long(rng() % 23) + 1, long(rng() % 6) + 1));
  auto fam = monic_from_moments(c, 5);
  for (int i = 0; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      CHECK(is_zero_value(moment_pair(c, fam.polys[size_t(i)], fam.polys[size_t(j)])));
  // prod of squared norms = D_n^{(1)}
  Rat prod(1);
  for (int n = 1; n <= 4; ++n) {
    prod *= fam.norms[size_t(n - 1)];
    CHECK(prod == hankel_fast(c, n, 1, 0));
  }
  // recurrence reproduces the list
  auto rebuilt = family_from_recurrence(fam.A, fam.B, 5, c[0]);
  for (int i = 0; i <= 5; ++i) CHECK(rebuilt.polys[size_t(i)] == fam.polys[size_t(i)]);
}

TEST_CASE("bell moments give the Charlier family") {
  auto b = bells_multi(11);
  auto fam = monic_from_moments(b, 5);
  std::vector<std::string> va{"a"};
  MultiPoly a = MultiPoly::variable(va, "a");
  CHECK(fam.polys[1].c[0] == -a);  // P_1 = x - a
  auto classical = classical_family(ClassicalTag::charlier, {.symbolic_a = true}, 5);
  for (int i = 0; i <= 5; ++i) CHECK(fam.polys[size_t(i)] == classical.polys[size_t(i)]);
  // <C_n, C_n> = a^n n!
  for (int i = 0; i <= 5; ++i)
    CHECK(fam.norms[size_t(i)] == a.pow(unsigned(i)) * Rat(factorial(unsigned(i))));
}

TEST_CASE("degenerate moments are reported") {
  std::vector<Rat> dirac{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
  CHECK_THROWS_AS(monic_from_moments(dirac, 3), std::domain_error);
}

TEST_CASE("classical families") {
  auto ch = classical_family(ClassicalTag::charlier, {.symbolic_a = true}, 3);
  std::vector<std::string> va{"a"};
  MultiPoly a = MultiPoly::variable(va, "a");
  // C_2 = x^2 - (1+2a)x + a^2
  CHECK(ch.polys[2].c[0] == a * a);
  CHECK(ch.polys[2].c[1] == -(MultiPoly::constant(va, Rat(1)) + a * Rat(2)));

  auto he = classical_family(ClassicalTag::hermite, {}, 3);
  CHECK(he.polys[2].c[0] == MultiPoly::constant({}, rat(-1, 2)));

  ClassicalParams kp;
  kp.p = rat(1, 3);
  kp.N = Rat(7);
  auto kr = classical_family(ClassicalTag::krawtchouk, kp, 4);
  for (int i = 0; i < 4; ++i) {
    Rat ri(i);
    CHECK(kr.A[size_t(i)].constant_value() == kp.p * (kp.N - ri) + ri * (1 - kp.p));
    CHECK(kr.B[size_t(i)].constant_value() == ri * kp.p * (1 - kp.p) * (kp.N + 1 - ri));
  }

  // legendre / chebyshevU / laguerre / meixner round-trip through moments
  for (auto tag : {ClassicalTag::legendre, ClassicalTag::chebyshevU,
                   ClassicalTag::laguerre, ClassicalTag::meixner}) {
    ClassicalParams par;
    par.alpha = Rat(1);
    par.beta = Rat(3);
    par.gamma = rat(1, 2);
    auto fam = classical_family(tag, par, 8);
    auto mom = moments_from_recurrence(fam.A, fam.B,
                                       MultiPoly::constant(fam.A[0].vars(), Rat(1)), 9);
    auto redo = monic_from_moments(mom, 4);
    for (int i = 0; i <= 4; ++i) CHECK(redo.polys[size_t(i)] == fam.polys[size_t(i)]);
  }
}

TEST_CASE("laguerre P/P' gram entries") {
  // <L_i, x^0 L_j'> = (-1)^{i+j+1} i! j! for i < j under c_m = m!.
  auto c = family_moments(SequenceFamily::simple(FamilyTag::factorial), 13);
  auto fam = monic_from_moments(c, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      Rat got = moment_pair(c, fam.polys[size_t(i)], fam.polys[size_t(j)].derivative());
      Rat expect(factorial(unsigned(i)) * factorial(unsigned(j)));
      if ((i + j + 1) % 2 != 0) expect = -expect;
      CHECK(got == expect);
      CHECK(moment_pair(c, fam.polys[size_t(j)], fam.polys[size_t(i)].derivative()) ==
            Rat(0));
    }
}

TEST_CASE("charlier scalar products match the printed formula") {
  auto b = bells_multi(13);
  auto fam = monic_from_moments(b, 6);
  std::vector<std::string> va{"a"};
  MultiPoly a = MultiPoly::variable(va, "a");
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= 5; ++m) {
      MultiPoly got = moment_pair(b, fam.polys[size_t(n)], fam.polys[size_t(m)].derivative());
      if (m > n) {
        Rat c = rat(factorial(unsigned(m)), Int(m - n));
        if ((m - n + 1) % 2 != 0) c = -c;
        CHECK(got == a.pow(unsigned(n)) * c);
      } else {
        CHECK(got.is_zero());
      }
    }
}

TEST_CASE("pfaffian route equals the fast kernel") {
  auto c = family_moments(SequenceFamily::simple(FamilyTag::factorial), 16);
  auto b = bells_multi(16);
  auto famc = monic_from_moments(c, 6);
  auto famb = monic_from_moments(b, 6);
  for (int n : {1, 2, 3}) {
    for (int r : {0, 1}) {
      CHECK(det4_via_pfaffian(c, famc, n, r) == hankel_fast(c, n, 2, r));
      CHECK(det4_via_pfaffian(b, famb, n, r) == hankel_fast(b, n, 2, r));
    }
  }
  // printed: Det_4((i+j+k+l)!) = prod_{i<2n} i!
  for (int n : {1, 2, 3}) {
    Rat expect(1);
    for (int i = 0; i < 2 * n; ++i) expect *= Rat(factorial(unsigned(i)));
    CHECK(det4_via_pfaffian(c, famc, n, 0) == expect);
  }
  // bell values from the paper list
  std::vector<std::string> va{"a"};
  MultiPoly a = MultiPoly::variable(va, "a");
  CHECK(det4_via_pfaffian(b, famb, 2, 0) == a + a.pow(2) * Rat(6));
  MultiPoly d3 = a.pow(3) * Rat(8) + a.pow(4) * Rat(192) + a.pow(5) * Rat(360) +
                 a.pow(6) * Rat(720);
  CHECK(det4_via_pfaffian(b, famb, 3, 0) == d3);  // 8a^3(1+24a+45a^2+90a^3)
}

TEST_CASE("non-orthogonal family is rejected") {
  auto c = family_moments(SequenceFamily::simple(FamilyTag::factorial), 16);
  auto fam = monic_from_moments(c, 6);
  auto broken = fam;
  broken.polys[1].c[0] += Rat(1);
  CHECK_THROWS_AS(pprime_gram(c, broken, 0, 4), std::domain_error);
}

TEST_CASE("projected multiplication determinants") {
  // Charlier r=2, n=3: paper matrix and its determinant 6a^3+6a^4+3a^5+a^6.
  auto fam = classical_family(ClassicalTag::charlier, {.symbolic_a = true}, 6);
  std::vector<std::string> va{"a"};
  MultiPoly a = MultiPoly::variable(va, "a");
  auto X = projected_mult_matrix(fam.A, fam.B, 2, 3);
  CHECK(X[0][0] == a + a * a);
  CHECK(X[0][1] == a + a * a * Rat(2));
  CHECK(X[0][2] == a * a * Rat(2));
  CHECK(X[1][0] == MultiPoly::constant(va, Rat(1)) + a * Rat(2));
  CHECK(X[2][2] == MultiPoly::constant(va, Rat(4)) + a * Rat(9) + a * a);
  MultiPoly det = projected_mult_det(fam.A, fam.B, 2, 3);
  MultiPoly expect = a.pow(3) * Rat(6) + a.pow(4) * Rat(6) + a.pow(5) * Rat(3) + a.pow(6);
  CHECK(det == expect);
  // D_{n;r}^{(1)} = det(X) * D_n^{(1)} against the kernel, Bell moments
  auto b = bells_multi(11);
  for (int n : {2, 3}) {
    for (int r : {1, 2}) {
      MultiPoly lhs = hankel_fast(b, n, 1, r);
      MultiPoly rhs = projected_mult_det(fam.A, fam.B, r, n) * hankel_fast(b, n, 1, 0);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("krawtchouk det(X_n) = (N)_n p^n symbolically") {
  // Recurrence entries as rational functions in u and N, p = u/(1+u).
  std::vector<std::string> vars{"u", "N"};
  MultiPoly u = MultiPoly::variable(vars, "u");
  MultiPoly Nv = MultiPoly::variable(vars, "N");
  MultiPoly one = MultiPoly::constant(vars, Rat(1));
  RationalFunction p(u, one + u);
  RationalFunction onef(one);
  std::vector<RationalFunction> A, B;
  for (int i = 0; i <= 4; ++i) {
    RationalFunction ri(MultiPoly::constant(vars, Rat(i)));
    A.push_back(p * RationalFunction(Nv - MultiPoly::constant(vars, Rat(i))) +
                ri * (onef - p));
    B.push_back(ri * p * (onef - p) *
                RationalFunction(Nv + MultiPoly::constant(vars, Rat(1 - i))));
  }
  for (int n = 1; n <= 4; ++n) {
    RationalFunction det = projected_mult_det(A, B, 1, n);
    RationalFunction expect = p.pow(unsigned(n));
    MultiPoly poch = one;
    for (int i = 0; i < n; ++i) poch *= Nv + MultiPoly::constant(vars, Rat(i));
    expect = expect * RationalFunction(poch);
    CHECK(det == expect);
  }
}

TEST_CASE("lawden determinant at N = -1, r = 2") {
  // det(X_n^{(2)}) = (n!)^2 u^n (u^{n+1} - (-1)^{n+1})/(1+u)^{2n+1}.
  std::vector<std::string> vars{"u"};
  MultiPoly u = MultiPoly::variable(vars, "u");
  MultiPoly one = MultiPoly::constant(vars, Rat(1));
  RationalFunction p(u, one + u);
  RationalFunction onef(one);
  std::vector<RationalFunction> A, B;
  for (int i = 0; i <= 5; ++i) {
    RationalFunction ri(MultiPoly::constant(vars, Rat(i)));
    A.push_back(p * RationalFunction(MultiPoly::constant(vars, Rat(-1 - i))) +
                ri * (onef - p));
    B.push_back(ri * p * (onef - p) * RationalFunction(MultiPoly::constant(vars, Rat(-i))));
  }
  for (int n = 1; n <= 3; ++n) {
    RationalFunction det = projected_mult_det(A, B, 2, n);
    Rat nf(factorial(unsigned(n)));
    MultiPoly num = u.pow(unsigned(n)) * (nf * nf);
    MultiPoly tail = u.pow(unsigned(n + 1));
    if ((n + 1) % 2 != 0)
      tail -= one;
    else
      tail += one;
    num *= tail;
    MultiPoly den = (one + u).pow(unsigned(2 * n + 1));
    CHECK(det == RationalFunction(num, den));
  }
}

TEST_CASE("binomial-moment hankel determinant closed form in u") {
  // D_n^{(1)}(c) = (-u)^{n(n-1)/2} (1+u)^{-n(-N+n-1)} prod j! (-N)_j.
  for (int N : {1, 2, 3}) {
    auto c = binomial_u_moments(N, 7);
    for (int n = 1; n <= 3; ++n) {
      UniPoly d = hankel_fast(c, n, 1, 0);
      std::vector<std::string> vars{"u"};
      MultiPoly u = MultiPoly::variable(vars, "u");
      MultiPoly one = MultiPoly::constant(vars, Rat(1));
      Rat coef(1);
      for (int j = 0; j < n; ++j)
        coef *= Rat(factorial(unsigned(j))) * pochhammer(Rat(-N), unsigned(j));
      MultiPoly lead = u.pow(unsigned(n * (n - 1) / 2)) * coef;
      if ((n * (n - 1) / 2) % 2 != 0) lead = -lead;
      int e = n * (-N + n - 1);
      RationalFunction lhs(MultiPoly::from_unipoly(d).promote(vars));
      RationalFunction rhs = e >= 0 ? RationalFunction(lead, (one + u).pow(unsigned(e)))
                                    : RationalFunction(lead * (one + u).pow(unsigned(-e)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("binomial shift identity") {
  CHECK(binomial_shift_check(1, 2, 1, 1).first ==
        UniPoly({Rat(0), Rat(2), Rat(-2)}, "u"));
  for (int N : {2, 3, 4})
    for (int r = 0; r <= 2 && r <= N; ++r)
      for (int n : {1, 2})
        for (int k : {1, 2}) {
          auto [lhs, rhs] = binomial_shift_check(r, N, n, k);
          CHECK(lhs == rhs);
        }
}

TEST_CASE("wronskians") {
  using DP = DPoly<Rat>;
  DP one({Rat(1)});
  CHECK(wronskian<Rat>({one}) == one);
  DP x({Rat(0), Rat(1)}), x2({Rat(0), Rat(0), Rat(1)});
  CHECK(wronskian<Rat>({x, x2}) == x2);  // x * 2x - x^2
  // W(C_3, C_4)(0) = 6a^3 + 6a^4 + 3a^5 + a^6
  auto fam = classical_family(ClassicalTag::charlier, {.symbolic_a = true}, 4);
  auto w = wronskian<MultiPoly>({fam.polys[3], fam.polys[4]});
  std::vector<std::string> va{"a"};
  MultiPoly a = MultiPoly::variable(va, "a");
  MultiPoly expect = a.pow(3) * Rat(6) + a.pow(4) * Rat(6) + a.pow(5) * Rat(3) + a.pow(6);
  CHECK(w.at0(a) == expect);
}

TEST_CASE("karlin-szego identity") {
  // Bell moments: both sides symbolic in y (coefficients in Q[a]).
  auto b = bells_multi(17);
  for (int n : {1, 2, 3}) {
    for (int r : {0, 1, 2}) {
      auto [lhs, rhs] = karlin_szego_check(b, n, r);
      CHECK(lhs == rhs);
    }
  }
  // Table 1 via the Wronskian route at y = 0: D_{n;r} values.
  std::vector<std::string> va{"a"};
  MultiPoly a = MultiPoly::variable(va, "a");
  auto table_check = [&](int n, int r, const MultiPoly& expect) {
    CHECK(hankel_fast(b, n, 1, r) == expect);
  };
  table_check(1, 1, a);
  table_check(1, 2, a + a * a);
  table_check(2, 0, a);
  table_check(2, 1, a.pow(3));
  table_check(2, 2, a.pow(3) * Rat(2) + a.pow(4) * Rat(2) + a.pow(5));
  table_check(3, 0, a.pow(3) * Rat(2));
  table_check(3, 1, a.pow(6) * Rat(2));
  table_check(3, 2, a.pow(6) * Rat(12) + a.pow(7) * Rat(12) + a.pow(8) * Rat(6) +
                        a.pow(9) * Rat(2));
  table_check(4, 0, a.pow(6) * Rat(12));
  table_check(4, 1, a.pow(10) * Rat(12));
  table_check(4, 2, a.pow(10) * Rat(288) + a.pow(11) * Rat(288) + a.pow(12) * Rat(144) +
                        a.pow(13) * Rat(48) + a.pow(14) * Rat(12));

  // generic rational functional, reduced case r = 1, n = 1
  std::mt19937 rng(43);
  std::vector<Rat> c;
  for (int i = 0; i < 9; ++i) c.push_back(rat(long(rng() % 9) + 1, long(rng() % 3) + 1));
  auto [l1, r1] = karlin_szego_check(c, 1, 1);
  CHECK(l1 == r1);
  auto [l2, r2] = karlin_szego_check(c, 2, 2);
  CHECK(l2 == r2);
}

TEST_CASE("bell triangle") {
  CHECK(bell_triangle(1) == std::vector<Int>{Int(1)});
  CHECK(bell_triangle(2) == std::vector<Int>{Int(1), Int(6)});
  CHECK(bell_triangle(4) == std::vector<Int>{Int(1), Int(126), Int(840), Int(840)});
  CHECK(bell_triangle(6) == std::vector<Int>{Int(1), Int(2046), Int(84480), Int(526680),
                                             Int(831600), Int(332640)});
  for (int k = 1; k <= 6; ++k) {
    auto row = bell_triangle(k);
    CHECK(row.back() == factorial(unsigned(2 * k + 1)) / factorial(unsigned(k)));
    if (k >= 2) {
      Int two;
      mpz_ui_pow_ui(two.get_mpz_t(), 2, unsigned(2 * k - 1));
      CHECK(row[1] == two - 2);
    }
    // cross-check against the apolar route
    auto b = bell_polynomials(size_t(2 * k) + 1);
    UniPoly d = hankel_fast(b, 2, k, 0);
    for (int j = 1; j <= k; ++j) CHECK(d.coeff(size_t(j)) == Rat(row[size_t(j) - 1]));
  }
}

TEST_CASE("falling factorial moment transform") {
  for (int n : {1, 2, 3})
    for (int k : {1, 2})
      for (int r : {0, 1, 2}) {
        auto [lhs, rhs] = falling_factorial_check(r, n, k);
        CHECK(lhs == rhs);
      }
  auto [l, r] = falling_factorial_check(1, 2, 1);
  CHECK(l == UniPoly::variable("a").pow(3));
}
