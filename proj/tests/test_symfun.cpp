#include <doctest.h>

#include <random>

#include "hyperdet/selberg.hpp"
#include "hyperdet/symfun.hpp"

using namespace hyperdet;

namespace {

SymExpansion schur_of(std::map<Partition, Rat> coeffs, int n) {
  return SymExpansion{SymBasis::schur, n, std::move(coeffs)};
}

}  // namespace

TEST_CASE("vandermonde power expansions") {
  auto m = vandermonde_power(2, 1);
  CHECK(m.coeffs == std::map<Partition, Rat>{{{2}, Rat(1)}, {{1, 1}, Rat(-2)}});
  auto s = vandermonde_power(2, 1, SymBasis::schur);
  CHECK(s.coeffs == std::map<Partition, Rat>{{{2}, Rat(1)}, {{1, 1}, Rat(-3)}});
  // leading staircase-doubled coefficient is 1
  for (int n : {2, 3}) {
    for (int k : {1, 2}) {
      auto e = vandermonde_power(n, k);
      Partition lead;
      for (int i = n - 1; i >= 1; --i) lead.push_back(2 * k * i);
      CHECK(e.coeffs.at(lead) == Rat(1));
      for (const auto& [lam, c] : e.coeffs) {
        int w = 0;
        for (int part : lam) w += part;
        CHECK(w == k * n * (n - 1));
      }
    }
  }
}

TEST_CASE("schur conversions") {
  // s_22 in two variables is the single monomial m_22
  auto m22 = schur_convert(schur_of({{{2, 2}, Rat(1)}}, 2), SymBasis::monomial);
  CHECK(m22.coeffs == std::map<Partition, Rat>{{{2, 2}, Rat(1)}});
  // -m31 + 2 m22 = -s31 + 3 s22 at n = 2
  SymExpansion mono{SymBasis::monomial, 2, {{{3, 1}, Rat(-1)}, {{2, 2}, Rat(2)}}};
  auto s = schur_convert(mono, SymBasis::schur);
  CHECK(s.coeffs == std::map<Partition, Rat>{{{3, 1}, Rat(-1)}, {{2, 2}, Rat(3)}});
  CHECK_THROWS_AS(schur_convert(schur_of({{{1, 1, 1}, Rat(1)}}, 2), SymBasis::monomial),
                  std::domain_error);
  CHECK_THROWS_AS(schur_convert(mono, SymBasis::e), std::domain_error);
}

TEST_CASE("jacobi-trudi h conversion") {
  // s_21 = h_21 - h_3
  auto h = schur_convert(schur_of({{{2, 1}, Rat(1)}}, 3), SymBasis::h);
  CHECK(h.coeffs == std::map<Partition, Rat>{{{2, 1}, Rat(1)}, {{3}, Rat(-1)}});
  CHECK(sym_expand(h) == sym_basis_poly(SymBasis::schur, {2, 1}, 3));
}

TEST_CASE("basis round trips on random expansions") {
  std::mt19937 rng(53);
  for (int t = 0; t < 10; ++t) {
    int n = 2 + int(rng() % 2);
    SymExpansion f{SymBasis::monomial, n, {}};
    for (int j = 0; j < 3; ++j) {
      Partition lam;
      int prev = 1 + int(rng() % 4);
      for (int i = 0; i < n && prev > 0; ++i) {
        lam.push_back(prev);
        prev = int(rng() % (unsigned(prev) + 1));
      }
      f.coeffs[lam] += rat(long(rng() % 9) - 4, 1 + long(rng() % 3));
    }
    std::erase_if(f.coeffs, [](const auto& kv) { return kv.second == 0; });
    auto s = schur_convert(f, SymBasis::schur);
    CHECK(schur_convert(s, SymBasis::monomial) == f);
    auto h = schur_convert(s, SymBasis::h);
    CHECK(schur_convert(h, SymBasis::schur) == s);
  }
}

TEST_CASE("printed schur expansions of the h-moment hyperdeterminants") {
  auto check = [](int n, int k, std::map<Partition, Rat> expect) {
    auto [direct, route2] = hankel_hyperdet_schur(n, k);
    CHECK(direct.coeffs == expect);
    CHECK(route2.coeffs == expect);
  };
  check(2, 2, {{{3, 1}, Rat(-1)}, {{2, 2}, Rat(3)}});
  check(2, 3, {{{5, 1}, Rat(-1)}, {{4, 2}, Rat(5)}, {{3, 3}, Rat(-10)}});
  check(2, 4, {{{7, 1}, Rat(-1)}, {{6, 2}, Rat(7)}, {{5, 3}, Rat(-21)}, {{4, 4}, Rat(35)}});
  check(3, 2, {{{6, 4, 2}, Rat(-1)},
               {{6, 3, 3}, Rat(3)},
               {{5, 5, 2}, Rat(3)},
               {{5, 4, 3}, Rat(-6)},
               {{4, 4, 4}, Rat(15)}});
  check(3, 3, {{{10, 6, 2}, Rat(-1)}, {{10, 5, 3}, Rat(5)},  {{10, 4, 4}, Rat(-10)},
               {{9, 7, 2}, Rat(5)},   {{9, 6, 3}, Rat(-20)}, {{9, 5, 4}, Rat(25)},
               {{8, 8, 2}, Rat(-10)}, {{8, 7, 3}, Rat(25)},  {{8, 6, 4}, Rat(15)},
               {{8, 5, 5}, Rat(-100)}, {{7, 7, 4}, Rat(-100)}, {{7, 6, 5}, Rat(160)},
               {{6, 6, 6}, Rat(-280)}});
}

TEST_CASE("two schur routes agree") {
  for (int n : {1, 2, 3}) {
    for (int k : {1, 2, 3}) {
      auto [direct, route2] = hankel_hyperdet_schur(n, k);
      CHECK(direct == route2);
      for (const auto& [lam, c] : direct.coeffs) {
        CHECK(static_cast<int>(lam.size()) <= n);
        int w = 0;
        for (int part : lam) w += part;
        CHECK(w == k * n * (n - 1));
      }
    }
  }
}

TEST_CASE("schur specialization matches the kernel") {
  using FT = FamilyTag;
  for (FT tag : {FT::factorial, FT::catalan, FT::hilbert, FT::inverse_factorial}) {
    auto fam = SequenceFamily::simple(tag);
    for (int n : {1, 2, 3}) {
      for (int k : {1, 2}) {
        auto c = family_moments(fam, size_t(2 * k * (n - 1) + n) + 1);
        auto [direct, route2] = hankel_hyperdet_schur(n, k);
        CHECK(specialize_hankel(direct, c) == hankel_fast(c, n, k, 0));
      }
    }
  }
}

TEST_CASE("phi map") {
  const int n = 2;
  auto vars = x_vars(n);
  std::vector<int> delta{1, 0}, mdelta{-1, 0};
  MultiPoly ad = alternant(vars, delta);
  MultiPoly amd = alternant(vars, mdelta);
  auto unit = phi_map(ad * amd, n);
  CHECK(unit.coeffs == std::map<Partition, Rat>{{{}, Rat(1)}});  // phi(a a^-) = 1

  // phi(f a_delta a_{-delta}) = f for symmetric f
  MultiPoly f = sym_basis_poly(SymBasis::monomial, {2}, n) * Rat(3) +
                sym_basis_poly(SymBasis::monomial, {1, 1}, n);
  auto img = phi_map(f * ad * amd, n);
  CHECK(sym_expand(SymExpansion{SymBasis::h, n, img.coeffs}) == f);

  // any monomial with a negative exponent maps to zero
  MultiPoly lone(vars);
  lone.add_term({-1, 3}, Rat(5));
  lone.add_term({3, -1}, Rat(5));
  CHECK(phi_map(lone, n).coeffs.empty());

  // phi(a_delta^{2k}) specialized h_m -> c_m is the Hankel hyperdeterminant
  for (int k : {1, 2}) {
    MultiPoly power = ad.pow(unsigned(2 * k));
    auto img2 = phi_map(power, n);
    auto c = family_moments(SequenceFamily::simple(FamilyTag::factorial),
                            size_t(2 * k * (n - 1)) + 1);
    SymExpansion h{SymBasis::h, n, img2.coeffs};
    CHECK(specialize_hankel(h, c) == hankel_fast(c, n, k, 0));
  }
}

TEST_CASE("chebyshev product identity") {
  for (int m = 2; m <= 8; m += 2) {
    auto [lhs, rhs] = chebyshev_identity(m);
    CHECK(lhs == rhs);
  }
  for (int m : {1, 3, 5, 7}) {
    auto [lhs, rhs] = chebyshev_identity(m);
    CHECK(lhs.is_zero());
    CHECK(rhs.is_zero());
  }
  auto [l2, r2] = chebyshev_identity(2);
  CHECK(l2 == UniPoly(Rat(-1), "x"));
}

TEST_CASE("fibonacci specialization") {
  for (int k = 1; k <= 5; ++k) {
    auto [lhs, rhs] = fibonacci_identity(k);
    CHECK(lhs == rhs);
  }
  CHECK(fibonacci_identity(1).first == Rat(1));
  CHECK(fibonacci_identity(2).first == Rat(5));
}
