#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace khopf;

namespace {

LinComb<std::vector<int>> lc(std::initializer_list<std::pair<std::vector<int>, int>> terms) {
  LinComb<std::vector<int>> s;
  for (auto const& [l, c] : terms) s.add(l, c);
  return s;
}

/// Elementary symmetric polynomial by direct enumeration of squarefree monomials.
TruncPoly elementary(int k, int nvars, int maxdeg) {
  TruncPoly p(nvars, maxdeg);
  for (unsigned m = 0; m < (1u << nvars); ++m) {
    if (__builtin_popcount(m) != k) continue;
    Exponent e(nvars, 0);
    for (int i = 0; i < nvars; ++i)
      if (m & (1u << i)) e[i] = 1;
    p.add(e, 1);
  }
  return p;
}

}  // namespace

TEST(Series, MonomialQuasisymmetricGolden) {
  auto p = monomial_qsym({2, 1}, 3, 3);
  TruncPoly expect(3, 3);
  expect.add({2, 1, 0}, 1);
  expect.add({2, 0, 1}, 1);
  expect.add({0, 2, 1}, 1);
  EXPECT_EQ(p, expect);
}

TEST(Series, QuasisymmetricRoundTrip) {
  auto m = expand_quasisymmetric(monomial_qsym({2, 1}, 3, 3), "M", {});
  EXPECT_EQ(m.coeffs, lc({{{2, 1}, 1}}));
  for (auto const& a : compositions_up_to(4)) {
    auto l = expand_quasisymmetric(fundamental_qsym(a, 4, 4), "L", {});
    EXPECT_EQ(l.coeffs, lc({{a, 1}}));
  }
}

TEST(Series, SchurInFundamentals) {
  auto l = expand_quasisymmetric(schur({2, 1}, 3, 3), "L", {});
  EXPECT_EQ(l.coeffs, lc({{{2, 1}, 1}, {{1, 2}, 1}}));
}

TEST(Series, NonQuasisymmetricIsRejected) {
  TruncPoly p(2, 2);
  p.add({2, 0}, 1);
  EXPECT_THROW(expand_quasisymmetric(p, "M", {}), DomainError);
  EXPECT_THROW(expand_symmetric(p, "m", {}), DomainError);
}

TEST(Series, CoefficientOutsideWindowThrows) {
  TruncPoly p(2, 2);
  EXPECT_THROW(p.coeff({2, 1}), TruncationError);
}

TEST(Series, SchurCountsMatchHookContent) {
  for (auto const& lam : partitions_up_to(4)) {
    int n = 3;
    auto p = schur(lam, n, size(lam));
    Integer total = 0;
    for (auto const& [e, c] : p.terms()) total += c;
    EXPECT_EQ(total, oracle::hook_content(lam, n));
  }
}

TEST(Series, MonomialSchurConversionsInvert) {
  for (int n = 1; n <= 5; ++n)
    for (auto const& lam : partitions_of(n)) {
      LinComb<Partition> s;
      s.add(lam, 1);
      EXPECT_EQ(monomial_to_schur(schur_to_monomial(s)), s);
    }
}

TEST(Series, ExpandReconstructsSymmetricPolynomials) {
  int D = 4;
  for (auto const& lam : partitions_up_to(3)) {
    auto f = g_poly(SkewShape(lam), D, D) + Ktilde_poly(SkewShape(lam), D, D);
    auto s = expand_symmetric(f, "s", D);
    TruncPoly back(D, D);
    for (auto const& [mu, c] : s.coeffs) back += c * schur(mu, D, D);
    EXPECT_EQ(back, f);
  }
}

TEST(Series, DualGrothendieckTwoOne) {
  auto g = g_poly(SkewShape({2, 1}), 3, 3);
  EXPECT_EQ(expand_symmetric(g, "s", {}).coeffs, lc({{{2, 1}, 1}, {{2}, 1}}));
  EXPECT_EQ(expand_symmetric(g, "m", {}).coeffs, lc({{{2, 1}, 1}, {{1, 1, 1}, 2}, {{2}, 1}, {{1, 1}, 1}}));
}

TEST(Series, DualGrothendieckThreeTwoTwo) {
  auto g = g_poly(SkewShape({3, 2, 2}), 7, 7);
  auto expect = lc({{{3, 2, 2}, 1}, {{3, 2, 1}, 2}, {{3, 1, 1}, 1}, {{3, 2}, 3}, {{3, 1}, 2}, {{3}, 1}});
  EXPECT_EQ(expand_symmetric(g, "s", {}).coeffs, expect);
}

TEST(Series, DualGrothendieckIsElegantSum) {
  for (auto const& lam : partitions_up_to(5)) {
    if (lam.empty()) continue;
    int D = size(lam);
    auto s = expand_symmetric(g_poly(SkewShape(lam), D, D), "s", {});
    LinComb<Partition> expect;
    for (auto const& mu : subpartitions(lam)) expect.add(mu, elegant_count(lam, mu));
    EXPECT_EQ(s.coeffs, expect);
  }
}

TEST(Series, KtildeOfOneBoxIsSumOfElementaries) {
  int D = 4;
  TruncPoly expect(D, D);
  for (int k = 1; k <= D; ++k) expect += elementary(k, D, D);
  EXPECT_EQ(Ktilde_poly(SkewShape({1}), D, D), expect);
  auto G = G_poly(SkewShape({1}), D, D);
  EXPECT_EQ(G.homogeneous(2), Integer(-1) * elementary(2, D, D));
}

TEST(Series, JOfOneBoxIsSumOfCompleteHomogeneous) {
  auto j = expand_symmetric(J_poly(SkewShape({1}), 4, 4), "s", 4);
  EXPECT_EQ(j.coeffs, lc({{{1}, 1}, {{2}, 1}, {{3}, 1}, {{4}, 1}}));
}

TEST(Series, ValuedSetColumn) {
  auto j = expand_symmetric(j_poly(SkewShape({1, 1}), 2, 2), "s", {});
  EXPECT_EQ(j.coeffs, lc({{{2}, 1}, {{1}, 1}}));
}

TEST(Series, LowestComponents) {
  for (auto const& lam : partitions_up_to(4)) {
    int D = size(lam) + 1;
    SkewShape s(lam);
    EXPECT_EQ(Ktilde_poly(s, D, D).homogeneous(size(lam)), schur(lam, D, D));
    EXPECT_EQ(g_poly(s, D, D).homogeneous(size(lam)), schur(lam, D, D));
    EXPECT_EQ(J_poly(s, D, D).homogeneous(size(lam)), schur(conjugate(lam), D, D));
  }
}

TEST(Series, OmegaRelations) {
  for (auto const& lam : partitions_up_to(3)) {
    int D = size(lam) + 2;
    SkewShape s(lam);
    EXPECT_EQ(omega(expand_symmetric(Ktilde_poly(s, D, D), "s", D)), expand_symmetric(J_poly(s, D, D), "s", D));
    EXPECT_EQ(omega(expand_symmetric(g_poly(s, D, D), "s", {})), expand_symmetric(j_poly(s, D, D), "s", {}));
  }
}

TEST(Series, HallPairing) {
  BasisElement a{"s", lc({{{2, 1}, 2}, {{3}, 1}}), {}};
  BasisElement b{"s", lc({{{2, 1}, 3}, {{1}, 5}}), {}};
  EXPECT_EQ(hall_pair(a, b), 6);
  BasisElement t{"s", lc({{{1}, 1}}), 2};
  EXPECT_THROW(hall_pair(a, t), TruncationError);
  EXPECT_THROW(hall_pair(t, t), TruncationError);
  BasisElement small{"s", lc({{{1, 1}, 1}}), {}};
  EXPECT_EQ(hall_pair(small, t), 0);
}

TEST(Series, TruncationCap) {
  auto k = expand_symmetric(Ktilde_poly(SkewShape({1}), 5, 5), "s", 5);
  auto t = truncated(k, 3);
  EXPECT_EQ(t.cap, 3);
  EXPECT_EQ(t.coeffs, lc({{{1}, 1}, {{1, 1}, 1}, {{1, 1, 1}, 1}}));
}

TEST(Series, PolynomialWindowArithmetic) {
  auto a = fundamental_qsym({1}, 3, 3);
  auto b = a * a;
  EXPECT_EQ(expand_quasisymmetric(b, "L", 3).coeffs, lc({{{2}, 1}, {{1, 1}, 1}}));
  EXPECT_THROW(a + fundamental_qsym({1}, 2, 3), DomainError);
}
