#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace khopf;

namespace {

LinComb<std::vector<int>> lc(std::initializer_list<std::pair<std::vector<int>, int>> terms) {
  LinComb<std::vector<int>> s;
  for (auto const& [l, c] : terms) s.add(l, c);
  return s;
}

std::vector<Composition> nonempty_compositions_up_to(int n) {
  std::vector<Composition> out;
  for (auto const& a : compositions_up_to(n))
    if (!a.empty()) out.push_back(a);
  return out;
}

TruncPoly ltilde_window(Composition const& a, int nvars, int D) {
  static std::map<std::tuple<Composition, int, int>, TruncPoly> cache;
  auto key = std::make_tuple(a, nvars, D);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto p = a.empty() ? TruncPoly::one(nvars, D) : ltilde_poly(a, nvars, D);
  cache.emplace(key, p);
  return p;
}

/// Product built from arbitrary representative words of the two descent classes.
LinComb<Composition> product_from_words(Word const& u, Word const& v, int cap) {
  LinComb<Composition> out;
  for (auto const& [w, c] : multishuffle(u, shifted(v, alphabet_size(u)), cap)) out.add(descent_composition(w), c);
  return out;
}

}  // namespace

TEST(Hopf, LtildeProductGolden) {
  auto p = ltilde_product({1}, {1}, 3);
  EXPECT_EQ(p.coeffs, lc({{{2}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{1, 2}, 1}}));
  EXPECT_EQ(p.cap, 3);
}

TEST(Hopf, LtildeProductMatchesPolynomialWindow) {
  int D = 6;
  for (auto const& a : nonempty_compositions_up_to(3))
    for (auto const& b : nonempty_compositions_up_to(3)) {
      TruncPoly rhs(D, D);
      for (auto const& [g, c] : ltilde_product(a, b, D).coeffs) rhs += c * ltilde_window(g, D, D);
      EXPECT_EQ(ltilde_window(a, D, D) * ltilde_window(b, D, D), rhs);
    }
}

TEST(Hopf, LtildeProductIndependentOfRepresentatives) {
  std::mt19937 rng(oracle::default_seed);
  int cap = 6;
  for (auto const& a : nonempty_compositions_up_to(3))
    for (auto const& b : nonempty_compositions_up_to(3)) {
      auto reference = ltilde_product(a, b, cap).coeffs;
      for (int rep = 0; rep < 3; ++rep) {
        auto pick = [&](Composition const& c) {
          std::vector<Word> cands;
          Word p(size(c));
          for (int i = 0; i < size(c); ++i) p[i] = i + 1;
          do {
            if (descent_composition(p) == c) cands.push_back(p);
          } while (std::next_permutation(p.begin(), p.end()));
          return cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng)];
        };
        EXPECT_EQ(product_from_words(pick(a), pick(b), cap), reference);
      }
    }
}

TEST(Hopf, LtildeCoproductGolden) {
  Tensor<Composition> expect;
  expect.add({{}, {1}}, 1);
  expect.add({{1}, {1}}, 1);
  expect.add({{1}, {}}, 1);
  EXPECT_EQ(ltilde_coproduct({1}), expect);
}

TEST(Hopf, LtildeCoproductSplitsVariables) {
  int D = 4, half = 2;
  for (auto const& a : nonempty_compositions_up_to(3)) {
    TruncPoly rhs(2 * half, D);
    for (auto const& [k, c] : ltilde_coproduct(a)) {
      auto left = ltilde_window(k.first, half, D).relabelled(0, 2 * half);
      auto right = ltilde_window(k.second, half, D).relabelled(half, 2 * half);
      rhs += c * (left * right);
    }
    EXPECT_EQ(ltilde_window(a, 2 * half, D), rhs);
  }
}

TEST(Hopf, LtildeBialgebraCompatibility) {
  int cap = 5;
  auto within = [&](std::pair<Composition, Composition> const& k) { return size(k.first) + size(k.second) <= cap; };
  for (auto const& a : nonempty_compositions_up_to(2))
    for (auto const& b : nonempty_compositions_up_to(2)) {
      Tensor<Composition> lhs;
      for (auto const& [g, c] : ltilde_product(a, b, cap).coeffs)
        for (auto const& [k, d] : ltilde_coproduct(g)) lhs.add(k, c * d);
      Tensor<Composition> rhs;
      for (auto const& [x, cx] : ltilde_coproduct(a))
        for (auto const& [y, cy] : ltilde_coproduct(b)) {
          auto mul = [&](Composition const& p, Composition const& q) {
            LinComb<Composition> r;
            if (p.empty() || q.empty()) r.add(p.empty() ? q : p, 1);
            else r = ltilde_product(p, q, cap).coeffs;
            return r;
          };
          for (auto const& [l, cl] : mul(x.first, y.first))
            for (auto const& [r, cr] : mul(x.second, y.second)) rhs.add({l, r}, cx * cy * cl * cr);
        }
      EXPECT_EQ(lhs.filtered(within), rhs.filtered(within));
    }
}

TEST(Hopf, LtildeAssociativeAndCoassociative) {
  int cap = 6;
  auto mul = [&](LinComb<Composition> const& x, Composition const& b) {
    LinComb<Composition> r;
    for (auto const& [a, c] : x) r += c * ltilde_product(a, b, cap).coeffs;
    return r;
  };
  for (auto const& a : nonempty_compositions_up_to(2))
    for (auto const& b : nonempty_compositions_up_to(2))
      for (auto const& c : nonempty_compositions_up_to(2)) {
        auto left = mul(ltilde_product(a, b, cap).coeffs, c);
        LinComb<Composition> right;
        for (auto const& [bc, k] : ltilde_product(b, c, cap).coeffs) right += k * ltilde_product(a, bc, cap).coeffs;
        EXPECT_EQ(left, right);
      }
  for (auto const& g : nonempty_compositions_up_to(4)) {
    LinComb<std::vector<Composition>> left, right;
    for (auto const& [k, c] : ltilde_coproduct(g)) {
      if (!k.first.empty())
        for (auto const& [kk, d] : ltilde_coproduct(k.first)) left.add({kk.first, kk.second, k.second}, c * d);
      else
        left.add({{}, {}, k.second}, c);
      if (!k.second.empty())
        for (auto const& [kk, d] : ltilde_coproduct(k.second)) right.add({k.first, kk.first, kk.second}, c * d);
      else
        right.add({k.first, {}, {}}, c);
    }
    EXPECT_EQ(left, right);
  }
}

TEST(Hopf, PsiIsMultiplicative) {
  auto w = mmr_product(Word{1}, Word{1}, 3);
  EXPECT_EQ(psi(w).coeffs, ltilde_product({1}, {1}, 3).coeffs);
  for (auto const& u : mperms_of_length(2))
    for (auto const& v : mperms_of_length(2))
      EXPECT_EQ(psi(mmr_product(u, v, 6)).coeffs, ltilde_product(descent_composition(u), descent_composition(v), 6).coeffs);
}

TEST(Hopf, PumpGoldens) {
  EXPECT_EQ(pump_label({2, 1}, 2), lc({{{1, 1, 2, 1}, 1}, {{1, 2, 1, 1}, 2}, {{2, 1, 1, 1}, 3}}));
  EXPECT_EQ(ltilde_in_L({2, 1}, 4).coeffs, lc({{{2, 1}, 1}, {{1, 2, 1}, 1}, {{2, 1, 1}, 2}}));
  EXPECT_EQ(ltilde_in_L({2, 1}, 5).coeffs,
            lc({{{2, 1}, 1}, {{1, 2, 1}, 1}, {{2, 1, 1}, 2}, {{1, 1, 2, 1}, 1}, {{1, 2, 1, 1}, 2}, {{2, 1, 1, 1}, 3}}));
  // two 1-extensions of D = [2] to E = [3] per extra element: three maps [2] -> [3]
  EXPECT_EQ(pump_label({1, 1, 1}, 1), lc({{{1, 1, 1, 1}, 3}}));
  EXPECT_EQ(pump_label({2, 1}, 0), lc({{{2, 1}, 1}}));
}

TEST(Hopf, PumpExtractsHomogeneousComponents) {
  int D = 5;
  for (auto const& a : nonempty_compositions_up_to(3)) {
    auto window = ltilde_window(a, D, D);
    for (int i = 0; size(a) + i <= D; ++i) {
      TruncPoly part(D, D);
      for (auto const& [b, c] : pump_label(a, i)) part += c * fundamental_qsym(b, D, D);
      EXPECT_EQ(window.homogeneous(size(a) + i), part);
    }
  }
}

TEST(Hopf, PumpCompositionLaw) {
  std::mt19937 rng(oracle::default_seed);
  auto comps = nonempty_compositions_up_to(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = comps[std::uniform_int_distribution<std::size_t>(0, comps.size() - 1)(rng)];
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; i + j <= 3; ++j) {
        BasisElement f{"L", lc({{a, 1}}), {}};
        auto lhs = pump(pump(f, i), j);
        auto rhs = pump(f, i + j);
        rhs.coeffs *= binomial(i + j, i);
        EXPECT_EQ(lhs.coeffs, rhs.coeffs);
      }
  }
}

TEST(Hopf, PumpAgreesInBothBases) {
  for (auto const& a : nonempty_compositions_up_to(4))
    for (int i = 0; i <= 2; ++i) {
      BasisElement l{"L", lc({{a, 1}}), {}};
      BasisElement m{"M", fundamental_to_monomial(l.coeffs), {}};
      EXPECT_EQ(fundamental_to_monomial(pump(l, i).coeffs), pump(m, i).coeffs);
    }
}

TEST(Hopf, PumpPreservesBalance) {
  for (auto const& lam : partitions_up_to(4)) {
    if (lam.empty()) continue;
    int D = size(lam);
    auto s = expand_quasisymmetric(schur(lam, D, D), "M", {});
    for (int i = 0; i <= 2; ++i) EXPECT_TRUE(is_balanced(pump(s, i)));
  }
}

TEST(Hopf, PumpRejectsInhomogeneousInput) {
  BasisElement f{"L", lc({{{1}, 1}, {{2, 1}, 1}}), {}};
  EXPECT_THROW(pump(f, 1), DomainError);
  EXPECT_THROW(pump_label({1}, -1), DomainError);
}

TEST(Hopf, MultiMonomialLowestComponent) {
  for (auto const& a : nonempty_compositions_up_to(4)) {
    auto low = mtilde_in_L(a, size(a)).coeffs;
    EXPECT_EQ(fundamental_to_monomial(low), lc({{a, 1}}));
  }
  EXPECT_EQ(mtilde({2, 1}).coeffs, lc({{{2, 1}, 1}, {{1, 1, 1}, -1}}));
  EXPECT_EQ(mtilde({1, 1}).coeffs, lc({{{1, 1}, 1}}));
}

TEST(Hopf, TypeOfMPermutation) {
  EXPECT_EQ(type_of({{1, 4}, {2}, {3}}), (Composition{3, 1}));
  EXPECT_EQ(type_of({{4}, {1}, {2}, {3}}), (Composition{3, 1}));
  EXPECT_EQ(type_of({{1}, {2}, {3}}), (Composition{3}));
}

TEST(Hopf, RtildeThreeOne) {
  SetCompSum expect;
  for (auto const& w : std::vector<SetComposition>{{{1, 4}, {2}, {3}}, {{1}, {2, 4}, {3}}, {{1}, {2}, {4}, {3}},
                                                   {{1}, {4}, {2}, {3}}, {{4}, {1}, {2}, {3}}})
    expect.add(w, 1);
  EXPECT_EQ(rtilde({3, 1}), expect);
}

TEST(Hopf, RtildeProductGolden) {
  auto p = rtilde_product({3, 2, 5, 1}, {4, 2});
  EXPECT_EQ(p.coeffs, lc({{{3, 2, 5, 5, 2}, 1}, {{3, 2, 5, 1, 4, 2}, 1}, {{3, 2, 5, 4, 2}, 1}}));
}

TEST(Hopf, RtildeProductMatchesBigAlgebra) {
  for (auto const& a : nonempty_compositions_up_to(3))
    for (auto const& b : nonempty_compositions_up_to(3)) {
      SetCompSum rhs;
      for (auto const& [g, c] : rtilde_product(a, b).coeffs) rhs += c * rtilde(g);
      EXPECT_EQ(mmr_big_product(rtilde(a), rtilde(b)), rhs);
    }
}

TEST(Hopf, RtildeClassesPartitionMPermutations) {
  for (int n = 1; n <= 4; ++n) {
    std::size_t total = 0;
    for (auto const& a : compositions_of(n)) total += rtilde(a).size();
    EXPECT_EQ(total, Mperms_of_size(n).size());
  }
}

TEST(Hopf, RtildeFRecursionRoundTrip) {
  for (auto const& a : nonempty_compositions_up_to(4)) EXPECT_EQ(rtilde_from_F(rtilde_in_F(a)).coeffs, lc({{a, 1}}));
  // R(1,1) = F1 F1 - F2 - F1
  EXPECT_EQ(rtilde_in_F({1, 1}), lc({{{1, 1}, 1}, {{2}, -1}, {{1}, -1}}));
}

TEST(Hopf, RtildeProductIsDualToLtildeCoproduct) {
  // coefficient of R_g in R_a R_b equals coefficient of L_a (x) L_b in the coproduct of L_g
  for (int n = 1; n <= 4; ++n)
    for (auto const& g : compositions_of(n)) {
      auto cop = ltilde_coproduct(g);
      for (auto const& a : compositions_up_to(n + 1))
        for (auto const& b : compositions_up_to(n + 1)) {
          if (size(a) + size(b) > n + 1) continue;
          EXPECT_EQ(rtilde_product(a, b).coeffs.coeff(g), cop.coeff({a, b}));
        }
    }
}

TEST(Hopf, RibbonProductThreeTerms) {
  auto r = g_ribbon_product(ribbon({2}), ribbon({2}));
  LinComb<SkewShape> expect;
  expect.add(normalized(ribbon({4})), 1);
  expect.add(normalized(ribbon({2, 2})), 1);
  expect.add(normalized(ribbon({3})), -1);
  EXPECT_EQ(r, expect);
}

TEST(Hopf, RibbonProductMatchesCompositionRule) {
  for (auto const& a : nonempty_compositions_up_to(3))
    for (auto const& b : nonempty_compositions_up_to(3)) {
      LinComb<SkewShape> expect;
      for (auto const& [g, c] : rtilde_product(a, b).coeffs) {
        bool coincide = size(g) == size(a) + size(b) - 1;
        expect.add(normalized(ribbon(g)), coincide ? -c : c);
      }
      EXPECT_EQ(g_ribbon_product(ribbon(a), ribbon(b)), expect);
    }
}

TEST(Hopf, RibbonProductWindowIdentity) {
  int D = 4;
  for (auto const& [rho, tau] : std::vector<std::pair<SkewShape, SkewShape>>{
           {ribbon({2}), ribbon({2})}, {ribbon({1, 1}), ribbon({2})}, {SkewShape({2, 1}), SkewShape({1})}}) {
    TruncPoly rhs(D, D), rhs_t(D, D);
    for (auto const& [s, c] : g_ribbon_product(rho, tau)) rhs += c * g_poly(s, D, D);
    for (auto const& [s, c] : gtilde_ribbon_product(rho, tau)) rhs_t += c * gtilde_poly(s, D, D);
    EXPECT_EQ(g_poly(rho, D, D) * g_poly(tau, D, D), rhs);
    EXPECT_EQ(gtilde_poly(rho, D, D) * gtilde_poly(tau, D, D), rhs_t);
  }
}
