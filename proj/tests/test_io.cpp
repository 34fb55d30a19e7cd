#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace khopf;

TEST(Io, ShapeTextForms) {
  EXPECT_EQ(parse_partition("[4,3,3,1]"), (Partition{4, 3, 3, 1}));
  EXPECT_EQ(parse_partition(" [ 2 , 1 ] "), (Partition{2, 1}));
  EXPECT_EQ(parse_partition("[]"), Partition{});
  EXPECT_EQ(parse_composition("(1,2,2)"), (Composition{1, 2, 2}));
  EXPECT_EQ(parse_skew("[4,3,3,1]/[2,1]"), SkewShape({4, 3, 3, 1}, {2, 1}));
  EXPECT_EQ(format_skew(SkewShape({3, 3}, {2})), "[3,3]/[2]");
  EXPECT_EQ(format_skew(SkewShape({2})), "[2]");
  EXPECT_EQ(format_composition({2, 1}), "(2,1)");
}

TEST(Io, ShapeTextRoundTrip) {
  for (auto const& s : skew_shapes_up_to(4)) EXPECT_EQ(parse_skew(format_skew(s)), s);
  for (auto const& a : compositions_up_to(4)) EXPECT_EQ(parse_composition(format_composition(a)), a);
}

TEST(Io, MalformedShapesAreRejected) {
  EXPECT_THROW(parse_partition("[1,2]"), ParseError);
  EXPECT_THROW(parse_partition("[2,1"), ParseError);
  EXPECT_THROW(parse_partition("[2,x]"), ParseError);
  EXPECT_THROW(parse_composition("(2,0)"), ParseError);
  EXPECT_THROW(parse_skew("[2]/[3]"), ParseError);
}

TEST(Io, WordTextForms) {
  EXPECT_EQ(parse_word("121"), (Word{1, 2, 1}));
  EXPECT_EQ(parse_word("1,10,2"), (Word{1, 10, 2}));
  EXPECT_EQ(format_word({1, 10, 2}), "1,10,2");
  EXPECT_EQ(format_word({3, 4, 1}), "341");
  EXPECT_THROW(parse_word("1a"), ParseError);
  EXPECT_THROW(parse_word("102"), ParseError);
}

TEST(Io, SetCompositionTextForms) {
  SetComposition w{{1, 3}, {2}};
  EXPECT_EQ(parse_set_composition("[(1,3),2]"), w);
  EXPECT_EQ(parse_set_composition("[(3,1),2]"), w);
  EXPECT_EQ(format_set_composition(w), "[(1,3),2]");
  for (int n = 1; n <= 3; ++n)
    for (auto const& u : Mperms_of_size(n)) EXPECT_EQ(parse_set_composition(format_set_composition(u)), u);
  EXPECT_THROW(parse_set_composition("[(1,3),3]"), ParseError);
  EXPECT_THROW(parse_set_composition("[(1,3,2]"), ParseError);
}

TEST(Io, BasisElementJson) {
  BasisElement b{"s", {}, 5};
  b.coeffs.add({2, 1}, 1);
  b.coeffs.add({2}, 1);
  auto j = to_json(b);
  EXPECT_EQ(j, json::parse(R"({"basis":"s","cap":5,"coeffs":{"[2,1]":1,"[2]":1}})"));
  auto back = basis_element_from_json(j);
  EXPECT_EQ(back.basis, b.basis);
  EXPECT_EQ(back.cap, b.cap);
  EXPECT_EQ(back.coeffs, b.coeffs);
  auto q = to_json(ltilde_product({1}, {1}, 3));
  EXPECT_EQ(q.at("coeffs").at("(1,2)"), 1);
  EXPECT_EQ(basis_element_from_json(q).coeffs, ltilde_product({1}, {1}, 3).coeffs);
}

TEST(Io, BigCoefficientsSurvive) {
  BasisElement b{"M", {}, {}};
  Integer big("123456789012345678901234567890");
  b.coeffs.add({1}, big);
  auto j = to_json(b);
  EXPECT_TRUE(j.at("coeffs").at("(1)").is_string());
  EXPECT_EQ(basis_element_from_json(json::parse(j.dump())).coeffs.coeff({1}), big);
}

TEST(Io, WordElementJson) {
  auto x = mmr_product(Word{1, 2}, Word{1}, 3);
  auto j = to_json(x);
  EXPECT_EQ(j.at("cap"), 3);
  EXPECT_EQ(j.at("terms").at("123"), 1);
  auto back = word_element_from_json(json::parse(j.dump()));
  EXPECT_EQ(back.terms, x.terms);
  EXPECT_EQ(back.cap, x.cap);
}

TEST(Io, SetCompSumJson) {
  auto r = rtilde({3, 1});
  EXPECT_EQ(set_comp_sum_from_json(json::parse(to_json(r).dump())), r);
}

TEST(Io, TruncPolyJson) {
  auto p = g_poly(SkewShape({2, 1}), 3, 3);
  auto j = to_json(p);
  EXPECT_EQ(j.at("nvars"), 3);
  EXPECT_EQ(j.at("maxdeg"), 3);
  EXPECT_EQ(j.at("terms").at("[2,1,0]"), 1);
  EXPECT_EQ(trunc_poly_from_json(json::parse(j.dump())), p);
}

TEST(Io, TableauJsonRoundTrips) {
  SetTableau t{SkewShape({2, 2, 1}), {{1, 2}, {4, 4}, {2, 2, 3}, {5}, {4, 5}}};
  auto j = to_json(t, TableauKind::weak_svt);
  EXPECT_EQ(j.at("shape"), "[2,2,1]");
  EXPECT_EQ(j.at("kind"), "weak_svt");
  EXPECT_EQ(set_tableau_from_json(json::parse(j.dump())), t);
  for_each_rpp(SkewShape({2, 1}, {1}), 2, [&](IntTableau const& u) {
    EXPECT_EQ(int_tableau_from_json(to_json(u, TableauKind::rpp)), u);
  });
  for_each_valued_set(SkewShape({2, 1}), {2, 3}, [&](ValuedSetTableau const& v) {
    auto back = valued_set_from_json(json::parse(to_json(v).dump()));
    EXPECT_EQ(back.filling, v.filling);
    EXPECT_EQ(back.joins_above, v.joins_above);
  });
}

TEST(Io, TableauJsonErrors) {
  EXPECT_THROW(int_tableau_from_json(json::parse(R"({"shape":"[2]","kind":"ssyt","cells":[{"r":0,"c":0,"v":1}]})")),
               ParseError);
  EXPECT_THROW(int_tableau_from_json(json::parse(R"({"shape":"[1]","kind":"ssyt","cells":[{"r":0,"c":5,"v":1}]})")),
               ParseError);
  EXPECT_THROW(parse_kind("plane"), ParseError);
}

TEST(Io, PosetJson) {
  std::mt19937 rng(oracle::default_seed);
  for (int trial = 0; trial < 10; ++trial) {
    auto P = oracle::random_poset(4, rng);
    auto Q = poset_from_json(json::parse(to_json(P).dump()));
    EXPECT_EQ(Q.covers(), P.covers());
    EXPECT_EQ(Q.theta(), P.theta());
  }
  auto j = json::parse(R"({"n":2,"covers":[[1,2]],"theta":[2,1]})");
  auto P = poset_from_json(j);
  EXPECT_TRUE(P.less(0, 1));
  EXPECT_EQ(to_json(P), j);
}

TEST(Io, LabelsFollowBasis) {
  EXPECT_EQ(format_label("s", {2, 1}), "[2,1]");
  EXPECT_EQ(format_label("L", {2, 1}), "(2,1)");
  EXPECT_EQ(parse_label("Ktilde", "[2,1]"), (std::vector<int>{2, 1}));
  EXPECT_THROW(parse_label("s", "[1,2]"), ParseError);
}
