#include <gtest/gtest.h>

#include "siflag/stalkcheck.hpp"
#include "siflag/syntax.hpp"
#include "siflag/table.hpp"

using namespace siflag;

TEST(ClosureBox, Examples) {
  auto a1 = RootDatum::from_alias("a1-adj");
  EXPECT_EQ(closure_box(a1, Coweight{0}, 0), (std::vector<Coweight>{Coweight{0}}));
  EXPECT_EQ(closure_box(a1, Coweight{0}, 2), (std::vector<Coweight>{Coweight{0}, Coweight{-2}, Coweight{-4}}));
  auto a2 = RootDatum::from_alias("a2-adj");
  auto box = closure_box(a2, a2.zero(), 1);
  ASSERT_EQ(box.size(), 3u);
  EXPECT_EQ(box[1], -a2.simple_coroots()[0]);
  EXPECT_EQ(box[2], -a2.simple_coroots()[1]);
  EXPECT_THROW(closure_box(a2, a2.zero(), -1), DomainError);
}

TEST(ClosureBox, DownwardClosed) {
  auto b2 = RootDatum::from_alias("b2");
  Coweight lam{1, 2};
  auto box = closure_box(b2, lam, 4);
  std::set<Coweight> set(box.begin(), box.end());
  EXPECT_EQ(set.size(), box.size());
  EXPECT_TRUE(set.count(lam));
  for (const auto& mu : box) {
    EXPECT_TRUE(b2.dominance_leq(mu, lam));
    if (*b2.coroot_height(lam - mu) >= 4) continue;
    for (const auto& c : b2.simple_coroots()) EXPECT_TRUE(set.count(mu - c));
  }
}

TEST(IcFamily, StalksAndClosedForm) {
  ExtAffineWeylGroup G(RootDatum::from_alias("a2-adj"));
  const auto& W = G.finite();
  Coweight lam{1, 1};
  auto st = ic_family_stalk(G, lam, G.translation(lam));
  ASSERT_TRUE(st);
  EXPECT_EQ(st->degree, -3);
  EXPECT_EQ(st->rank, 1);
  auto top = ic_family_stalk(G, lam, G.make(lam, W.longest()));
  ASSERT_TRUE(top);
  EXPECT_EQ(top->degree, 0);
  EXPECT_FALSE(ic_family_stalk(G, lam, G.translation(lam + G.datum().simple_coroots()[0])));
  for (std::size_t i = 0; i < W.order(); ++i) {
    auto s = ic_family_stalk(G, lam, G.make(lam, W.element(i)));
    EXPECT_LE(s->degree, 0);
    EXPECT_GE(s->degree, -3);
  }

  auto A0 = G.fundamental_alcove();
  EXPECT_EQ(periodic_kl_closed(G, G.translate_alcove(lam, A0), lam), LaurentPolynomial(1));
  EXPECT_EQ(periodic_kl_closed(G, G.translate_alcove(lam, G.alcove_of(G.from_finite(W.longest()))), lam),
            LaurentPolynomial::monomial(3));
  EXPECT_TRUE(periodic_kl_closed(G, G.translate_alcove(lam + G.datum().simple_coroots()[0], A0), lam).is_zero());
}

TEST(PeriodicExample, PassesAndNegativeControlFails) {
  for (const char* name : {"a1-adj", "a1-sc", "a2-adj", "b2"}) {
    ExtAffineWeylGroup G(RootDatum::from_alias(name));
    for (const auto& lam : G.dominant_box(1)) {
      auto rep = verify_periodic_example(G, lam);
      EXPECT_TRUE(rep.pass()) << name << " " << lam.str();
      EXPECT_EQ(rep.on_family_count(), G.finite().order());
      EXPECT_GT(rep.rows.size(), rep.on_family_count());
      auto bad = verify_periodic_example(G, lam, 1);
      EXPECT_FALSE(bad.pass());
      ASSERT_TRUE(bad.first_failure());
      EXPECT_EQ(bad.first_failure()->trans, lam);
    }
  }
  ExtAffineWeylGroup A1(RootDatum::from_alias("a1-adj"));
  EXPECT_EQ(verify_periodic_example(A1, Coweight{0}).on_family_count(), 2u);
  auto j = to_json(A1, verify_periodic_example(A1, Coweight{0}));
  EXPECT_EQ(j[0]["y"], "e");
  EXPECT_EQ(j[0]["pass"], true);
}

TEST(Table, CsvAndJson) {
  Table t;
  t.header = {"a", "b"};
  EXPECT_EQ(emit_table(t, TableFormat::csv), "a,b\n");
  t.rows.push_back({Cell(Int{1}), Cell("x,y")});
  EXPECT_EQ(emit_table(t, TableFormat::csv), "a,b\n1,\"x,y\"\n");
  auto json = emit_table(t, TableFormat::json);
  EXPECT_EQ(emit_table(parse_table_json(json), TableFormat::json), json);
  EXPECT_THROW(parse_table_json("{}"), ParseError);
}

TEST(Table, GaitsgoryPGL2) {
  auto d = std::make_shared<const RootDatum>(RootDatum::from_alias("a1-adj"));
  FiniteWeylGroup W(d);
  KostantCalculator K(W);
  Table t = gaitsgory_table(K, 3);
  ASSERT_EQ(t.rows.size(), 4u);
  EXPECT_EQ(t.rows[0][0].text, "[0]");
  EXPECT_EQ(t.rows[3][0].text, "[-6]");
  EXPECT_EQ(t.rows[2][1].text, "1");
  EXPECT_EQ(t.rows[2][2].text, "q^4");
  std::string csv = emit_table(t, TableFormat::csv);
  EXPECT_EQ(csv, emit_table(gaitsgory_table(K, 3), TableFormat::csv));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "nu,stalk,costalk_poly,stable_from");
  auto json = emit_table(t, TableFormat::json);
  EXPECT_EQ(emit_table(parse_table_json(json), TableFormat::json), json);
}
