#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <thread>

#include "oracles.hpp"
#include "siflag/kostant.hpp"
#include "siflag/stalkcheck.hpp"

using namespace siflag;

namespace {

struct Fixture {
  explicit Fixture(const char* name)
      : datum(std::make_shared<const RootDatum>(RootDatum::from_alias(name))), W(datum), K(W) {}
  std::shared_ptr<const RootDatum> datum;
  FiniteWeylGroup W;
  KostantCalculator K;
};

QPolynomial q(std::vector<Int> c) { return QPolynomial(std::move(c)); }

}  // namespace

TEST(QPolynomial, Arithmetic) {
  QPolynomial p = q({1, 0, 2});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.eval_at_one(), 3);
  EXPECT_EQ(p.substitute_q_squared(), q({1, 0, 0, 0, 2}));
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ(p.shifted(2), q({0, 0, 1, 0, 2}));
  EXPECT_EQ(q({0, 0, 1, 0, 1}).str(), "q^2 + q^4");
  EXPECT_EQ(QPolynomial::from_json(p.to_json()), p);
  EXPECT_EQ(p.to_json().dump(), R"({"q^0":1,"q^2":2})");
  EXPECT_THROW(QPolynomial::from_json(nlohmann::json::parse(R"({"x^2":1})")), ParseError);
}

TEST(Kostant, PartitionExamples) {
  Fixture a2("a2-adj");
  const auto& cr = a2.datum->simple_coroots();
  EXPECT_EQ(a2.K.partition(a2.datum->zero()), QPolynomial::constant(1));
  EXPECT_EQ(a2.K.partition(cr[0]), q({0, 1}));
  EXPECT_EQ(a2.K.partition(cr[0] + cr[1]), q({0, 1, 1}));
  EXPECT_TRUE(a2.K.partition(-cr[0]).is_zero());
  Fixture a1("a1-adj");
  EXPECT_TRUE(a1.K.partition(Coweight{1}).is_zero());  // not in the coroot lattice
  EXPECT_EQ(a1.K.partition(Coweight{4}), q({0, 0, 1}));
}

TEST(Kostant, PartitionMatchesBruteForce) {
  for (const char* name : {"a2-adj", "a2-sc", "b2", "g2"}) {
    Fixture f(name);
    for (const auto& nu : closure_box(*f.datum, f.datum->zero(), 6)) {
      auto expected = oracle::partitions(*f.datum, -nu);
      auto got = f.K.partition(-nu);
      EXPECT_EQ(got, expected) << name << " " << nu.str();
      for (Int c : got.coeffs()) EXPECT_GE(c, 0);
    }
  }
}

TEST(Kostant, WeightMultiplicities) {
  Fixture a2("a2-adj");
  const Coweight theta = a2.datum->pos_coroots().back();
  EXPECT_EQ(a2.K.kostant_weight_multiplicity(theta, a2.datum->zero()), 2);
  EXPECT_EQ(a2.K.kostant_weight_multiplicity(theta, theta), 1);
  EXPECT_EQ(a2.K.kostant_weight_multiplicity(theta, -theta), 1);
  FreudenthalOracle F(*a2.datum);
  EXPECT_EQ(F.weyl_dimension(theta), 8);
  EXPECT_EQ(F.multiplicity(theta, a2.datum->zero()), 2);
  EXPECT_THROW(a2.K.kostant_weight_multiplicity(-theta, a2.datum->zero()), DomainError);
}

TEST(Kostant, AgreesWithFreudenthalAndTestOracle) {
  for (const char* name : {"a1-adj", "a1-sc", "a2-adj", "a2-sc", "b2", "g2"}) {
    Fixture f(name);
    FreudenthalOracle F(*f.datum);
    for (const auto& lam : f.K.dominant_pairing_box(2)) {
      Int dim = F.weyl_dimension(lam);
      if (dim > 100) continue;
      EXPECT_EQ(dim, oracle::weyl_dimension(*f.datum, lam));
      auto ch = oracle::character(*f.datum, lam);
      auto lib = F.character(lam);
      EXPECT_EQ(ch.size(), lib.size()) << name << " " << lam.str();
      Int total = 0;
      for (const auto& [mu, m] : ch) {
        EXPECT_EQ(f.K.kostant_weight_multiplicity(lam, mu), m) << name << " " << lam.str() << " at " << mu.str();
        EXPECT_EQ(lib[mu], m);
        total += m;
      }
      EXPECT_EQ(total, dim);
    }
  }
}

TEST(Kostant, StalksAndCostalks) {
  Fixture a1("a1-adj");
  EXPECT_EQ(a1.K.m_costalk_poly(Coweight{4}, Coweight{-2}), q({0, 0, 1}));
  EXPECT_EQ(a1.K.m_stalk_rank(Coweight{4}, Coweight{-2}), 1);
  EXPECT_EQ(a1.K.m_stalk_rank(Coweight{3}, Coweight{0}), 1);
  EXPECT_THROW(a1.K.m_costalk_poly(Coweight{1}, Coweight{-4}), DomainError);
  Fixture a2("a2-adj");
  const Coweight theta = a2.datum->pos_coroots().back();
  EXPECT_EQ(a2.K.gaitsgory_stalk_rank(-theta), 2);
  EXPECT_EQ(a2.K.gaitsgory_costalk_poly(-theta), q({0, 0, 1, 0, 1}));
  EXPECT_EQ(a2.K.gaitsgory_costalk_poly(a2.datum->zero()), QPolynomial::constant(1));
}

TEST(Kostant, Stabilization) {
  Fixture a1("a1-adj");
  auto rep = a1.K.stabilization_check(Coweight{-2}, 8);
  EXPECT_EQ(rep.target, 1);
  ASSERT_TRUE(rep.stable_from.has_value());
  // rank 1 already at lambda = 1 (<lambda, alpha> = 1)
  EXPECT_EQ(*rep.stable_from, (Coweight{1}));
  EXPECT_EQ(a1.K.m_stalk_rank(Coweight{0}, Coweight{-2}), 0);
  EXPECT_EQ(a1.K.m_stalk_rank(Coweight{1}, Coweight{-2}), 1);
  EXPECT_THROW(a1.K.stabilization_check(Coweight{2}, 8), DomainError);
  Fixture a2("a2-adj");
  for (const auto& nu : closure_box(*a2.datum, a2.datum->zero(), 3)) {
    auto r = a2.K.stabilization_check(nu, 6);
    ASSERT_TRUE(r.stable_from.has_value()) << nu.str();
    EXPECT_EQ(r.target, oracle::partitions(*a2.datum, -nu).eval_at_one());
  }
}

TEST(Kostant, ConcurrentReadsAgree) {
  Fixture f("b2");
  auto nus = closure_box(*f.datum, f.datum->zero(), 8);
  std::vector<std::vector<QPolynomial>> out(6);
  std::vector<std::thread> pool;
  for (int t = 0; t < 6; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = 0; i < nus.size(); ++i) out[t].push_back(f.K.partition(-nus[(i * (t + 1)) % nus.size()]));
    });
  for (auto& th : pool) th.join();
  for (int t = 0; t < 6; ++t)
    for (std::size_t i = 0; i < nus.size(); ++i)
      EXPECT_EQ(out[t][i], oracle::partitions(*f.datum, -nus[(i * (t + 1)) % nus.size()]));
}

TEST(Kostant, CachePersistence) {
  auto dir = std::filesystem::temp_directory_path() / "siflag_cache_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / "memo.bin").string();
  Fixture f("a2-adj");
  for (const auto& nu : closure_box(*f.datum, f.datum->zero(), 5)) f.K.partition(-nu);
  ASSERT_GT(f.K.memo_size(), 0u);
  ASSERT_TRUE(f.K.save(path));

  Fixture g("a2-adj");
  ASSERT_TRUE(g.K.load(path));
  EXPECT_EQ(g.K.memo_size(), f.K.memo_size());
  const Coweight theta = g.datum->pos_coroots().back();
  EXPECT_EQ(g.K.partition(theta), q({0, 1, 1}));

  Fixture other("b2");
  EXPECT_FALSE(other.K.load(path));  // different datum
  EXPECT_EQ(other.K.memo_size(), 0u);
  EXPECT_FALSE(other.K.load((dir / "missing.bin").string()));

  {  // corrupt one byte in the payload
    std::fstream io(path, std::ios::in | std::ios::out | std::ios::binary);
    io.seekg(30);
    char c = 0;
    io.get(c);
    io.seekp(30);
    io.put(static_cast<char>(~c));
  }
  Fixture h("a2-adj");
  EXPECT_FALSE(h.K.load(path));
  EXPECT_EQ(h.K.memo_size(), 0u);
  std::filesystem::remove_all(dir);
}
