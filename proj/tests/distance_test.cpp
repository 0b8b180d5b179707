#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "skewroos/bounds.hpp"
#include "skewroos/distance.hpp"
#include "skewroos/error.hpp"
#include "support/oracles.hpp"
#include "support/towers.hpp"

using namespace skewroos;
using skewroos::testing::default_tower;
using skewroos::testing::example_12_6_tower;
using skewroos::testing::oracle_distances;
using skewroos::testing::oracle_rank_weight;

namespace {

struct Shape {
  std::uint64_t q;
  unsigned mu, nu;
};

const std::vector<Shape> kSmall{{2, 3, 2}, {2, 2, 3}, {2, 3, 3}, {3, 2, 2}, {2, 4, 2}, {3, 2, 3}, {5, 2, 2}, {2, 2, 4}};

DefiningSet random_closed(unsigned n, unsigned mu, std::mt19937_64& rng) {
  std::vector<unsigned> tf;
  for (unsigned i = 0; i < mu; ++i) {
    if (rng() % 2) tf.push_back(i);
  }
  return mu_closure(DefiningSet(n, mu, tf));
}

void expect_witnesses(const SkewCyclicCode& code, const DistanceReport& rep) {
  ASSERT_TRUE(rep.d_h && rep.d_h->exact());
  ASSERT_TRUE(rep.d_r && rep.d_r->exact());
  EXPECT_TRUE(code.is_codeword(rep.witness_hamming));
  EXPECT_TRUE(code.is_codeword(rep.witness_rank));
  EXPECT_EQ(hamming_weight(rep.witness_hamming), rep.d_h->lo);
  EXPECT_EQ(rank_weight(*code.tower(), rep.witness_rank), rep.d_r->lo);
}

}  // namespace

TEST(Distance, AgreesWithEnumerationOracle) {
  std::mt19937_64 rng(0x5eed0001);
  unsigned checked = 0;
  for (int round = 0; checked < 50; ++round) {
    ASSERT_LT(round, 1000);
    const Shape s = kSmall[static_cast<std::size_t>(round) % kSmall.size()];
    auto tower = default_tower(s.q, s.mu, s.nu);
    const DefiningSet t = random_closed(tower->n(), s.mu, rng);
    if (t.full() || t.empty()) continue;
    const auto code = SkewCyclicCode::from_set(tower, tower->find_normal(), t);
    if (std::pow(double(tower->f()->order()), code.k()) > 65536.0) continue;
    const auto oracle = oracle_distances(code.generator_matrix());
    const auto rep = measure(code);
    SCOPED_TRACE(::testing::Message() << "q=" << s.q << " mu=" << s.mu << " nu=" << s.nu << " |T|=" << t.size());
    expect_witnesses(code, rep);
    EXPECT_EQ(rep.d_h->lo, oracle.d_h);
    EXPECT_EQ(rep.d_r->lo, oracle.d_r);
    EXPECT_FALSE(rep.partial);
    ++checked;
  }
}

TEST(Distance, WorkedExampleValues) {
  auto t = example_12_6_tower();
  const auto code = SkewCyclicCode::from_set(t, t->e()->exp(5), DefiningSet(12, 6, {2, 3, 4, 8, 9, 10}));
  const auto rep = measure(code);
  expect_witnesses(code, rep);
  EXPECT_EQ(rep.d_h->lo, 6u);
  EXPECT_EQ(rep.d_r->lo, 4u);
  const auto c = classify(12, 6, 6, rep.d_h->lo, rep.d_r->lo);
  EXPECT_FALSE(c.is_mds);
  EXPECT_TRUE(c.is_mrd);
  EXPECT_FALSE(c.is_almost_mrd);
  EXPECT_TRUE(check_subfield_distance_equality(code));
  // The code over E has length 12 = [E:K] and dimension 6, so it would need
  // rank distance 7 to be MRD. It contains the code over F, hence words of
  // rank 4, and words of rank 6 as well.
  std::vector<Elem> lifted;
  for (auto x : rep.witness_rank) lifted.push_back(t->embed(x));
  EXPECT_TRUE(code.is_codeword_e(lifted));
  EXPECT_EQ(rank_weight_e(*t, lifted), 4u);
  std::mt19937_64 rng(8);
  bool rank6 = false;
  for (int i = 0; i < 100 && !rank6; ++i) {
    std::vector<Elem> m(6);
    for (auto& x : m) x = Elem{rng() % t->f()->order()};
    std::vector<Elem> w;
    for (auto x : code.encode(m)) w.push_back(t->embed(x));
    rank6 = code.is_codeword_e(w) && rank_weight_e(*t, w) == 6;
  }
  EXPECT_TRUE(rank6);
}

TEST(Distance, RankWeightMatchesLclmDegree) {
  // Roots taken under operator evaluation: v_i is killed by x - theta(v_i)/v_i,
  // and those points are P-independent exactly when the v_i are K-independent.
  auto t = default_tower(2, 3, 2);
  const Field& e = *t->e();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Elem> v(1 + rng() % 5);
    for (auto& x : v) x = Elem{rng() % (rng() % 3 == 0 ? 8 : e.order())};
    std::vector<SkewPoly> lin;
    for (auto x : v) {
      if (!x.is_zero()) lin.push_back(SkewPoly::linear(t->e(), e.div(t->apply_theta(1, x), x)));
    }
    const unsigned deg = lin.empty() ? 0u : static_cast<unsigned>(lclm_many(lin).degree());
    EXPECT_EQ(rank_weight_e(*t, v), deg);
  }
  // F vectors agree with the independent elimination.
  const Field& f = *t->f();
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Elem> v(1 + rng() % 6);
    for (auto& x : v) x = Elem{rng() % f.order()};
    EXPECT_EQ(rank_weight(*t, v), oracle_rank_weight(f, v));
  }
}

TEST(Distance, RankWeightIsInvariantUnderGL) {
  auto t = example_12_6_tower();
  const auto code = SkewCyclicCode::from_set(t, t->e()->exp(5), DefiningSet(12, 6, {2, 3, 4, 8, 9, 10}));
  const Field& f = *t->f();
  const FieldPtr& k = t->k();
  std::mt19937_64 rng(11);
  auto random_gl = [&] {
    while (true) {
      Matrix m(k, 12, 12);
      for (std::size_t i = 0; i < 12; ++i) {
        for (std::size_t j = 0; j < 12; ++j) m(i, j) = Elem{rng() % 2};
      }
      if (rank(m) == 12) return m;
    }
  };
  // c * M with M over K: each entry is a K-combination of the c_j.
  auto apply = [&](const std::vector<Elem>& c, const Matrix& m) {
    std::vector<Elem> out(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (!m(i, j).is_zero()) out[j] = f.add(out[j], c[i]);
      }
    }
    return out;
  };
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Elem> msg(code.k());
    for (auto& x : msg) x = Elem{rng() % f.order()};
    const auto c = code.encode(msg);
    EXPECT_EQ(rank_weight(*t, apply(c, random_gl())), rank_weight(*t, c));
  }
  const auto rep = measure(code);
  // d_H(C M) >= d_R(C) for every M.
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix m = random_gl();
    Matrix gm(t->f(), 0, 12);
    for (std::size_t r = 0; r < code.k(); ++r) {
      gm.append_row(apply({code.generator_matrix().row(r).begin(), code.generator_matrix().row(r).end()}, m));
    }
    EXPECT_GE(min_dependent_columns(right_kernel(gm)).weight.lo, rep.d_r->lo);
  }
  // Column-reducing the coordinate matrix of a minimum-rank witness gives an M
  // with d_H(C M) = d_R(C).
  const Matrix x = expand_columns(f, k, rep.witness_rank);  // mu x n
  Matrix aug(k, 12, x.rows() + 12);
  for (std::size_t i = 0; i < 12; ++i) {
    for (std::size_t j = 0; j < x.rows(); ++j) aug(i, j) = x(j, i);
    aug(i, x.rows() + i) = k->one();
  }
  const Echelon ech = rref(aug);
  Matrix align(k, 12, 12);  // transpose of the row transform
  for (std::size_t i = 0; i < 12; ++i) {
    for (std::size_t j = 0; j < 12; ++j) align(j, i) = ech.reduced(i, x.rows() + j);
  }
  EXPECT_EQ(hamming_weight(apply(rep.witness_rank, align)), rep.d_r->lo);
  Matrix gm(t->f(), 0, 12);
  for (std::size_t r = 0; r < code.k(); ++r) {
    gm.append_row(apply({code.generator_matrix().row(r).begin(), code.generator_matrix().row(r).end()}, align));
  }
  EXPECT_EQ(min_dependent_columns(right_kernel(gm)).weight.lo, rep.d_r->lo);
}

TEST(Distance, ThreadCountDoesNotChangeResults) {
  auto t = example_12_6_tower();
  const auto code = SkewCyclicCode::from_set(t, t->e()->exp(5), DefiningSet(12, 6, {1, 2, 3, 4, 7, 8, 9, 10}));
  DistanceOptions one;
  DistanceOptions four;
  four.threads = 4;
  const auto a = measure(code, one);
  const auto b = measure(code, four);
  EXPECT_EQ(a.d_h, b.d_h);
  EXPECT_EQ(a.d_r, b.d_r);
  EXPECT_EQ(a.witness_hamming, b.witness_hamming);
  EXPECT_EQ(a.witness_rank, b.witness_rank);
  EXPECT_EQ(a.d_h->lo, 8u);
  EXPECT_EQ(a.d_r->lo, 5u);
}

TEST(Distance, BudgetsGiveIntervals) {
  auto t = example_12_6_tower();
  const auto code = SkewCyclicCode::from_set(t, t->e()->exp(5), DefiningSet(12, 6, {2, 3, 4, 8, 9, 10}));
  DistanceOptions opt;
  opt.budget_subsets = 100;
  opt.budget_subspaces = 10;
  const auto rep = measure(code, opt);
  EXPECT_TRUE(rep.partial);
  ASSERT_TRUE(rep.d_h && rep.d_r);
  EXPECT_FALSE(rep.d_h->exact());
  EXPECT_LE(rep.d_h->lo, 6u);
  EXPECT_GE(rep.d_h->hi, 6u);
  EXPECT_LE(rep.d_r->lo, 4u);
  EXPECT_GE(rep.d_r->hi, 4u);
  EXPECT_TRUE(rep.witness_hamming.empty());
  EXPECT_LE(rep.subsets_examined, 100u);
  EXPECT_LE(rep.subspaces_examined, 10u);
}

TEST(Distance, DegenerateCodes) {
  auto t = default_tower(2, 3, 2);
  const Elem alpha = t->find_normal();
  const auto whole = SkewCyclicCode::from_set(t, alpha, DefiningSet(6, 3, {}));
  const auto rep = measure(whole);
  EXPECT_EQ(rep.d_h->lo, 1u);
  EXPECT_EQ(rep.d_r->lo, 1u);
  const auto zero = SkewCyclicCode::from_set(t, alpha, DefiningSet(6, 3, {0, 1, 2}));
  try {
    (void)measure(zero);
    FAIL() << "expected ZeroCode";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroCode);
  }
  EXPECT_TRUE(check_subfield_distance_equality(zero));
}

TEST(Distance, SubfieldEqualityOnRandomCodes) {
  std::mt19937_64 rng(0x5eed0002);
  for (int round = 0; round < 40; ++round) {
    const Shape s = kSmall[static_cast<std::size_t>(round) % kSmall.size()];
    auto tower = default_tower(s.q, s.mu, s.nu);
    const auto code = SkewCyclicCode::from_set(tower, tower->find_normal(), random_closed(tower->n(), s.mu, rng));
    EXPECT_TRUE(check_subfield_distance_equality(code));
  }
}

TEST(Distance, DependentColumnsOnKnownMatrix) {
  // Columns 0 and 2 are equal; no column is zero.
  auto k = Field::make(3, nullptr, Field::smallest_primitive_modulus(3, nullptr, 1), "w");
  Matrix h(k, 2, 4);
  const std::uint64_t vals[2][4] = {{1, 0, 1, 1}, {0, 1, 0, 1}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 4; ++j) h(i, j) = Elem{vals[i][j]};
  }
  const auto r = min_dependent_columns(h);
  EXPECT_EQ(r.weight, (DistanceValue{2, 2}));
  EXPECT_EQ(hamming_weight(r.witness), 2u);
  EXPECT_FALSE(r.witness[0].is_zero());
  EXPECT_FALSE(r.witness[2].is_zero());
  Matrix full(k, 2, 2);
  full(0, 0) = full(1, 1) = k->one();
  EXPECT_THROW((void)min_dependent_columns(full), Error);
}

TEST(Classify, Definitions) {
  // [12, 6] over mu = 6: Singleton 7 and 4.
  EXPECT_TRUE(classify(12, 6, 6, 7, 4).is_mds);
  EXPECT_TRUE(classify(12, 6, 6, 6, 4).is_mrd);
  EXPECT_TRUE(classify(12, 6, 6, 6, 3).is_almost_mrd);
  // k mu / n not integral: never almost MRD.
  EXPECT_FALSE(classify(12, 5, 6, 6, 3).is_almost_mrd);
}
