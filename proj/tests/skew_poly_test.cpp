#include <gtest/gtest.h>

#include <random>

#include "skewroos/error.hpp"
#include "skewroos/skew_poly.hpp"
#include "skewroos/tower.hpp"

using namespace skewroos;

namespace {

FieldPtr gf(std::uint64_t p, unsigned m) {
  return Field::make(p, nullptr, Field::smallest_primitive_modulus(p, nullptr, m), "y");
}

SkewPoly random_poly(const FieldPtr& f, int degree, std::mt19937_64& rng, std::int64_t twist = 1) {
  std::vector<Elem> c(static_cast<std::size_t>(degree + 1));
  for (auto& x : c) x = Elem{rng() % f->order()};
  if (c.back().is_zero()) c.back() = f->one();
  return {f, twist, c};
}

}  // namespace

TEST(SkewPoly, CommutationRule) {
  auto e = gf(2, 12);
  for (std::int64_t s : {1, 5}) {
    const auto x = SkewPoly::monomial(e, e->one(), 1, s);
    const Elem a = e->exp(37);
    const auto lhs = x * SkewPoly::constant(e, a, s);
    EXPECT_EQ(lhs, SkewPoly::monomial(e, e->frobenius(a, s), 1, s));
  }
}

TEST(SkewPoly, AssociativeAndDistributive) {
  std::mt19937_64 rng(1);
  for (auto [p, m] : {std::pair<std::uint64_t, unsigned>{2, 12}, {3, 6}, {5, 4}}) {
    auto e = gf(p, m);
    for (int t = 0; t < 20; ++t) {
      auto a = random_poly(e, 3, rng), b = random_poly(e, 4, rng), c = random_poly(e, 2, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b).degree(), 7);
    }
  }
}

TEST(SkewPoly, DivisionIdentities) {
  std::mt19937_64 rng(2);
  auto e = gf(3, 6);
  for (int t = 0; t < 40; ++t) {
    auto f = random_poly(e, 9, rng, 2), g = random_poly(e, 1 + t % 5, rng, 2);
    auto [q, r] = right_divmod(f, g);
    EXPECT_EQ(q * g + r, f);
    EXPECT_LT(r.degree(), g.degree());
    auto [ql, rl] = left_divmod(f, g);
    EXPECT_EQ(g * ql + rl, f);
    EXPECT_LT(rl.degree(), g.degree());
  }
  EXPECT_THROW(right_divmod(random_poly(e, 2, rng), SkewPoly::zero(e)), Error);
}

TEST(SkewPoly, RemainderTheorem) {
  std::mt19937_64 rng(3);
  auto e = gf(2, 12);
  for (int t = 0; t < 50; ++t) {
    auto f = random_poly(e, 8, rng);
    const Elem a{rng() % e->order()};
    EXPECT_EQ(right_divmod(f, SkewPoly::linear(e, a)).remainder, SkewPoly::constant(e, eval_right(f, a)));
  }
  // Truncated norms: N_0 = 1, N_1 = a, N_{i+1}(a) = N_i(a) * theta^i(a).
  const Elem a = e->exp(9);
  EXPECT_EQ(truncated_norm(*e, 1, 0, a), e->one());
  EXPECT_EQ(truncated_norm(*e, 1, 1, a), a);
  EXPECT_EQ(truncated_norm(*e, 1, 3, a), e->mul(e->mul(a, e->frobenius(a, 1)), e->frobenius(a, 2)));
  // N_n(a) is the field norm, which is 1 for any nonzero a over GF(2).
  EXPECT_EQ(truncated_norm(*e, 1, 12, a), e->one());
  EXPECT_THROW(truncated_norm(*e, 1, -1, a), Error);
}

TEST(SkewPoly, XnMinusOneIsCentral) {
  std::mt19937_64 rng(4);
  auto e = gf(5, 4);
  const auto c = SkewPoly::x_pow_minus_one(e, 4);
  for (int t = 0; t < 10; ++t) {
    auto f = random_poly(e, 5, rng);
    EXPECT_EQ(c * f, f * c);
  }
  EXPECT_NE(SkewPoly::x_pow_minus_one(e, 3) * SkewPoly::constant(e, e->generator()),
            SkewPoly::constant(e, e->generator()) * SkewPoly::x_pow_minus_one(e, 3));
}

TEST(SkewPoly, LclmAgainstLinearFactorFormula) {
  // If f(b) = c != 0 then lclm(f, x - b) = (x - theta(c) b c^{-1}) f.
  std::mt19937_64 rng(5);
  auto e = gf(2, 12);
  for (int t = 0; t < 30; ++t) {
    auto f = monic(random_poly(e, 1 + t % 6, rng));
    const Elem b{1 + rng() % (e->order() - 1)};
    const Elem c = eval_right(f, b);
    if (c.is_zero()) continue;
    const Elem root = e->div(e->mul(e->frobenius(c, 1), b), c);
    EXPECT_EQ(lclm(f, SkewPoly::linear(e, b)), SkewPoly::linear(e, root) * f);
  }
}

TEST(SkewPoly, LclmGcrdDegrees) {
  std::mt19937_64 rng(6);
  auto e = gf(3, 6);
  for (int t = 0; t < 20; ++t) {
    auto h = random_poly(e, 2, rng);
    auto f = random_poly(e, 3, rng) * h, g = random_poly(e, 2, rng) * h;
    const auto d = gcrd(f, g);
    EXPECT_TRUE(right_divides(d, f));
    EXPECT_TRUE(right_divides(d, g));
    EXPECT_TRUE(right_divides(monic(h), d));
    const auto res = lclm_with_cofactors(f, g);
    EXPECT_TRUE(res.lclm.is_monic());
    EXPECT_EQ(res.cofactor_f * f, res.lclm);
    EXPECT_EQ(res.cofactor_g * g, res.lclm);
    EXPECT_EQ(res.lclm.degree() + d.degree(), f.degree() + g.degree());
  }
}

TEST(SkewPoly, LclmOfLinearFactorsVanishesOnRoots) {
  auto e = gf(2, 12);
  const Elem beta = e->exp(5);
  std::vector<SkewPoly> factors;
  for (int i : {2, 3, 4, 8, 9, 10}) factors.push_back(SkewPoly::linear(e, e->frobenius(beta, i)));
  const auto g = lclm_many(factors);
  EXPECT_EQ(g.degree(), 6);
  for (int i : {2, 3, 4, 8, 9, 10}) EXPECT_TRUE(eval_right(g, e->frobenius(beta, i)).is_zero());
  EXPECT_TRUE(right_divides(g, SkewPoly::x_pow_minus_one(e, 12)));
}

TEST(SkewPoly, RingMismatch) {
  auto e = gf(2, 6);
  auto e2 = gf(2, 6);
  try {
    (void)(SkewPoly::constant(e, e->one()) + SkewPoly::constant(e, e->one(), 2));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::RingMismatch);
  }
  EXPECT_THROW((void)(SkewPoly::constant(e, e->one()) * SkewPoly::constant(e2, e2->one())), Error);
}

TEST(SkewPoly, PromoteAndPullBack) {
  TowerParams p;
  p.q = 2;
  p.mu = 6;
  p.nu = 2;
  p.mod_f = std::vector<std::uint64_t>{1, 1, 0, 1, 1, 0, 1};
  p.mod_e = std::vector<std::uint64_t>{1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1};
  p.embed_hint = 65;
  const Tower t = Tower::build(p);
  std::mt19937_64 rng(8);
  auto f = random_poly(t.f(), 5, rng), g = random_poly(t.f(), 3, rng);
  EXPECT_EQ(pull_back(t, promote(t, f)), f);
  EXPECT_EQ(promote(t, f * g), promote(t, f) * promote(t, g));
  auto outside = SkewPoly::constant(t.e(), t.e()->generator());
  try {
    pull_back(t, outside);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::CoefficientOutsideF);
  }
}
