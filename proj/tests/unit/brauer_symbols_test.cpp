#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_helpers.hpp"
#include "wittcurve/brauer_symbols.hpp"
#include "wittcurve/errors.hpp"

namespace wittcurve {
namespace {

const UnitSquareClass kS = UnitSquareClass::nonsquare();
const PicTorsionClass kL1 = PicTorsionClass::basis(1);

/// Sum over all i < j, written independently of the prefix-sum used by the library.
BrauerClass naive_hasse(const DiagonalForm& e) {
  BrauerClass total;
  for (std::size_t i = 0; i < e.rank(); ++i) {
    for (std::size_t j = i + 1; j < e.rank(); ++j) total += symbol(e.config(), e[i], e[j]);
  }
  return total;
}

TEST(Symbol, BaseCases) {
  for (int q : {1, 3}) {
    const auto cfg = make_config(q, 1);
    const Generator s{kS, false, {}};
    EXPECT_TRUE(symbol(cfg, s, s).is_trivial());
    EXPECT_EQ(symbol(cfg, Generator::pi(), Generator::pi()), (BrauerClass{minus_one_class(cfg), {}}));
    EXPECT_EQ(symbol(cfg, Generator{kS, false, kL1}, Generator::pi()), (BrauerClass{kS, kL1}));
    // Unit entries never pair nontrivially.
    for (const auto& a : testing::all_generators(cfg)) {
      for (const auto& b : testing::all_generators(cfg)) {
        if (!a.pi_exp && !b.pi_exp) EXPECT_TRUE(symbol(cfg, a, b).is_trivial());
      }
    }
  }
}

TEST(Symbol, RejectsForeignGenerators) {
  const auto cfg = make_config(3, 1);
  EXPECT_THROW(symbol(cfg, Generator{{}, false, PicTorsionClass::basis(2)}, Generator::pi()), ConfigMismatch);
}

TEST(Symbol, SymmetricBiadditiveAndDegenerateExhaustive) {
  for (const auto& cfg : testing::configs_up_to(2)) {
    const auto gens = testing::all_generators(cfg);
    const Generator minus = Generator::minus_one(cfg);
    for (const auto& a : gens) {
      EXPECT_TRUE(symbol(cfg, a, minus * a).is_trivial());
      EXPECT_EQ(symbol(cfg, a, a), symbol(cfg, a, minus));
      for (const auto& b : gens) {
        EXPECT_EQ(symbol(cfg, a, b), symbol(cfg, b, a));
        for (const auto& c : gens) {
          EXPECT_EQ(symbol(cfg, a * c, b), symbol(cfg, a, b) + symbol(cfg, c, b));
        }
      }
    }
  }
}

TEST(HasseInvariant, NormFormHandExpansion) {
  // Six pairwise symbols of <1, -sL1, -pi, s pi L1>; those involving <1> vanish and
  // (-sL1, -pi) + (-sL1, s pi L1) + (-pi, s pi L1) = (s, L1).
  for (int q : {1, 3}) {
    const auto cfg = make_config(q, 1);
    const auto f = quaternion_norm_form(cfg, kS, kL1);
    EXPECT_EQ(naive_hasse(f), (BrauerClass{kS, kL1}));
    EXPECT_EQ(hasse_invariant(f), (BrauerClass{kS, kL1}));
  }
}

TEST(HasseInvariant, TrivialCases) {
  for (int q : {1, 3}) {
    const auto cfg = make_config(q, 2);
    for (std::size_t len = 0; len < 9; ++len) {
      EXPECT_TRUE(hasse_invariant(DiagonalForm(cfg, std::vector<Generator>(len, Generator::one()))).is_trivial());
    }
    EXPECT_TRUE(hasse_invariant(DiagonalForm(cfg, {Generator::one(), Generator::minus_one(cfg)})).is_trivial());
    EXPECT_TRUE(hasse_invariant(DiagonalForm(cfg)).is_trivial());
    EXPECT_TRUE(hasse_invariant(DiagonalForm(cfg, {Generator::pi()})).is_trivial());
  }
}

TEST(HasseInvariant, MatchesPairwiseSum) {
  std::mt19937_64 rng(21);
  for (const auto& cfg : testing::configs_up_to(3)) {
    for (int i = 0; i < 1000; ++i) {
      const auto e = testing::random_form(rng, cfg, 9);
      ASSERT_EQ(hasse_invariant(e), naive_hasse(e));
    }
  }
}

TEST(WittInvariant, Examples) {
  for (int q : {1, 3}) {
    const auto cfg = make_config(q, 1);
    EXPECT_EQ(witt_invariant(quaternion_norm_form(cfg, kS, kL1)), (BrauerClass{kS, kL1}));
    const Generator m = Generator::minus_one(cfg);
    EXPECT_TRUE(witt_invariant(DiagonalForm(cfg, {Generator::one(), m, Generator::one(), m})).is_trivial());
    EXPECT_THROW(witt_invariant(DiagonalForm(cfg, {Generator{kS, false, kL1}})), NotInISquared);
    EXPECT_THROW(witt_invariant(DiagonalForm(cfg, {Generator::one(), Generator::pi()})), NotInISquared);
  }
}

TEST(WittInvariant, NormFormsAreDistinct) {
  for (const auto& cfg : testing::configs_up_to(3)) {
    std::set<BrauerClass> seen;
    for (const auto& b : brauer_classes(cfg)) {
      const auto w = witt_invariant(quaternion_norm_form(cfg, b.unit, b.line));
      EXPECT_EQ(w, b);
      seen.insert(w);
    }
    EXPECT_EQ(seen.size(), 2 * cfg.n());
  }
}

TEST(WittInvariant, AdditiveAndHyperbolicInvariantOnISquared) {
  std::mt19937_64 rng(77);
  for (const auto& cfg : testing::configs_up_to(2)) {
    for (int i = 0; i < 2000; ++i) {
      const auto e = testing::random_i_squared_form(rng, cfg, 4);
      const auto f = testing::random_i_squared_form(rng, cfg, 4);
      ASSERT_TRUE(in_i_squared(e));
      ASSERT_EQ(witt_invariant(orthogonal_sum(e, f)), witt_invariant(e) + witt_invariant(f));
      const Generator a = testing::random_generator(rng, cfg);
      const DiagonalForm h(cfg, {a, Generator::minus_one(cfg) * a});
      ASSERT_EQ(witt_invariant(orthogonal_sum(e, h)), witt_invariant(e));
    }
  }
}

}  // namespace
}  // namespace wittcurve
