#include "ffts/characters.hpp"

#include <set>

#include "ffts/modlinalg.hpp"
#include "gtest/gtest.h"

namespace ffts {
namespace {

constexpr double kTol = 1e-9;

GroupElement el(std::initializer_list<std::int64_t> v) { return GroupElement{std::vector<std::int64_t>(v)}; }

// Squares of nonzero residues, by enumeration.
std::set<std::int64_t> squares(std::int64_t p) {
  std::set<std::int64_t> out;
  for (std::int64_t y = 1; y < p; ++y) out.insert(y * y % p);
  return out;
}

std::complex<double> direct_root(double num, double den) {
  const double a = 2.0 * std::acos(-1.0) * num / den;
  return {std::cos(a), std::sin(a)};
}

TEST(CharactersTest, CharValueExamples) {
  EXPECT_NEAR(std::abs(char_value(GroupSpec({4}), el({1}), el({1})) - std::complex<double>(0, 1)), 0, 1e-15);
  EXPECT_NEAR(std::abs(char_value(GroupSpec({3, 3}), el({1, 2}), el({2, 2})) - 1.0), 0, 1e-15);
  EXPECT_EQ(char_angle(GroupSpec({3, 3}), el({1, 2}), el({2, 2})), (RootOfUnity{0, 1}));
  EXPECT_EQ(char_angle(GroupSpec({2, 4}), el({1, 1}), el({1, 1})), (RootOfUnity{3, 4}));
  for (const auto& moduli : std::vector<std::vector<std::int64_t>>{{7}, {2, 3}, {4, 6}}) {
    const GroupSpec spec(moduli);
    for (const auto& h : enumerate(spec)) EXPECT_EQ(char_value(spec, h, identity(spec)), 1.0);
  }
}

TEST(CharactersTest, CharactersAreHomomorphismsOfUnitModulus) {
  const GroupSpec spec({3, 4});
  const auto e = enumerate(spec);
  for (const auto& h : e)
    for (const auto& x : e) {
      EXPECT_NEAR(std::abs(char_value(spec, h, x)), 1.0, 1e-15);
      for (const auto& y : e) {
        EXPECT_NEAR(std::abs(char_value(spec, h, add(spec, x, y)) - char_value(spec, h, x) * char_value(spec, h, y)),
                    0, 1e-12);
      }
    }
}

TEST(CharactersTest, OrthogonalityRelations) {
  EXPECT_NEAR(std::abs(orthogonality_sum(GroupSpec({5}), el({0})) - 5.0), 0, kTol * 5);
  EXPECT_NEAR(std::abs(orthogonality_sum(GroupSpec({5}), el({2}))), 0, kTol * 5);
  EXPECT_NEAR(std::abs(orthogonality_sum(GroupSpec({2, 3}), el({1, 0}))), 0, kTol * 6);
  for (const auto& moduli : std::vector<std::vector<std::int64_t>>{{1}, {12}, {2, 2, 3}, {5, 5}}) {
    const GroupSpec spec(moduli);
    const double n = static_cast<double>(spec.order());
    for (const auto& g : enumerate(spec)) {
      const double expected = g == identity(spec) ? n : 0.0;
      EXPECT_NEAR(std::abs(orthogonality_sum(spec, g) - expected), 0, kTol * n);
      EXPECT_NEAR(std::abs(dual_orthogonality_sum(spec, g) - expected), 0, kTol * n);
    }
  }
}

TEST(CharactersTest, PrimitiveRootIsSmallest) {
  EXPECT_EQ(primitive_root(3), 2);
  EXPECT_EQ(primitive_root(5), 2);
  EXPECT_EQ(primitive_root(7), 3);
  EXPECT_EQ(primitive_root(23), 5);
  EXPECT_EQ(primitive_root(41), 6);
  EXPECT_THROW(primitive_root(9), DomainError);
  EXPECT_THROW(primitive_root(2), DomainError);
}

TEST(CharactersTest, MultCharacterExamples) {
  const auto c3 = mult_characters(3);
  ASSERT_EQ(c3.size(), 2u);
  EXPECT_TRUE(c3[0].is_trivial());
  EXPECT_NEAR(std::abs(c3[1](2) - (-1.0)), 0, 1e-15);

  const auto c5 = mult_characters(5);
  ASSERT_EQ(c5.size(), 4u);
  EXPECT_TRUE(c5[2].is_legendre());
  ASSERT_EQ(squares(5).count(2), 0u);  // 2 is a non-residue mod 5
  EXPECT_NEAR(std::abs(c5[2](2) - (-1.0)), 0, 1e-15);

  const auto c7 = mult_characters(7);
  EXPECT_EQ(c7[3].generator(), 3);
  EXPECT_EQ(pow_mod(3, 3, 7), 6);  // -1 = 3^3
  EXPECT_NEAR(std::abs(c7[3](-1) - (-1.0)), 0, 1e-15);

  EXPECT_EQ(c7[2](0), 0.0);
  EXPECT_THROW(mult_characters(1), DomainError);
  EXPECT_THROW(mult_characters(15), DomainError);
}

TEST(CharactersTest, MultCharactersAreMultiplicativeAndOrthogonal) {
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    const auto chars = mult_characters(p);
    for (const auto& psi : chars) {
      for (std::int64_t x = 1; x < p; ++x)
        for (std::int64_t y = 1; y < p; ++y)
          ASSERT_NEAR(std::abs(psi(x * y % p) - psi(x) * psi(y)), 0, 1e-12);
      EXPECT_NEAR(std::abs(psi.conj()(3) - std::conj(psi(3))), 0, 1e-15);
    }
    for (std::size_t a = 0; a < chars.size(); ++a)
      for (std::size_t b = 0; b < chars.size(); ++b) {
        if (a == b) continue;
        std::complex<double> acc = 0;
        for (std::int64_t x = 0; x < p; ++x) acc += chars[a](x) * std::conj(chars[b](x));
        EXPECT_NEAR(std::abs(acc), 0, kTol * static_cast<double>(p));
      }
  }
}

TEST(CharactersTest, LegendreCharacterMatchesEuler) {
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    const auto legendre = mult_characters(p)[(p - 1) / 2];
    const auto sq = squares(p);
    for (std::int64_t x = 1; x < p; ++x) {
      const double expected = sq.count(x) ? 1.0 : -1.0;
      EXPECT_EQ(legendre(x).real(), expected);
      EXPECT_EQ(legendre(x).imag(), 0.0);
      EXPECT_EQ(legendre_symbol(x, p), static_cast<int>(expected));
    }
  }
}

TEST(CharactersTest, CharacterSignCount) {
  for (std::int64_t p : {5, 7, 11, 13, 17, 19}) {
    int odd = 0, even = 0;
    for (const auto& psi : mult_characters(p)) {
      if (psi.is_trivial()) continue;
      (psi(-1).real() < 0 ? odd : even)++;
    }
    EXPECT_EQ(odd, (p - 1) / 2);
    EXPECT_EQ(even, (p - 3) / 2);
  }
}

TEST(CharactersTest, GaussSumIdentities) {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    const auto chars = mult_characters(p);
    for (std::int64_t l = 1; l < p; ++l) {
      for (const auto& psi : chars) {
        if (psi.is_trivial()) continue;
        const auto s = gauss_sum(p, l, psi);
        EXPECT_NEAR(std::abs(s), 1.0, kTol);
        EXPECT_NEAR(std::abs(s * gauss_sum(p, l, psi.conj()) - psi(-1)), 0, kTol);
        EXPECT_NEAR(std::abs(s - std::conj(psi(l)) * gauss_sum(p, 1, psi)), 0, kTol);
      }
    }
  }
}

TEST(CharactersTest, QuadraticGaussSumAgainstDirectSummation) {
  // Oracle: p^{-1/2} sum_y e_p(l y^2), independent of the character machinery.
  for (std::int64_t p : {5, 7, 11, 13, 17, 19}) {
    const auto legendre = mult_characters(p)[(p - 1) / 2];
    for (std::int64_t l = 1; l < p; ++l) {
      std::complex<double> direct = 0;
      for (std::int64_t y = 0; y < p; ++y) direct += direct_root(static_cast<double>(l * y * y % p), static_cast<double>(p));
      direct /= std::sqrt(static_cast<double>(p));
      const auto s = gauss_sum(p, l, legendre);
      EXPECT_NEAR(std::abs(s - direct), 0, kTol);
      const double expected_square = p % 4 == 1 ? 1.0 : -1.0;
      EXPECT_NEAR(std::abs(s * s - expected_square), 0, kTol);
    }
  }
  EXPECT_NEAR(std::abs(gauss_sum(5, 1, mult_characters(5)[2]) - 1.0), 0, kTol);
  EXPECT_NEAR(std::abs(gauss_sum(7, 1, mult_characters(7)[3]) - std::complex<double>(0, 1)), 0, kTol);
}

TEST(CharactersTest, GaussSumErrors) {
  const auto chars = mult_characters(7);
  EXPECT_THROW(gauss_sum(7, 0, chars[1]), DomainError);
  EXPECT_THROW(gauss_sum(7, 14, chars[1]), DomainError);
  EXPECT_THROW(gauss_sum(11, 1, chars[1]), DomainError);
  EXPECT_THROW(gauss_sum_report(7, 1, 6), DomainError);
}

TEST(CharactersTest, GaussSumReportsResidueOfL) {
  const auto r = gauss_sum_report(7, 3, 3);
  EXPECT_FALSE(r.l_is_residue);
  EXPECT_TRUE(gauss_sum_report(7, 2, 3).l_is_residue);
  EXPECT_NEAR(std::abs(r.value - gauss_sum(7, 3, mult_characters(7)[3])), 0, 0);
}

TEST(CharactersTest, RootOfUnityNormalizes) {
  EXPECT_EQ(RootOfUnity::make(6, 12), (RootOfUnity{1, 2}));
  EXPECT_EQ(RootOfUnity::make(-1, 4), (RootOfUnity{3, 4}));
  EXPECT_EQ(RootOfUnity::make(12, 12), (RootOfUnity{0, 1}));
  EXPECT_THROW(RootOfUnity::make(1, 0), DomainError);
  // exact-angle evaluation does not drift for large exponents
  EXPECT_NEAR(std::abs(unit_root(1000000007, 4096) - direct_root(1000000007 % 4096, 4096)), 0, 1e-15);
}

}  // namespace
}  // namespace ffts
