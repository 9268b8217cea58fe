#include "ffts/group.hpp"

#include <random>

#include "gtest/gtest.h"

namespace ffts {
namespace {

GroupElement el(std::initializer_list<std::int64_t> v) { return GroupElement{std::vector<std::int64_t>(v)}; }

TEST(GroupTest, EnumerateMixedRadixOrder) {
  const auto e = enumerate(GroupSpec({2, 2}));
  ASSERT_EQ(e.size(), 4u);
  EXPECT_EQ(e[0], el({0, 0}));
  EXPECT_EQ(e[1], el({0, 1}));
  EXPECT_EQ(e[2], el({1, 0}));
  EXPECT_EQ(e[3], el({1, 1}));

  EXPECT_EQ(enumerate(GroupSpec({1})), std::vector<GroupElement>{el({0})});

  const auto z5 = enumerate(GroupSpec({5}));
  for (std::int64_t i = 0; i < 5; ++i) EXPECT_EQ(z5[i], el({i}));
}

TEST(GroupTest, IndexRoundTrip) {
  for (const auto& moduli : std::vector<std::vector<std::int64_t>>{{1}, {7}, {2, 3}, {3, 1, 4}, {2, 2, 2, 2}, {6, 10}}) {
    const GroupSpec spec(moduli);
    const auto elements = enumerate(spec);
    ASSERT_EQ(elements.size(), spec.order());
    EXPECT_EQ(elements[0], identity(spec));
    for (std::size_t i = 0; i < elements.size(); ++i) {
      EXPECT_EQ(index_of(spec, elements[i]), i);
      EXPECT_EQ(element_at(spec, i), elements[i]);
    }
  }
}

TEST(GroupTest, AddAndNeg) {
  const GroupSpec z5({5});
  EXPECT_EQ(add(z5, el({3}), el({4})), el({2}));
  const GroupSpec z2z4({2, 4});
  EXPECT_EQ(neg(z2z4, el({1, 3})), el({1, 1}));
  const GroupSpec z9({9});
  for (const auto& a : enumerate(z9)) {
    EXPECT_EQ(add(z9, a, identity(z9)), a);
    EXPECT_EQ(add(z9, a, neg(z9, a)), identity(z9));
  }
}

TEST(GroupTest, MismatchedElementIsRejected) {
  const GroupSpec z5({5});
  EXPECT_THROW(add(z5, el({1, 0}), el({1})), DomainError);
  EXPECT_THROW(add(z5, el({5}), el({1})), DomainError);
  EXPECT_THROW(neg(z5, el({-1})), DomainError);
  EXPECT_THROW(index_of(GroupSpec({2, 2}), el({0, 2})), DomainError);
}

TEST(GroupTest, ScalarProductAndOrder) {
  const GroupSpec z7sq({7, 7});
  EXPECT_EQ(scalar_product(z7sq, el({1, 2}), el({3, 4})), 4);
  EXPECT_THROW(scalar_product(GroupSpec({2, 4}), el({1, 1}), el({1, 1})), DomainError);

  EXPECT_EQ(element_order(GroupSpec({6}), el({2})), 3);
  EXPECT_EQ(element_order(GroupSpec({4, 6}), identity(GroupSpec({4, 6}))), 1);
  EXPECT_EQ(element_order(GroupSpec({4, 6}), el({1, 2})), 12);
}

TEST(GroupTest, AxiomsExhaustiveOnSmallGroups) {
  for (const auto& moduli : std::vector<std::vector<std::int64_t>>{{4}, {2, 2}, {2, 3}, {3, 3}, {8}, {2, 4}, {4, 4}}) {
    const GroupSpec spec(moduli);
    ASSERT_LE(spec.order(), 64u);
    const auto e = enumerate(spec);
    for (const auto& a : e) {
      EXPECT_EQ(add(spec, a, neg(spec, a)), identity(spec));
      EXPECT_EQ(static_cast<std::int64_t>(spec.order()) % element_order(spec, a), 0);
      for (const auto& b : e) {
        EXPECT_EQ(add(spec, a, b), add(spec, b, a));
        EXPECT_EQ(index_of(spec, add(spec, a, b)), add_index(spec, index_of(spec, a), index_of(spec, b)));
        for (const auto& c : e) {
          EXPECT_EQ(add(spec, add(spec, a, b), c), add(spec, a, add(spec, b, c)));
        }
      }
    }
  }
}

TEST(GroupTest, AxiomsOnRandomTriplesInLargerGroups) {
  std::mt19937_64 rng(1);
  for (const auto& moduli : std::vector<std::vector<std::int64_t>>{{97}, {8, 9, 5}, {2, 2, 2, 2, 2, 2, 2}}) {
    const GroupSpec spec(moduli);
    std::uniform_int_distribution<std::size_t> pick(0, spec.order() - 1);
    for (int t = 0; t < 200; ++t) {
      const auto a = element_at(spec, pick(rng));
      const auto b = element_at(spec, pick(rng));
      const auto c = element_at(spec, pick(rng));
      EXPECT_EQ(add(spec, add(spec, a, b), c), add(spec, a, add(spec, b, c)));
      EXPECT_EQ(neg_index(spec, index_of(spec, a)), index_of(spec, neg(spec, a)));
      EXPECT_EQ(static_cast<std::int64_t>(spec.order()) % element_order(spec, a), 0);
    }
  }
}

TEST(GroupTest, ParseGroupGrammar) {
  EXPECT_EQ(parse_group("Z5").moduli(), (std::vector<std::int64_t>{5}));
  EXPECT_EQ(parse_group("Z7^2").moduli(), (std::vector<std::int64_t>{7, 7}));
  EXPECT_EQ(parse_group("z2XZ4").moduli(), (std::vector<std::int64_t>{2, 4}));
  EXPECT_EQ(parse_group("Z3^2xZ5").moduli(), (std::vector<std::int64_t>{3, 3, 5}));
  EXPECT_EQ(parse_group(parse_group("Z2xZ2xZ6").to_string()), parse_group("Z2^2xZ6"));
  for (const char* bad : {"", "Z", "5", "Z5x", "Zx5", "Z0", "Z-3", "Z5^0", "Z5^", "Y5", "Z2.5"}) {
    EXPECT_THROW(parse_group(bad), DomainError) << bad;
  }
}

TEST(GroupTest, DimensionCap) {
  EXPECT_EQ(GroupSpec({64, 64}).order(), 4096u);
  EXPECT_THROW(GroupSpec({4097}), DomainError);
  EXPECT_THROW(parse_group("Z2^13"), DomainError);
  EXPECT_NO_THROW(parse_group("Z2^13", 8192));
  EXPECT_THROW(GroupSpec({5}, 4), DomainError);
  EXPECT_THROW(GroupSpec({}), DomainError);
}

}  // namespace
}  // namespace ffts
