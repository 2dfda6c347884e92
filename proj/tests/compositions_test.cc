#include "ocagen/compositions.h"

#include "gtest/gtest.h"
#include "ocagen/error.h"
#include "oracles.h"

namespace ocagen {
namespace {

std::vector<std::vector<unsigned>> parts_of(unsigned n, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  for (const auto& c : compositions(n, k)) out.push_back(c.parts);
  return out;
}

TEST(CompositionsTest, Examples) {
  EXPECT_EQ(parts_of(3, 2), (std::vector<std::vector<unsigned>>{{1, 2}, {2, 1}}));
  EXPECT_EQ(parts_of(7, 1), (std::vector<std::vector<unsigned>>{{7}}));
  EXPECT_EQ(parts_of(5, 5), (std::vector<std::vector<unsigned>>{{1, 1, 1, 1, 1}}));
}

TEST(CompositionsTest, InvalidArguments) {
  for (auto [n, k] : {std::pair{3u, 4u}, std::pair{3u, 0u}}) {
    try {
      CompositionStream s(n, k);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::invalid_arguments);
    }
    EXPECT_THROW(count_compositions(n, k), Error);
  }
}

TEST(CompositionsTest, Counts) {
  EXPECT_EQ(count_compositions(4, 2), 3);
  EXPECT_EQ(count_compositions(9, 1), 1);
  EXPECT_EQ(count_compositions(6, 3), 10);
  EXPECT_EQ(parts_of(6, 3).size(), 10u);
}

TEST(CompositionsTest, BoxEncoding) {
  CompositionStream s(4, 2);
  std::vector<std::string> boxes;
  while (s.next()) boxes.push_back(s.boxes());
  // (1,3) (2,2) (3,1)
  EXPECT_EQ(boxes, (std::vector<std::string>{"100", "010", "001"}));
}

TEST(CompositionsTest, MatchesRecursiveSplitting) {
  for (unsigned n = 1; n <= 16; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      const auto got = parts_of(n, k);
      ASSERT_EQ(got, testing::brute_compositions(n, k)) << n << "," << k;
      EXPECT_EQ(Count(got.size()), count_compositions(n, k));
      for (const auto& parts : got) {
        EXPECT_EQ(Composition{parts}.total(), n);
        EXPECT_TRUE(Composition{parts}.is_valid());
      }
    }
  }
}

TEST(CompositionsTest, TotalIsPowerOfTwo) {
  for (unsigned n = 1; n <= 30; ++n) {
    Count total = 0;
    for (unsigned k = 1; k <= n; ++k) total += count_compositions(n, k);
    EXPECT_EQ(total, pow2(n - 1));
  }
}

TEST(CompositionsTest, Serialization) {
  const Composition c{{1, 2, 3}};
  EXPECT_EQ(c.to_string(), "1,2,3");
  EXPECT_EQ(Composition::parse("1,2,3"), c);
  EXPECT_THROW(Composition::parse("1,,2"), ParseError);
  EXPECT_THROW(Composition::parse("0"), ParseError);
}

}  // namespace
}  // namespace ocagen
