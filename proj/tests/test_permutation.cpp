#include <gtest/gtest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "oddperm/permutation.hpp"
#include "oracles.hpp"

using namespace oddperm;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

Permutation from_word(const oracle::Word& w) { return make_permutation(w); }

}  // namespace

TEST(Permutation, ConstructsFromOneLineValues) {
  const Permutation w = make_permutation(std::vector<int>{2, 4, 5, 1, 3});
  EXPECT_EQ(w.to_string(), "24513");
  EXPECT_EQ(w.degree(), 5);
  EXPECT_EQ(w(2), 4);
  EXPECT_EQ(w.position_of(1), 4);
  EXPECT_EQ(make_permutation(std::vector<int>{1, 2, 3}), Permutation::identity(3));
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(make_permutation(std::vector<int>{1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(make_permutation(std::vector<int>{0, 1}), std::invalid_argument);
  EXPECT_THROW(make_permutation(std::vector<int>{1, 4, 2}), std::invalid_argument);
  EXPECT_THROW(P("12a"), std::invalid_argument);
  EXPECT_THROW(P(""), std::invalid_argument);
  std::vector<int> too_long(kMaxDegree + 1);
  for (int i = 0; i <= kMaxDegree; ++i) too_long[i] = i + 1;
  EXPECT_THROW(make_permutation(too_long), std::invalid_argument);
}

TEST(Permutation, ParsesCommaListsAndPrintsThemForLargeDegree) {
  const Permutation w = P("10,9,8,7,6,5,4,3,2,1");
  EXPECT_EQ(w, Permutation::longest(10));
  EXPECT_EQ(w.to_string(), "10,9,8,7,6,5,4,3,2,1");
  EXPECT_EQ(P("3,1,2"), P("312"));
}

TEST(Permutation, CodesRoundTripAndOrderLexicographically) {
  const auto all = all_permutations(5);
  ASSERT_EQ(all.size(), 120u);
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(Permutation::from_code(5, all[i].code()), all[i]);
    if (i > 0) {
      EXPECT_LT(all[i - 1], all[i]);
      EXPECT_LT(all[i - 1].to_string(), all[i].to_string());
    }
  }
}

TEST(Permutation, Inverse) {
  EXPECT_EQ(inverse(P("24513")), P("41523"));
  EXPECT_EQ(inverse(Permutation::identity(6)), Permutation::identity(6));
  EXPECT_EQ(inverse(P("1432")), P("1432"));
  for (const Permutation& w : all_permutations(5))
    EXPECT_EQ(from_word(oracle::inverse(w.values())), inverse(w));
}

TEST(Permutation, Transpositions) {
  EXPECT_EQ(right_transpose(P("24513"), Transposition(3, 4)), P("24153"));
  EXPECT_EQ(left_transpose(P("24513"), Transposition(3, 4)), P("23514"));
  EXPECT_EQ(right_transpose(Permutation::identity(5), Transposition(2, 5)), P("15342"));
  EXPECT_THROW(Transposition(3, 3), std::invalid_argument);
  EXPECT_THROW(Transposition(4, 2), std::invalid_argument);
  EXPECT_THROW(Transposition(0, 2), std::invalid_argument);
  EXPECT_THROW(right_transpose(P("123"), Transposition(2, 4)), std::invalid_argument);
}

TEST(Permutation, LengthMatchesInversionCount) {
  EXPECT_EQ(length(Permutation::identity(7)), 0);
  EXPECT_EQ(length(P("1432")), 3);
  EXPECT_EQ(length(P("24513")), 5);
  EXPECT_EQ(length(Permutation::longest(9)), 36);
  for (const Permutation& w : all_permutations(6))
    EXPECT_EQ(length(w), oracle::inversions(w.values())) << w.to_string();
}

TEST(Permutation, BruhatExamples) {
  for (const Permutation& w : all_permutations(4))
    EXPECT_TRUE(bruhat_leq(Permutation::identity(4), w));
  EXPECT_TRUE(bruhat_leq(P("5431627"), P("7461523")));
  EXPECT_FALSE(bruhat_leq(P("1324"), P("2134")));
  EXPECT_FALSE(bruhat_leq(P("2134"), P("1324")));
  EXPECT_THROW(bruhat_leq(P("123"), P("1234")), std::invalid_argument);
}

TEST(Permutation, BruhatMatchesTransitiveClosureOfTranspositions) {
  for (int n = 1; n <= 5; ++n) {
    const oracle::Group g(n);
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b)
        ASSERT_EQ(bruhat_leq(from_word(g.word(a)), from_word(g.word(b))),
                  g.leq(static_cast<int>(a), static_cast<int>(b)))
            << oracle::to_string(g.word(a)) << " vs " << oracle::to_string(g.word(b));
  }
}

TEST(Permutation, CoverExamples) {
  EXPECT_TRUE(covers(P("1234"), P("1243")));
  EXPECT_TRUE(covers(P("5431627"), P("6431527")));
  EXPECT_FALSE(covers(P("1234"), P("4231")));
  EXPECT_FALSE(covers(P("1243"), P("1234")));
}

TEST(Permutation, CoversAgreeWithOrderAndLength) {
  const oracle::Group g(5);
  for (std::size_t a = 0; a < g.size(); ++a) {
    const Permutation u = from_word(g.word(a));
    std::set<Permutation> up, down;
    for (const Permutation& c : upper_covers(u)) up.insert(c);
    for (const Permutation& c : lower_covers(u)) down.insert(c);
    for (std::size_t b = 0; b < g.size(); ++b) {
      const Permutation v = from_word(g.word(b));
      const int ia = static_cast<int>(a), ib = static_cast<int>(b);
      const bool expect_up = g.leq(ia, ib) && g.length(ib) == g.length(ia) + 1;
      const bool expect_down = g.leq(ib, ia) && g.length(ia) == g.length(ib) + 1;
      ASSERT_EQ(covers(u, v), expect_up);
      ASSERT_EQ(up.count(v) == 1, expect_up);
      ASSERT_EQ(down.count(v) == 1, expect_down);
    }
  }
}

TEST(Permutation, DescentSet) {
  EXPECT_TRUE(descent_set(Permutation::identity(4)).empty());
  EXPECT_EQ(descent_set(P("21")), std::vector<int>{1});
  EXPECT_EQ(descent_set(P("1432")), (std::vector<int>{2, 3}));
}

TEST(Permutation, PatternAvoidance) {
  EXPECT_TRUE(avoids(P("1234"), P("4231")));
  EXPECT_FALSE(avoids(P("4231"), P("4231")));
  EXPECT_FALSE(avoids(P("53412"), P("3412")));
  EXPECT_THROW(avoids(P("12"), P("321")), std::invalid_argument);
  EXPECT_TRUE(avoids(P("2143"), P("3412")));
}

TEST(Permutation, EnumerationBySharding) {
  std::size_t total = 0;
  for (int first = 1; first <= 6; ++first) {
    for_each_with_first(6, first, [&](const Permutation& w) {
      EXPECT_EQ(w(1), first);
      ++total;
    });
  }
  EXPECT_EQ(total, 720u);
  EXPECT_THROW(all_permutations(kMaxDegree + 1), std::invalid_argument);
}

// Random triples in S_7: the order is reflexive, antisymmetric, transitive,
// and strictly increases length.
TEST(PermutationProperty, BruhatIsAGradedPartialOrder) {
  std::mt19937_64 rng(7);
  std::vector<int> vals{1, 2, 3, 4, 5, 6, 7};
  auto random_perm = [&] {
    std::shuffle(vals.begin(), vals.end(), rng);
    return make_permutation(vals);
  };
  for (int trial = 0; trial < 3000; ++trial) {
    const Permutation a = random_perm(), b = random_perm(), c = random_perm();
    EXPECT_TRUE(bruhat_leq(a, a));
    if (bruhat_leq(a, b) && bruhat_leq(b, a)) EXPECT_EQ(a, b);
    if (bruhat_leq(a, b) && bruhat_leq(b, c)) EXPECT_TRUE(bruhat_leq(a, c));
    if (bruhat_leq(a, b) && a != b) EXPECT_LT(length(a), length(b));
    // Walk one cover up from a; it must stay comparable.
    for (const Permutation& up : upper_covers(a)) EXPECT_TRUE(bruhat_leq(a, up));
  }
}
