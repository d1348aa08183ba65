/// Parser and free-reduction tests for the word layer.

#include <nilpotra/word.hpp>

#include <gtest/gtest.h>

#include <string>

namespace nilpotra {
namespace {

Word w(std::initializer_list<Letter> letters) { return Word(letters); }

TEST(WordParse, SingleGenerator) {
  EXPECT_EQ(parse_word("x1", 2), w({{1, 1}}));
  EXPECT_EQ(parse_word("x2", 2), w({{2, 1}}));
}

TEST(WordParse, EmptyIsIdentity) {
  EXPECT_TRUE(parse_word("", 2).empty());
  EXPECT_TRUE(parse_word("   \t ", 2).empty());
}

TEST(WordParse, Exponents) {
  EXPECT_EQ(parse_word("x1^3", 2), w({{1, 3}}));
  EXPECT_EQ(parse_word("x1^-2", 2), w({{1, -2}}));
  EXPECT_EQ(parse_word("x2^0", 2), Word{});
}

TEST(WordParse, JuxtapositionReduces) {
  // Adjacent terms multiply in the free group.
  EXPECT_EQ(parse_word("x1 x1", 2), w({{1, 2}}));
  EXPECT_EQ(parse_word("x1 x1^-1", 2), Word{});
  EXPECT_EQ(parse_word("x2 x1", 2), w({{2, 1}, {1, 1}}));
}

TEST(WordParse, ParenthesesAndPower) {
  EXPECT_EQ(parse_word("(x1 x2)^2", 2), w({{1, 1}, {2, 1}, {1, 1}, {2, 1}}));
  EXPECT_EQ(parse_word("(x1 x2)^-1", 2), w({{2, -1}, {1, -1}}));
}

TEST(WordParse, BracketIsCommutator) {
  // [u, v] = u v u^-1 v^-1.
  EXPECT_EQ(parse_word("[x1,x2]", 2), w({{1, 1}, {2, 1}, {1, -1}, {2, -1}}));
}

TEST(WordParse, LeftNormedBracketChain) {
  // [a, b, c] expands as [[a, b], c].
  EXPECT_EQ(parse_word("[x2,x1,x1]", 2),
            parse_word("[[x2,x1],x1]", 2));
}

TEST(WordParse, BracketPower) {
  EXPECT_EQ(parse_word("[x2,x1]^-1", 2), parse_word("([x2,x1])^-1", 2));
}

TEST(WordParse, GeneratorIndexRange) {
  EXPECT_NO_THROW(parse_word("x3", 3));
  EXPECT_THROW(parse_word("x3", 2), parse_error);
  EXPECT_THROW(parse_word("x0", 2), parse_error);
}

TEST(WordParse, ErrorsCarryPositions) {
  try {
    parse_word("x1 $ x2", 2);
    FAIL() << "expected parse_error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  try {
    parse_word("[x1]", 2);
    FAIL() << "expected parse_error";
  } catch (const parse_error& e) {
    EXPECT_GT(std::string(e.what()).size(), 0u);
  }
}

TEST(WordParse, RejectsTrailingGarbage) {
  EXPECT_THROW(parse_word("x1)", 2), parse_error);
  EXPECT_THROW(parse_word("[x1,x2", 2), parse_error);
  EXPECT_THROW(parse_word("x", 2), parse_error);
  EXPECT_THROW(parse_word("x1^", 2), parse_error);
}

TEST(WordParse, RankMustBePositive) {
  EXPECT_THROW(parse_word("x1", 0), domain_error);
}

TEST(FreeReduce, CancelsRecursively) {
  // x1 x2 x2^-1 x1^-1 collapses completely.
  const Word raw = {{1, 1}, {2, 1}, {2, -1}, {1, -1}};
  EXPECT_TRUE(free_reduce(raw).empty());
}

TEST(FreeReduce, MergesAdjacent) {
  const Word raw = {{1, 2}, {1, 3}, {2, -1}};
  EXPECT_EQ(free_reduce(raw), w({{1, 5}, {2, -1}}));
}

TEST(FreeReduce, OverflowIsADomainError) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(free_reduce(Word{{1, big}, {1, 1}}), domain_error);
}

TEST(WordOps, InverseConcatIsIdentity) {
  const Word u = parse_word("x1^2 [x2,x1] x2^-1", 2);
  EXPECT_TRUE(concat(u, inverse_word(u)).empty());
}

TEST(WordOps, PowUnrollsAndInverts) {
  const Word u = parse_word("x1 x2", 2);
  EXPECT_EQ(word_pow(u, 2), parse_word("x1 x2 x1 x2", 2));
  EXPECT_EQ(word_pow(u, -1), inverse_word(u));
  EXPECT_TRUE(word_pow(u, 0).empty());
}

TEST(WordOps, CommutatorWordDefinition) {
  const Word u = parse_word("x1", 2);
  const Word v = parse_word("x2", 2);
  EXPECT_EQ(commutator_word(u, v), parse_word("x1 x2 x1^-1 x2^-1", 2));
}

TEST(WordOps, LengthCountsExponentMagnitudes) {
  EXPECT_EQ(word_length(parse_word("x1^3 x2^-2", 2)), 5);
  EXPECT_EQ(word_length(Word{}), 0);
}

TEST(WordFormat, RoundTrips) {
  const char* inputs[] = {"x1", "x1^2 x2^-1", "x2 x1", ""};
  for (const char* s : inputs) {
    const Word u = parse_word(s, 2);
    EXPECT_EQ(parse_word(format_word(u), 2), u) << s;
  }
}

}  // namespace
}  // namespace nilpotra
