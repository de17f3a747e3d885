#include <gtest/gtest.h>

#include "fixmahon/error.hpp"
#include "fixmahon/text.hpp"
#include "fixmahon/word.hpp"

using namespace fixmahon;

namespace {

Word W(const char* s) { return parse_word(s); }
IndexSet S(const char* s) { return parse_index_set(s); }

template <typename F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no fixmahon::Error thrown";
    return ErrorKind::Parse;
}

}  // namespace

TEST(ZeroSet, Examples) {
    EXPECT_EQ(zero_set(W("5 0 1 2 0 0 3 6 4")), S("{2,5,6}"));
    EXPECT_EQ(zero_set(W("0 0 0 0")), S("{1,2,3,4}"));
    EXPECT_EQ(zero_set(W("1 2 0 0 1")), S("{3,4}"));
    EXPECT_EQ(zero_count(W("1 2 0 0 1")), 2u);
    EXPECT_EQ(positive_count(W("1 2 0 0 1")), 3u);
}

TEST(PosSubword, Examples) {
    EXPECT_EQ(pos_subword(W("5 0 1 2 0 0 3 6 4")), W("5 1 2 3 6 4"));
    EXPECT_TRUE(pos_subword(W("0 0 0 0")).empty());
    EXPECT_EQ(pos_subword(W("0 3 0 1 2")), W("3 1 2"));
}

TEST(DesSet, Examples) {
    EXPECT_EQ(des_set(W("8 2 1 3 5 6 4 9 7")), S("{1,2,6,8}"));
    EXPECT_EQ(des_set(W("5 0 1 2 0 0 3 6 4")), S("{1,4,8}"));
    EXPECT_TRUE(des_set(W("0 0 0 0")).empty());
}

TEST(RiseSet, Examples) {
    EXPECT_EQ(rise_set(W("5 0 1 2 0 0 3 6 4")), S("{2,3,5,6,7,9}"));
    EXPECT_EQ(rise_set(W("0 3 0 1 2")), S("{1,3,4,5}"));
    EXPECT_EQ(rise_set(W("0 0 0 0")), S("{1,2,3,4}"));
    EXPECT_TRUE(rise_set(Word{}).empty());
}

TEST(RiseSet, ComplementsDescents) {
    const Word w = W("3 1 0 0 2 2 1");
    EXPECT_EQ(rise_set(w), complement(des_set(w), w.size()));
}

TEST(Maj, Examples) {
    EXPECT_EQ(maj(W("8 2 1 3 5 6 4 9 7")), 17u);
    EXPECT_EQ(maj(W("0 0 0 3 1 2 2 0 0 1 3")), 11u);
    EXPECT_EQ(maj(W("0 0 0 0")), 0u);
    EXPECT_EQ(maj(W("5 1 2 3 6 4")), 6u);
}

TEST(Mafz, Examples) {
    EXPECT_EQ(mafz(W("5 0 1 2 0 0 3 6 4")), 13u);
    EXPECT_EQ(mafz(W("0 0 3 1 0 0 0 2 2 1 3")), 11u);
    EXPECT_EQ(mafz(W("0 0 0 0")), 0u);
    EXPECT_EQ(mafz(Word{}), 0u);
}

TEST(RedMap, Examples) {
    using P = std::pair<std::size_t, std::size_t>;
    EXPECT_EQ(red_map(W("5 0 1 2 0 0 3 6 4")),
              (std::vector<P>{{1, 1}, {3, 2}, {4, 3}, {7, 4}, {8, 5}, {9, 6}}));
    EXPECT_EQ(red_map(W("0 2 1 0")), (std::vector<P>{{2, 1}, {3, 2}}));
    EXPECT_TRUE(red_map(W("0 0 0")).empty());
}

TEST(Classify, Examples) {
    const Word w = W("5 0 1 2 0 0 3 6 4");
    for (std::size_t k = 1; k <= w.size(); ++k) {
        const LetterClass expected = w.at(k) == 0 ? LetterClass::Zero
                                     : (k == 1 || k == 8) ? LetterClass::Excedent
                                                          : LetterClass::Subexcedent;
        EXPECT_EQ(classify(w, k), expected) << "k=" << k;
    }
    EXPECT_EQ(classify(W("0 2 1 0"), 2), LetterClass::Excedent);
    EXPECT_EQ(classify(W("0 2 1 0"), 3), LetterClass::Subexcedent);
    for (std::size_t k = 1; k <= 4; ++k) EXPECT_EQ(classify(W("0 0 0 0"), k), LetterClass::Zero);
}

TEST(Classify, NeutralAndBoundaries) {
    const Word w = W("0 1 0");
    EXPECT_EQ(classify(w, 2), LetterClass::Neutral);
    EXPECT_EQ(classify(w, 0), LetterClass::Excedent);
    EXPECT_EQ(classify(w, 4), LetterClass::Excedent);
    EXPECT_EQ(kind_of([&] { classify(w, 5); }), ErrorKind::PositionOutOfRange);
}

TEST(Classify, ZerosDoNotChangeRank) {
    EXPECT_EQ(classify_all(W("3 1 2")), classify_all(W("3 1 2")));
    const auto a = classify_all(W("0 3 0 1 2"));
    const auto b = classify_all(W("3 1 0 2 0"));
    EXPECT_EQ(a[1], b[0]);
    EXPECT_EQ(a[3], b[1]);
    EXPECT_EQ(a[4], b[3]);
}

TEST(RiseBullet, Examples) {
    EXPECT_EQ(rise_bullet_set(W("5 0 1 2 0 0 3 6 4")), S("{3,4,5,7,9}"));
    EXPECT_EQ(rise_bullet_set(W("0 3 1 0 2")), S("{1,3,5}"));
    EXPECT_EQ(rise_bullet_set(W("0 0 0 0")), S("{1,2,3,4}"));
    EXPECT_TRUE(rise_bullet_set(Word{}).empty());
}

TEST(RiseBullet, FourConditions) {
    // (1) increasing positive pair, (2) two zeros, (3) zero then excedent,
    // (4) subexcedent then zero.
    EXPECT_EQ(rise_bullet_set(W("2 3 1")), S("{1,3}"));
    EXPECT_EQ(rise_bullet_set(W("0 0 2 1")), S("{1,2,4}"));
    EXPECT_EQ(rise_bullet_set(W("2 1 0")), S("{2,3}"));
    // zero followed by a subexcedent letter is not in RISE•
    EXPECT_EQ(rise_bullet_set(W("2 0 1")), S("{3}"));
}

TEST(RiseBullet, NeutralLetterRejected) {
    EXPECT_EQ(kind_of([] { rise_bullet_set(W("1 0")); }), ErrorKind::NeutralLetter);
}

TEST(RiseBullet, ContextClasses) {
    const Word w = W("0 1");
    const std::vector<LetterClass> sub{LetterClass::Zero, LetterClass::Subexcedent};
    const std::vector<LetterClass> exc{LetterClass::Zero, LetterClass::Excedent};
    EXPECT_EQ(rise_bullet_set(w, sub), S("{2}"));
    EXPECT_EQ(rise_bullet_set(w, exc), S("{1,2}"));
    EXPECT_EQ(kind_of([&] { rise_bullet_set(w, std::vector<LetterClass>{LetterClass::Zero}); }),
              ErrorKind::PositionOutOfRange);
}

TEST(Predicates, PermutationAndDerangement) {
    EXPECT_TRUE(is_permutation_word(W("3 1 2")));
    EXPECT_FALSE(is_permutation_word(W("3 1 1")));
    EXPECT_TRUE(is_derangement_word(W("3 1 2")));
    EXPECT_FALSE(is_derangement_word(W("1 3 2")));
    EXPECT_TRUE(is_derangement_word(Word{}));
}

TEST(ShuffleClass, Membership) {
    const ShuffleClassId id{5, W("3 1 2")};
    EXPECT_TRUE(id.contains(W("0 3 0 1 2")));
    EXPECT_FALSE(id.contains(W("0 3 0 2 1")));
    EXPECT_FALSE(id.contains(W("3 1 2")));
    EXPECT_THROW((ShuffleClassId{2, W("3 1 2")}.validate()), Error);
    EXPECT_THROW((ShuffleClassId{4, W("3 0 2")}.validate()), Error);
}

TEST(Word, AccessAndSlice) {
    const Word w = W("4 0 2");
    EXPECT_EQ(w.at(1), 4u);
    EXPECT_EQ(w.at(3), 2u);
    EXPECT_EQ(kind_of([&] { (void)w.at(0); }), ErrorKind::PositionOutOfRange);
    EXPECT_EQ(kind_of([&] { (void)w.at(4); }), ErrorKind::PositionOutOfRange);
    EXPECT_EQ(w.slice(1, 3), W("0 2"));
    EXPECT_EQ(concat(W("1"), W("0 2")), W("1 0 2"));
}

TEST(Text, RoundTrip) {
    EXPECT_EQ(format_word(W("  5\t0 1\n2 ")), "5 0 1 2");
    EXPECT_EQ(format_word(Word{}), "");
    EXPECT_EQ(format_index_set(S("{2,5,6}")), "{2,5,6}");
    EXPECT_EQ(format_index_set(IndexSet{}), "{}");
    EXPECT_EQ(parse_index_set("{}"), IndexSet{});
    EXPECT_EQ(format_permutation(parse_permutation("8 2 1 3 5 6 4 9 7")), "8 2 1 3 5 6 4 9 7");
}

TEST(Text, ErrorsNameTheToken) {
    try {
        parse_word("1 2x 3");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Parse);
        EXPECT_NE(std::string(e.what()).find("2x"), std::string::npos);
    }
    EXPECT_EQ(kind_of([] { parse_word("-1"); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([] { parse_index_set("2,5"); }), ErrorKind::Parse);
    try {
        parse_permutation("1 1 3");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidPermutation);
    }
    EXPECT_EQ(kind_of([] { parse_permutation("1 4 2"); }), ErrorKind::InvalidPermutation);
}

TEST(Permutation, Basics) {
    const Permutation p{2, 3, 1};
    EXPECT_EQ(p(1), 2u);
    EXPECT_EQ(p.size(), 3u);
    EXPECT_EQ(p.as_word(), W("2 3 1"));
    EXPECT_EQ(Permutation::identity(3), (Permutation{1, 2, 3}));
    EXPECT_EQ(Permutation::identity(0).size(), 0u);
}
