#pragma once

// The transformation F3: a bijection of every shuffle class Sh(0^{n-m} v),
// v an arbitrary positive word, with maj w = mafz F3(w) and L w = L F3(w)
// (L = last letter).
//
// F3 is defined by induction on length through the tail decomposition
// w = w' a 0^r b; it is evaluated here left to right, extending the image of
// each prefix by one letter.

#include <cstddef>
#include <optional>
#include <vector>

#include "fixmahon/word.hpp"

namespace fixmahon {

// w = w' a 0^r b where a is the last positive letter among the first n-1
// letters. a is absent when no such letter exists (w = 0^{n-1} b).
struct TailDecomposition {
    Word prefix;                  // w'
    std::optional<Letter> a;
    std::size_t r = 0;            // zeros between a and b (or n-1 when a is absent)
    Letter b = 0;
    Letter c = 0;                 // first letter, consulted by the inverse only

    Word reassemble() const;
};

// Requires |w| >= 1.
TailDecomposition decompose_tail(const Word& w);

// 0 w'' for w = w'' 0. Throws LastLetterNotZero.
Word gamma(const Word& w);
// w'' 0 for w = 0 w''. Throws FirstLetterNotZero.
Word gamma_inv(const Word& w);

// Moves each positive letter that follows a 0-factor to the front of that
// 0-factor. Identity on all-zero words; throws TrailingZero otherwise when w
// ends in 0.
Word delta(const Word& w);
// Moves each positive letter that precedes a 0-factor to the end of that
// 0-factor. Identity on all-zero words; throws LeadingZero otherwise when w
// starts with 0.
Word delta_inv(const Word& w);

enum class F3Case {
    Base,        // length <= 1, or no positive letter before the last one
    Case1,       // a <= b
    Case2,       // a > b, r >= 1 (gamma)
    Case3,       // a > b, r = 0 (delta)
};

struct F3Step {
    std::size_t length = 0;  // length of the prefix whose image is recorded
    F3Case kind = F3Case::Base;
    Word moved_input;        // argument of gamma/delta (empty for Base/Case1)
    Word moved_output;       // its image under gamma/delta
    Word image;              // F3 of the prefix of this length
};

Word f3(const Word& w);
Word f3_inv(const Word& w);

// One entry per prefix length 1..n.
std::vector<F3Step> f3_trace(const Word& w);

}  // namespace fixmahon
