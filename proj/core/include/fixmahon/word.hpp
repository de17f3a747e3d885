#pragma once

// Words over nonnegative integers, their zero/positive decomposition, and the
// word-level statistics (DES, RISE, RISE•, maj, mafz).
//
// Positions are 1-based everywhere they cross the API (IndexSet, classify,
// red_map); the letter storage itself is an ordinary 0-based vector.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fixmahon {

using Letter = std::uint32_t;

class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter& operator[](std::size_t i) { return letters_[i]; }

    // 1-based access, matching external reporting.
    Letter at(std::size_t position) const;

    Letter front() const { return letters_.front(); }
    Letter back() const { return letters_.back(); }

    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    std::span<const Letter> letters() const noexcept { return letters_; }
    const std::vector<Letter>& vector() const noexcept { return letters_; }

    void push_back(Letter x) { letters_.push_back(x); }
    void append(const Word& other) { letters_.insert(letters_.end(), other.begin(), other.end()); }

    // Letters [first, last) as a new word (0-based, half open).
    Word slice(std::size_t first, std::size_t last) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

Word concat(const Word& a, const Word& b);

// Strictly increasing set of 1-based positions.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<std::size_t> positions);
    explicit IndexSet(std::vector<std::size_t> positions);

    std::size_t size() const noexcept { return positions_.size(); }
    bool empty() const noexcept { return positions_.empty(); }
    bool contains(std::size_t position) const noexcept;
    std::uint64_t sum() const noexcept;

    auto begin() const noexcept { return positions_.begin(); }
    auto end() const noexcept { return positions_.end(); }
    const std::vector<std::size_t>& vector() const noexcept { return positions_; }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<std::size_t> positions_;
};

// {1..n} \ s
IndexSet complement(const IndexSet& s, std::size_t n);

enum class LetterClass { Zero, Excedent, Subexcedent, Neutral };

std::string to_string(LetterClass c);

// Identifies Sh(0^{n-m} v): all interleavings of n-m zeros with v.
struct ShuffleClassId {
    std::size_t n = 0;
    Word v;

    // Throws on m > n or a zero letter in v.
    void validate() const;
    bool contains(const Word& w) const;

    friend bool operator==(const ShuffleClassId&, const ShuffleClassId&) = default;
    friend auto operator<=>(const ShuffleClassId&, const ShuffleClassId&) = default;
};

IndexSet zero_set(const Word& w);
std::size_t zero_count(const Word& w) noexcept;
std::size_t positive_count(const Word& w) noexcept;
Word pos_subword(const Word& w);

IndexSet des_set(const Word& w);
// Includes n whenever n >= 1 (x_{n+1} = +inf).
IndexSet rise_set(const Word& w);
std::uint64_t maj(const Word& w);
std::uint64_t mafz(const Word& w);

// (position, rank) for each positive letter, positions ascending.
std::vector<std::pair<std::size_t, std::size_t>> red_map(const Word& w);

// k ranges over 0..n+1; the virtual boundary letters at 0 and n+1 are +inf and
// classify as Excedent.
LetterClass classify(const Word& w, std::size_t k);
std::vector<LetterClass> classify_all(const Word& w);

bool is_permutation_word(const Word& v);
// v is a permutation of 1..m with no fixed point; the empty word qualifies.
bool is_derangement_word(const Word& v);

// Throws NeutralLetter when some positive letter equals its red rank.
IndexSet rise_bullet_set(const Word& w);

// RISE• with externally supplied letter classes; used when w is a factor of a
// larger word and excedence must be read off the enclosing context.
IndexSet rise_bullet_set(const Word& w, std::span<const LetterClass> classes);

}  // namespace fixmahon
