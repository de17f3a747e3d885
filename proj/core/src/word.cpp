#include "fixmahon/word.hpp"

#include <algorithm>
#include <numeric>

#include "fixmahon/error.hpp"

namespace fixmahon {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::InvalidPermutation: return "InvalidPermutation";
        case ErrorKind::PositionOutOfRange: return "PositionOutOfRange";
        case ErrorKind::NeutralLetter: return "NeutralLetter";
        case ErrorKind::NotADerangement: return "NotADerangement";
        case ErrorKind::NotInSnDer: return "NotInSnDer";
        case ErrorKind::NoZero: return "NoZero";
        case ErrorKind::NotLeftFactor: return "NotLeftFactor";
        case ErrorKind::LastLetterNotZero: return "LastLetterNotZero";
        case ErrorKind::FirstLetterNotZero: return "FirstLetterNotZero";
        case ErrorKind::TrailingZero: return "TrailingZero";
        case ErrorKind::LeadingZero: return "LeadingZero";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::UnknownStat: return "UnknownStat";
        case ErrorKind::UnknownClaim: return "UnknownClaim";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::NonUnit: return "NonUnit";
    }
    return "Error";
}

Letter Word::at(std::size_t position) const {
    if (position == 0 || position > letters_.size()) {
        throw Error(ErrorKind::PositionOutOfRange,
                    "position " + std::to_string(position) + " outside 1.." +
                        std::to_string(letters_.size()));
    }
    return letters_[position - 1];
}

Word Word::slice(std::size_t first, std::size_t last) const {
    last = std::min(last, letters_.size());
    if (first >= last) return {};
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(first),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(last)));
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.append(b);
    return out;
}

IndexSet::IndexSet(std::initializer_list<std::size_t> positions)
    : IndexSet(std::vector<std::size_t>(positions)) {}

IndexSet::IndexSet(std::vector<std::size_t> positions) : positions_(std::move(positions)) {
    std::sort(positions_.begin(), positions_.end());
    positions_.erase(std::unique(positions_.begin(), positions_.end()), positions_.end());
}

bool IndexSet::contains(std::size_t position) const noexcept {
    return std::binary_search(positions_.begin(), positions_.end(), position);
}

std::uint64_t IndexSet::sum() const noexcept {
    return std::accumulate(positions_.begin(), positions_.end(), std::uint64_t{0});
}

IndexSet complement(const IndexSet& s, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= n; ++i) {
        if (!s.contains(i)) out.push_back(i);
    }
    return IndexSet(std::move(out));
}

std::string to_string(LetterClass c) {
    switch (c) {
        case LetterClass::Zero: return "zero";
        case LetterClass::Excedent: return "excedent";
        case LetterClass::Subexcedent: return "subexcedent";
        case LetterClass::Neutral: return "neutral";
    }
    return "?";
}

void ShuffleClassId::validate() const {
    if (v.size() > n) {
        throw Error(ErrorKind::PositionOutOfRange,
                    "shuffle class needs |v| <= n, got |v| = " + std::to_string(v.size()) +
                        ", n = " + std::to_string(n));
    }
    if (std::find(v.begin(), v.end(), Letter{0}) != v.end()) {
        throw Error(ErrorKind::Parse, "shuffle class word v must have positive letters only");
    }
}

bool ShuffleClassId::contains(const Word& w) const {
    return w.size() == n && pos_subword(w) == v;
}

IndexSet zero_set(const Word& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) out.push_back(i + 1);
    }
    return IndexSet(std::move(out));
}

std::size_t zero_count(const Word& w) noexcept {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), Letter{0}));
}

std::size_t positive_count(const Word& w) noexcept { return w.size() - zero_count(w); }

Word pos_subword(const Word& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    std::copy_if(w.begin(), w.end(), std::back_inserter(out), [](Letter x) { return x != 0; });
    return Word(std::move(out));
}

IndexSet des_set(const Word& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1]) out.push_back(i + 1);
    }
    return IndexSet(std::move(out));
}

IndexSet rise_set(const Word& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i + 1 == w.size() || w[i] <= w[i + 1]) out.push_back(i + 1);
    }
    return IndexSet(std::move(out));
}

std::uint64_t maj(const Word& w) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1]) total += i + 1;
    }
    return total;
}

std::uint64_t mafz(const Word& w) {
    std::uint64_t zero_positions = 0;
    std::uint64_t zeros = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) {
            zero_positions += i + 1;
            ++zeros;
        }
    }
    // zeros occupy distinct positions, so the first sum dominates 1 + ... + zeros
    return zero_positions - zeros * (zeros + 1) / 2 + maj(pos_subword(w));
}

std::vector<std::pair<std::size_t, std::size_t>> red_map(const Word& w) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 0) out.emplace_back(i + 1, ++rank);
    }
    return out;
}

std::vector<LetterClass> classify_all(const Word& w) {
    std::vector<LetterClass> out(w.size(), LetterClass::Zero);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        ++rank;
        if (w[i] > rank) {
            out[i] = LetterClass::Excedent;
        } else if (w[i] < rank) {
            out[i] = LetterClass::Subexcedent;
        } else {
            out[i] = LetterClass::Neutral;
        }
    }
    return out;
}

LetterClass classify(const Word& w, std::size_t k) {
    if (k == 0 || k == w.size() + 1) return LetterClass::Excedent;
    if (k > w.size() + 1) {
        throw Error(ErrorKind::PositionOutOfRange,
                    "classify: position " + std::to_string(k) + " outside 0.." +
                        std::to_string(w.size() + 1));
    }
    if (w[k - 1] == 0) return LetterClass::Zero;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (w[i] != 0) ++rank;
    }
    if (w[k - 1] > rank) return LetterClass::Excedent;
    if (w[k - 1] < rank) return LetterClass::Subexcedent;
    return LetterClass::Neutral;
}

bool is_permutation_word(const Word& v) {
    std::vector<bool> seen(v.size() + 1, false);
    for (Letter x : v) {
        if (x == 0 || x > v.size() || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

bool is_derangement_word(const Word& v) {
    if (!is_permutation_word(v)) return false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == i + 1) return false;
    }
    return true;
}

IndexSet rise_bullet_set(const Word& w) { return rise_bullet_set(w, classify_all(w)); }

IndexSet rise_bullet_set(const Word& w, std::span<const LetterClass> classes) {
    if (classes.size() != w.size()) {
        throw Error(ErrorKind::PositionOutOfRange, "rise_bullet_set: class vector length mismatch");
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (classes[i] == LetterClass::Neutral) {
            throw Error(ErrorKind::NeutralLetter,
                        "letter " + std::to_string(w[i]) + " at position " + std::to_string(i + 1) +
                            " equals its reduced position; RISE• needs a derangement");
        }
    }
    std::vector<std::size_t> out;
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        const bool last = i + 1 == n;
        const Letter x = w[i];
        // x_{n+1} = +inf: larger than everything, and excedent.
        const bool next_zero = !last && w[i + 1] == 0;
        const bool next_excedent = last || classes[i + 1] == LetterClass::Excedent;
        bool in = false;
        if (x > 0) {
            in = (last || (w[i + 1] > 0 && x < w[i + 1])) ||
                 (classes[i] == LetterClass::Subexcedent && next_zero);
        } else {
            in = next_zero || next_excedent;
        }
        if (in) out.push_back(i + 1);
    }
    return IndexSet(std::move(out));
}

}  // namespace fixmahon
