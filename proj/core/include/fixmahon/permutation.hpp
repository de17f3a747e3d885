#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "fixmahon/word.hpp"

namespace fixmahon {

// One-line notation σ(1) σ(2) ... σ(n) of a bijection of {1..n}.
class Permutation {
public:
    Permutation() = default;
    // Throws InvalidPermutation if values are not a permutation of 1..n.
    Permutation(std::initializer_list<std::uint32_t> values);
    explicit Permutation(std::vector<std::uint32_t> values);

    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return values_.size(); }
    // 1-based: sigma(i) for 1 <= i <= n.
    std::uint32_t operator()(std::size_t i) const { return values_[i - 1]; }

    const std::vector<std::uint32_t>& values() const noexcept { return values_; }
    Word as_word() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    struct Unchecked {};
    Permutation(Unchecked, std::vector<std::uint32_t> values) : values_(std::move(values)) {}

    std::vector<std::uint32_t> values_;
};

}  // namespace fixmahon
