#include "fixmahon/permutation.hpp"

#include <numeric>
#include <string>

#include "fixmahon/error.hpp"

namespace fixmahon {

Permutation::Permutation(std::initializer_list<std::uint32_t> values)
    : Permutation(std::vector<std::uint32_t>(values)) {}

Permutation::Permutation(std::vector<std::uint32_t> values) : values_(std::move(values)) {
    std::vector<bool> seen(values_.size() + 1, false);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const auto x = values_[i];
        if (x == 0 || x > values_.size()) {
            throw Error(ErrorKind::InvalidPermutation,
                        "value '" + std::to_string(x) + "' at position " + std::to_string(i + 1) +
                            " outside 1.." + std::to_string(values_.size()));
        }
        if (seen[x]) {
            throw Error(ErrorKind::InvalidPermutation,
                        "value '" + std::to_string(x) + "' repeated at position " +
                            std::to_string(i + 1));
        }
        seen[x] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::uint32_t> v(n);
    std::iota(v.begin(), v.end(), 1u);
    return Permutation(Unchecked{}, std::move(v));
}

Word Permutation::as_word() const { return Word(std::vector<Letter>(values_.begin(), values_.end())); }

}  // namespace fixmahon
