#pragma once

// Exhaustive generators (permutations, derangements, shuffle classes, words
// over a bounded alphabet) and joint distribution tables over S_n.
//
// Every generator emits in lexicographic order so that reports and
// counterexamples are reproducible.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fixmahon/permutation.hpp"
#include "fixmahon/word.hpp"
#include "fixmahon/zder.hpp"

namespace fixmahon {

inline constexpr std::size_t kDefaultMaxN = 9;

// Throws CapExceeded when n > max_n.
void check_cap(std::size_t n, std::size_t max_n, std::string_view what);

void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& fn,
                          std::size_t max_n = kDefaultMaxN);
std::vector<Permutation> enum_permutations(std::size_t n, std::size_t max_n = kDefaultMaxN);

std::vector<Word> enum_derangements(std::size_t m, std::size_t max_n = kDefaultMaxN);

void for_each_in_shuffle_class(const ShuffleClassId& id,
                               const std::function<void(const Word&)>& fn,
                               std::size_t max_n = kDefaultMaxN);
std::vector<Word> enum_shuffle_class(const ShuffleClassId& id, std::size_t max_n = kDefaultMaxN);

// Every word of length n over {0, ..., max_letter}.
void for_each_word(std::size_t n, Letter max_letter, const std::function<void(const Word&)>& fn,
                   std::size_t max_n = kDefaultMaxN);

// The shuffle classes Sh(0^{n-m} v) for v a derangement, m = 0..n; their union
// is S_n^Der.
std::vector<ShuffleClassId> derangement_classes(std::size_t n, std::size_t max_n = kDefaultMaxN);

std::uint64_t factorial(std::size_t n);
std::uint64_t binomial(std::size_t n, std::size_t k);
std::uint64_t derangement_count(std::size_t m);

enum class Stat { fix, des, exc, maj, dez, maz, maf };

std::string_view to_string(Stat s) noexcept;
// Throws UnknownStat.
Stat parse_stat(std::string_view name);
// Comma separated list, e.g. "fix,des,maj".
std::vector<Stat> parse_stat_list(std::string_view names);

std::uint64_t stat_value(const StatVector& v, Stat s) noexcept;

struct DistributionTable {
    std::vector<Stat> stats;
    std::size_t n = 0;
    std::map<std::vector<std::uint64_t>, std::uint64_t> counts;

    std::uint64_t total() const;

    // {"n":..,"stats":[..],"counts":{"a,b,c":count,...}}; rows in lexicographic
    // tuple order.
    std::string to_json() const;
    // Header "fix,des,maj,count", one row per tuple.
    std::string to_csv() const;
    std::string to_text() const;

    friend bool operator==(const DistributionTable&, const DistributionTable&) = default;
};

DistributionTable joint_distribution(std::size_t n, const std::vector<Stat>& stats,
                                     std::size_t max_n = kDefaultMaxN);

}  // namespace fixmahon
