#pragma once

// ZDer: the encoding of a permutation as a shuffle-class word (fixed points
// become 0, the remaining letters are reduced to a derangement), the
// permutation statistics read through it, and the bijections Φ and F3 of S_n
// induced by the word-level transformations.

#include <cstdint>
#include <string>
#include <vector>

#include "fixmahon/permutation.hpp"
#include "fixmahon/word.hpp"

namespace fixmahon {

struct StatVector {
    std::uint64_t fix = 0;
    std::uint64_t des = 0;
    std::uint64_t exc = 0;
    std::uint64_t maj = 0;
    std::uint64_t dez = 0;
    std::uint64_t maz = 0;
    std::uint64_t maf = 0;
    IndexSet FIX;
    IndexSet DES;
    IndexSet DEZ;
    IndexSet RISE;
    IndexSet RIZE;

    friend bool operator==(const StatVector&, const StatVector&) = default;
};

Word zder(const Permutation& sigma);
// Throws NotInSnDer unless Pos(w) is a derangement.
Permutation zder_inv(const Word& w);
Word der(const Permutation& sigma);

std::uint64_t fix(const Permutation& sigma);
IndexSet fix_set(const Permutation& sigma);
// #{i : 1 <= i <= n-1, sigma(i) > i}
std::uint64_t exc(const Permutation& sigma);
// Sum of FIX minus 1 + ... + fix, plus maj Der; agrees with mafz(zder(sigma)).
std::uint64_t maf_direct(const Permutation& sigma);

StatVector perm_stats(const Permutation& sigma);

Permutation phi_perm(const Permutation& sigma);
Permutation phi_inv_perm(const Permutation& sigma);
Permutation f3_perm(const Permutation& sigma);
Permutation f3_inv_perm(const Permutation& sigma);
// F3 ∘ Φ^{-1}
Permutation f3_phi_inv_perm(const Permutation& sigma);

}  // namespace fixmahon
