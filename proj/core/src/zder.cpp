#include "fixmahon/zder.hpp"

#include <stdexcept>

#include "fixmahon/error.hpp"
#include "fixmahon/f3.hpp"
#include "fixmahon/phi.hpp"
#include "fixmahon/text.hpp"

namespace fixmahon {

Word zder(const Permutation& sigma) {
    const std::size_t n = sigma.size();
    // rank[k] = red(k) for non-fixed k
    std::vector<Letter> rank(n + 1, 0);
    Letter next = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        if (sigma(k) != k) rank[k] = ++next;
    }
    std::vector<Letter> out(n, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        if (sigma(k) != k) out[k - 1] = rank[sigma(k)];
    }
    return Word(std::move(out));
}

Permutation zder_inv(const Word& w) {
    if (!is_derangement_word(pos_subword(w))) {
        throw Error(ErrorKind::NotInSnDer,
                    "zder_inv: Pos(" + format_word(w) + ") is not a derangement");
    }
    std::vector<std::size_t> positive_positions;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 0) positive_positions.push_back(i + 1);
    }
    std::vector<std::uint32_t> values(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        values[i] = w[i] == 0 ? static_cast<std::uint32_t>(i + 1)
                              : static_cast<std::uint32_t>(positive_positions[w[i] - 1]);
    }
    return Permutation(std::move(values));
}

Word der(const Permutation& sigma) { return pos_subword(zder(sigma)); }

std::uint64_t fix(const Permutation& sigma) { return fix_set(sigma).size(); }

IndexSet fix_set(const Permutation& sigma) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= sigma.size(); ++i) {
        if (sigma(i) == i) out.push_back(i);
    }
    return IndexSet(std::move(out));
}

std::uint64_t exc(const Permutation& sigma) {
    std::uint64_t count = 0;
    for (std::size_t i = 1; i + 1 <= sigma.size(); ++i) {
        if (sigma(i) > i) ++count;
    }
    return count;
}

std::uint64_t maf_direct(const Permutation& sigma) {
    const IndexSet fixed = fix_set(sigma);
    const std::uint64_t f = fixed.size();
    return fixed.sum() - f * (f + 1) / 2 + maj(der(sigma));
}

StatVector perm_stats(const Permutation& sigma) {
    const Word w = sigma.as_word();
    const Word z = zder(sigma);
    StatVector s;
    s.FIX = fix_set(sigma);
    s.fix = s.FIX.size();
    s.DES = des_set(w);
    s.des = s.DES.size();
    s.maj = s.DES.sum();
    s.RISE = rise_set(w);
    s.exc = exc(sigma);
    s.DEZ = des_set(z);
    s.dez = s.DEZ.size();
    s.maz = s.DEZ.sum();
    s.RIZE = rise_set(z);
    s.maf = mafz(z);
    if (s.maf != maf_direct(sigma)) {
        throw std::logic_error("perm_stats: maf disagrees with the fixed-point formula for " +
                               format_permutation(sigma));
    }
    return s;
}

Permutation phi_perm(const Permutation& sigma) { return zder_inv(phi(zder(sigma))); }
Permutation phi_inv_perm(const Permutation& sigma) { return zder_inv(psi(zder(sigma))); }
Permutation f3_perm(const Permutation& sigma) { return zder_inv(f3(zder(sigma))); }
Permutation f3_inv_perm(const Permutation& sigma) { return zder_inv(f3_inv(zder(sigma))); }
Permutation f3_phi_inv_perm(const Permutation& sigma) { return f3_perm(phi_inv_perm(sigma)); }

}  // namespace fixmahon
