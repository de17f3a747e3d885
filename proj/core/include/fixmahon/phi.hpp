#pragma once

// The zero-moving bijection Φ on shuffle classes Sh(0^{n-m} v), v a
// derangement, together with its inverse Ψ and the factored recomputation of Φ
// through canonical factorizations.
//
// Φ = φ_1 φ_2 ... φ_n acts rightmost factor first: φ_n, then φ_{n-1}, ..., φ_1.
// Each φ_l moves only the l-th zero of the current word. Φ satisfies
// RISE w = RISE• Φ(w).

#include <cstddef>
#include <vector>

#include "fixmahon/word.hpp"

namespace fixmahon {

enum class PhiCase {
    Identity,  // l exceeds the zero count
    Case1,     // both neighbours non-subexcedent
    Case2,     // zero slides right
    Case3,     // zero slides left
};

enum class PsiCase {
    Identity,
    Case1,  // (1') = (1)
    Case2,  // zero slides left
    Case3,  // zero slides right
};

struct PhiStep {
    std::size_t l = 0;
    std::size_t zero_position = 0;  // j, 1-based, 0 when Identity
    PhiCase kind = PhiCase::Identity;
    // k for Case2, i for Case3 (1-based); 0 otherwise.
    std::size_t chain_end = 0;
    Word result;
};

struct PsiStep {
    std::size_t l = 0;
    std::size_t zero_position = 0;
    PsiCase kind = PsiCase::Identity;
    std::size_t chain_end = 0;
    Word result;
};

// Throws NotADerangement unless Pos(w) is a derangement; l in 1..n.
PhiStep phi_step(const Word& w, std::size_t l);
PsiStep psi_step(const Word& w, std::size_t l);

Word phi_l(const Word& w, std::size_t l);
Word psi_l(const Word& w, std::size_t l);

Word phi(const Word& w);
Word psi(const Word& w);

// The effective (non-identity-by-range) φ_l applications of Φ, in order.
std::vector<PhiStep> phi_trace(const Word& w);

enum class FactorCase { Case1, Case2, Case3, Case4 };

// w' = u u' with θ(u') a rearrangement of u' moving zeros only.
struct CanonicalFactorization {
    Word u;
    Word u_prime;
    Word theta_u_prime;
    FactorCase kind = FactorCase::Case1;
};

// Canonical factorization of the left factor w_prime of context. Letter classes
// are those of the enclosing context word. Throws NoZero, NotLeftFactor,
// NotADerangement.
CanonicalFactorization canonical_factorize(const Word& w_prime, const Word& context);
CanonicalFactorization canonical_factorize(const Word& w);

struct FactoredPhi {
    Word head;                  // u_1
    std::vector<Word> blocks;   // θ(u'_1), ..., θ(u'_r)
    // Θ(w), Θ(u_r), ..., Θ(u_2) in the order they are computed.
    std::vector<CanonicalFactorization> steps;

    Word join() const;
};

FactoredPhi phi_factored(const Word& w);
Word phi_via_theta(const Word& w);

// Classes of the letters of θ(u') (or any zero-rearrangement of u'): positive
// letters inherit the class of the corresponding positive letter of u'.
std::vector<LetterClass> rearranged_classes(const Word& rearranged, const Word& original,
                                            const std::vector<LetterClass>& original_classes);

}  // namespace fixmahon
