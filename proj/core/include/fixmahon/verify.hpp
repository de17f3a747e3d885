#pragma once

// Exhaustive verifiers, one per equidistribution/bijection claim. Each sweeps
// the claim's natural domain for n in [n_min, n_max] and reports the number
// of objects checked and the first counterexample in enumeration order.
//
// Work is split into independent units (one per n, or per shuffle class) and
// may run on several threads; units are merged in index order, so the report
// is identical for every job count.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "fixmahon/enumeration.hpp"
#include "fixmahon/report.hpp"

namespace fixmahon {

enum class Claim {
    RiseTransfer,        // thm-1.1: RISE w = RISE• Φ(w), Φ bijective on classes
    MajToMafz,           // thm-1.2: maj w = mafz F3(w), L w = L F3(w)
    ZDerBijection,       // prop-1.3
    PermutationMaps,     // thm-1.4 with the stat transfers it implies
    Equidistribution,    // cor-1.5
    ZeroPattern,         // prop-4.1
    RoundTrips,          // Ψ∘Φ, Φ∘Ψ, F3^{-1}∘F3, factored Φ, fixed derangements
};

std::string_view to_string(Claim c) noexcept;
// Accepts "thm-1.1", "thm-1.2", "prop-1.3", "thm-1.4", "cor-1.5", "prop-4.1",
// "roundtrips". Throws UnknownClaim.
Claim parse_claim(std::string_view id);

struct VerifyOptions {
    std::size_t n_min = 0;
    std::size_t n_max = 7;
    unsigned jobs = 1;
    std::size_t cap = kDefaultMaxN;
    // Alphabet {0..max_letter} for the arbitrary-v claims (thm-1.2, prop-4.1,
    // the F3 round trip).
    Letter max_letter = 3;
};

VerificationReport verify_claim(Claim claim, const VerifyOptions& options);
VerificationReport verify_claim(std::string_view claim_id, const VerifyOptions& options);

// Partial result of one unit of work.
struct UnitResult {
    std::uint64_t checked = 0;
    std::optional<Counterexample> counterexample;
};

// Runs unit(0..count-1) on up to `jobs` threads and merges in index order:
// checked counts add, and the counterexample of the lowest failing unit wins.
UnitResult run_units(std::size_t count, unsigned jobs,
                     const std::function<UnitResult(std::size_t)>& unit);

}  // namespace fixmahon
