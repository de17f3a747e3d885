#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace fixmahon {

struct Counterexample {
    std::string input;
    std::string expected;
    std::string actual;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
    std::string claim;
    std::string range;
    std::uint64_t checked = 0;
    bool pass = true;
    std::optional<Counterexample> counterexample;  // set iff !pass

    std::string to_text() const;
    std::string to_json() const;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

}  // namespace fixmahon
