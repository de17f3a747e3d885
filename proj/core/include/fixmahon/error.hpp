#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fixmahon {

enum class ErrorKind {
    Parse,
    InvalidPermutation,
    PositionOutOfRange,
    NeutralLetter,
    NotADerangement,
    NotInSnDer,
    NoZero,
    NotLeftFactor,
    LastLetterNotZero,
    FirstLetterNotZero,
    TrailingZero,
    LeadingZero,
    CapExceeded,
    UnknownStat,
    UnknownClaim,
    Overflow,
    NonUnit,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this type; kind() lets callers
// (the CLI in particular) map them onto exit codes without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace fixmahon
