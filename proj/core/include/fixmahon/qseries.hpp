#pragma once

// Exact truncated power series in the variables u, t, s, q, Y with 64-bit
// integer coefficients, q-Pochhammer symbols, Gaussian binomials, brute-forced
// distribution polynomials over S_n and the two generating-function identities
// checked against them.
//
// The u-degree is truncated at U and the t-degree (and s-degree) at T. q and Y
// are never truncated.

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>

#include "fixmahon/report.hpp"

namespace fixmahon {

enum class Var { u, t, s, q, Y };

inline constexpr std::size_t kVarCount = 5;

std::string_view to_string(Var v) noexcept;

struct SeriesCaps {
    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    std::size_t U = kNone;
    std::size_t T = kNone;

    static SeriesCaps none() { return {}; }
    // Componentwise minimum.
    static SeriesCaps meet(const SeriesCaps& a, const SeriesCaps& b);

    friend bool operator==(const SeriesCaps&, const SeriesCaps&) = default;
};

class MultiPoly {
public:
    using Exponents = std::array<std::uint32_t, kVarCount>;

    MultiPoly() = default;
    explicit MultiPoly(SeriesCaps caps) : caps_(caps) {}

    static MultiPoly constant(std::int64_t c, SeriesCaps caps = {});
    static MultiPoly var(Var v, std::uint32_t power = 1, SeriesCaps caps = {});
    static MultiPoly monomial(std::int64_t c, const Exponents& e, SeriesCaps caps = {});

    const SeriesCaps& caps() const noexcept { return caps_; }
    const std::map<Exponents, std::int64_t>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::int64_t coefficient(const Exponents& e) const;
    std::int64_t constant_term() const { return coefficient({}); }

    // Adds c·x^e, dropping it when e lies outside the caps. Throws Overflow.
    void add_term(const Exponents& e, std::int64_t c);

    // Same polynomial with caps tightened to `caps`.
    MultiPoly truncated(SeriesCaps caps) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& other) { return *this = *this * other; }

    MultiPoly pow(std::uint32_t k) const;

    // Geometric-series inverse up to the caps. Throws NonUnit unless the
    // constant term is 1 and every other monomial involves a capped variable.
    MultiPoly inverse() const;

    // Substitutes an integer value for v.
    MultiPoly evaluate(Var v, std::int64_t value) const;

    // Coefficients compared; caps are not part of the value.
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    // Descending graded lex order, variables ranked Y, u, t, s, q:
    // "Y^2 + s*q", "t^2*q - t*q - t + 1".
    std::string to_string() const;

private:
    bool within_caps(const Exponents& e) const noexcept;

    SeriesCaps caps_;
    std::map<Exponents, std::int64_t> terms_;
};

// Π_{i=0}^{k-1} (1 - arg·q^i)
MultiPoly qpoch(const MultiPoly& arg, std::size_t k, SeriesCaps caps = {});
// [n]_q = 1 + q + ... + q^{n-1}
MultiPoly q_integer(std::size_t n);
// Gaussian binomial by q-Pascal; zero outside 0 <= k <= n.
MultiPoly qbinom(std::size_t n, std::size_t k);

inline constexpr std::size_t kDefaultSeriesCap = 8;

// Σ_σ Y^fix t^des q^maj over S_n.
MultiPoly brute_A_fix_des_maj(std::size_t n, std::size_t cap = kDefaultSeriesCap);
// Σ_σ Y^fix s^exc q^maj over S_n.
MultiPoly brute_A_fix_exc_maj(std::size_t n, std::size_t cap = kDefaultSeriesCap);
// Σ_σ Y^fix t^dez q^maz over S_n.
MultiPoly brute_A_fix_dez_maz(std::size_t n, std::size_t cap = kDefaultSeriesCap);

// Σ_k qbinom(n,k) A_k(Y,s,q) ((sq)^{n-k} - sq) against (1 - sq) Y^n for each
// n <= N.
VerificationReport verify_identity_127(std::size_t N, std::size_t cap = kDefaultSeriesCap);
// Σ_n A_n(Y,t,q) u^n / (t;q)_{n+1} against
// Σ_r t^r (1 - u[r+1]_q)^{-1} (u;q)_{r+1} / (uY;q)_{r+1}, truncated at u^U, t^T.
VerificationReport verify_identity_126(std::size_t U, std::size_t T,
                                       std::size_t cap = kDefaultSeriesCap);

}  // namespace fixmahon
