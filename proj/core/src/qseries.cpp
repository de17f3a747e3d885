#include "fixmahon/qseries.hpp"

#include <algorithm>
#include <tuple>

#include "fixmahon/enumeration.hpp"
#include "fixmahon/error.hpp"
#include "fixmahon/zder.hpp"

namespace fixmahon {

namespace {

constexpr std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "coefficient overflow in addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw Error(ErrorKind::Overflow, "coefficient overflow in multiplication");
    }
    return r;
}

std::uint32_t checked_exp(std::uint32_t a, std::uint32_t b) {
    std::uint32_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "exponent overflow");
    return r;
}

}  // namespace

std::string_view to_string(Var v) noexcept {
    switch (v) {
        case Var::u: return "u";
        case Var::t: return "t";
        case Var::s: return "s";
        case Var::q: return "q";
        case Var::Y: return "Y";
    }
    return "?";
}

SeriesCaps SeriesCaps::meet(const SeriesCaps& a, const SeriesCaps& b) {
    return {std::min(a.U, b.U), std::min(a.T, b.T)};
}

MultiPoly MultiPoly::constant(std::int64_t c, SeriesCaps caps) {
    return monomial(c, {}, caps);
}

MultiPoly MultiPoly::var(Var v, std::uint32_t power, SeriesCaps caps) {
    Exponents e{};
    e[idx(v)] = power;
    return monomial(1, e, caps);
}

MultiPoly MultiPoly::monomial(std::int64_t c, const Exponents& e, SeriesCaps caps) {
    MultiPoly p(caps);
    p.add_term(e, c);
    return p;
}

std::int64_t MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

bool MultiPoly::within_caps(const Exponents& e) const noexcept {
    return e[idx(Var::u)] <= caps_.U && e[idx(Var::t)] <= caps_.T && e[idx(Var::s)] <= caps_.T;
}

void MultiPoly::add_term(const Exponents& e, std::int64_t c) {
    if (c == 0 || !within_caps(e)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

MultiPoly MultiPoly::truncated(SeriesCaps caps) const {
    MultiPoly out(SeriesCaps::meet(caps_, caps));
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(caps_);
    for (const auto& [e, c] : terms_) out.add_term(e, checked_mul(c, -1));
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    caps_ = SeriesCaps::meet(caps_, other.caps_);
    std::erase_if(terms_, [&](const auto& kv) { return !within_caps(kv.first); });
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    return *this += -other;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out(SeriesCaps::meet(a.caps_, b.caps_));
    for (const auto& [ea, ca] : a.terms_) {
        if (!out.within_caps(ea)) continue;
        for (const auto& [eb, cb] : b.terms_) {
            MultiPoly::Exponents e;
            for (std::size_t i = 0; i < kVarCount; ++i) e[i] = checked_exp(ea[i], eb[i]);
            if (!out.within_caps(e)) continue;
            out.add_term(e, checked_mul(ca, cb));
        }
    }
    return out;
}

MultiPoly MultiPoly::pow(std::uint32_t k) const {
    MultiPoly out = constant(1, caps_);
    for (std::uint32_t i = 0; i < k; ++i) out *= *this;
    return out;
}

MultiPoly MultiPoly::inverse() const {
    if (constant_term() != 1) {
        throw Error(ErrorKind::NonUnit,
                    "cannot invert " + to_string() + ": constant term is not 1");
    }
    // x = 1 - y with y nilpotent modulo the caps: every monomial of y must
    // raise a capped degree.
    MultiPoly y = constant(1, caps_) - *this;
    std::size_t bound = 0;
    for (const auto& [e, c] : y.terms_) {
        const bool u_capped = caps_.U != SeriesCaps::kNone && e[idx(Var::u)] > 0;
        const bool t_capped =
            caps_.T != SeriesCaps::kNone && (e[idx(Var::t)] > 0 || e[idx(Var::s)] > 0);
        if (!u_capped && !t_capped) {
            throw Error(ErrorKind::NonUnit, "cannot invert " + to_string() +
                                                ": geometric series does not terminate");
        }
    }
    if (!y.is_zero()) {
        bound = (caps_.U == SeriesCaps::kNone ? 0 : caps_.U) +
                2 * (caps_.T == SeriesCaps::kNone ? 0 : caps_.T);
    }
    // 1 + y + y^2 + ... until the powers vanish.
    MultiPoly sum = constant(1, caps_);
    MultiPoly power = sum;
    for (std::size_t k = 0; k < bound && !power.is_zero(); ++k) {
        power *= y;
        sum += power;
    }
    return sum;
}

MultiPoly MultiPoly::evaluate(Var v, std::int64_t value) const {
    MultiPoly out(caps_);
    for (const auto& [e, c] : terms_) {
        std::int64_t factor = 1;
        for (std::uint32_t i = 0; i < e[idx(v)]; ++i) factor = checked_mul(factor, value);
        Exponents reduced = e;
        reduced[idx(v)] = 0;
        out.add_term(reduced, checked_mul(c, factor));
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    static constexpr Var kOrder[] = {Var::Y, Var::u, Var::t, Var::s, Var::q};
    using Key = std::pair<std::uint64_t, std::array<std::uint32_t, kVarCount>>;
    std::vector<std::pair<Key, std::pair<Exponents, std::int64_t>>> sorted;
    for (const auto& [e, c] : terms_) {
        Key key{0, {}};
        for (std::size_t i = 0; i < kVarCount; ++i) {
            key.first += e[idx(kOrder[i])];
            key.second[i] = e[idx(kOrder[i])];
        }
        sorted.push_back({key, {e, c}});
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    std::string out;
    for (std::size_t n = 0; n < sorted.size(); ++n) {
        const auto& [e, c] = sorted[n].second;
        const bool negative = c < 0;
        const std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(c)
                                           : static_cast<std::uint64_t>(c);
        if (n == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        for (Var v : kOrder) {
            const auto p = e[idx(v)];
            if (p == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += fixmahon::to_string(v);
            if (p > 1) mono += "^" + std::to_string(p);
        }
        if (mono.empty()) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag) + "*";
            out += mono;
        }
    }
    return out;
}

MultiPoly qpoch(const MultiPoly& arg, std::size_t k, SeriesCaps caps) {
    MultiPoly out = MultiPoly::constant(1, SeriesCaps::meet(arg.caps(), caps));
    const MultiPoly one = MultiPoly::constant(1);
    for (std::size_t i = 0; i < k; ++i) {
        out *= one - arg * MultiPoly::var(Var::q, static_cast<std::uint32_t>(i));
    }
    return out;
}

MultiPoly q_integer(std::size_t n) {
    MultiPoly out;
    for (std::size_t i = 0; i < n; ++i) out += MultiPoly::var(Var::q, static_cast<std::uint32_t>(i));
    return out;
}

MultiPoly qbinom(std::size_t n, std::size_t k) {
    if (k > n) return {};
    // [m, j] = [m-1, j-1] + q^j [m-1, j], row by row.
    std::vector<MultiPoly> row{MultiPoly::constant(1)};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<MultiPoly> next(m + 1);
        next[0] = MultiPoly::constant(1);
        next[m] = MultiPoly::constant(1);
        for (std::size_t j = 1; j < m; ++j) {
            next[j] = row[j - 1] + MultiPoly::var(Var::q, static_cast<std::uint32_t>(j)) * row[j];
        }
        row = std::move(next);
    }
    return row[k];
}

namespace {

MultiPoly brute(std::size_t n, std::size_t cap, Var second, Stat second_stat, Stat third_stat) {
    check_cap(n, cap, "brute-force distribution polynomial");
    MultiPoly out;
    for_each_permutation(
        n,
        [&](const Permutation& sigma) {
            const StatVector v = perm_stats(sigma);
            MultiPoly::Exponents e{};
            e[idx(Var::Y)] = static_cast<std::uint32_t>(v.fix);
            e[idx(second)] = static_cast<std::uint32_t>(stat_value(v, second_stat));
            e[idx(Var::q)] = static_cast<std::uint32_t>(stat_value(v, third_stat));
            out.add_term(e, 1);
        },
        cap);
    return out;
}

}  // namespace

MultiPoly brute_A_fix_des_maj(std::size_t n, std::size_t cap) {
    return brute(n, cap, Var::t, Stat::des, Stat::maj);
}

MultiPoly brute_A_fix_exc_maj(std::size_t n, std::size_t cap) {
    return brute(n, cap, Var::s, Stat::exc, Stat::maj);
}

MultiPoly brute_A_fix_dez_maz(std::size_t n, std::size_t cap) {
    return brute(n, cap, Var::t, Stat::dez, Stat::maz);
}

VerificationReport verify_identity_127(std::size_t N, std::size_t cap) {
    check_cap(N, cap, "id-1.27");
    VerificationReport report;
    report.claim = "id-1.27";
    report.range = "n=0.." + std::to_string(N);

    const MultiPoly one = MultiPoly::constant(1);
    const MultiPoly sq = MultiPoly::var(Var::s) * MultiPoly::var(Var::q);
    std::vector<MultiPoly> A;
    for (std::size_t n = 0; n <= N; ++n) {
        A.push_back(brute_A_fix_exc_maj(n, cap));
        MultiPoly lhs;
        for (std::size_t k = 0; k <= n; ++k) {
            lhs += qbinom(n, k) * A[k] * (sq.pow(static_cast<std::uint32_t>(n - k)) - sq);
        }
        const MultiPoly rhs = (one - sq) * MultiPoly::var(Var::Y, static_cast<std::uint32_t>(n));
        ++report.checked;
        if (lhs != rhs) {
            report.pass = false;
            report.counterexample =
                Counterexample{"n=" + std::to_string(n), rhs.to_string(), lhs.to_string()};
            break;
        }
    }
    return report;
}

VerificationReport verify_identity_126(std::size_t U, std::size_t T, std::size_t cap) {
    check_cap(U, cap, "id-1.26");
    check_cap(T, cap, "id-1.26");
    VerificationReport report;
    report.claim = "id-1.26";
    report.range = "U=" + std::to_string(U) + ", T=" + std::to_string(T);

    const SeriesCaps caps{U, T};
    const MultiPoly one = MultiPoly::constant(1, caps);
    const MultiPoly u = MultiPoly::var(Var::u, 1, caps);
    const MultiPoly t = MultiPoly::var(Var::t, 1, caps);
    const MultiPoly Y = MultiPoly::var(Var::Y, 1, caps);

    MultiPoly lhs(caps);
    for (std::size_t n = 0; n <= U; ++n) {
        lhs += brute_A_fix_des_maj(n, cap).truncated(caps) * u.pow(static_cast<std::uint32_t>(n)) *
               qpoch(t, n + 1, caps).inverse();
    }
    MultiPoly rhs(caps);
    for (std::size_t r = 0; r <= T; ++r) {
        const MultiPoly geometric = (one - u * q_integer(r + 1)).inverse();
        rhs += t.pow(static_cast<std::uint32_t>(r)) * geometric * qpoch(u, r + 1, caps) *
               qpoch(u * Y, r + 1, caps).inverse();
    }

    // Compare coefficient by coefficient over the union of supports.
    std::map<MultiPoly::Exponents, std::pair<std::int64_t, std::int64_t>> both;
    for (const auto& [e, c] : lhs.terms()) both[e].first = c;
    for (const auto& [e, c] : rhs.terms()) both[e].second = c;
    for (const auto& [e, c] : both) {
        ++report.checked;
        if (c.first != c.second) {
            report.pass = false;
            const MultiPoly mono = MultiPoly::monomial(1, e);
            report.counterexample = Counterexample{"coefficient of " + mono.to_string(),
                                                   std::to_string(c.second),
                                                   std::to_string(c.first)};
            break;
        }
    }
    return report;
}

}  // namespace fixmahon
