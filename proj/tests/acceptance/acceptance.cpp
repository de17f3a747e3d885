// One line per acceptance criterion: PASS/FAIL, id, name, elapsed time.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "../fixtures/golden_data.hpp"
#include "fixmahon/enumeration.hpp"
#include "fixmahon/error.hpp"
#include "fixmahon/f3.hpp"
#include "fixmahon/phi.hpp"
#include "fixmahon/qseries.hpp"
#include "fixmahon/text.hpp"
#include "fixmahon/verify.hpp"
#include "fixmahon/zder.hpp"

using namespace fixmahon;
namespace g = fixmahon::golden;

namespace {

// Collects the first mismatch of a criterion.
class Outcome {
public:
    template <typename A, typename B>
    void eq(const A& actual, const B& expected, const std::string& what) {
        if (!failure_.empty() || actual == expected) return;
        std::ostringstream os;
        os << what << ": expected " << expected << ", got " << actual;
        failure_ = os.str();
    }
    void require(bool ok, const std::string& what) {
        if (failure_.empty() && !ok) failure_ = what;
    }
    const std::string& failure() const { return failure_; }

private:
    std::string failure_;
};

Word W(const char* s) { return parse_word(s); }
std::string Set(const IndexSet& s) { return format_index_set(s); }

Outcome shuffle_312() {
    Outcome o;
    for (const auto& row : g::kShuffle312) {
        const Word w = W(row.w);
        const Word image = phi(w);
        // Against the column as printed. Two printed images are swapped, so
        // this stays red; the computed images satisfy RISE w = RISE• Phi(w).
        o.eq(format_word(image), std::string(row.phi_printed),
             std::string("Phi(") + row.w + ") as printed");
        o.eq(Set(rise_set(w)), std::string(row.rise), std::string("RISE ") + row.w);
        o.eq(Set(rise_bullet_set(image)), std::string(row.rise),
             std::string("RISE• Phi(") + row.w + ")");
    }
    return o;
}

Outcome shuffle_121() {
    Outcome o;
    const unsigned printed[] = {2, 3, 4, 4, 5, 5, 6, 6, 7, 8};
    for (std::size_t i = 0; i < g::kShuffle121.size(); ++i) {
        const auto& row = g::kShuffle121[i];
        const Word w = W(row.w);
        const Word image = f3(w);
        o.eq(format_word(image), std::string(row.f3), std::string("F3(") + row.w + ")");
        o.eq(maj(w), printed[i], std::string("maj ") + row.w);
        o.eq(mafz(image), printed[i], std::string("mafz F3(") + row.w + ")");
    }
    return o;
}

Outcome phi_example() {
    Outcome o;
    const Word w = W(g::kPhiExampleInput);
    const auto trace = phi_trace(w);
    o.eq(trace.size(), g::kPhiTrace.size(), "number of phi_l steps");
    for (std::size_t i = 0; i < std::min(trace.size(), g::kPhiTrace.size()); ++i) {
        const auto& want = g::kPhiTrace[i];
        const std::string tag = "phi_" + std::to_string(want.l);
        o.eq(trace[i].l, want.l, tag + " order");
        o.eq(trace[i].zero_position, want.j, tag + " j");
        o.eq(static_cast<unsigned>(trace[i].kind), want.kind, tag + " case");
        o.eq(trace[i].chain_end, want.chain_end, tag + " k/i");
        o.eq(format_word(trace[i].result), std::string(want.after), tag + " word");
    }
    o.eq(format_word(phi(w)), std::string(g::kPhiExampleOutput), "Phi(w)");
    return o;
}

Outcome theta_example() {
    Outcome o;
    const Word w = W(g::kPhiExampleInput);
    const FactoredPhi fp = phi_factored(w);
    o.eq(fp.steps.size(), g::kTheta.size(), "number of Theta triples");
    for (std::size_t i = 0; i < std::min(fp.steps.size(), g::kTheta.size()); ++i) {
        const auto& want = g::kTheta[i];
        const auto& got = fp.steps[i];
        const std::string tag = std::string("Theta(") + want.factor + ")";
        o.eq(format_word(got.u), std::string(want.u), tag + " u");
        o.eq(format_word(got.u_prime), std::string(want.u_prime), tag + " u'");
        o.eq(format_word(got.theta_u_prime), std::string(want.theta), tag + " theta(u')");
        o.eq(static_cast<unsigned>(got.kind) + 1, want.kind, tag + " case");
    }
    std::string joined = format_word(fp.head);
    for (const auto& b : fp.blocks) joined += " | " + format_word(b);
    o.eq(joined, std::string("5 | 1 0 | 0 2 3 0 6 | 0 7 4"), "factored Phi(w)");
    o.eq(format_word(phi_via_theta(w)), format_word(phi(w)), "Phi_via_theta = Phi");
    return o;
}

Outcome f3_example() {
    Outcome o;
    const Word w = W(g::kF3ExampleInput);
    const auto trace = f3_trace(w);
    for (const auto& row : g::kF3Chain) {
        o.eq(format_word(trace.at(row.length - 1).image), std::string(row.image),
             "F3 of the prefix of length " + std::to_string(row.length));
    }
    o.eq(maj(w), g::kF3ExampleMaj, "maj w");
    o.eq(mafz(f3(w)), g::kF3ExampleMaj, "mafz F3(w)");
    return o;
}

Outcome s4_tables() {
    Outcome o;
    for (const auto& row : g::kPhiS4) {
        const Permutation sigma = parse_permutation(row.sigma);
        const std::string tag = std::string("Phi row ") + row.sigma;
        o.eq(format_word(zder(sigma)), std::string(row.w), tag + " w");
        o.eq(format_word(phi(zder(sigma))), std::string(row.w_prime), tag + " w'");
        o.eq(format_permutation(phi_perm(sigma)), std::string(row.sigma_prime), tag + " sigma'");
        o.eq(Set(perm_stats(phi_perm(sigma)).RISE), std::string(row.rise_prime),
             tag + " RISE sigma'");
    }
    for (const auto& row : g::kF3S4) {
        const Permutation sigma = parse_permutation(row.sigma);
        const std::string tag = std::string("F3 row ") + row.sigma;
        o.eq(format_word(zder(sigma)), std::string(row.w), tag + " w");
        o.eq(format_word(f3(zder(sigma))), std::string(row.w_second), tag + " w''");
        o.eq(perm_stats(sigma).maz, row.maz, tag + " maz");
        o.eq(perm_stats(f3_perm(sigma)).maf, row.maf, tag + " maf");
        o.eq(format_permutation(f3_perm(sigma)),
             format_permutation(zder_inv(W(row.w_second))), tag + " sigma'' from w''");
    }
    return o;
}

Outcome exhaustive() {
    Outcome o;
    VerifyOptions opts;
    opts.n_max = 7;
    for (Claim c : {Claim::RiseTransfer, Claim::MajToMafz, Claim::ZDerBijection,
                    Claim::PermutationMaps, Claim::Equidistribution, Claim::ZeroPattern,
                    Claim::RoundTrips}) {
        const auto r = verify_claim(c, opts);
        std::string detail = std::string(to_string(c));
        if (r.counterexample) {
            detail += " at " + r.counterexample->input + ": " + r.counterexample->expected +
                      " vs " + r.counterexample->actual;
        }
        o.require(r.pass && r.checked > 0, detail);
    }
    return o;
}

Outcome identity_127() {
    Outcome o;
    const auto r = verify_identity_127(8);
    o.require(r.pass && r.checked == 9, r.to_text());
    return o;
}

Outcome identity_126() {
    Outcome o;
    const auto r = verify_identity_126(6, 6);
    o.require(r.pass && r.checked > 0, r.to_text());
    return o;
}

MultiPoly random_poly(std::mt19937_64& rng, SeriesCaps caps = {}) {
    std::uniform_int_distribution<int> coef(-4, 4), expo(0, 3);
    MultiPoly p(caps);
    for (int i = 0; i < 5; ++i) {
        MultiPoly::Exponents e{};
        e[static_cast<std::size_t>(Var::u)] = static_cast<std::uint32_t>(expo(rng));
        e[static_cast<std::size_t>(Var::t)] = static_cast<std::uint32_t>(expo(rng));
        e[static_cast<std::size_t>(Var::q)] = static_cast<std::uint32_t>(expo(rng));
        e[static_cast<std::size_t>(Var::Y)] = static_cast<std::uint32_t>(expo(rng));
        p.add_term(e, coef(rng));
    }
    return p;
}

Outcome qseries_laws() {
    Outcome o;
    std::mt19937_64 rng(1337);
    const SeriesCaps caps{3, 2};
    const MultiPoly one = MultiPoly::constant(1, caps);
    for (int i = 0; i < 200; ++i) {
        const MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        o.require(a * (b + c) == a * b + a * c && (a * b) * c == a * (b * c) && a * b == b * a,
                  "ring laws");
        o.require((a * b).truncated(caps) == a.truncated(caps) * b.truncated(caps),
                  "truncation homomorphism");
        MultiPoly x = one;
        const MultiPoly a_capped = a.truncated(caps);
        for (const auto& [e, coef] : a_capped.terms()) {
            if (e[static_cast<std::size_t>(Var::u)] + e[static_cast<std::size_t>(Var::t)] > 0) {
                x.add_term(e, coef);
            }
        }
        o.require(x * x.inverse() == one, "inv(x)*x = 1 for " + x.to_string());
    }
    for (std::size_t n = 0; n <= 10; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            o.require(qbinom(n, k) == qbinom(n, n - k), "qbinom symmetry");
            o.require(qbinom(n, k).evaluate(Var::q, 1) ==
                          MultiPoly::constant(static_cast<std::int64_t>(binomial(n, k))),
                      "qbinom at q=1");
        }
    }
    for (std::size_t n = 0; n <= 8; ++n) {
        const auto fact = MultiPoly::constant(static_cast<std::int64_t>(factorial(n)));
        const auto at_one = [](MultiPoly p) {
            for (Var v : {Var::Y, Var::t, Var::s, Var::q}) p = p.evaluate(v, 1);
            return p;
        };
        o.require(at_one(brute_A_fix_des_maj(n)) == fact, "A_n(1,1,1) = n! (des)");
        o.require(at_one(brute_A_fix_exc_maj(n)) == fact, "A_n(1,1,1) = n! (exc)");
        if (n <= 7) {
            o.require(brute_A_fix_des_maj(n) == brute_A_fix_dez_maz(n), "(fix,des,maj) = (fix,dez,maz)");
        }
    }
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0 when unbounded
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "Sh(0^2 312): Phi and RISE/RISE•", 1.0, shuffle_312},
        {2, "Sh(0^2 121): F3 and maj/mafz", 0, shuffle_121},
        {3, "Phi worked example, four phi_l steps", 0, phi_example},
        {4, "Theta triples and factored Phi", 0, theta_example},
        {5, "F3 worked example, seven values, maj = mafz = 11", 0, f3_example},
        {6, "S4 golden tables for Phi and F3", 0, s4_tables},
        {7, "exhaustive property suite, n <= 7", 60.0, exhaustive},
        {8, "id-1.27 binomial sum, denominator cleared, n <= 8", 30.0, identity_127},
        {9, "id-1.26 generating function, truncated at U = 6, T = 6", 10.0, identity_126},
        {10, "qseries ring laws and inversion", 0, qseries_laws},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            failure = c.run().failure();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (failure.empty() && c.limit_seconds > 0 && elapsed >= c.limit_seconds) {
            failure = "exceeded the " + std::to_string(c.limit_seconds) + " s limit";
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3fs", elapsed);
        std::cout << (failure.empty() ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << "  ("
                  << timing << ")";
        if (!failure.empty()) {
            std::cout << "  " << failure;
            ++failed;
        }
        std::cout << '\n';
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
              << '\n';
    return failed == 0 ? 0 : 1;
}
