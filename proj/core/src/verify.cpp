#include "fixmahon/verify.hpp"

#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "fixmahon/error.hpp"
#include "fixmahon/f3.hpp"
#include "fixmahon/phi.hpp"
#include "fixmahon/text.hpp"
#include "fixmahon/zder.hpp"

namespace fixmahon {

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "claim: " << claim << '\n'
       << "range: " << range << '\n'
       << "checked: " << checked << '\n'
       << "result: " << (pass ? "PASS" : "FAIL") << '\n';
    if (counterexample) {
        os << "counterexample.input: " << counterexample->input << '\n'
           << "counterexample.expected: " << counterexample->expected << '\n'
           << "counterexample.actual: " << counterexample->actual << '\n';
    }
    return os.str();
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["claim"] = claim;
    j["range"] = range;
    j["checked"] = checked;
    j["pass"] = pass;
    if (counterexample) {
        j["counterexample"] = {{"input", counterexample->input},
                               {"expected", counterexample->expected},
                               {"actual", counterexample->actual}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j.dump();
}

std::string_view to_string(Claim c) noexcept {
    switch (c) {
        case Claim::RiseTransfer: return "thm-1.1";
        case Claim::MajToMafz: return "thm-1.2";
        case Claim::ZDerBijection: return "prop-1.3";
        case Claim::PermutationMaps: return "thm-1.4";
        case Claim::Equidistribution: return "cor-1.5";
        case Claim::ZeroPattern: return "prop-4.1";
        case Claim::RoundTrips: return "roundtrips";
    }
    return "?";
}

Claim parse_claim(std::string_view id) {
    for (Claim c : {Claim::RiseTransfer, Claim::MajToMafz, Claim::ZDerBijection,
                    Claim::PermutationMaps, Claim::Equidistribution, Claim::ZeroPattern,
                    Claim::RoundTrips}) {
        if (to_string(c) == id) return c;
    }
    throw Error(ErrorKind::UnknownClaim, "unknown claim '" + std::string(id) + "'");
}

UnitResult run_units(std::size_t count, unsigned jobs,
                     const std::function<UnitResult(std::size_t)>& unit) {
    std::vector<UnitResult> results(count);
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = unit(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i; (i = next.fetch_add(1)) < count;) results[i] = unit(i);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }
    UnitResult merged;
    for (auto& r : results) {
        merged.checked += r.checked;
        if (!merged.counterexample && r.counterexample) merged.counterexample = r.counterexample;
    }
    return merged;
}

namespace {

// Records the first failure of a unit.
struct Check {
    UnitResult result;

    bool ok() const { return !result.counterexample; }

    void fail(std::string input, std::string expected, std::string actual) {
        if (!result.counterexample) {
            result.counterexample = Counterexample{std::move(input), std::move(expected),
                                                   std::move(actual)};
        }
    }

    template <typename T, typename Fmt>
    void expect_eq(const std::string& input, const std::string& label, const T& expected, const T& actual,
                   Fmt fmt) {
        if (!(expected == actual)) {
            fail(input, label + " = " + fmt(expected),
                 label + " = " + fmt(actual));
        }
    }
};

std::string fmt_u64(std::uint64_t x) { return std::to_string(x); }

std::string range_text(const VerifyOptions& o) {
    return "n=" + std::to_string(o.n_min) + ".." + std::to_string(o.n_max);
}

// Positive words over {1..max_letter} of length m.
std::vector<Word> positive_words(std::size_t m, Letter max_letter) {
    std::vector<Word> out;
    if (max_letter == 0) {
        if (m == 0) out.emplace_back();
        return out;
    }
    std::vector<Letter> letters(m, 1);
    while (true) {
        out.emplace_back(letters);
        std::size_t i = m;
        while (i > 0 && letters[i - 1] == max_letter) letters[--i] = 1;
        if (i == 0) return out;
        ++letters[i - 1];
    }
}

// Shuffle classes Sh(0^{n-m} v) with v over {1..max_letter}, n in range.
std::vector<ShuffleClassId> bounded_classes(const VerifyOptions& o) {
    std::vector<ShuffleClassId> out;
    for (std::size_t n = o.n_min; n <= o.n_max; ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            for (auto& v : positive_words(m, o.max_letter)) out.push_back({n, std::move(v)});
        }
    }
    return out;
}

std::vector<ShuffleClassId> all_derangement_classes(const VerifyOptions& o) {
    std::vector<ShuffleClassId> out;
    for (std::size_t n = o.n_min; n <= o.n_max; ++n) {
        auto classes = derangement_classes(n, o.cap);
        out.insert(out.end(), classes.begin(), classes.end());
    }
    return out;
}

std::string class_text(const ShuffleClassId& id) {
    return "Sh(0^" + std::to_string(id.n - id.v.size()) + " " + format_word(id.v) + ")";
}

// --- thm-1.1 ---------------------------------------------------------------

UnitResult check_rise_transfer(const ShuffleClassId& id, std::size_t cap) {
    Check c;
    std::set<Word> images;
    std::size_t members = 0;
    for_each_in_shuffle_class(
        id,
        [&](const Word& w) {
            ++members;
            ++c.result.checked;
            if (!c.ok()) return;
            const Word image = phi(w);
            const std::string in = format_word(w);
            c.expect_eq(in, "Pos Phi(w)", id.v, pos_subword(image), format_word);
            c.expect_eq(in, "RISE• Phi(w)", rise_set(w), rise_bullet_set(image), format_index_set);
            images.insert(image);
        },
        cap);
    if (c.ok() && images.size() != members) {
        c.fail(class_text(id), "Phi injective: " + std::to_string(members) + " images",
               std::to_string(images.size()) + " distinct images");
    }
    return c.result;
}

// --- thm-1.2 ---------------------------------------------------------------

void check_f3_steps(Check& c, const Word& w) {
    for (const auto& step : f3_trace(w)) {
        if (step.kind == F3Case::Case2) {
            const auto& x = step.moved_input;
            const std::uint64_t expected = mafz(x) - positive_count(x);
            c.expect_eq("gamma(" + format_word(x) + ") within F3(" + format_word(w) + ")",
                        "mafz", expected, mafz(step.moved_output), fmt_u64);
        } else if (step.kind == F3Case::Case3) {
            const auto& x = step.moved_input;
            const std::uint64_t expected = mafz(x) + zero_count(x);
            c.expect_eq("delta(" + format_word(x) + ") within F3(" + format_word(w) + ")",
                        "mafz", expected, mafz(step.moved_output), fmt_u64);
        }
    }
}

UnitResult check_maj_to_mafz(const ShuffleClassId& id, std::size_t cap) {
    Check c;
    std::set<Word> images;
    std::size_t members = 0;
    for_each_in_shuffle_class(
        id,
        [&](const Word& w) {
            ++members;
            ++c.result.checked;
            if (!c.ok()) return;
            const Word image = f3(w);
            const std::string in = format_word(w);
            c.expect_eq(in, "mafz F3(w)", maj(w), mafz(image), fmt_u64);
            if (!w.empty()) c.expect_eq(in, "L F3(w)", w.back(), image.back(), fmt_u64);
            c.expect_eq(in, "Pos F3(w)", id.v, pos_subword(image), format_word);
            check_f3_steps(c, w);
            images.insert(image);
        },
        cap);
    if (c.ok() && images.size() != members) {
        c.fail(class_text(id), "F3 injective: " + std::to_string(members) + " images",
               std::to_string(images.size()) + " distinct images");
    }
    return c.result;
}

// --- prop-1.3 --------------------------------------------------------------

UnitResult check_zder(std::size_t n, std::size_t cap) {
    Check c;
    std::set<Word> images;
    for_each_permutation(
        n,
        [&](const Permutation& sigma) {
            ++c.result.checked;
            if (!c.ok()) return;
            const std::string in = format_permutation(sigma);
            const Word w = zder(sigma);
            if (!is_derangement_word(pos_subword(w))) {
                c.fail(in, "Pos ZDer a derangement", format_word(w));
                return;
            }
            c.expect_eq(in, "ZDer^-1 ZDer", sigma, zder_inv(w), format_permutation);
            c.expect_eq(in, "RISE ZDer", perm_stats(sigma).RIZE, rise_set(w), format_index_set);
            c.expect_eq(in, "RISE• ZDer", rise_set(sigma.as_word()), rise_bullet_set(w),
                        format_index_set);
            images.insert(w);
        },
        cap);
    std::uint64_t der_size = 0;
    for (std::size_t m = 0; m <= n; ++m) der_size += binomial(n, m) * derangement_count(m);
    if (c.ok() && (images.size() != factorial(n) || der_size != factorial(n))) {
        c.fail("n=" + std::to_string(n),
               "|ZDer(S_n)| = |S_n^Der| = " + std::to_string(factorial(n)),
               std::to_string(images.size()) + " images, |S_n^Der| = " + std::to_string(der_size));
    }
    // Surjectivity onto S_n^Der.
    for (const auto& id : derangement_classes(n, cap)) {
        for_each_in_shuffle_class(
            id,
            [&](const Word& w) {
                if (!c.ok()) return;
                if (!images.count(w)) c.fail(format_word(w), "in ZDer(S_n)", "missing");
                c.expect_eq(format_word(w), "ZDer ZDer^-1", w, zder(zder_inv(w)), format_word);
            },
            cap);
    }
    return c.result;
}

// --- thm-1.4 and the stat transfers it implies ----------------------------

std::string fmt_triple(const std::tuple<std::uint64_t, std::string, std::string>& t) {
    return "(" + std::to_string(std::get<0>(t)) + ", " + std::get<1>(t) + ", " + std::get<2>(t) +
           ")";
}

std::string fmt_tuple(const std::vector<std::uint64_t>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + std::to_string(t[i]);
    return s + ")";
}

UnitResult check_permutation_maps(std::size_t n, std::size_t cap) {
    Check c;
    std::set<Permutation> phi_images, f3_images;
    std::map<Word, std::uint64_t> exc_by_der;
    for_each_permutation(
        n,
        [&](const Permutation& sigma) {
            ++c.result.checked;
            if (!c.ok()) return;
            const std::string in = format_permutation(sigma);
            const StatVector s = perm_stats(sigma);
            const Word d = der(sigma);

            const Permutation p = phi_perm(sigma);
            const StatVector sp = perm_stats(p);
            c.expect_eq(in, "(fix, RISE, Der) Phi",
                        std::make_tuple(s.fix, format_index_set(s.RIZE), format_word(d)),
                        std::make_tuple(sp.fix, format_index_set(sp.RISE), format_word(der(p))),
                        fmt_triple);
            c.expect_eq(in, "(fix, DES, exc) Phi",
                        std::make_tuple(s.fix, format_index_set(s.DEZ), std::to_string(s.exc)),
                        std::make_tuple(sp.fix, format_index_set(sp.DES), std::to_string(sp.exc)),
                        fmt_triple);
            c.expect_eq(in, "(fix, des, maj, exc) Phi",
                        std::vector<std::uint64_t>{s.fix, s.dez, s.maz, s.exc},
                        std::vector<std::uint64_t>{sp.fix, sp.des, sp.maj, sp.exc}, fmt_tuple);

            const Permutation f = f3_perm(sigma);
            const StatVector sf = perm_stats(f);
            c.expect_eq(in, "(fix, maf, Der) F3",
                        std::make_tuple(s.fix, std::to_string(s.maz), format_word(d)),
                        std::make_tuple(sf.fix, std::to_string(sf.maf), format_word(der(f))),
                        fmt_triple);
            c.expect_eq(in, "(fix, maf, exc) F3", std::vector<std::uint64_t>{s.fix, s.maz, s.exc},
                        std::vector<std::uint64_t>{sf.fix, sf.maf, sf.exc}, fmt_tuple);

            const Permutation g = f3_phi_inv_perm(sigma);
            const StatVector sg = perm_stats(g);
            c.expect_eq(in, "(fix, maf, Der) F3 Phi^-1",
                        std::make_tuple(s.fix, std::to_string(s.maj), format_word(d)),
                        std::make_tuple(sg.fix, std::to_string(sg.maf), format_word(der(g))),
                        fmt_triple);

            phi_images.insert(p);
            f3_images.insert(f);
            auto [it, inserted] = exc_by_der.emplace(d, s.exc);
            if (!inserted) {
                c.expect_eq(in, "exc for Der " + format_word(d), it->second, s.exc, fmt_u64);
            }
        },
        cap);
    const auto total = factorial(n);
    if (c.ok() && phi_images.size() != total) {
        c.fail("n=" + std::to_string(n), "Phi bijective on S_n",
               std::to_string(phi_images.size()) + " distinct images");
    }
    if (c.ok() && f3_images.size() != total) {
        c.fail("n=" + std::to_string(n), "F3 bijective on S_n",
               std::to_string(f3_images.size()) + " distinct images");
    }
    return c.result;
}

// --- cor-1.5 ---------------------------------------------------------------

UnitResult check_equidistribution(std::size_t n, std::size_t cap) {
    Check c;
    c.result.checked = factorial(n);
    const auto table = [&](std::vector<Stat> stats) { return joint_distribution(n, stats, cap); };
    const std::string in = "n=" + std::to_string(n);
    const auto a = table({Stat::fix, Stat::dez, Stat::maz});
    const auto b = table({Stat::fix, Stat::des, Stat::maj});
    if (a.counts != b.counts) c.fail(in, "(fix,des,maj): " + b.to_json(), "(fix,dez,maz): " + a.to_json());
    const auto e1 = table({Stat::fix, Stat::exc, Stat::maz});
    const auto e2 = table({Stat::fix, Stat::exc, Stat::maj});
    const auto e3 = table({Stat::fix, Stat::exc, Stat::maf});
    if (e1.counts != e2.counts) {
        c.fail(in, "(fix,exc,maj): " + e2.to_json(), "(fix,exc,maz): " + e1.to_json());
    }
    if (e3.counts != e2.counts) {
        c.fail(in, "(fix,exc,maj): " + e2.to_json(), "(fix,exc,maf): " + e3.to_json());
    }
    return c.result;
}

// --- prop-4.1 --------------------------------------------------------------

UnitResult check_zero_pattern(std::size_t n, const VerifyOptions& o) {
    Check c;
    // (Zero w, DES Pos w) -> (witness, Zero F3(w))
    std::map<std::pair<IndexSet, IndexSet>, std::pair<Word, IndexSet>> seen;
    for_each_word(
        n, o.max_letter,
        [&](const Word& w) {
            ++c.result.checked;
            if (!c.ok()) return;
            auto key = std::make_pair(zero_set(w), des_set(pos_subword(w)));
            const IndexSet zeros = zero_set(f3(w));
            auto [it, inserted] = seen.emplace(std::move(key), std::make_pair(w, zeros));
            if (!inserted && it->second.second != zeros) {
                c.fail(format_word(it->second.first) + " ~ " + format_word(w),
                       "Zero F3 = " + format_index_set(it->second.second),
                       "Zero F3 = " + format_index_set(zeros));
            }
        },
        o.cap);
    return c.result;
}

// --- round trips -----------------------------------------------------------

void check_lemma_31(Check& c, const Word& w) {
    const auto classes = classify_all(w);
    for (const auto& f : phi_factored(w).steps) {
        const std::size_t q = f.u.size();
        const std::vector<LetterClass> u_classes(classes.begin() + static_cast<std::ptrdiff_t>(q),
                                                 classes.begin() +
                                                     static_cast<std::ptrdiff_t>(q + f.u_prime.size()));
        const auto theta_classes = rearranged_classes(f.theta_u_prime, f.u_prime, u_classes);
        const std::string in = format_word(w) + " step u' = " + format_word(f.u_prime);
        c.expect_eq(in, "RISE• theta(u')", rise_set(f.u_prime),
                    rise_bullet_set(f.theta_u_prime, theta_classes), format_index_set);
        if (q == 0) continue;
        const Letter xq = f.u.back();
        const LetterClass xq_class = classes[q - 1];
        Word left = Word{xq};
        left.append(f.u_prime);
        Word right = Word{xq};
        right.append(f.theta_u_prime);
        std::vector<LetterClass> right_classes{xq_class};
        right_classes.insert(right_classes.end(), theta_classes.begin(), theta_classes.end());
        c.expect_eq(in, "RISE• x_q theta(u')", rise_set(left),
                    rise_bullet_set(right, right_classes), format_index_set);
        if (xq_class == LetterClass::Subexcedent) {
            Word zeroed = Word{0};
            zeroed.append(f.theta_u_prime);
            right_classes[0] = LetterClass::Zero;
            c.expect_eq(in, "RISE• 0 theta(u')", rise_set(left),
                        rise_bullet_set(zeroed, right_classes), format_index_set);
        }
    }
}

UnitResult check_phi_round_trips(const ShuffleClassId& id, std::size_t cap) {
    Check c;
    for_each_in_shuffle_class(
        id,
        [&](const Word& w) {
            ++c.result.checked;
            if (!c.ok()) return;
            const std::string in = format_word(w);
            const Word image = phi(w);
            c.expect_eq(in, "Psi Phi(w)", w, psi(image), format_word);
            c.expect_eq(in, "Phi Psi(w)", w, phi(psi(w)), format_word);
            c.expect_eq(in, "factored Phi(w)", image, phi_via_theta(w), format_word);
            check_lemma_31(c, w);
            if (zero_count(w) == 0) c.expect_eq(in, "Phi on derangement", w, image, format_word);
        },
        cap);
    return c.result;
}

UnitResult check_f3_round_trips(std::size_t n, const VerifyOptions& o) {
    Check c;
    for_each_word(
        n, o.max_letter,
        [&](const Word& w) {
            ++c.result.checked;
            if (!c.ok()) return;
            const std::string in = format_word(w);
            c.expect_eq(in, "F3^-1 F3(w)", w, f3_inv(f3(w)), format_word);
            c.expect_eq(in, "F3 F3^-1(w)", w, f3(f3_inv(w)), format_word);
        },
        o.cap);
    for (const auto& v : enum_derangements(n, o.cap)) {
        ++c.result.checked;
        c.expect_eq(format_word(v), "F3 on derangement", v, f3(v), format_word);
        const Permutation sigma(std::vector<std::uint32_t>(v.begin(), v.end()));
        c.expect_eq(format_word(v), "Phi(sigma)", sigma, phi_perm(sigma), format_permutation);
        c.expect_eq(format_word(v), "F3(sigma)", sigma, f3_perm(sigma), format_permutation);
    }
    return c.result;
}

template <typename Items, typename Fn>
UnitResult run_over(const Items& items, unsigned jobs, Fn fn) {
    return run_units(items.size(), jobs, [&](std::size_t i) { return fn(items[i]); });
}

std::vector<std::size_t> n_values(const VerifyOptions& o) {
    std::vector<std::size_t> out;
    for (std::size_t n = o.n_min; n <= o.n_max; ++n) out.push_back(n);
    return out;
}

}  // namespace

VerificationReport verify_claim(Claim claim, const VerifyOptions& o) {
    check_cap(o.n_max, o.cap, std::string(to_string(claim)));
    VerificationReport report;
    report.claim = std::string(to_string(claim));
    report.range = range_text(o);
    UnitResult r;
    const auto ns = n_values(o);
    switch (claim) {
        case Claim::RiseTransfer:
            report.range += ", v derangement";
            r = run_over(all_derangement_classes(o), o.jobs,
                         [&](const ShuffleClassId& id) { return check_rise_transfer(id, o.cap); });
            break;
        case Claim::MajToMafz:
            report.range += ", v over {1.." + std::to_string(o.max_letter) + "}";
            r = run_over(bounded_classes(o), o.jobs,
                         [&](const ShuffleClassId& id) { return check_maj_to_mafz(id, o.cap); });
            break;
        case Claim::ZDerBijection:
            r = run_over(ns, o.jobs, [&](std::size_t n) { return check_zder(n, o.cap); });
            break;
        case Claim::PermutationMaps:
            r = run_over(ns, o.jobs,
                         [&](std::size_t n) { return check_permutation_maps(n, o.cap); });
            break;
        case Claim::Equidistribution:
            r = run_over(ns, o.jobs,
                         [&](std::size_t n) { return check_equidistribution(n, o.cap); });
            break;
        case Claim::ZeroPattern:
            report.range += ", letters <= " + std::to_string(o.max_letter);
            r = run_over(ns, o.jobs, [&](std::size_t n) { return check_zero_pattern(n, o); });
            break;
        case Claim::RoundTrips: {
            report.range += ", letters <= " + std::to_string(o.max_letter);
            const auto classes = all_derangement_classes(o);
            const std::size_t phi_units = classes.size();
            r = run_units(phi_units + ns.size(), o.jobs, [&](std::size_t i) {
                return i < phi_units ? check_phi_round_trips(classes[i], o.cap)
                                     : check_f3_round_trips(ns[i - phi_units], o);
            });
            break;
        }
    }
    report.checked = r.checked;
    report.pass = !r.counterexample;
    report.counterexample = r.counterexample;
    return report;
}

VerificationReport verify_claim(std::string_view claim_id, const VerifyOptions& options) {
    return verify_claim(parse_claim(claim_id), options);
}

}  // namespace fixmahon
