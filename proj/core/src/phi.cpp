#include "fixmahon/phi.hpp"

#include <algorithm>
#include <string>

#include "fixmahon/error.hpp"
#include "fixmahon/text.hpp"

namespace fixmahon {

namespace {

void require_derangement(const Word& w, const char* op) {
    if (!is_derangement_word(pos_subword(w))) {
        throw Error(ErrorKind::NotADerangement,
                    std::string(op) + ": Pos(" + format_word(w) + ") is not a derangement");
    }
}

bool is_sub(const std::vector<LetterClass>& classes, std::ptrdiff_t index) {
    // Out-of-range indices are the +inf sentinels, which are non-subexcedent.
    if (index < 0 || index >= static_cast<std::ptrdiff_t>(classes.size())) return false;
    return classes[static_cast<std::size_t>(index)] == LetterClass::Subexcedent;
}

// 0-based index of the l-th zero, or npos.
std::size_t nth_zero(const Word& w, std::size_t l) {
    std::size_t seen = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0 && ++seen == l) return i;
    }
    return static_cast<std::size_t>(-1);
}

// Greatest index k >= start such that w[start] < ... < w[k] and w[k] is
// subexcedent. w[start] must itself be subexcedent.
std::size_t rising_chain_end(const Word& w, const std::vector<LetterClass>& classes,
                             std::size_t start, std::size_t limit) {
    std::size_t k = start;
    for (std::size_t p = start; p + 1 < limit && w[p + 1] > w[p];) {
        ++p;
        if (classes[p] == LetterClass::Subexcedent) k = p;
    }
    return k;
}

// Smallest index i <= start such that w[i] > ... > w[start] (positive letters)
// and w[i] is subexcedent. w[start] must itself be subexcedent.
std::size_t falling_chain_start(const Word& w, const std::vector<LetterClass>& classes,
                                std::size_t start) {
    std::size_t i = start;
    for (std::size_t p = start; p > 0 && w[p - 1] > w[p];) {
        --p;
        if (classes[p] == LetterClass::Subexcedent) i = p;
    }
    return i;
}

// Move the zero at index from so that it ends up directly after index to
// (to > from), or directly before index to (to < from).
Word move_zero_right(const Word& w, std::size_t from, std::size_t to) {
    std::vector<Letter> out(w.begin(), w.end());
    std::rotate(out.begin() + static_cast<std::ptrdiff_t>(from),
                out.begin() + static_cast<std::ptrdiff_t>(from + 1),
                out.begin() + static_cast<std::ptrdiff_t>(to + 1));
    return Word(std::move(out));
}

Word move_zero_left(const Word& w, std::size_t from, std::size_t to) {
    std::vector<Letter> out(w.begin(), w.end());
    std::rotate(out.begin() + static_cast<std::ptrdiff_t>(to),
                out.begin() + static_cast<std::ptrdiff_t>(from),
                out.begin() + static_cast<std::ptrdiff_t>(from + 1));
    return Word(std::move(out));
}

void check_l(const Word& w, std::size_t l, const char* op) {
    if (l == 0 || l > w.size()) {
        throw Error(ErrorKind::PositionOutOfRange, std::string(op) + ": l = " + std::to_string(l) +
                                                       " outside 1.." + std::to_string(w.size()));
    }
}

}  // namespace

PhiStep phi_step(const Word& w, std::size_t l) {
    check_l(w, l, "phi_l");
    require_derangement(w, "phi_l");
    PhiStep step;
    step.l = l;
    step.result = w;
    const std::size_t j = nth_zero(w, l);
    if (j == static_cast<std::size_t>(-1)) return step;

    const auto classes = classify_all(w);
    const auto jj = static_cast<std::ptrdiff_t>(j);
    const bool left_sub = is_sub(classes, jj - 1);
    const bool right_sub = is_sub(classes, jj + 1);
    step.zero_position = j + 1;

    if (!left_sub && !right_sub) {
        step.kind = PhiCase::Case1;
    } else if ((!left_sub && right_sub) || (left_sub && right_sub && w[j - 1] > w[j + 1])) {
        step.kind = PhiCase::Case2;
        const std::size_t k = rising_chain_end(w, classes, j + 1, w.size());
        step.chain_end = k + 1;
        step.result = move_zero_right(w, j, k);
    } else {
        step.kind = PhiCase::Case3;
        const std::size_t i = falling_chain_start(w, classes, j - 1);
        step.chain_end = i + 1;
        step.result = move_zero_left(w, j, i);
    }
    return step;
}

PsiStep psi_step(const Word& w, std::size_t l) {
    check_l(w, l, "psi_l");
    require_derangement(w, "psi_l");
    PsiStep step;
    step.l = l;
    step.result = w;
    const std::size_t j = nth_zero(w, l);
    if (j == static_cast<std::size_t>(-1)) return step;

    const auto classes = classify_all(w);
    const auto jj = static_cast<std::ptrdiff_t>(j);
    const bool left_sub = is_sub(classes, jj - 1);
    const bool right_sub = is_sub(classes, jj + 1);
    step.zero_position = j + 1;

    if (!left_sub && !right_sub) {
        step.kind = PsiCase::Case1;
    } else if ((left_sub && !right_sub) || (left_sub && right_sub && w[j - 1] > w[j + 1])) {
        // smallest i with x_i < ... < x_{j-1}
        step.kind = PsiCase::Case2;
        std::size_t i = j - 1;
        while (i > 0 && w[i - 1] > 0 && w[i - 1] < w[i]) --i;
        step.chain_end = i + 1;
        step.result = move_zero_left(w, j, i);
    } else {
        // greatest k with x_{j+1} > ... > x_k
        step.kind = PsiCase::Case3;
        std::size_t k = j + 1;
        while (k + 1 < w.size() && w[k + 1] > 0 && w[k + 1] < w[k]) ++k;
        step.chain_end = k + 1;
        step.result = move_zero_right(w, j, k);
    }
    return step;
}

Word phi_l(const Word& w, std::size_t l) { return phi_step(w, l).result; }
Word psi_l(const Word& w, std::size_t l) { return psi_step(w, l).result; }

std::vector<PhiStep> phi_trace(const Word& w) {
    require_derangement(w, "phi");
    std::vector<PhiStep> steps;
    Word current = w;
    for (std::size_t l = zero_count(w); l >= 1; --l) {
        steps.push_back(phi_step(current, l));
        current = steps.back().result;
    }
    return steps;
}

Word phi(const Word& w) {
    require_derangement(w, "phi");
    Word current = w;
    for (std::size_t l = zero_count(w); l >= 1; --l) current = phi_l(current, l);
    return current;
}

Word psi(const Word& w) {
    require_derangement(w, "psi");
    Word current = w;
    const std::size_t zeros = zero_count(w);
    for (std::size_t l = 1; l <= zeros; ++l) current = psi_l(current, l);
    return current;
}

CanonicalFactorization canonical_factorize(const Word& w) { return canonical_factorize(w, w); }

CanonicalFactorization canonical_factorize(const Word& w_prime, const Word& context) {
    if (w_prime.size() > context.size() ||
        !std::equal(w_prime.begin(), w_prime.end(), context.begin())) {
        throw Error(ErrorKind::NotLeftFactor, format_word(w_prime) +
                                                  " is not a left factor of " +
                                                  format_word(context));
    }
    require_derangement(context, "canonical_factorize");
    const std::size_t n = w_prime.size();
    auto classes = classify_all(context);
    classes.resize(n);

    std::size_t last_zero = n;
    for (std::size_t p = n; p-- > 0;) {
        if (w_prime[p] == 0) {
            last_zero = p;
            break;
        }
    }
    if (last_zero == n) {
        throw Error(ErrorKind::NoZero, format_word(w_prime) + " has no zero letter");
    }
    std::size_t run_start = last_zero;
    while (run_start > 0 && w_prime[run_start - 1] == 0) --run_start;
    const std::size_t h = last_zero - run_start + 1;
    const std::size_t right = last_zero + 1;  // x_{j+h}, may be the +inf sentinel

    const bool left_sub = is_sub(classes, static_cast<std::ptrdiff_t>(run_start) - 1);
    const bool right_sub = is_sub(classes, static_cast<std::ptrdiff_t>(right));

    CanonicalFactorization f;
    const Word zeros_h(std::vector<Letter>(h, 0));
    const Word zeros_h1(std::vector<Letter>(h - 1, 0));
    const Word zero{0};

    if (!left_sub && !right_sub) {
        f.kind = FactorCase::Case1;
        f.u = w_prime.slice(0, run_start);
        f.u_prime = w_prime.slice(run_start, n);
        f.theta_u_prime = f.u_prime;
    } else if ((!left_sub && right_sub) ||
               (left_sub && right_sub && w_prime[run_start - 1] > w_prime[right])) {
        f.kind = FactorCase::Case2;
        const std::size_t k = rising_chain_end(w_prime, classes, right, n);
        f.u = w_prime.slice(0, run_start);
        f.u_prime = w_prime.slice(run_start, n);
        f.theta_u_prime = w_prime.slice(right, k + 1);
        f.theta_u_prime.append(zeros_h);
        f.theta_u_prime.append(w_prime.slice(k + 1, n));
    } else {
        const std::size_t i = falling_chain_start(w_prime, classes, run_start - 1);
        f.u = w_prime.slice(0, i);
        f.u_prime = w_prime.slice(i, n);
        f.theta_u_prime = zero;
        f.theta_u_prime.append(w_prime.slice(i, run_start));
        if (right_sub) {
            f.kind = FactorCase::Case3;
            const std::size_t k = rising_chain_end(w_prime, classes, right, n);
            f.theta_u_prime.append(w_prime.slice(right, k + 1));
            f.theta_u_prime.append(zeros_h1);
            f.theta_u_prime.append(w_prime.slice(k + 1, n));
        } else {
            f.kind = FactorCase::Case4;
            f.theta_u_prime.append(zeros_h1);
            f.theta_u_prime.append(w_prime.slice(right, n));
        }
    }
    return f;
}

Word FactoredPhi::join() const {
    Word out = head;
    for (const auto& b : blocks) out.append(b);
    return out;
}

FactoredPhi phi_factored(const Word& w) {
    require_derangement(w, "phi_via_theta");
    FactoredPhi result;
    Word current = w;
    while (zero_count(current) > 0) {
        result.steps.push_back(canonical_factorize(current, w));
        current = result.steps.back().u;
    }
    result.head = current;
    for (auto it = result.steps.rbegin(); it != result.steps.rend(); ++it) {
        result.blocks.push_back(it->theta_u_prime);
    }
    return result;
}

Word phi_via_theta(const Word& w) { return phi_factored(w).join(); }

std::vector<LetterClass> rearranged_classes(const Word& rearranged, const Word& original,
                                            const std::vector<LetterClass>& original_classes) {
    std::vector<LetterClass> positive_classes;
    for (std::size_t i = 0; i < original.size(); ++i) {
        if (original[i] != 0) positive_classes.push_back(original_classes[i]);
    }
    std::vector<LetterClass> out(rearranged.size(), LetterClass::Zero);
    std::size_t next = 0;
    for (std::size_t i = 0; i < rearranged.size(); ++i) {
        if (rearranged[i] != 0) out[i] = positive_classes.at(next++);
    }
    return out;
}

}  // namespace fixmahon
