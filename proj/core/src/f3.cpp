#include "fixmahon/f3.hpp"

#include <algorithm>

#include "fixmahon/error.hpp"
#include "fixmahon/text.hpp"

namespace fixmahon {

namespace {

bool all_zero(const Word& w) {
    return std::all_of(w.begin(), w.end(), [](Letter x) { return x == 0; });
}

// Index of the last positive letter among w[0..limit), or limit if none.
std::size_t last_positive(const Word& w, std::size_t limit) {
    for (std::size_t i = limit; i-- > 0;) {
        if (w[i] != 0) return i;
    }
    return limit;
}

}  // namespace

Word TailDecomposition::reassemble() const {
    Word out = prefix;
    if (a) out.push_back(*a);
    for (std::size_t i = 0; i < r; ++i) out.push_back(0);
    out.push_back(b);
    return out;
}

TailDecomposition decompose_tail(const Word& w) {
    if (w.empty()) throw Error(ErrorKind::PositionOutOfRange, "decompose_tail: empty word");
    TailDecomposition d;
    const std::size_t n = w.size();
    d.b = w.back();
    d.c = w.front();
    const std::size_t ia = last_positive(w, n - 1);
    if (ia == n - 1) {
        d.r = n - 1;
        return d;
    }
    d.prefix = w.slice(0, ia);
    d.a = w[ia];
    d.r = n - 2 - ia;
    return d;
}

Word gamma(const Word& w) {
    if (w.empty() || w.back() != 0) {
        throw Error(ErrorKind::LastLetterNotZero, "gamma(" + format_word(w) + ")");
    }
    Word out{0};
    out.append(w.slice(0, w.size() - 1));
    return out;
}

Word gamma_inv(const Word& w) {
    if (w.empty() || w.front() != 0) {
        throw Error(ErrorKind::FirstLetterNotZero, "gamma_inv(" + format_word(w) + ")");
    }
    Word out = w.slice(1, w.size());
    out.push_back(0);
    return out;
}

Word delta(const Word& w) {
    if (all_zero(w)) return w;
    if (w.back() == 0) throw Error(ErrorKind::TrailingZero, "delta(" + format_word(w) + ")");
    Word out;
    std::size_t i = 0;
    while (i < w.size()) {
        if (w[i] != 0) {
            out.push_back(w[i++]);
            continue;
        }
        const std::size_t run = i;
        while (w[i] == 0) ++i;  // terminates: w ends in a positive letter
        out.push_back(w[i]);
        for (std::size_t z = run; z < i; ++z) out.push_back(0);
        ++i;
    }
    return out;
}

Word delta_inv(const Word& w) {
    if (all_zero(w)) return w;
    if (w.front() == 0) throw Error(ErrorKind::LeadingZero, "delta_inv(" + format_word(w) + ")");
    Word out;
    std::size_t i = 0;
    while (i < w.size()) {
        if (w[i] != 0 && i + 1 < w.size() && w[i + 1] == 0) {
            const Letter moved = w[i++];
            while (i < w.size() && w[i] == 0) {
                out.push_back(0);
                ++i;
            }
            out.push_back(moved);
        } else {
            out.push_back(w[i++]);
        }
    }
    return out;
}

std::vector<F3Step> f3_trace(const Word& w) {
    std::vector<F3Step> steps;
    if (w.empty()) return steps;
    steps.reserve(w.size());
    Word image = w.slice(0, 1);
    steps.push_back({1, F3Case::Base, {}, {}, image});
    for (std::size_t len = 2; len <= w.size(); ++len) {
        F3Step step;
        step.length = len;
        const Letter b = w[len - 1];
        const std::size_t ia = last_positive(w, len - 1);
        if (ia == len - 1) {
            step.kind = F3Case::Base;
            image = w.slice(0, len);
        } else if (w[ia] <= b) {
            step.kind = F3Case::Case1;
            image.push_back(b);
        } else {
            const bool has_zero_run = ia + 2 < len;  // r >= 1
            step.kind = has_zero_run ? F3Case::Case2 : F3Case::Case3;
            step.moved_input = image;
            image = has_zero_run ? gamma(image) : delta(image);
            step.moved_output = image;
            image.push_back(b);
        }
        step.image = image;
        steps.push_back(std::move(step));
    }
    return steps;
}

Word f3(const Word& w) {
    if (w.size() <= 1) return w;
    Word image = w.slice(0, 1);
    for (std::size_t len = 2; len <= w.size(); ++len) {
        const Letter b = w[len - 1];
        const std::size_t ia = last_positive(w, len - 1);
        if (ia == len - 1) {
            image = w.slice(0, len);
            continue;
        }
        if (w[ia] > b) image = ia + 2 < len ? gamma(image) : delta(image);
        image.push_back(b);
    }
    return image;
}

Word f3_inv(const Word& w) {
    // Peel b off the right end and undo the step that appended it. The
    // prefix w' a 0^r of the image has the same positive subword as the
    // original prefix, so a and b are read directly; the first letter of the
    // image tells gamma (0) from delta (positive).
    Word current = w;
    std::vector<Letter> tail;
    while (current.size() >= 2) {
        const std::size_t n = current.size();
        const Letter b = current.back();
        const std::size_t ia = last_positive(current, n - 1);
        if (ia == n - 1) break;  // degenerate prefix: F3 is the identity there
        Word prefix = current.slice(0, n - 1);
        if (current[ia] > b) prefix = current.front() == 0 ? gamma_inv(prefix) : delta_inv(prefix);
        tail.push_back(b);
        current = std::move(prefix);
    }
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) current.push_back(*it);
    return current;
}

}  // namespace fixmahon
