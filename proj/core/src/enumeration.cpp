#include "fixmahon/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "fixmahon/error.hpp"

namespace fixmahon {

void check_cap(std::size_t n, std::size_t max_n, std::string_view what) {
    if (n > max_n) {
        throw Error(ErrorKind::CapExceeded, std::string(what) + ": n = " + std::to_string(n) +
                                                " exceeds the enumeration cap " +
                                                std::to_string(max_n));
    }
}

void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& fn,
                          std::size_t max_n) {
    check_cap(n, max_n, "enum_permutations");
    std::vector<std::uint32_t> values(n);
    std::iota(values.begin(), values.end(), 1u);
    do {
        fn(Permutation(values));
    } while (std::next_permutation(values.begin(), values.end()));
}

std::vector<Permutation> enum_permutations(std::size_t n, std::size_t max_n) {
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(factorial(std::min(n, max_n))));
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); }, max_n);
    return out;
}

std::vector<Word> enum_derangements(std::size_t m, std::size_t max_n) {
    check_cap(m, max_n, "enum_derangements");
    std::vector<Letter> values(m);
    std::iota(values.begin(), values.end(), 1u);
    std::vector<Word> out;
    do {
        bool deranged = true;
        for (std::size_t i = 0; i < m && deranged; ++i) deranged = values[i] != i + 1;
        if (deranged) out.emplace_back(values);
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

namespace {

// Placing 0 before the next letter of v at each step yields lexicographic
// order, since 0 is the smallest letter.
void shuffle_rec(const Word& v, std::size_t zeros_left, std::size_t next_v, std::vector<Letter>& buf,
                 const std::function<void(const Word&)>& fn) {
    if (zeros_left == 0 && next_v == v.size()) {
        fn(Word(buf));
        return;
    }
    if (zeros_left > 0) {
        buf.push_back(0);
        shuffle_rec(v, zeros_left - 1, next_v, buf, fn);
        buf.pop_back();
    }
    if (next_v < v.size()) {
        buf.push_back(v[next_v]);
        shuffle_rec(v, zeros_left, next_v + 1, buf, fn);
        buf.pop_back();
    }
}

}  // namespace

void for_each_in_shuffle_class(const ShuffleClassId& id,
                               const std::function<void(const Word&)>& fn, std::size_t max_n) {
    id.validate();
    check_cap(id.n, max_n, "enum_shuffle_class");
    std::vector<Letter> buf;
    buf.reserve(id.n);
    shuffle_rec(id.v, id.n - id.v.size(), 0, buf, fn);
}

std::vector<Word> enum_shuffle_class(const ShuffleClassId& id, std::size_t max_n) {
    std::vector<Word> out;
    for_each_in_shuffle_class(id, [&](const Word& w) { out.push_back(w); }, max_n);
    return out;
}

void for_each_word(std::size_t n, Letter max_letter, const std::function<void(const Word&)>& fn,
                   std::size_t max_n) {
    check_cap(n, max_n, "for_each_word");
    std::vector<Letter> letters(n, 0);
    while (true) {
        fn(Word(letters));
        std::size_t i = n;
        while (i > 0 && letters[i - 1] == max_letter) letters[--i] = 0;
        if (i == 0) return;
        ++letters[i - 1];
    }
}

std::vector<ShuffleClassId> derangement_classes(std::size_t n, std::size_t max_n) {
    check_cap(n, max_n, "derangement_classes");
    std::vector<ShuffleClassId> out;
    for (std::size_t m = 0; m <= n; ++m) {
        for (auto& v : enum_derangements(m, max_n)) out.push_back({n, std::move(v)});
    }
    return out;
}

std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t b = 1;
    for (std::size_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

std::uint64_t derangement_count(std::size_t m) {
    // d_m = (m-1)(d_{m-1} + d_{m-2})
    std::uint64_t prev = 1, cur = 0;
    if (m == 0) return 1;
    for (std::size_t i = 2; i <= m; ++i) {
        const std::uint64_t next = (i - 1) * (cur + prev);
        prev = cur;
        cur = next;
    }
    return cur;
}

std::string_view to_string(Stat s) noexcept {
    switch (s) {
        case Stat::fix: return "fix";
        case Stat::des: return "des";
        case Stat::exc: return "exc";
        case Stat::maj: return "maj";
        case Stat::dez: return "dez";
        case Stat::maz: return "maz";
        case Stat::maf: return "maf";
    }
    return "?";
}

Stat parse_stat(std::string_view name) {
    for (Stat s : {Stat::fix, Stat::des, Stat::exc, Stat::maj, Stat::dez, Stat::maz, Stat::maf}) {
        if (to_string(s) == name) return s;
    }
    throw Error(ErrorKind::UnknownStat, "unknown statistic '" + std::string(name) +
                                            "' (expected fix, des, exc, maj, dez, maz, maf)");
}

std::vector<Stat> parse_stat_list(std::string_view names) {
    std::vector<Stat> out;
    std::size_t start = 0;
    while (start <= names.size()) {
        std::size_t comma = names.find(',', start);
        if (comma == std::string_view::npos) comma = names.size();
        out.push_back(parse_stat(names.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

std::uint64_t stat_value(const StatVector& v, Stat s) noexcept {
    switch (s) {
        case Stat::fix: return v.fix;
        case Stat::des: return v.des;
        case Stat::exc: return v.exc;
        case Stat::maj: return v.maj;
        case Stat::dez: return v.dez;
        case Stat::maz: return v.maz;
        case Stat::maf: return v.maf;
    }
    return 0;
}

std::uint64_t DistributionTable::total() const {
    std::uint64_t t = 0;
    for (const auto& [key, count] : counts) t += count;
    return t;
}

namespace {

std::string tuple_key(const std::vector<std::uint64_t>& values) {
    std::string key;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) key += ',';
        key += std::to_string(values[i]);
    }
    return key;
}

}  // namespace

std::string DistributionTable::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["stats"] = nlohmann::ordered_json::array();
    for (Stat s : stats) j["stats"].push_back(std::string(to_string(s)));
    j["counts"] = nlohmann::ordered_json::object();
    for (const auto& [key, count] : counts) j["counts"][tuple_key(key)] = count;
    return j.dump();
}

std::string DistributionTable::to_csv() const {
    std::ostringstream os;
    for (Stat s : stats) os << to_string(s) << ',';
    os << "count\n";
    for (const auto& [key, count] : counts) os << tuple_key(key) << ',' << count << '\n';
    return os.str();
}

std::string DistributionTable::to_text() const {
    std::ostringstream os;
    os << "n=" << n << " (";
    for (std::size_t i = 0; i < stats.size(); ++i) os << (i ? "," : "") << to_string(stats[i]);
    os << ")\n";
    for (const auto& [key, count] : counts) os << "(" << tuple_key(key) << "): " << count << '\n';
    os << "total: " << total() << '\n';
    return os.str();
}

DistributionTable joint_distribution(std::size_t n, const std::vector<Stat>& stats,
                                     std::size_t max_n) {
    DistributionTable table;
    table.stats = stats;
    table.n = n;
    for_each_permutation(
        n,
        [&](const Permutation& p) {
            const StatVector v = perm_stats(p);
            std::vector<std::uint64_t> key;
            key.reserve(stats.size());
            for (Stat s : stats) key.push_back(stat_value(v, s));
            ++table.counts[key];
        },
        max_n);
    return table;
}

}  // namespace fixmahon
