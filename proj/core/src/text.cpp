#include "fixmahon/text.hpp"

#include <charconv>
#include <limits>
#include <sstream>
#include <vector>

#include "fixmahon/error.hpp"

namespace fixmahon {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::vector<std::string_view> split_tokens(std::string_view text, bool commas) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (is_space(text[i]) || (commas && text[i] == ','))) ++i;
        std::size_t start = i;
        while (i < text.size() && !is_space(text[i]) && !(commas && text[i] == ',')) ++i;
        if (i > start) tokens.push_back(text.substr(start, i - start));
    }
    return tokens;
}

std::uint64_t parse_number(std::string_view token, std::string_view what) {
    std::uint64_t value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || value > std::numeric_limits<std::uint32_t>::max()) {
        throw Error(ErrorKind::Parse,
                    "invalid " + std::string(what) + " token '" + std::string(token) + "'");
    }
    return value;
}

template <typename Seq>
std::string join(const Seq& seq, const char* sep) {
    std::ostringstream os;
    bool first = true;
    for (auto x : seq) {
        if (!first) os << sep;
        os << x;
        first = false;
    }
    return os.str();
}

}  // namespace

Word parse_word(std::string_view text) {
    std::vector<Letter> letters;
    for (auto token : split_tokens(text, false)) {
        letters.push_back(static_cast<Letter>(parse_number(token, "letter")));
    }
    return Word(std::move(letters));
}

Permutation parse_permutation(std::string_view text) {
    std::vector<std::uint32_t> values;
    for (auto token : split_tokens(text, false)) {
        values.push_back(static_cast<std::uint32_t>(parse_number(token, "permutation")));
    }
    return Permutation(std::move(values));
}

IndexSet parse_index_set(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t");
    std::size_t last = text.find_last_not_of(" \t");
    if (first == std::string_view::npos || text[first] != '{' || text[last] != '}') {
        throw Error(ErrorKind::Parse, "index set must be written {a,b,...}: '" +
                                          std::string(text) + "'");
    }
    std::vector<std::size_t> positions;
    for (auto token : split_tokens(text.substr(first + 1, last - first - 1), true)) {
        positions.push_back(static_cast<std::size_t>(parse_number(token, "position")));
    }
    return IndexSet(std::move(positions));
}

std::string format_word(const Word& w) { return join(w, " "); }

std::string format_permutation(const Permutation& p) { return join(p.values(), " "); }

std::string format_index_set(const IndexSet& s) { return "{" + join(s, ",") + "}"; }

}  // namespace fixmahon
