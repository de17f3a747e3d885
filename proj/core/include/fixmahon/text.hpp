#pragma once

// Text formats shared by the CLI, reports and fixtures.
//   Word / Permutation: decimal letters separated by single spaces, "5 0 1 2".
//   IndexSet:           braces, comma separated, ascending, "{2,5,6}".

#include <string>
#include <string_view>

#include "fixmahon/permutation.hpp"
#include "fixmahon/word.hpp"

namespace fixmahon {

// Accepts any run of ASCII whitespace as a separator. Throws Parse naming the
// offending token.
Word parse_word(std::string_view text);
Permutation parse_permutation(std::string_view text);
IndexSet parse_index_set(std::string_view text);

std::string format_word(const Word& w);
std::string format_permutation(const Permutation& p);
std::string format_index_set(const IndexSet& s);

}  // namespace fixmahon
