#pragma once

#include <concepts>

#include "count.hpp"
#include "word.hpp"

namespace rookrank {

// Contract a word family fulfills so the generic engine can rank and unrank
// it. count_prefix must be total (0 for prefixes no member starts with) and
// consistent: count_prefix(a) equals the sum of count_prefix over the
// one-letter extensions of a, and equals contains(a) for full-length words.
// quick_letter_ok(position, letter) is a cheap per-letter filter (1-based
// position): it may only reject letters that can never appear at that
// position, letting callers skip count_prefix calls that would return zero.
template <typename F>
concept PrefixCountFamily = requires(const F& f, const Word& w, int position, int letter) {
    { f.alphabet_size() } -> std::convertible_to<int>;
    { f.count_prefix(w) } -> std::convertible_to<Count>;
    { f.contains(w) } -> std::convertible_to<bool>;
    { f.quick_letter_ok(position, letter) } -> std::convertible_to<bool>;
};

}  // namespace rookrank
