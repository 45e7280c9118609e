#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "count.hpp"
#include "error.hpp"
#include "family.hpp"
#include "word.hpp"

namespace rookrank {

struct EngineStats {
    std::size_t case_applications = 0;
    std::size_t prefix_count_calls = 0;
};

// |family|: the sum of count_prefix over all one-letter prefixes.
template <PrefixCountFamily F>
Count total_count(const F& family) {
    const int n = family.alphabet_size();
    Count total(0u);
    std::vector<int> first(1);
    for (int x = 1; x <= n; ++x) {
        if (!family.quick_letter_ok(1, x)) continue;
        first[0] = x;
        total += family.count_prefix(Word(n, first));
    }
    return total;
}

// The index-th word of the family in lexicographic order (1-based).
//
// Iterative refinement of a candidate prefix. The state is (alpha, before)
// where `before` counts the members strictly preceding alpha; with
// c = count_prefix(alpha), exactly the members indexed (before, before + c]
// begin with alpha. Each pass applies one of four cases:
//   1. index > before + c      -> bump the last letter, before += c
//   2. alpha not a member      -> append letter 1
//   3. member, index > before+1 -> append letter 1, before += 1
//   4. member, index == before+1 -> alpha is the answer
// Every pass grows either `before` or the letter sum of alpha, so for
// permutation words the loop runs at most n*(n+1) times. A loop instead of
// recursion: the chain can be ~n^2 deep, which is unkind to stacks at n=100.
template <PrefixCountFamily F>
Word unrank(const F& family, const Count& index, EngineStats* stats = nullptr) {
    const int n = family.alphabet_size();
    if (index.is_zero() || index > total_count(family))
        throw index_out_of_range("unrank: index " + index.str() + " outside the family range");

    std::vector<int> letters{1};
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);  // letters before the last position
    Count before(0u);
    EngineStats local;
    EngineStats& st = stats ? *stats : local;

    while (true) {
        ++st.case_applications;
        const int last = letters.back();
        const int position = static_cast<int>(letters.size());
        Word alpha(n, letters);

        Count with_prefix(0u);
        if (!used[static_cast<std::size_t>(last)] && family.quick_letter_ok(position, last)) {
            ++st.prefix_count_calls;
            with_prefix = family.count_prefix(alpha);
        }
        Count reach = before + with_prefix;

        if (index > reach) {
            // In-range indices never need to advance past the last letter;
            // hitting this means the family's counts are inconsistent.
            if (last == n)
                throw index_out_of_range("unrank: prefix counts are inconsistent with the index");
            before = std::move(reach);
            ++letters.back();
        } else if (!family.contains(alpha)) {
            if (position == n)
                throw std::logic_error("unrank: cannot extend a full-length prefix");
            used[static_cast<std::size_t>(last)] = 1;
            letters.push_back(1);
        } else if (index != before + Count(1u)) {
            if (position == n)
                throw std::logic_error("unrank: cannot extend a full-length prefix");
            before += Count(1u);
            used[static_cast<std::size_t>(last)] = 1;
            letters.push_back(1);
        } else {
            return alpha;
        }
    }
}

// Inverse of unrank: 1 plus the number of members strictly before w, summed
// position by position over the smaller-letter prefixes.
template <PrefixCountFamily F>
Count rank(const F& family, const Word& w) {
    const int n = family.alphabet_size();
    if (w.alphabet_size() != n) throw std::invalid_argument("rank: alphabet mismatch");
    if (!family.contains(w)) throw not_a_member("rank: word is not in the family");

    Count result(1u);
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(w.size()));
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < w.size(); ++i) {
        const int position = i + 1;
        const int target = w[i];
        prefix.push_back(0);
        for (int x = 1; x < target; ++x) {
            if (used[static_cast<std::size_t>(x)] || !family.quick_letter_ok(position, x)) continue;
            prefix.back() = x;
            result += family.count_prefix(Word(n, prefix));
        }
        prefix.back() = target;
        used[static_cast<std::size_t>(target)] = 1;
    }
    return result;
}

// Draw `count` members uniformly and reproducibly. Indices come from
// rejection sampling over the minimal bit width of |family|, so each member
// is exactly equally likely; the generator is fully determined by the seed.
template <PrefixCountFamily F>
std::vector<Word> sample_uniform(const F& family, std::uint64_t seed, int count) {
    if (count < 0) throw std::invalid_argument("sample_uniform: negative count");
    const Count total = total_count(family);
    if (total.is_zero()) throw empty_family("sample_uniform: family has no members");

    const std::size_t bits = total.bit_length();
    std::mt19937_64 gen(seed);
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        Count draw;
        do {
            draw = Count(0u);
            std::size_t remaining = bits;
            while (remaining > 0) {
                const unsigned take = remaining >= 64 ? 64u : static_cast<unsigned>(remaining);
                std::uint64_t chunk = gen();
                if (take < 64) chunk &= (std::uint64_t{1} << take) - 1;
                draw = (draw << take) + Count(static_cast<unsigned long>(chunk));
                remaining -= take;
            }
        } while (!(draw < total));
        out.push_back(unrank(family, draw + Count(1u)));
    }
    return out;
}

// Members from .. to (inclusive, 1-based) in lexicographic order.
template <PrefixCountFamily F, typename Sink>
void enumerate_range(const F& family, const Count& from, const Count& to, Sink&& sink) {
    if (from.is_zero() || to < from || total_count(family) < to)
        throw index_out_of_range("enumerate_range: need 1 <= from <= to <= |family|");
    for (Count k = from; !(to < k); k += Count(1u)) sink(unrank(family, k));
}

template <PrefixCountFamily F>
std::vector<Word> enumerate_range(const F& family, const Count& from, const Count& to) {
    std::vector<Word> out;
    enumerate_range(family, from, to, [&out](Word w) { out.push_back(std::move(w)); });
    return out;
}

}  // namespace rookrank
