#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "count.hpp"
#include "error.hpp"

namespace rookrank {

namespace detail {

inline void validate_bits(const std::string& w, const char* who) {
    for (char ch : w)
        if (ch != '0' && ch != '1')
            throw std::invalid_argument(std::string(who) + ": words are over {0, 1}");
}

}  // namespace detail

// True iff w is strictly smaller than every nontrivial rotation of itself.
inline bool is_lyndon(const std::string& w) {
    if (w.empty()) throw std::invalid_argument("is_lyndon: empty word");
    detail::validate_bits(w, "is_lyndon");
    const std::size_t len = w.size();
    for (std::size_t shift = 1; shift < len; ++shift) {
        bool smaller = false;  // w strictly precedes this rotation
        for (std::size_t i = 0; i < len; ++i) {
            const char rotated = w[(i + shift) % len];
            if (w[i] != rotated) {
                smaller = w[i] < rotated;
                break;
            }
        }
        if (!smaller) return false;  // rotation is equal or comes first
    }
    return true;
}

inline constexpr int lyndon_length_limit = 24;

// Number of binary Lyndon words of the given length that begin with `prefix`.
// Duval's algorithm generates every Lyndon word of length <= `length` once,
// in lexicographic order; lengths past the cap are refused rather than
// silently slow.
inline Count count_lyndon_prefix(const std::string& prefix, int length,
                                 int max_length = lyndon_length_limit) {
    detail::validate_bits(prefix, "count_lyndon_prefix");
    if (length < 1 || length > max_length)
        throw capacity_error("count_lyndon_prefix: length " + std::to_string(length) +
                             " outside [1, " + std::to_string(max_length) + "]");
    const std::size_t target = static_cast<std::size_t>(length);
    if (prefix.size() > target) return Count(0u);

    unsigned long matches = 0;
    std::string w = "0";
    while (true) {
        if (w.size() == target && w.compare(0, prefix.size(), prefix) == 0) ++matches;
        const std::size_t period = w.size();
        std::string t = std::move(w);
        while (t.size() < target) t.push_back(t[t.size() % period]);
        while (!t.empty() && t.back() == '1') t.pop_back();
        if (t.empty()) break;
        ++t.back();  // '0' -> '1'
        w = std::move(t);
    }
    return Count(matches);
}

// First |a| coefficients, from the constant term on, of the Euler transform
// series 1 + sum b_n x^n = prod (1 - x^i)^(-a_i): the output row is
// (1, b_1, ..., b_{|a|-1}), the form such tables are printed in. The b_n are
// computed via the standard intermediate c_n = sum_{d | n} d a_d with
// n b_n = c_n + sum_{k<n} c_k b_{n-k}; the division is exact for any integer
// input, so a remainder is a bug.
inline std::vector<Count> euler_transform(const std::vector<Count>& a) {
    const int len = static_cast<int>(a.size());
    if (len == 0) return {};
    std::vector<Count> c(static_cast<std::size_t>(len), Count(0u));
    for (int d = 1; d < len; ++d)
        for (int n = d; n < len; n += d)
            c[static_cast<std::size_t>(n)] +=
                Count(static_cast<unsigned>(d)) * a[static_cast<std::size_t>(d - 1)];
    std::vector<Count> row(static_cast<std::size_t>(len), Count(0u));
    row[0] = Count(1u);  // the empty product
    for (int n = 1; n < len; ++n) {
        Count acc = c[static_cast<std::size_t>(n)];
        for (int k = 1; k < n; ++k)
            acc += c[static_cast<std::size_t>(k)] * row[static_cast<std::size_t>(n - k)];
        row[static_cast<std::size_t>(n)] = exact_div(acc, Count(static_cast<unsigned>(n)));
    }
    return row;
}

// A linear recurrence conjectured from data, never proved by it:
// a(n + order) = sum coefficients[i] * a(n + i) for all n >= valid_from.
struct RecurrenceGuess {
    int order = 0;
    std::vector<int> coefficients;  // coefficients[i] multiplies a(n + i)
    int valid_from = 1;             // 1-based first n the recurrence is checked from

    friend bool operator==(const RecurrenceGuess&, const RecurrenceGuess&) = default;
};

// Smallest-order recurrence with coefficients in {0, 1, 2} satisfied by every
// available term from some start index on; preferring smaller start indices,
// then lexicographically smaller coefficient vectors. Start candidates are
// clipped so that at least order + 1 equations back the guess, which keeps
// short tails from matching vacuously. Returns nothing when no recurrence
// fits.
inline std::optional<RecurrenceGuess> detect_recurrence(const std::vector<Count>& b, int max_order,
                                                        int from_lo, int from_hi) {
    if (max_order < 1) throw std::invalid_argument("detect_recurrence: max_order must be >= 1");
    const int len = static_cast<int>(b.size());
    if (len < 2 * max_order)
        throw insufficient_data("detect_recurrence: need at least " + std::to_string(2 * max_order) +
                                " terms, got " + std::to_string(len));

    for (int order = 1; order <= max_order; ++order) {
        const int hi = std::min(from_hi, len - 2 * order);
        for (int start = std::max(1, from_lo); start <= hi; ++start) {
            std::vector<int> coeff(static_cast<std::size_t>(order), 0);
            while (true) {
                bool holds = true;
                for (int n = start; holds && n + order <= len; ++n) {
                    Count rhs(0u);
                    for (int i = 0; i < order; ++i) {
                        const int c = coeff[static_cast<std::size_t>(i)];
                        if (c) rhs += Count(static_cast<unsigned>(c)) * b[static_cast<std::size_t>(n + i - 1)];
                    }
                    holds = rhs == b[static_cast<std::size_t>(n + order - 1)];
                }
                if (holds) return RecurrenceGuess{order, coeff, start};

                int pos = order - 1;
                while (pos >= 0 && coeff[static_cast<std::size_t>(pos)] == 2) {
                    coeff[static_cast<std::size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
                ++coeff[static_cast<std::size_t>(pos)];
            }
        }
    }
    return std::nullopt;
}

}  // namespace rookrank
