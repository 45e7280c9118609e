#pragma once

#include <stdexcept>
#include <vector>

#include "count.hpp"
#include "error.hpp"
#include "rook.hpp"
#include "word.hpp"

namespace rookrank {

// Derangements: permutations with no fixed point. A prefix is usable iff its
// letters are distinct and no letter sits on its own position.
inline bool is_valid_derangement_prefix(int n, const Word& alpha) {
    if (alpha.alphabet_size() != n)
        throw std::invalid_argument("is_valid_derangement_prefix: alphabet mismatch");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < alpha.size(); ++i) {
        const int x = alpha[i];
        if (seen[static_cast<std::size_t>(x)] || x == i + 1) return false;
        seen[static_cast<std::size_t>(x)] = 1;
    }
    return true;
}

// Size of the complement of the board left after placing the prefix:
// n - l minus the prefix letters that land beyond position l. Each of those
// squares sits in its own row and column, so the complement's rook
// polynomial is a row of binomials.
inline int derangement_complement_size(int n, const Word& alpha) {
    if (!is_valid_derangement_prefix(n, alpha))
        throw invalid_prefix("derangement_complement_size: invalid prefix");
    const int ell = alpha.size();
    int beyond = 0;
    for (int i = 0; i < ell; ++i)
        if (alpha[i] > ell) ++beyond;
    return n - ell - beyond;
}

// Number of derangements of [n] that begin with alpha; 0 for unusable
// prefixes so the counting contract is total. Inclusion-exclusion over the
// complement squares: sum of (-1)^j C(c,j) (n-l-j)!.
inline Count count_derangement_prefix(int n, const Word& alpha) {
    if (alpha.alphabet_size() != n)
        throw std::invalid_argument("count_derangement_prefix: alphabet mismatch");
    if (!is_valid_derangement_prefix(n, alpha)) return Count(0u);
    const int ell = alpha.size();
    const int c = derangement_complement_size(n, alpha);
    const int remaining = n - ell;
    Count pos(0u), neg(0u);
    for (int j = 0; j <= c; ++j) {
        const Count term = binomial(c, j) * factorial(remaining - j);
        if (j % 2)
            neg += term;
        else
            pos += term;
    }
    return pos - neg;
}

// All off-diagonal squares of the n x n grid.
inline Board derangement_board(int n) {
    std::vector<Square> squares;
    squares.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1));
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            if (r != c) squares.push_back({r, c});
    return Board(n, std::move(squares));
}

class DerangementFamily {
public:
    // n = 1 has no derangements and n = 0 clashes with the engine's seed
    // prefix, so both are rejected up front.
    explicit DerangementFamily(int n) : n_(n) {
        if (n < 2) throw std::invalid_argument("DerangementFamily: n must be at least 2");
    }

    int alphabet_size() const { return n_; }

    Count count_prefix(const Word& alpha) const { return count_derangement_prefix(n_, alpha); }

    bool contains(const Word& w) const {
        return w.size() == n_ && is_valid_derangement_prefix(n_, w);
    }

    bool quick_letter_ok(int position, int letter) const { return letter != position; }

private:
    int n_;
};

}  // namespace rookrank
