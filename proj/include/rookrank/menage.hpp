#pragma once

#include <mutex>
#include <stdexcept>
#include <vector>

#include "count.hpp"
#include "error.hpp"
#include "polynomial.hpp"
#include "rook.hpp"
#include "word.hpp"

namespace rookrank {

// Menage permutations: pi(i) != i and pi(i) + 1 != i (mod n). Positionally:
// letter x at 1-based position p is forbidden when x == p, or x == p - 1,
// or p == 1 and x == n (the wrap-around neighbour).
inline bool is_valid_menage_prefix(int n, const Word& alpha) {
    if (alpha.alphabet_size() != n)
        throw std::invalid_argument("is_valid_menage_prefix: alphabet mismatch");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < alpha.size(); ++i) {
        const int x = alpha[i];
        const int p = i + 1;
        if (seen[static_cast<std::size_t>(x)]) return false;
        if (x == p) return false;
        if (p == 1 ? x == n : x == p - 1) return false;
        seen[static_cast<std::size_t>(x)] = 1;
    }
    return true;
}

// Forbidden squares of the full menage board in column i that survive the
// deletion of rows 1..l. The complement is the diagonal, the subdiagonal and
// the corner (1, n), which yields the three-way rule below.
inline int menage_column_weight(int n, int ell, int column) {
    if (ell < 1) throw std::invalid_argument("menage_column_weight: prefix length must be >= 1");
    if (column < 1 || column > n) throw std::invalid_argument("menage_column_weight: column outside [1, n]");
    if (column < ell) return 0;
    if (column == ell || column == n) return 1;
    return 2;
}

// Sizes of the staircase blocks of the derived complementary board, one per
// maximal contiguous run of surviving columns; a block's size is the sum of
// its column weights. Zero-size runs are kept: they contribute a factor of 1.
inline std::vector<int> menage_block_sizes(int n, const Word& alpha) {
    if (alpha.is_empty()) throw invalid_prefix("menage_block_sizes: prefix must be nonempty");
    if (!is_valid_menage_prefix(n, alpha)) throw invalid_prefix("menage_block_sizes: invalid prefix");
    const int ell = alpha.size();
    std::vector<char> in_prefix(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < ell; ++i) in_prefix[static_cast<std::size_t>(alpha[i])] = 1;

    std::vector<int> sizes;
    int run = -1;  // -1: not inside a run
    for (int col = 1; col <= n + 1; ++col) {
        if (col <= n && !in_prefix[static_cast<std::size_t>(col)]) {
            if (run < 0) run = 0;
            run += menage_column_weight(n, ell, col);
        } else if (run >= 0) {
            sizes.push_back(run);
            run = -1;
        }
    }
    return sizes;
}

// F_0 = 1, F_1 = 1 + x, F_k = x F_{k-2} + F_{k-1}; the rook polynomial of any
// staircase board with k squares (coefficients are OEIS A011973). Memoized.
inline IntegerPolynomial fibonacci_polynomial(int k) {
    if (k < 0) throw std::invalid_argument("fibonacci_polynomial: negative index");
    static std::mutex mutex;
    static std::vector<IntegerPolynomial> cache{
        IntegerPolynomial::one(),
        IntegerPolynomial(std::vector<Count>{Count(1u), Count(1u)}),
    };
    std::scoped_lock lock(mutex);
    while (cache.size() <= static_cast<std::size_t>(k)) {
        const std::size_t next = cache.size();
        cache.push_back(cache[next - 2].times_x() + cache[next - 1]);
    }
    return cache[static_cast<std::size_t>(k)];
}

// Number of menage permutations of [n] beginning with alpha; 0 for unusable
// prefixes. The derived complementary board splits into disjoint staircase
// blocks, its rook polynomial is the product of their Fibonacci polynomials,
// and inclusion-exclusion over that polynomial counts the completions.
// The empty prefix wraps around the corner square and admits no such split,
// so it is summed over the first letter instead.
inline Count count_menage_prefix(int n, const Word& alpha) {
    if (alpha.alphabet_size() != n)
        throw std::invalid_argument("count_menage_prefix: alphabet mismatch");
    if (alpha.is_empty()) {
        Count total(0u);
        std::vector<int> first(1);
        for (int x = 1; x <= n; ++x) {
            first[0] = x;
            total += count_menage_prefix(n, Word(n, first));
        }
        return total;
    }
    if (!is_valid_menage_prefix(n, alpha)) return Count(0u);

    IntegerPolynomial complement_poly = IntegerPolynomial::one();
    for (int size : menage_block_sizes(n, alpha))
        complement_poly = complement_poly * fibonacci_polynomial(size);
    return stanley_count(complement_poly, n - alpha.size());
}

// Allowed squares: everything except the diagonal, the subdiagonal and the
// corner (1, n).
inline Board menage_board(int n) {
    std::vector<Square> squares;
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            if (c == r) continue;
            if ((c + 1 - r) % n == 0) continue;
            squares.push_back({r, c});
        }
    return Board(n, std::move(squares));
}

class MenageFamily {
public:
    // For n < 3 the constraints are degenerate (n = 2 admits no member at
    // all, which would break uniform sampling), so construction rejects them.
    explicit MenageFamily(int n) : n_(n) {
        if (n < 3) throw std::invalid_argument("MenageFamily: n must be at least 3");
    }

    int alphabet_size() const { return n_; }

    Count count_prefix(const Word& alpha) const { return count_menage_prefix(n_, alpha); }

    bool contains(const Word& w) const { return w.size() == n_ && is_valid_menage_prefix(n_, w); }

    bool quick_letter_ok(int position, int letter) const {
        if (letter == position) return false;
        if (position == 1 ? letter == n_ : letter == position - 1) return false;
        return true;
    }

private:
    int n_;
};

}  // namespace rookrank
