#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "count.hpp"
#include "error.hpp"
#include "polynomial.hpp"
#include "word.hpp"

namespace rookrank {

struct Square {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Square&, const Square&) = default;
};

// Set of squares inside an m x m grid on which rooks may be placed.
// Squares are kept sorted; duplicates are rejected.
class Board {
public:
    Board(int size, std::vector<Square> squares) : size_(size), squares_(std::move(squares)) {
        if (size_ < 0) throw std::invalid_argument("Board: negative size");
        std::sort(squares_.begin(), squares_.end());
        for (std::size_t i = 0; i < squares_.size(); ++i) {
            const Square& s = squares_[i];
            if (s.row < 1 || s.row > size_ || s.col < 1 || s.col > size_)
                throw std::invalid_argument("Board: square outside the grid");
            if (i > 0 && squares_[i - 1] == s) throw std::invalid_argument("Board: duplicate square");
        }
    }

    int size() const { return size_; }
    const std::vector<Square>& squares() const { return squares_; }
    std::size_t square_count() const { return squares_.size(); }

    friend bool operator==(const Board&, const Board&) = default;

private:
    int size_;
    std::vector<Square> squares_;
};

inline Board full_board(int m) {
    std::vector<Square> squares;
    squares.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    for (int r = 1; r <= m; ++r)
        for (int c = 1; c <= m; ++c) squares.push_back({r, c});
    return Board(m, std::move(squares));
}

// Complement within the same m x m grid.
inline Board complement(const Board& b) {
    const int m = b.size();
    std::vector<char> present(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
    for (const Square& s : b.squares())
        present[static_cast<std::size_t>(s.row - 1) * static_cast<std::size_t>(m) +
                static_cast<std::size_t>(s.col - 1)] = 1;
    std::vector<Square> rest;
    for (int r = 1; r <= m; ++r)
        for (int c = 1; c <= m; ++c)
            if (!present[static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(m) +
                         static_cast<std::size_t>(c - 1)])
                rest.push_back({r, c});
    return Board(m, std::move(rest));
}

namespace detail {

inline std::mutex& rook_memo_mutex() {
    static std::mutex m;
    return m;
}

inline std::map<std::vector<Square>, IntegerPolynomial>& rook_memo() {
    static std::map<std::vector<Square>, IntegerPolynomial> memo;
    return memo;
}

// Include/exclude recursion on the lexicographically smallest square, memoized
// on the (sorted) square list. Insertions are idempotent, so concurrent calls
// behave like recomputation.
inline IntegerPolynomial rook_polynomial_squares(const std::vector<Square>& squares) {
    if (squares.empty()) return IntegerPolynomial::one();
    {
        std::scoped_lock lock(rook_memo_mutex());
        auto it = rook_memo().find(squares);
        if (it != rook_memo().end()) return it->second;
    }
    const Square pivot = squares.front();
    std::vector<Square> excluded(squares.begin() + 1, squares.end());
    std::vector<Square> included;
    included.reserve(excluded.size());
    for (const Square& s : excluded)
        if (s.row != pivot.row && s.col != pivot.col) included.push_back(s);

    IntegerPolynomial result =
        rook_polynomial_squares(included).times_x() + rook_polynomial_squares(excluded);
    std::scoped_lock lock(rook_memo_mutex());
    rook_memo().emplace(squares, result);
    return result;
}

}  // namespace detail

// Coefficient of x^k counts the placements of k mutually nonattacking rooks.
inline IntegerPolynomial rook_polynomial(const Board& b) {
    return detail::rook_polynomial_squares(b.squares());
}

// Number of ways to place m nonattacking rooks covering every row: the
// permanent of the 0/1 incidence matrix, via inclusion-exclusion over column
// subsets (Ryser). Deliberately the slow reference path; computing this for
// arbitrary boards is #P-hard, hence the size cap.
inline Count permanent_count(const Board& b, int max_size = 12) {
    const int m = b.size();
    if (m > max_size)
        throw capacity_error("permanent_count: board size " + std::to_string(m) +
                             " exceeds limit " + std::to_string(max_size));
    if (m > 63) throw capacity_error("permanent_count: board size exceeds 63");
    if (m == 0) return Count(1u);

    std::vector<std::uint64_t> row_mask(static_cast<std::size_t>(m), 0);
    for (const Square& s : b.squares())
        row_mask[static_cast<std::size_t>(s.row - 1)] |= std::uint64_t{1} << (s.col - 1);

    Count pos(0u), neg(0u);
    const std::uint64_t subsets = std::uint64_t{1} << m;
    for (std::uint64_t sub = 0; sub < subsets; ++sub) {
        Count product(1u);
        bool dead_row = false;
        for (int i = 0; i < m; ++i) {
            const int hits = std::popcount(row_mask[static_cast<std::size_t>(i)] & sub);
            if (hits == 0) {
                dead_row = true;
                break;
            }
            product *= Count(static_cast<unsigned>(hits));
        }
        if (dead_row) continue;
        if ((m - std::popcount(sub)) % 2)
            neg += product;
        else
            pos += product;
    }
    return pos - neg;
}

// Board left after pinning the first |alpha| rows to the columns named by
// alpha: rows 1..l and those columns are removed and the rest reindexed to
// [m - l] in order.
inline Board derived_board(const Board& b, const Word& alpha) {
    const int m = b.size();
    if (alpha.alphabet_size() != m)
        throw std::invalid_argument("derived_board: word alphabet must match the board size");
    const int ell = alpha.size();
    std::vector<char> col_deleted(static_cast<std::size_t>(m) + 1, 0);
    for (int i = 0; i < ell; ++i) {
        if (col_deleted[static_cast<std::size_t>(alpha[i])])
            throw invalid_prefix("derived_board: repeated letter in prefix");
        col_deleted[static_cast<std::size_t>(alpha[i])] = 1;
    }
    std::vector<int> deleted_before(static_cast<std::size_t>(m) + 1, 0);
    for (int c = 1; c <= m; ++c)
        deleted_before[static_cast<std::size_t>(c)] =
            deleted_before[static_cast<std::size_t>(c - 1)] + (col_deleted[static_cast<std::size_t>(c - 1)] ? 1 : 0);

    std::vector<Square> kept;
    for (const Square& s : b.squares()) {
        if (s.row <= ell || col_deleted[static_cast<std::size_t>(s.col)]) continue;
        kept.push_back({s.row - ell, s.col - deleted_before[static_cast<std::size_t>(s.col)]});
    }
    return Board(m - ell, std::move(kept));
}

// Product of the parts' rook polynomials; equals the rook polynomial of the
// union when no two parts share a row or a column (checked).
inline IntegerPolynomial disjoint_product(const std::vector<Board>& parts) {
    std::set<int> rows_taken, cols_taken;
    IntegerPolynomial product = IntegerPolynomial::one();
    for (const Board& part : parts) {
        std::set<int> rows, cols;
        for (const Square& s : part.squares()) {
            rows.insert(s.row);
            cols.insert(s.col);
        }
        for (int r : rows)
            if (!rows_taken.insert(r).second)
                throw not_disjoint("disjoint_product: parts share row " + std::to_string(r));
        for (int c : cols)
            if (!cols_taken.insert(c).second)
                throw not_disjoint("disjoint_product: parts share column " + std::to_string(c));
        product = product * rook_polynomial(part);
    }
    return product;
}

// Full placements on a board from its complement's rook polynomial
// (Stanley's inclusion-exclusion): sum of (-1)^k r_k (m-k)!.
inline Count stanley_count(const IntegerPolynomial& complement_poly, int board_size) {
    if (board_size < 0) throw std::invalid_argument("stanley_count: negative board size");
    if (complement_poly.degree() > board_size)
        throw inconsistent_input("stanley_count: polynomial degree exceeds the board size");
    Count pos(0u), neg(0u);
    for (int k = 0; k <= complement_poly.degree(); ++k) {
        const Count term = complement_poly.coeff(k) * factorial(board_size - k);
        if (k % 2)
            neg += term;
        else
            pos += term;
    }
    // Goes below zero only if the polynomial is not a genuine complement
    // polynomial, in which case the Count subtraction rejects it.
    return pos - neg;
}

}  // namespace rookrank
