#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "rookrank/lyndon.hpp"

using namespace rookrank;

namespace {

std::vector<Count> counts_row(const std::string& prefix, int upto) {
    std::vector<Count> row;
    for (int len = 1; len <= upto; ++len) row.push_back(count_lyndon_prefix(prefix, len));
    return row;
}

std::vector<Count> row_of(std::vector<unsigned long> values) {
    std::vector<Count> row;
    for (unsigned long v : values) row.emplace_back(v);
    return row;
}

// Inverse of the transform row, the independent check: the row is
// (1, b_1, ..., b_{L-1}); recover a_1 .. a_{L-1} via
// c_n = n b_n - sum_{k<n} c_k b_{n-k}, then a_n = (c_n - sum_{d|n, d<n} d a_d) / n.
std::vector<Count> inverse_euler(const std::vector<Count>& row) {
    REQUIRE(!row.empty());
    REQUIRE(row[0] == Count(1));
    const int len = static_cast<int>(row.size());
    std::vector<Count> c(static_cast<std::size_t>(len), Count(0u));
    std::vector<Count> a(static_cast<std::size_t>(len), Count(0u));
    for (int n = 1; n < len; ++n) {
        Count acc = Count(static_cast<unsigned>(n)) * row[static_cast<std::size_t>(n)];
        for (int k = 1; k < n; ++k)
            acc -= c[static_cast<std::size_t>(k)] * row[static_cast<std::size_t>(n - k)];
        c[static_cast<std::size_t>(n)] = acc;
        Count rest = c[static_cast<std::size_t>(n)];
        for (int d = 1; d < n; ++d)
            if (n % d == 0) rest -= Count(static_cast<unsigned>(d)) * a[static_cast<std::size_t>(d)];
        a[static_cast<std::size_t>(n)] = exact_div(rest, Count(static_cast<unsigned>(n)));
    }
    return std::vector<Count>(a.begin() + 1, a.end());
}

// Second independent route: expand prod (1 - x^i)^(-a_i) as a power series,
// multiplying by 1/(1-x^i) one factor at a time (a stride-i running sum).
std::vector<Count> series_expansion(const std::vector<unsigned long>& a) {
    const int len = static_cast<int>(a.size());
    if (len == 0) return {};
    std::vector<Count> acc(static_cast<std::size_t>(len), Count(0u));
    acc[0] = Count(1u);
    for (int i = 1; i <= len; ++i)
        for (unsigned long t = 0; t < a[static_cast<std::size_t>(i - 1)]; ++t)
            for (int d = i; d < len; ++d)
                acc[static_cast<std::size_t>(d)] += acc[static_cast<std::size_t>(d - i)];
    return acc;
}

struct TableRow {
    std::string prefix;
    std::vector<unsigned long> counts;
    std::vector<unsigned long> euler;
    int order;
    std::vector<int> coefficients;
    int valid_from;
};

// The fourteen reference rows: prefix, counts for lengths 1..12, their Euler
// transform, and the conjectured recurrence with its starting index.
const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows{
        {"0", {1, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335},
         {1, 1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024}, 1, {2}, 2},
        {"00", {0, 0, 1, 2, 4, 7, 14, 25, 48, 88, 168, 310},
         {1, 0, 0, 1, 2, 4, 8, 16, 32, 64, 128, 256}, 1, {2}, 4},
        {"01", {0, 1, 1, 1, 2, 2, 4, 5, 8, 11, 18, 25},
         {1, 0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55}, 2, {1, 1}, 1},
        {"000", {0, 0, 0, 1, 2, 4, 8, 15, 30, 57, 112, 214},
         {1, 0, 0, 0, 1, 2, 4, 8, 16, 32, 64, 128}, 1, {2}, 5},
        {"001", {0, 0, 1, 1, 2, 3, 6, 10, 18, 31, 56, 96},
         {1, 0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81}, 3, {1, 1, 1}, 1},
        {"010", {0, 0, 0, 0, 1, 1, 2, 3, 5, 7, 12, 18},
         {1, 0, 0, 0, 0, 1, 1, 2, 3, 5, 8, 13}, 2, {1, 1}, 5},
        {"011", {0, 0, 1, 1, 1, 1, 2, 2, 3, 4, 6, 7},
         {1, 0, 0, 1, 1, 1, 2, 3, 4, 6, 9, 13}, 3, {1, 0, 1}, 1},
        {"0000", {0, 0, 0, 0, 1, 2, 4, 8, 16, 31, 62, 121},
         {1, 0, 0, 0, 0, 1, 2, 4, 8, 16, 32, 64}, 1, {2}, 6},
        {"0001", {0, 0, 0, 1, 1, 2, 4, 7, 14, 26, 50, 93},
         {1, 0, 0, 0, 1, 1, 2, 4, 8, 15, 29, 56}, 4, {1, 1, 1, 1}, 1},
        {"0010", {0, 0, 0, 0, 1, 1, 3, 5, 9, 16, 30, 53},
         {1, 0, 0, 0, 0, 1, 1, 3, 5, 9, 17, 31}, 3, {1, 1, 1}, 6},
        {"0011", {0, 0, 0, 1, 1, 2, 3, 5, 9, 15, 26, 43},
         {1, 0, 0, 0, 1, 1, 2, 3, 6, 10, 18, 31}, 4, {1, 0, 1, 1}, 1},
        {"0101", {0, 0, 0, 0, 1, 1, 2, 3, 5, 7, 12, 18},
         {1, 0, 0, 0, 0, 1, 1, 2, 3, 5, 8, 13}, 2, {1, 1}, 5},
        {"0110", {0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 3, 4},
         {1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 3}, 3, {1, 0, 1}, 6},
        {"0111", {0, 0, 0, 1, 1, 1, 1, 1, 2, 2, 3, 3},
         {1, 0, 0, 0, 1, 1, 1, 1, 2, 3, 4, 5}, 4, {1, 0, 0, 1}, 1},
    };
    return rows;
}

}  // namespace

TEST_CASE("is_lyndon") {
    CHECK(is_lyndon("00101"));
    CHECK_FALSE(is_lyndon("011011"));
    CHECK(is_lyndon("0"));
    CHECK(is_lyndon("1"));
    CHECK_FALSE(is_lyndon("00"));
    CHECK_FALSE(is_lyndon("10"));
    CHECK_THROWS_AS(is_lyndon(""), std::invalid_argument);
    CHECK_THROWS_AS(is_lyndon("0120"), std::invalid_argument);
}

TEST_CASE("is_lyndon agrees with the rotation definition on all short words") {
    for (int len = 1; len <= 12; ++len)
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
            std::string w(static_cast<std::size_t>(len), '0');
            for (int i = 0; i < len; ++i)
                if (bits & (std::uint64_t{1} << i)) w[static_cast<std::size_t>(i)] = '1';
            CHECK(is_lyndon(w) == brute::brute_is_lyndon(w));
        }
}

TEST_CASE("count_lyndon_prefix basics") {
    CHECK(count_lyndon_prefix("11", 3) == Count(0));
    for (int len = 2; len <= 12; ++len) CHECK(count_lyndon_prefix("1", len) == Count(0));
    CHECK(count_lyndon_prefix("1", 1) == Count(1));
    CHECK(count_lyndon_prefix("01", 5) == Count(2));
    // the capacity limit itself is reachable
    CHECK(count_lyndon_prefix("0", 24) + count_lyndon_prefix("1", 24) ==
          Count(static_cast<unsigned long>(brute::lyndon_total_mobius(24))));
    CHECK_THROWS_AS(count_lyndon_prefix("0", 25), capacity_error);
    CHECK_THROWS_AS(count_lyndon_prefix("0", 0), capacity_error);
    CHECK_THROWS_AS(count_lyndon_prefix("a", 3), std::invalid_argument);
}

TEST_CASE("count_lyndon_prefix matches exhaustive enumeration") {
    for (const std::string& prefix : {"", "0", "1", "01", "001", "0110"})
        for (int len = 1; len <= 14; ++len)
            CHECK(count_lyndon_prefix(prefix, len) ==
                  Count(static_cast<unsigned long>(brute::count_lyndon(prefix, len))));
}

TEST_CASE("lyndon counts sum to the Mobius necklace totals") {
    for (int len = 1; len <= 16; ++len) {
        const Count total = count_lyndon_prefix("0", len) + count_lyndon_prefix("1", len);
        CHECK(total == Count(static_cast<unsigned long>(brute::lyndon_total_mobius(len))));
    }
}

TEST_CASE("reference table: counts and Euler transforms") {
    for (const TableRow& row : table_rows()) {
        CAPTURE(row.prefix);
        const auto counts = counts_row(row.prefix, 12);
        CHECK(counts == row_of(row.counts));
        CHECK(euler_transform(counts) == row_of(row.euler));
    }
}

TEST_CASE("euler_transform basics") {
    CHECK(euler_transform({}) == std::vector<Count>{});
    // all-zero input: the product is empty, the series is the constant 1
    std::vector<Count> expected(10, Count(0u));
    expected[0] = Count(1u);
    CHECK(euler_transform(std::vector<Count>(10, Count(0u))) == expected);
}

TEST_CASE("euler_transform matches direct series expansion") {
    std::mt19937 gen(397);
    std::uniform_int_distribution<int> len(1, 20);
    std::uniform_int_distribution<unsigned long> value(0, 12);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<unsigned long> raw;
        std::vector<Count> a;
        const int l = len(gen);
        for (int i = 0; i < l; ++i) {
            raw.push_back(value(gen));
            a.emplace_back(raw.back());
        }
        CHECK(euler_transform(a) == series_expansion(raw));
    }
}

TEST_CASE("euler_transform round-trips through its inverse") {
    std::mt19937 gen(401);
    std::uniform_int_distribution<int> len(2, 20);
    std::uniform_int_distribution<unsigned long> value(0, 50);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Count> a;
        const int l = len(gen);
        for (int i = 0; i < l; ++i) a.emplace_back(value(gen));
        // the length-l row determines a_1 .. a_{l-1}
        const std::vector<Count> recovered = inverse_euler(euler_transform(a));
        CHECK(recovered == std::vector<Count>(a.begin(), a.end() - 1));
    }
}

TEST_CASE("detect_recurrence finds the reference recurrences") {
    for (const TableRow& row : {table_rows()[0], table_rows()[2], table_rows()[4],
                                table_rows()[13]}) {  // prefixes 0, 01, 001, 0111
        CAPTURE(row.prefix);
        const auto guess = detect_recurrence(euler_transform(counts_row(row.prefix, 12)), 4, 1, 12);
        REQUIRE(guess.has_value());
        CHECK(guess->order == row.order);
        CHECK(guess->coefficients == row.coefficients);
        CHECK(guess->valid_from == row.valid_from);
    }
}

TEST_CASE("detected recurrences re-verify on four additional terms") {
    for (const TableRow& row : table_rows()) {
        CAPTURE(row.prefix);
        const auto guess = detect_recurrence(euler_transform(counts_row(row.prefix, 12)), 4, 1, 12);
        REQUIRE(guess.has_value());
        const auto extended = euler_transform(counts_row(row.prefix, 16));
        for (int n = guess->valid_from; n + guess->order <= 16; ++n) {
            Count rhs(0u);
            for (int i = 0; i < guess->order; ++i) {
                const int c = guess->coefficients[static_cast<std::size_t>(i)];
                if (c) rhs += Count(static_cast<unsigned>(c)) * extended[static_cast<std::size_t>(n + i - 1)];
            }
            CHECK(rhs == extended[static_cast<std::size_t>(n + guess->order - 1)]);
        }
    }
}

TEST_CASE("detect_recurrence error handling") {
    const std::vector<Count> short_seq(5, Count(1u));
    CHECK_THROWS_AS(detect_recurrence(short_seq, 4, 1, 12), insufficient_data);
    // a sequence with no small recurrence over {0,1,2}
    std::vector<Count> primes;
    for (unsigned long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) primes.emplace_back(p);
    CHECK_FALSE(detect_recurrence(primes, 2, 1, 12).has_value());
}
