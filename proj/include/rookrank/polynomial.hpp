#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "count.hpp"

namespace rookrank {

// Dense polynomial with nonnegative integer coefficients, stored in ascending
// degree. Rook polynomials and Fibonacci polynomials are dense by nature, so
// no sparse representation is needed. The zero polynomial is stored as {0}
// and the constant one as {1}; any other trailing zeros are stripped.
class IntegerPolynomial {
public:
    IntegerPolynomial() : coeffs_{Count(0u)} {}

    explicit IntegerPolynomial(std::vector<Count> coeffs) : coeffs_(std::move(coeffs)) {
        while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
        if (coeffs_.empty()) coeffs_.push_back(Count(0u));
    }

    static IntegerPolynomial one() { return IntegerPolynomial(std::vector<Count>{Count(1u)}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

    // Coefficient of x^k; zero beyond the stored degree.
    Count coeff(int k) const {
        if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return Count(0u);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const std::vector<Count>& coefficients() const { return coeffs_; }

    // Multiplication by x: coefficients move up one slot.
    IntegerPolynomial times_x() const {
        if (is_zero()) return IntegerPolynomial();
        std::vector<Count> shifted;
        shifted.reserve(coeffs_.size() + 1);
        shifted.push_back(Count(0u));
        shifted.insert(shifted.end(), coeffs_.begin(), coeffs_.end());
        return IntegerPolynomial(std::move(shifted));
    }

    friend IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
        const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
        std::vector<Count> sum(n, Count(0u));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) sum[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) sum[i] += b.coeffs_[i];
        return IntegerPolynomial(std::move(sum));
    }

    // Coefficient convolution.
    friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return IntegerPolynomial();
        std::vector<Count> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Count(0u));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return IntegerPolynomial(std::move(prod));
    }

    friend bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<Count> coeffs_;
};

}  // namespace rookrank
