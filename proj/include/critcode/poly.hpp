#pragma once

#include <string>
#include <vector>

#include "critcode/bigint.hpp"

namespace critcode {

/// Univariate polynomial with exact integer coefficients. coeff()[i] is the
/// coefficient of x^i; the vector carries no trailing zeros, so the zero
/// polynomial has an empty coefficient vector.
class WeightPolynomial {
public:
    WeightPolynomial() = default;
    explicit WeightPolynomial(std::vector<BigInt> coeffs);
    static WeightPolynomial constant(const BigInt& c);

    bool is_zero() const { return coeff_.empty(); }
    int degree() const { return static_cast<int>(coeff_.size()) - 1; }  // -1 for zero
    const std::vector<BigInt>& coeff() const { return coeff_; }
    BigInt coefficient(int power) const;
    void add_term(int power, const BigInt& c);

    /// Exact Horner evaluation.
    BigInt operator()(const BigInt& x) const;

    bool operator==(const WeightPolynomial& other) const { return coeff_ == other.coeff_; }

    /// Human form, highest power first: "x^2 - 3x + 2", "0", "1".
    std::string str() const;

private:
    void trim();
    std::vector<BigInt> coeff_;
};

/// Spec surface for exact evaluation (same as p(x)).
BigInt poly_eval(const WeightPolynomial& p, const BigInt& x);

}  // namespace critcode
