#include "critcode/poly.hpp"

#include "critcode/errors.hpp"

namespace critcode {

WeightPolynomial::WeightPolynomial(std::vector<BigInt> coeffs) : coeff_(std::move(coeffs)) {
    trim();
}

WeightPolynomial WeightPolynomial::constant(const BigInt& c) {
    WeightPolynomial p;
    if (c != 0) p.coeff_ = {c};
    return p;
}

void WeightPolynomial::trim() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

BigInt WeightPolynomial::coefficient(int power) const {
    if (power < 0 || power >= static_cast<int>(coeff_.size())) return 0;
    return coeff_[static_cast<std::size_t>(power)];
}

void WeightPolynomial::add_term(int power, const BigInt& c) {
    if (power < 0) throw DomainError("negative power");
    if (c == 0) return;
    if (power >= static_cast<int>(coeff_.size())) coeff_.resize(static_cast<std::size_t>(power) + 1);
    coeff_[static_cast<std::size_t>(power)] += c;
    trim();
}

BigInt WeightPolynomial::operator()(const BigInt& x) const {
    BigInt r = 0;
    for (std::size_t i = coeff_.size(); i-- > 0;) r = r * x + coeff_[i];
    return r;
}

std::string WeightPolynomial::str() const {
    if (coeff_.empty()) return "0";
    std::string s;
    for (std::size_t i = coeff_.size(); i-- > 0;) {
        const BigInt& c = coeff_[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const BigInt mag = negative ? BigInt(-c) : c;
        if (s.empty()) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        const bool show_coeff = (mag != 1) || (i == 0);
        if (show_coeff) s += mag.str();
        if (i > 0) {
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

BigInt poly_eval(const WeightPolynomial& p, const BigInt& x) { return p(x); }

}  // namespace critcode
