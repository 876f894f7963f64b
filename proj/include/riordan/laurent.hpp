#pragma once

#include <map>
#include <string>

#include "riordan/errors.hpp"
#include "riordan/rational.hpp"
#include "riordan/series.hpp"

namespace riordan {

// Finite map from integer exponents (possibly negative) to nonzero rational
// coefficients. Zero coefficients are never stored, so min/max degree are
// well defined whenever the polynomial is nonzero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::map<long, Rat> terms);

    // Ordinary polynomial from the coefficient list of z^0, z^1, ...
    static LaurentPoly from_coeffs(const std::vector<Rat>& coeffs, long shift = 0);
    static LaurentPoly constant(const Rat& c);
    static LaurentPoly monomial(const Rat& c, long exponent);

    const std::map<long, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Rat coeff(long exponent) const;

    long min_degree() const;  // throws ZeroPolynomial on 0
    long max_degree() const;

    bool has_negative_exponents() const { return !t_.empty() && t_.begin()->first < 0; }

    // Value at z = 1 (sum of coefficients) and first derivative at 1.
    Rat at_one() const;
    Rat derivative_at_one() const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Rat& c, const LaurentPoly& p);
    friend LaurentPoly operator-(const LaurentPoly& p);
    bool operator==(const LaurentPoly& other) const = default;

    std::string str(const std::string& var = "z") const;

    // As a Series; requires no negative exponents. Precision defaults to the
    // degree (it is an exact polynomial, so padding is legitimate).
    Series to_series(int prec = -1) const;

private:
    std::map<long, Rat> t_;
};

// gamma evaluated at a series; negative exponents require s(0) != 0.
// A polynomial is exact, so the result carries the precision of s.
Series eval_laurent(const LaurentPoly& gamma, const Series& s);

// Sum of min and max degree. Throws ZeroPolynomial on the zero polynomial.
long darga(const LaurentPoly& gamma);

// gamma(z) == z^d gamma(1/z) with d = darga(gamma), i.e. the coefficient
// vector is its own reversal.
bool is_generalized_palindrome(const LaurentPoly& gamma);

}  // namespace riordan
