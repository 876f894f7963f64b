#pragma once

#include <optional>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/rational.hpp"

namespace riordan {

// Truncated formal power series with exact rational coefficients.
//
// A Series of precision N stores exactly the coefficients of z^0 .. z^N and
// promises nothing about the tail. Every operation is exact on the stored
// window; binary operations truncate to the smaller precision rather than
// padding, so a coefficient is present only if it is actually known.
// Values are immutable after construction.
class Series {
public:
    explicit Series(std::vector<Rat> coeffs);

    static Series zero(int prec);
    static Series one(int prec);
    static Series identity(int prec);  // the series z
    static Series constant(const Rat& c, int prec);
    static Series monomial(const Rat& c, int degree, int prec);
    static Series from_strings(const std::vector<std::string>& coeffs);

    int prec() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& at(int k) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    std::vector<Rat> prefix(int n) const;  // coefficients 0..n, requires n <= prec

    // Index of the first nonzero stored coefficient; nullopt when every
    // stored coefficient vanishes (truncation cannot certify a nonzero tail,
    // so "order infinite" is reported conservatively).
    std::optional<int> order() const;
    bool is_zero() const { return !order().has_value(); }

    Series truncated(int prec) const;
    // Extends with explicit zeros. Only meaningful when the caller knows the
    // value is an exact polynomial; ordinary arithmetic never pads.
    Series padded(int prec) const;

    bool operator==(const Series& other) const = default;

private:
    std::vector<Rat> c_;
};

bool prefix_equal(const Series& a, const Series& b, int n);

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);
Series scale(const Series& a, const Rat& c);
Series mul(const Series& a, const Series& b);

// Multiplication by z^k (k >= 0 raises precision by k; division requires
// order >= k and lowers it).
Series shift_up(const Series& a, int k);
Series shift_down(const Series& a, int k);

// a(z^k); precision grows to k*prec + k - 1 (the interleaved zero slots are
// genuinely known).
Series stretch(const Series& a, int k);

Series recip(const Series& a);

// outer o inner. For order(inner) = k >= 1 the result has precision
// min(prec(outer) * k, prec(inner)). An inner with nonzero constant term is
// accepted only when outer is certifiably polynomial inside its own window
// (a trailing zero margin exists), in which case outer is evaluated as the
// stored polynomial.
Series compose(const Series& outer, const Series& inner);

// Compositional inverse of an order-1 series, by triangular coefficient
// solve: the degree-n equation of f(result) = z determines coefficient n.
Series comp_inverse(const Series& f);

// Square root with positive leading coefficient; requires even order and a
// perfect-square leading coefficient. Order 2m input of precision N yields
// precision N - m.
Series sqrt_series(const Series& a);

Series exp_series(const Series& a);  // requires a(0) = 0
Series log_series(const Series& a);  // requires a(0) = 1

// a(-z)
Series reflect(const Series& a);

// (-z) o comp_inverse(a) o (-z); fixed points are the pseudo-involutory
// series.
Series pseudo_inverse_series(const Series& a);

struct ParityParts {
    Series odd;   // h_o with h = z h_o(z^2) + z^2 h_e(z^2)
    Series even;  // h_e
};

ParityParts parity_parts(const Series& h);

}  // namespace riordan
