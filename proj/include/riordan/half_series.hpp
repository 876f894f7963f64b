#pragma once

#include "riordan/series.hpp"

namespace riordan {

// Series in the auxiliary variable t with t^2 = z: coefficients sit at the
// half-integer z-exponents 0, 1/2, 1, 3/2, ... Slot j holds the coefficient
// of z^{j/2}. Intermediate values on the exponential B-function route live
// here until the integrality certificate lets them project back to Series.
class HalfSeries {
public:
    explicit HalfSeries(std::vector<Rat> tcoeffs);

    static HalfSeries zero(int tprec);

    // Embeds z-powers at even t-slots. All interleaved odd slots are known
    // to vanish, so the t-precision is 2 prec(a) + 1.
    static HalfSeries lift(const Series& a);

    // Reinterprets a series in w as a series in t via w = sqrt(z); slot j
    // receives coefficient j of a.
    static HalfSeries substitute_sqrt(const Series& a);

    int tprec() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& tcoeff(int j) const;
    const std::vector<Rat>& tcoeffs() const { return c_; }

    // Largest whole power of z represented.
    int zprec() const { return tprec() / 2; }

    bool is_integral() const;

    // Projection to Series; requires every odd slot to vanish. The error
    // carries 2*exponent of the first offending half-integer power.
    Series project() const;

    HalfSeries& operator+=(const HalfSeries& other);
    friend HalfSeries operator+(HalfSeries a, const HalfSeries& b) { return a += b; }
    friend HalfSeries operator*(const HalfSeries& a, const HalfSeries& b);
    friend HalfSeries operator*(const Rat& c, HalfSeries a);
    bool operator==(const HalfSeries& other) const = default;

private:
    std::vector<Rat> c_;
};

}  // namespace riordan
