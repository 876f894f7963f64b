#pragma once

#include <vector>

#include "riordan/laurent.hpp"
#include "riordan/rational.hpp"

namespace riordan {

// The four polynomial families used by the B-function closed forms, plus the
// classical Chebyshev polynomials T and U they are built from. Coefficients
// come from closed-form binomial formulas; the recurrence definitions serve
// as test oracles.
//
//   p_n: row n of ((1+z)/(1-z)^3, z/(1-z)^2), coefficients
//        (n+1)/(k+1) * binom(n+k+1, 2k+1)
//   P_n: row n of ((1+z)/(1-z)^2, z/(1-z)^2), coefficients
//        (2n+1)/(2k+1) * binom(n+k, 2k)
//   Q_n: row n of ((1+z)/(1-z),   z/(1-z)^2), coefficients
//        binom(n+k, 2k) + binom(n+k-1, 2k)
//   R_n: row n of ((1+z^2)/(1-z^2), z/(1-z^2)), coefficients
//        binom((n+k)/2, k) + binom((n+k)/2 - 1, k), zero at odd n+k
//
// Negative indices extend by p_{-1} = 0, p_{-n} = p_{n-2}, P_{-n} = -P_{n-1},
// U_{-n-1} = -U_{n-1}.

enum class PolyFamily { p, P, Q, R, T, U };

struct PolyFamilyRow {
    PolyFamily family;
    long index;
    std::vector<Rat> coeffs;  // degree order, trailing zeros trimmed; empty = 0

    LaurentPoly poly() const { return LaurentPoly::from_coeffs(coeffs); }
};

PolyFamilyRow cheb_U(long n);
PolyFamilyRow cheb_T(long n);
PolyFamilyRow p_poly(long n);
PolyFamilyRow P_poly(long n);
PolyFamilyRow Q_poly(long n);  // n >= 0
PolyFamilyRow R_poly(long n);  // n >= 0

// Coefficient triangle of a family, rows 0..n (p, P, Q, R only).
std::vector<std::vector<Rat>> family_triangle(PolyFamily fam, long n);

const char* family_name(PolyFamily fam);

}  // namespace riordan
