#pragma once

#include <map>
#include <utility>
#include <vector>

#include "riordan/half_series.hpp"
#include "riordan/laurent.hpp"
#include "riordan/series.hpp"

namespace riordan {

// Exact bivariate polynomial sum_{i,j} c_{ij} x^i y^j with finite support;
// no zero coefficients stored. The variable names are positional: callers
// read (x, y) as (u, v), (x, z), or (y, z) depending on context.
class BivariatePoly {
public:
    BivariatePoly() = default;
    explicit BivariatePoly(std::map<std::pair<long, long>, Rat> terms);

    static BivariatePoly monomial(const Rat& c, long i, long j);

    const std::map<std::pair<long, long>, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Rat coeff(long i, long j) const;
    long degree_x() const;  // -1 on the zero polynomial

    BivariatePoly& operator+=(const BivariatePoly& other);
    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(const BivariatePoly& p);
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a += -b; }
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
    friend BivariatePoly operator*(const Rat& c, const BivariatePoly& p);
    bool operator==(const BivariatePoly& other) const = default;

    // Substitutes x -> -x (first slot) / y -> -y (second slot).
    BivariatePoly negate_x() const;
    BivariatePoly negate_y() const;

    BivariatePoly derivative_x() const;

    // Evaluation at x = a(z), y = z, truncated to prec(a). Requires
    // nonnegative exponents.
    Series eval_at_series(const Series& a) const;

    // Coefficient of x^i as a polynomial in y.
    LaurentPoly coeff_of_x(long i) const;

    std::string str(const std::string& xvar = "x", const std::string& yvar = "y") const;

private:
    std::map<std::pair<long, long>, Rat> t_;
};

// The symmetric reduction S with S(u + v, uv) = p(u) p(v) - q(u) q(v),
// computed through the power-sum recurrence s_m = x s_{m-1} - y s_{m-2}.
// Requires ordinary polynomials with p(0) = q(0) = 1 and p != q.
BivariatePoly symmetrize(const LaurentPoly& p, const LaurentPoly& q);

// Phi(x, z) = S(-x, -z); the pseudo-involution condition for g = p/q says
// Phi vanishes along x = z B_f(z).
BivariatePoly b_equation(const LaurentPoly& p, const LaurentPoly& q);

// The same equation assembled from the R-family expansion: a polynomial in
// y = B_f whose coefficients live in the t = sqrt(z) grading.
struct ChebEquation {
    std::vector<HalfSeries> coeff_by_ypow;

    // Collapses to a (y, z) polynomial; throws NonIntegralHalfSeries if any
    // half-integer slot survived (that would be a kernel fault, not bad
    // input).
    BivariatePoly to_bivariate() const;

    // Value at y = b(z), as a series; zero iff b solves the equation.
    Series eval(const Series& b) const;
};

ChebEquation b_equation_cheb(const LaurentPoly& p, const LaurentPoly& q);

// Unique power-series root x(z) with x(0) = 0 of Phi(x, z) = 0, by Newton
// lifting in the z-adic metric; quadratic convergence off a simple root.
// Requires Phi(0, 0) = 0 and dPhi/dx(0, 0) != 0.
Series solve_series_root(const BivariatePoly& phi, int n);

}  // namespace riordan
