#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riordan/chebyshev.hpp"
#include "riordan/rational_g.hpp"

using namespace riordan;

namespace {

// Horner evaluation of a coefficient list at a Laurent-polynomial argument;
// the oracle route from the trigonometric recurrences to each family.
LaurentPoly eval_poly(const std::vector<Rat>& coeffs, const LaurentPoly& arg) {
    LaurentPoly acc;
    for (size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * arg;
        acc += LaurentPoly::constant(coeffs[i]);
    }
    return acc;
}

LaurentPoly half_z_plus_two() {
    return LaurentPoly(std::map<long, Rat>{{0, Rat(1)}, {1, Rat(1, 2)}});
}

LaurentPoly substitute_z_squared(const LaurentPoly& p) {
    std::map<long, Rat> t;
    for (const auto& [e, c] : p.terms()) t[2 * e] = c;
    return LaurentPoly(std::move(t));
}

BivariatePoly bpow(const BivariatePoly& base, long k) {
    BivariatePoly acc = BivariatePoly::monomial(Rat(1), 0, 0);
    for (long i = 0; i < k; ++i) acc = acc * base;
    return acc;
}

const BivariatePoly u = BivariatePoly::monomial(Rat(1), 1, 0);
const BivariatePoly v = BivariatePoly::monomial(Rat(1), 0, 1);

}  // namespace

TEST_CASE("U and T base cases and extensions") {
    CHECK(cheb_U(0).coeffs == std::vector<Rat>{Rat(1)});
    CHECK(cheb_U(1).coeffs == std::vector<Rat>{Rat(0), Rat(2)});
    CHECK(cheb_U(-1).coeffs.empty());
    CHECK(cheb_T(2).coeffs == std::vector<Rat>{Rat(-1), Rat(0), Rat(2)});
    CHECK(cheb_T(-2).coeffs == cheb_T(2).coeffs);
    // U_{-n-1} = -U_{n-1} across a range.
    for (long n = 0; n <= 6; ++n) CHECK(cheb_U(-n - 1).poly() == -cheb_U(n - 1).poly());
}

TEST_CASE("p rows 0..4 match the published block") {
    auto tri = family_triangle(PolyFamily::p, 4);
    CHECK(tri[0] == std::vector<Rat>{Rat(1)});
    CHECK(tri[1] == std::vector<Rat>{Rat(4), Rat(1)});
    CHECK(tri[2] == std::vector<Rat>{Rat(9), Rat(6), Rat(1)});
    CHECK(tri[3] == std::vector<Rat>{Rat(16), Rat(20), Rat(8), Rat(1)});
    CHECK(tri[4] == std::vector<Rat>{Rat(25), Rat(50), Rat(35), Rat(10), Rat(1)});
}

TEST_CASE("p against the U-recurrence construction") {
    LaurentPoly arg = half_z_plus_two();
    LaurentPoly zp4 = LaurentPoly::from_coeffs({Rat(4), Rat(1)});
    for (long l = 0; l <= 6; ++l) {
        LaurentPoly ul = eval_poly(cheb_U(l).coeffs, arg);
        LaurentPoly ulm1 = eval_poly(cheb_U(l - 1).coeffs, arg);
        CHECK(p_poly(2 * l).poly() == (ul + ulm1) * (ul + ulm1));
        CHECK(p_poly(2 * l + 1).poly() == zp4 * ul * ul);
    }
}

TEST_CASE("p negative indices fold back") {
    CHECK(p_poly(-1).coeffs.empty());
    for (long n = 2; n <= 8; ++n) CHECK(p_poly(-n).poly() == p_poly(n - 2).poly());
    CHECK(p_poly(1).poly() == LaurentPoly::from_coeffs({Rat(4), Rat(1)}));
}

TEST_CASE("P rows 0..4 match the published block") {
    auto tri = family_triangle(PolyFamily::P, 4);
    CHECK(tri[0] == std::vector<Rat>{Rat(1)});
    CHECK(tri[1] == std::vector<Rat>{Rat(3), Rat(1)});
    CHECK(tri[2] == std::vector<Rat>{Rat(5), Rat(5), Rat(1)});
    CHECK(tri[3] == std::vector<Rat>{Rat(7), Rat(14), Rat(7), Rat(1)});
    CHECK(tri[4] == std::vector<Rat>{Rat(9), Rat(30), Rat(27), Rat(9), Rat(1)});
}

TEST_CASE("P against the U-recurrence construction and negative extension") {
    LaurentPoly arg = half_z_plus_two();
    for (long n = 0; n <= 8; ++n) {
        LaurentPoly expect =
            eval_poly(cheb_U(n).coeffs, arg) + eval_poly(cheb_U(n - 1).coeffs, arg);
        CHECK(P_poly(n).poly() == expect);
    }
    CHECK(P_poly(-1).poly() == LaurentPoly::constant(Rat(-1)));
    for (long n = 1; n <= 8; ++n) CHECK(P_poly(-n).poly() == -P_poly(n - 1).poly());
}

TEST_CASE("Q rows 0..4, the 2T construction, and the P difference identity") {
    auto tri = family_triangle(PolyFamily::Q, 4);
    CHECK(tri[1] == std::vector<Rat>{Rat(2), Rat(1)});
    CHECK(tri[2] == std::vector<Rat>{Rat(2), Rat(4), Rat(1)});
    CHECK(tri[3] == std::vector<Rat>{Rat(2), Rat(9), Rat(6), Rat(1)});
    CHECK(tri[4] == std::vector<Rat>{Rat(2), Rat(16), Rat(20), Rat(8), Rat(1)});
    CHECK(Q_poly(0).poly() == LaurentPoly::constant(Rat(1)));
    LaurentPoly arg = half_z_plus_two();
    for (long n = 1; n <= 10; ++n)
        CHECK(Q_poly(n).poly() == Rat(2) * eval_poly(cheb_T(n).coeffs, arg));
    for (long n = 1; n <= 12; ++n)
        CHECK(Q_poly(n).poly() == P_poly(n).poly() + -P_poly(n - 1).poly());
}

TEST_CASE("R interleaves Q and P; coefficient table rows match") {
    CHECK(R_poly(0).poly() == LaurentPoly::constant(Rat(1)));
    CHECK(R_poly(1).poly() == LaurentPoly::monomial(Rat(1), 1));
    CHECK(R_poly(2).poly() == LaurentPoly(std::map<long, Rat>{{0, Rat(2)}, {2, Rat(1)}}));
    for (long n = 0; n <= 6; ++n) {
        CHECK(R_poly(2 * n).poly() == substitute_z_squared(Q_poly(n).poly()));
        CHECK(R_poly(2 * n + 1).poly() ==
              LaurentPoly::monomial(Rat(1), 1) * substitute_z_squared(P_poly(n).poly()));
    }
    auto tri = family_triangle(PolyFamily::R, 4);
    CHECK(tri[0] == std::vector<Rat>{Rat(1)});
    CHECK(tri[1] == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(tri[2] == std::vector<Rat>{Rat(2), Rat(0), Rat(1)});
    CHECK(tri[3] == std::vector<Rat>{Rat(0), Rat(3), Rat(0), Rat(1)});
    CHECK(tri[4] == std::vector<Rat>{Rat(2), Rat(0), Rat(4), Rat(0), Rat(1)});
}

TEST_CASE("closed-form coefficients for all n, k <= 20") {
    for (long n = 0; n <= 20; ++n) {
        auto p_row = p_poly(n).coeffs;
        auto pp_row = P_poly(n).coeffs;
        auto q_row = Q_poly(n).coeffs;
        auto r_row = R_poly(n).coeffs;
        for (long k = 0; k <= n; ++k) {
            CHECK(p_row[k] == Rat(n + 1) / Rat(k + 1) * Rat(binomial(n + k + 1, 2 * k + 1)));
            // Second closed form for the same entry.
            CHECK(p_row[k] ==
                  Rat(binomial(n + k + 2, 2 * k + 2) + binomial(n + k + 1, 2 * k + 2)));
            CHECK(pp_row[k] == Rat(2 * n + 1) / Rat(2 * k + 1) * Rat(binomial(n + k, 2 * k)));
            CHECK(pp_row[k] == Rat(binomial(n + k + 1, 2 * k + 1) + binomial(n + k, 2 * k + 1)));
            CHECK(q_row[k] == Rat(binomial(n + k, 2 * k) + binomial(n + k - 1, 2 * k)));
            Rat alpha = (n + k) % 2
                            ? Rat(0)
                            : Rat(binomial((n + k) / 2, k) + binomial((n + k) / 2 - 1, k));
            Rat got = k < static_cast<long>(r_row.size()) ? r_row[k] : Rat(0);
            CHECK(got == alpha);
        }
    }
}

TEST_CASE("two-variable substitution identities, exact in u and v") {
    const BivariatePoly u_minus_v = u - v;
    const BivariatePoly uv = u * v;
    for (long n = 0; n <= 10; ++n) {
        // (z p_n(z)) at (u-v)^2/(uv), cleared by (uv)^{n+1}:
        // sum_k d_{n,k} (u-v)^{2k+2} (uv)^{n-k} = (u^{n+1} - v^{n+1})^2.
        BivariatePoly lhs;
        auto d = p_poly(n).coeffs;
        for (long k = 0; k <= n; ++k)
            lhs += d[k] * (bpow(u_minus_v, 2 * k + 2) * bpow(uv, n - k));
        BivariatePoly rhs = bpow(u, n + 1) - bpow(v, n + 1);
        CHECK(lhs == rhs * rhs);
    }
    for (long n = 0; n <= 10; ++n) {
        // P_n at (u-v)^2/(uv), cleared by (u-v)(uv)^n.
        BivariatePoly lhs;
        auto a = P_poly(n).coeffs;
        for (long k = 0; k <= n; ++k)
            lhs += a[k] * (bpow(u_minus_v, 2 * k + 1) * bpow(uv, n - k));
        CHECK(lhs == bpow(u, 2 * n + 1) - bpow(v, 2 * n + 1));
    }
    for (long n = 1; n <= 10; ++n) {
        // Q_n at (u-v)^2/(uv), cleared by (uv)^n.
        BivariatePoly lhs;
        auto b = Q_poly(n).coeffs;
        for (long k = 0; k <= n; ++k) lhs += b[k] * (bpow(u_minus_v, 2 * k) * bpow(uv, n - k));
        CHECK(lhs == bpow(u, 2 * n) + bpow(v, 2 * n));
    }
    for (long n = 1; n <= 10; ++n) {
        // R_n at (u^2-v^2)/(uv), cleared by (uv)^n: (u^2)^n + (-v^2)^n.
        BivariatePoly lhs;
        auto alpha = R_poly(n).coeffs;
        BivariatePoly usq_minus_vsq = u * u - v * v;
        for (long k = 0; k < static_cast<long>(alpha.size()); ++k)
            lhs += alpha[k] * (bpow(usq_minus_vsq, k) * bpow(uv, n - k));
        BivariatePoly rhs = bpow(u, 2 * n);
        rhs += (n % 2 ? Rat(-1) : Rat(1)) * bpow(v, 2 * n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("P squares to the even-index p family over -8..8") {
    for (long n = -8; n <= 8; ++n) {
        CHECK(P_poly(n).poly() * P_poly(n).poly() == p_poly(2 * n).poly());
        CHECK(P_poly(n).poly() == p_poly(n).poly() + -p_poly(n - 1).poly());
    }
}
