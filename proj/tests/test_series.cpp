#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "riordan/half_series.hpp"
#include "riordan/laurent.hpp"
#include "riordan/series.hpp"

using namespace riordan;
using riordan::testing::convolve;
using riordan::testing::lagrange_inverse;
using riordan::testing::random_order_one;
using riordan::testing::random_series;
using riordan::testing::random_unit;

namespace {

Series S(const std::vector<std::string>& coeffs) { return Series::from_strings(coeffs); }

Series geometric(int prec) {  // 1/(1-z)
    return recip(sub(Series::one(prec), Series::identity(prec)));
}

}  // namespace

TEST_CASE("add and mul match hand values") {
    Series a = S({"1", "1"});
    Series b = S({"1", "-1"});
    CHECK(add(a, b) == S({"2", "0"}));
    Series prod = mul(a.padded(2), b.padded(2));
    CHECK(prod == S({"1", "0", "-1"}));
}

TEST_CASE("product against the convolution oracle") {
    // r and s truncations; r s appears inside the Schroeder companion.
    Series r = S({"1", "2", "6", "22"});
    Series s = S({"1", "1", "3", "11"});
    Series prod = mul(r, s);
    CHECK(prod.coeffs() == convolve(r.coeffs(), s.coeffs(), 3));
    CHECK(prod == S({"1", "3", "11", "45"}));
}

TEST_CASE("binary operations truncate to the smaller precision") {
    Series a = Series::one(10);
    Series b = Series::one(4);
    CHECK(add(a, b).prec() == 4);
    CHECK(mul(a, b).prec() == 4);
}

TEST_CASE("recip: geometric series and Fibonacci") {
    CHECK(recip(S({"1", "-1", "0", "0"})) == S({"1", "1", "1", "1"}));
    Series fib = recip(S({"1", "-1", "-1", "0", "0"}));
    CHECK(fib == S({"1", "1", "2", "3", "5"}));
    CHECK_THROWS_AS(recip(S({"0", "1"})), DomainError);
}

TEST_CASE("recip satisfies a * recip(a) = 1 on random units") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Series a = random_unit(rng, 16);
        CHECK(mul(a, recip(a)) == Series::one(16));
    }
}

TEST_CASE("compose: z/(1-z) with itself gives z/(1-2z)") {
    int n = 8;
    Series inner = shift_up(geometric(n), 1).truncated(n);
    Series composed = compose(inner, inner);
    Series expected = mul(Series::identity(n), recip(sub(Series::one(n), scale(Series::identity(n), Rat(2)))));
    CHECK(composed == expected.truncated(composed.prec()));
}

TEST_CASE("compose: 1/(1-z) at z + z^2 gives the Fibonacci series") {
    int n = 10;
    Series outer = geometric(n);
    Series inner = add(Series::identity(n), Series::monomial(Rat(1), 2, n));
    Series fib = recip(S({"1", "-1", "-1", "0", "0", "0", "0", "0", "0", "0", "0"}));
    CHECK(prefix_equal(compose(outer, inner), fib, 10));
}

TEST_CASE("compose with the identity is the identity map") {
    std::mt19937_64 rng(12);
    Series a = random_series(rng, 12);
    CHECK(compose(a, Series::identity(12)) == a);
}

TEST_CASE("composition precision follows min(prec_outer * order, prec_inner)") {
    Series outer = Series::one(3);
    Series inner = Series::monomial(Rat(1), 2, 11);  // order 2
    CHECK(compose(outer, inner).prec() == 6);
    Series inner1 = Series::identity(4);
    CHECK(compose(outer, inner1).prec() == 3);
}

TEST_CASE("compose rejects a unit inner unless outer is certifiably polynomial") {
    Series unit = add(Series::one(6), Series::identity(6));
    Series truncated_tail = Series::one(3);  // could hide z^4 and beyond
    CHECK(compose(truncated_tail, unit).at(0) == 1);  // trailing zeros: fine
    CHECK_THROWS_AS(compose(geometric(5), unit), DomainError);
    // A polynomial with visible zero margin evaluates exactly.
    Series poly = S({"1", "2", "0", "0"});
    Series value = compose(poly, unit);
    CHECK(value == add(Series::one(6), scale(unit, Rat(2))).truncated(value.prec()));
}

TEST_CASE("comp_inverse: z - z^2 inverts to the shifted Catalan series") {
    Series f = sub(Series::identity(8), Series::monomial(Rat(1), 2, 8));
    CHECK(comp_inverse(f) == S({"0", "1", "1", "2", "5", "14", "42", "132", "429"}));
}

TEST_CASE("comp_inverse: z/(1-z) inverts to z/(1+z)") {
    int n = 9;
    Series f = shift_up(geometric(n), 1).truncated(n);
    Series expected = mul(Series::identity(n), recip(add(Series::one(n), Series::identity(n))));
    CHECK(comp_inverse(f) == expected);
    CHECK(comp_inverse(Series::identity(7)) == Series::identity(7));
    CHECK_THROWS_AS(comp_inverse(Series::one(5)), DomainError);
}

TEST_CASE("comp_inverse agrees with the Lagrange inversion oracle") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        Series f = random_order_one(rng, 14);
        CHECK(comp_inverse(f) == lagrange_inverse(f));
    }
}

TEST_CASE("comp_inverse round-trips through composition") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        Series f = random_order_one(rng, 12);
        Series g = comp_inverse(f);
        CHECK(compose(f, g) == Series::identity(12));
        CHECK(compose(g, f) == Series::identity(12));
    }
}

TEST_CASE("sqrt: hand values and defining identity") {
    CHECK(sqrt_series(Series::one(6)) == Series::one(6));
    // Numerator radicand of the Fibonacci B closed form.
    Series a = S({"1", "-10", "5", "0", "0"});
    CHECK(sqrt_series(a) == S({"1", "-5", "-10", "-50", "-300"}));
    CHECK_THROWS_AS(sqrt_series(Series::identity(4)), DomainError);       // odd order
    CHECK_THROWS_AS(sqrt_series(Series::constant(Rat(2), 4)), DomainError);  // not a square
}

TEST_CASE("sqrt of an order-2 series returns the order-1 branch, squaring back") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 10; ++trial) {
        Series u = random_unit(rng, 12);
        Series a = shift_up(mul(u, u), 2);  // order 2, perfect square
        Series root = sqrt_series(a);
        CHECK(root.at(1) > 0);
        CHECK(mul(root, root) == a.truncated(root.prec()));
    }
}

TEST_CASE("exp and log: base cases and mutual inversion") {
    CHECK(exp_series(Series::zero(5)) == Series::one(5));
    Series l = log_series(geometric(6));
    CHECK(l == S({"0", "1", "1/2", "1/3", "1/4", "1/5", "1/6"}));
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 10; ++trial) {
        Series a = random_order_one(rng, 12, false);
        CHECK(log_series(exp_series(a)) == a);
    }
    CHECK_THROWS_AS(exp_series(Series::one(3)), DomainError);
    CHECK_THROWS_AS(log_series(Series::zero(3)), DomainError);
}

TEST_CASE("exp solves the labeled-trees fixed point") {
    int n = 10;
    Series t = Series::one(n);
    for (int pass = 0; pass <= n; ++pass) t = exp_series(shift_up(t, 1).truncated(n));
    CHECK(exp_series(shift_up(t, 1).truncated(n)) == t);
    CHECK(t.at(2) == Rat(3, 2));
    CHECK(t.at(4) == Rat(125, 24));
}

TEST_CASE("reflect: involution and sign pattern") {
    CHECK(reflect(S({"1", "1", "1"})) == S({"1", "-1", "1"}));
    std::mt19937_64 rng(17);
    Series a = random_series(rng, 15);
    CHECK(reflect(reflect(a)) == a);
    Series b = random_series(rng, 15);
    CHECK(reflect(mul(a, b)) == mul(reflect(a), reflect(b)));
}

TEST_CASE("reflect of a composition with an odd inner series") {
    std::mt19937_64 rng(18);
    Series a = random_series(rng, 12);
    std::vector<Rat> odd(13, Rat(0));
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (size_t i = 1; i < odd.size(); i += 2) odd[i] = Rat(coeff(rng));
    odd[1] = Rat(1);
    Series b(odd);
    CHECK(compose(a, reflect(b)) == reflect(compose(a, b)));
}

TEST_CASE("parity_parts: worked splits and the defining identity") {
    Series h = S({"0", "1", "1", "0", "0", "0"});
    ParityParts parts = parity_parts(h);
    CHECK(parts.odd.at(0) == 1);
    CHECK(parts.even.at(0) == 1);
    for (int i = 1; i <= parts.odd.prec(); ++i) CHECK(parts.odd.at(i) == 0);

    Series cube = Series::monomial(Rat(1), 3, 7);
    ParityParts p3 = parity_parts(cube);
    CHECK(p3.odd == S({"0", "1", "0", "0"}));
    CHECK(p3.even == S({"0", "0", "0"}));

    CHECK_THROWS_AS(parity_parts(Series::one(5)), DomainError);

    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        Series g = random_order_one(rng, 13, false);
        ParityParts parts2 = parity_parts(g);
        Series rebuilt = add(shift_up(stretch(parts2.odd, 2), 1),
                             shift_up(stretch(parts2.even, 2), 2));
        CHECK(prefix_equal(rebuilt, g, rebuilt.prec()));
    }
}

TEST_CASE("ring axioms on random series") {
    std::mt19937_64 rng(20);
    for (int trial = 0; trial < 15; ++trial) {
        Series a = random_series(rng, 10);
        Series b = random_series(rng, 10);
        Series c = random_series(rng, 10);
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
        CHECK(add(a, b) == add(b, a));
        CHECK(mul(a, b) == mul(b, a));
    }
}

TEST_CASE("half series: lift, project, and the offending-exponent error") {
    Series a = S({"1", "1"});
    HalfSeries lifted = HalfSeries::lift(a);
    CHECK(lifted.tcoeff(0) == 1);
    CHECK(lifted.tcoeff(2) == 1);
    CHECK(lifted.tcoeff(1) == 0);
    CHECK(lifted.is_integral());
    CHECK(lifted.project() == a);

    HalfSeries bad = HalfSeries::substitute_sqrt(S({"1", "1", "0"}));  // z^{1/2} slot set
    CHECK_FALSE(bad.is_integral());
    try {
        bad.project();
        FAIL("expected NonIntegralHalfSeries");
    } catch (const DomainError& e) {
        CHECK(e.code() == Errc::non_integral_half_series);
        CHECK(e.detail_a() == 1);  // first offender at z^{1/2}
    }
}

TEST_CASE("laurent evaluation handles negative exponents through recip") {
    LaurentPoly gamma(std::map<long, Rat>{{-1, Rat(1)}, {2, Rat(3)}});
    Series s = add(Series::one(8), Series::identity(8));  // 1 + z
    Series direct = add(recip(s), scale(mul(s, s), Rat(3)));
    CHECK(eval_laurent(gamma, s) == direct);
    CHECK_THROWS_AS(eval_laurent(gamma, Series::identity(4)), DomainError);
}

TEST_CASE("darga and palindrome predicates") {
    LaurentPoly z = LaurentPoly::monomial(Rat(1), 1);
    CHECK(darga(z) == 2);
    CHECK(is_generalized_palindrome(z));
    LaurentPoly onepz = LaurentPoly::from_coeffs({Rat(1), Rat(1)});
    CHECK(darga(onepz) == 1);
    CHECK(is_generalized_palindrome(onepz));
    LaurentPoly schroeder = LaurentPoly::from_coeffs({Rat(0), Rat(-1), Rat(2)});
    CHECK(darga(schroeder) == 3);
    CHECK_FALSE(is_generalized_palindrome(schroeder));
    CHECK_THROWS_AS(darga(LaurentPoly()), DomainError);
}

TEST_CASE("darga algebra on random Laurent polynomials") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<long> expo(-3, 4);
    auto random_laurent = [&] {
        std::map<long, Rat> t;
        for (int i = 0; i < 4; ++i) {
            Rat c(coeff(rng));
            if (c != 0) t[expo(rng)] = c;
        }
        return LaurentPoly(std::move(t));
    };
    int done = 0;
    while (done < 25) {
        LaurentPoly a = random_laurent(), b = random_laurent();
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(darga(a * b) == darga(a) + darga(b));
        ++done;
    }
    // Palindromes are closed under product.
    LaurentPoly pal1(std::map<long, Rat>{{-1, Rat(2)}, {0, Rat(5)}, {1, Rat(2)}});
    LaurentPoly not_pal(std::map<long, Rat>{{0, Rat(1)}, {1, Rat(2)}});
    CHECK(is_generalized_palindrome(pal1));
    CHECK_FALSE(is_generalized_palindrome(not_pal));
    LaurentPoly pal3(std::map<long, Rat>{{0, Rat(1)}, {1, Rat(4)}, {2, Rat(1)}});
    CHECK(is_generalized_palindrome(pal1 * pal3));
}
