#include "riordan/gamma.hpp"

#include <nlohmann/json.hpp>

#include "riordan/chebyshev.hpp"
#include "riordan/half_series.hpp"

namespace riordan {

namespace {

using nlohmann::json;

void require_gamma_unit(const LaurentPoly& gamma) {
    if (gamma.is_zero() || gamma.at_one() == 0)
        throw DomainError(Errc::gamma_vanishes_at_one,
                          "the functional equation needs gamma(1) != 0");
}

}  // namespace

const char* gamma_flavor_name(GammaFlavor f) { return f == GammaFlavor::ogf ? "ogf" : "egf"; }

GammaSpec GammaSpec::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("gamma spec: ") + e.what());
    }
    if (!j.is_object() || !j.contains("gamma") || !j["gamma"].is_object())
        throw ParseError("gamma spec: expected {\"flavor\":..., \"gamma\":{exp:coeff,...}}");
    GammaSpec spec;
    std::string flavor = j.value("flavor", "ogf");
    if (flavor == "ogf")
        spec.flavor = GammaFlavor::ogf;
    else if (flavor == "egf")
        spec.flavor = GammaFlavor::egf;
    else
        throw ParseError("gamma spec: flavor must be \"ogf\" or \"egf\"");
    std::map<long, Rat> terms;
    for (const auto& [key, value] : j["gamma"].items()) {
        long exponent;
        try {
            size_t used = 0;
            exponent = std::stol(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw ParseError("gamma spec: exponent keys must be decimal integers, got \"" + key +
                             "\"");
        }
        if (!value.is_string())
            throw ParseError("gamma spec: coefficients must be exact-rational strings");
        Rat c;
        try {
            c = parse_rat(value.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("gamma spec: ") + e.what());
        }
        if (c != 0) terms[exponent] = c;
    }
    spec.gamma = LaurentPoly(std::move(terms));
    return spec;
}

std::string GammaSpec::to_json() const {
    json g = json::object();
    for (const auto& [e, c] : gamma.terms()) g[std::to_string(e)] = rat_str(c);
    json j{{"flavor", gamma_flavor_name(flavor)}, {"gamma", g}};
    return j.dump();
}

Series solve_g(const GammaSpec& spec, int n) {
    require_gamma_unit(spec.gamma);
    // Pass m pins coefficient m, so it only needs to run at precision m + 1;
    // later coefficients would be recomputed anyway.
    Series g = Series::one(0);
    for (int pass = 0; pass <= n; ++pass) {
        int window = std::min(pass + 1, n);
        Series zg = shift_up(eval_laurent(spec.gamma, g.padded(window)), 1).truncated(window);
        g = spec.flavor == GammaFlavor::ogf ? add(Series::one(window), zg) : exp_series(zg);
    }
    // Full residual check; the iteration gains at least one coefficient per
    // pass, so a nonzero residual here is a kernel bug.
    Series zg = shift_up(eval_laurent(spec.gamma, g), 1).truncated(n);
    Series back = spec.flavor == GammaFlavor::ogf ? add(Series::one(n), zg) : exp_series(zg);
    if (!(back == g)) throw std::logic_error("solve_g: fixed point failed to close");
    return g;
}

Series companion_from_gamma(const GammaSpec& spec, int n) {
    Series g = solve_g(spec, n);
    Series num = eval_laurent(spec.gamma, g);
    Series den = eval_laurent(spec.gamma, recip(g));
    if (spec.flavor == GammaFlavor::ogf) den = mul(g, den);
    return shift_up(mul(num, recip(den)), 1);
}

Series h_from_gamma(const GammaSpec& spec, int n) {
    require_gamma_unit(spec.gamma);
    if (spec.flavor == GammaFlavor::egf) {
        // h = z / gamma(e^{-z})
        Series em = exp_series(negate(Series::identity(n)));
        return shift_up(recip(eval_laurent(spec.gamma, em)), 1).truncated(n);
    }
    // h = (z / gamma(1-z)) o (2z / (2+z))
    Series one_minus_z = sub(Series::one(n), Series::identity(n));
    Series a = shift_up(recip(eval_laurent(spec.gamma, one_minus_z)), 1).truncated(n);
    Series inner = mul(scale(Series::identity(n), Rat(2)),
                       recip(add(Series::constant(Rat(2), n), Series::identity(n))));
    return compose(a, inner);
}

EtaH eta_H_laurent(const LaurentPoly& gamma) {
    require_gamma_unit(gamma);
    long lo = gamma.min_degree(), hi = gamma.max_degree();
    // Shifted view gamma0 with c'_j = c_{j + lo}; gamma(z) gamma(1/z) is
    // unchanged by the shift.
    long deg0 = hi - lo;
    Rat g1 = gamma.at_one();
    LaurentPoly eta = LaurentPoly::constant(g1 * g1);
    for (long n = 1; n <= deg0; ++n) {
        Rat w(0);
        for (long j = 0; j + n <= deg0; ++j) w += gamma.coeff(j + lo) * gamma.coeff(j + n + lo);
        if (w != 0) eta += w * LaurentPoly(std::map<long, Rat>{{1, Rat(1)}}) * p_poly(n - 1).poly();
    }
    LaurentPoly h;
    for (const auto& [e, c] : gamma.terms()) h += c * P_poly(e - 1).poly();
    return EtaH{std::move(eta), std::move(h)};
}

BSequence b_from_gamma_ogf(const LaurentPoly& gamma, int n) {
    EtaH eh = eta_H_laurent(gamma);
    Rat expect_h0 = 2 * gamma.derivative_at_one() - gamma.at_one();
    if (eh.h.coeff(0) != expect_h0)
        throw std::logic_error("eta_H_laurent: H(0) disagrees with 2 gamma'(1) - gamma(1)");
    // eta may have degree beyond n; widen the working window and clip at the
    // end.
    int work = static_cast<int>(std::max<long>(n, eh.eta.max_degree()));
    Series eta_series = eh.eta.to_series(work);
    Series inv = comp_inverse(shift_up(recip(eta_series), 1));
    Series b = eval_laurent(eh.h, inv).truncated(n);
    return BSequence{b.coeffs(), "gamma"};
}

BSequence b_from_gamma_egf(const LaurentPoly& gamma, int n) {
    require_gamma_unit(gamma);
    // Work at t-precision 2n + 1 in the w-plane; the final sqrt(z)
    // substitution sends w-degree j to z-degree j/2.
    int m = 2 * n + 1;
    Series ez = exp_series(Series::identity(m));
    Series emz = exp_series(negate(Series::identity(m)));
    Series ge = eval_laurent(gamma, ez);
    Series gem = eval_laurent(gamma, emz);
    Series prod = mul(ge, gem);
    Series eps = sqrt_series(prod);
    Rat g1 = gamma.at_one();
    // sqrt picks the positive branch |gamma(1)|; the worked equations demand
    // eps(0) = gamma(1).
    if (eps.at(0) != g1) eps = negate(eps);
    Series e_fun = shift_down(sub(ge, gem), 1);
    if (e_fun.at(0) != 2 * gamma.derivative_at_one())
        throw std::logic_error("b_from_gamma_egf: E(0) disagrees with 2 gamma'(1)");
    Series inv = comp_inverse(shift_up(recip(eps), 1).truncated(m));
    Series a = compose(e_fun, inv);
    HalfSeries half = HalfSeries::substitute_sqrt(a);
    Series b = half.project();
    return BSequence{b.truncated(n).coeffs(), "gamma"};
}

BSequence b_scale(const BSequence& b, const Rat& k) {
    if (k == 0) throw DomainError(Errc::zero_scale, "scaling constant must be nonzero");
    std::vector<Rat> out(b.b.size());
    Rat factor = k;  // k^{2n+1}
    Rat k2 = k * k;
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = b.b[i] * factor;
        factor *= k2;
    }
    return BSequence{std::move(out), b.origin + "-scaled"};
}

Series catalan(int n) {
    std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
    c[0] = Rat(1);
    for (int m = 1; m <= n; ++m) {
        Rat s(0);
        for (int i = 0; i < m; ++i) s += c[static_cast<size_t>(i)] * c[static_cast<size_t>(m - 1 - i)];
        c[static_cast<size_t>(m)] = s;
    }
    return Series(std::move(c));
}

BSequence quad_closed_form(const Rat& a, const Rat& b, const Rat& c, int n) {
    Rat s = a + b + c;
    if (s == 0) throw DomainError(Errc::gamma_vanishes_at_one, "a + b + c must be nonzero");
    Series cat = catalan(n);
    // C(a c z^2)
    std::vector<Rat> cz(static_cast<size_t>(n) + 1, Rat(0));
    Rat acpow(1);
    for (int i = 0; 2 * i <= n; ++i) {
        cz[static_cast<size_t>(2 * i)] = cat.at(i) * acpow;
        acpow *= a * c;
    }
    Series mid = shift_up(scale(Series(std::move(cz)), s * c), 1).truncated(n);
    Rat lincoef = a * b + b * c + 4 * a * c;
    Series denom = sub(Series::one(n), Series::monomial(lincoef, 1, n));
    Series inner = shift_up(scale(recip(denom), s), 1).truncated(n);
    Series result = add(compose(mid, inner), Series::constant(-a + b + 3 * c, n));
    return BSequence{result.coeffs(), "quad-closed-form"};
}

}  // namespace riordan
