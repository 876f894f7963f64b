#include "riordan/verify.hpp"

#include <random>
#include <sstream>

#include "riordan/chebyshev.hpp"
#include "riordan/registry.hpp"

namespace riordan {

namespace {

void check(SuiteReport& report, const std::string& name, bool ok, const std::string& detail) {
    report.checks.push_back(CheckResult{name, ok, ok ? "" : detail});
}

void check_prefix(SuiteReport& report, const std::string& name, const std::vector<Rat>& got,
                  const std::vector<Rat>& expected) {
    size_t n = std::min(got.size(), expected.size());
    for (size_t i = 0; i < n; ++i) {
        if (got[i] != expected[i]) {
            check(report, name, false,
                  "index " + std::to_string(i) + ": got " + rat_str(got[i]) + ", expected " +
                      rat_str(expected[i]));
            return;
        }
    }
    check(report, name, true, "");
}

void run_examples(SuiteReport& report) {
    for (const auto& entry : example_registry()) {
        const std::string tag = entry.name + (entry.sequence_refs.empty()
                                                  ? ""
                                                  : " [" + entry.sequence_refs + "]");
        int n = 16;
        Series g = spec_g(entry.spec, n);
        Series f = spec_f(entry.spec, n);
        if (auto it = entry.expected.find("g"); it != entry.expected.end())
            check_prefix(report, tag + ": g prefix", g.coeffs(), parse_rats(it->second));
        if (auto it = entry.expected.find("f"); it != entry.expected.end())
            check_prefix(report, tag + ": f prefix", f.coeffs(), parse_rats(it->second));

        auto expected_b = entry.expected.find("B");
        std::vector<BSequence> results;
        for (BMethod m : default_methods(entry.spec)) {
            BSequence b = b_by_method(entry.spec, m, 12);
            if (expected_b != entry.expected.end())
                check_prefix(report,
                             tag + ": B via " + b_method_name(m), b.b,
                             parse_rats(expected_b->second));
            results.push_back(std::move(b));
        }
        bool agree = true;
        std::string detail;
        for (size_t i = 1; i < results.size(); ++i) {
            long d = first_difference(results[0], results[i]);
            if (d >= 0) {
                agree = false;
                detail = std::string("methods ") + results[0].origin + " and " +
                         results[i].origin + " differ at index " + std::to_string(d);
                break;
            }
        }
        check(report, tag + ": cross-method agreement", agree, detail);

        if (auto it = entry.expected.find("beta"); it != entry.expected.end())
            check_prefix(report, tag + ": beta view", results.front().beta(),
                         parse_rats(it->second));
    }
}

Series random_unit_series(std::mt19937_64& rng, int prec) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<Rat> v(static_cast<size_t>(prec) + 1);
    v[0] = Rat(1);
    for (size_t i = 1; i < v.size(); ++i) v[i] = Rat(coeff(rng));
    return Series(std::move(v));
}

Series random_order_one(std::mt19937_64& rng, int prec) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<Rat> v(static_cast<size_t>(prec) + 1, Rat(0));
    v[1] = Rat(1);
    for (size_t i = 2; i < v.size(); ++i) v[i] = Rat(coeff(rng));
    return Series(std::move(v));
}

void run_identities(SuiteReport& report) {
    // Family triangles against their generating Riordan arrays.
    const int rows = 11;
    struct ArrayRecipe {
        PolyFamily fam;
        const char* tag;
    };
    for (auto [fam, tag] : {ArrayRecipe{PolyFamily::p, "p vs ((1+z)/(1-z)^3, z/(1-z)^2)"},
                            ArrayRecipe{PolyFamily::P, "P vs ((1+z)/(1-z)^2, z/(1-z)^2)"},
                            ArrayRecipe{PolyFamily::Q, "Q vs ((1+z)/(1-z), z/(1-z)^2)"},
                            ArrayRecipe{PolyFamily::R, "R vs ((1+z^2)/(1-z^2), z/(1-z^2))"}}) {
        int prec = rows + 1;
        Series one = Series::one(prec);
        Series z = Series::identity(prec);
        Series zsq = mul(z, z);
        Series omz = sub(one, z);
        Series omz2 = mul(omz, omz);
        Series omzsq = sub(one, zsq);
        auto make = [&]() -> RiordanArray {
            switch (fam) {
                case PolyFamily::p:
                    return RiordanArray(mul(add(one, z), recip(mul(omz, omz2))),
                                        shift_up(recip(omz2), 1).truncated(prec));
                case PolyFamily::P:
                    return RiordanArray(mul(add(one, z), recip(omz2)),
                                        shift_up(recip(omz2), 1).truncated(prec));
                case PolyFamily::Q:
                    return RiordanArray(mul(add(one, z), recip(omz)),
                                        shift_up(recip(omz2), 1).truncated(prec));
                default:
                    return RiordanArray(mul(add(one, zsq), recip(omzsq)),
                                        shift_up(recip(omzsq), 1).truncated(prec));
            }
        };
        bool same = entries(make(), rows).rows() == family_triangle(fam, rows);
        check(report, std::string("triangle ") + tag, same, "coefficient block differs");
    }

    // P_n = p_n - p_{n-1}, P_n^2 = p_{2n}, Q_n = P_n - P_{n-1}.
    for (long n = -8; n <= 8; ++n) {
        LaurentPoly lhs = P_poly(n).poly();
        LaurentPoly rhs = p_poly(n).poly() + -p_poly(n - 1).poly();
        if (!(lhs == rhs)) {
            check(report, "P_n = p_n - p_{n-1}", false, "fails at n = " + std::to_string(n));
            break;
        }
        if (n == 8) check(report, "P_n = p_n - p_{n-1} for -8..8", true, "");
    }
    for (long n = -8; n <= 8; ++n) {
        if (!(P_poly(n).poly() * P_poly(n).poly() == p_poly(2 * n).poly())) {
            check(report, "P_n^2 = p_{2n}", false, "fails at n = " + std::to_string(n));
            break;
        }
        if (n == 8) check(report, "P_n^2 = p_{2n} for -8..8", true, "");
    }
    for (long n = 1; n <= 12; ++n) {
        LaurentPoly rhs = P_poly(n).poly() + -P_poly(n - 1).poly();
        if (!(Q_poly(n).poly() == rhs)) {
            check(report, "Q_n = P_n - P_{n-1}", false, "fails at n = " + std::to_string(n));
            break;
        }
        if (n == 12) check(report, "Q_n = P_n - P_{n-1} for 1..12", true, "");
    }

    // Group laws on pseudo-random arrays with small integer coefficients.
    std::mt19937_64 rng(0x5eed);
    const int prec = 12;
    bool assoc = true, inv_ok = true, pi_ok = true;
    for (int trial = 0; trial < 25 && (assoc && inv_ok && pi_ok); ++trial) {
        RiordanArray a(random_unit_series(rng, prec), random_order_one(rng, prec));
        RiordanArray b(random_unit_series(rng, prec), random_order_one(rng, prec));
        RiordanArray c(random_unit_series(rng, prec), random_order_one(rng, prec));
        RiordanArray ab_c = multiply(multiply(a, b), c);
        RiordanArray a_bc = multiply(a, multiply(b, c));
        assoc = prefix_equal(ab_c.g, a_bc.g, ab_c.prec()) &&
                prefix_equal(ab_c.f, a_bc.f, ab_c.prec());
        RiordanArray prod = multiply(a, inverse(a));
        int pn = prod.prec();
        inv_ok = prefix_equal(prod.g, Series::one(pn), pn) &&
                 prefix_equal(prod.f, Series::identity(pn), pn);
        RiordanArray xpi = multiply(a, pseudo_inverse(a));
        pi_ok = is_pseudo_involution(xpi, xpi.prec());
    }
    check(report, "group associativity on random arrays", assoc, "associativity violated");
    check(report, "two-sided inverse on random arrays", inv_ok, "inverse law violated");
    check(report, "X * pseudo_inverse(X) is a pseudo-involution", pi_ok, "property violated");
}

}  // namespace

int SuiteReport::failures() const {
    int n = 0;
    for (const auto& c : checks)
        if (!c.passed) ++n;
    return n;
}

std::string SuiteReport::render() const {
    std::ostringstream out;
    for (const auto& c : checks) {
        out << (c.passed ? "[pass] " : "[FAIL] ") << c.name;
        if (!c.passed) out << " -- " << c.detail;
        out << "\n";
    }
    out << suite << ": " << (checks.size() - failures()) << "/" << checks.size() << " checks passed\n";
    return out.str();
}

SuiteReport run_suite(const std::string& name) {
    SuiteReport report;
    report.suite = name;
    if (name == "examples")
        run_examples(report);
    else if (name == "identities")
        run_identities(report);
    else
        throw DomainError(Errc::unknown_name, "unknown suite \"" + name + "\"");
    return report;
}

std::vector<std::string> suite_names() { return {"examples", "identities"}; }

}  // namespace riordan
