#include "riordan/registry.hpp"

#include <nlohmann/json.hpp>

namespace riordan {

namespace {

using nlohmann::json;

LaurentPoly poly_from_json_list(const json& j, const char* which) {
    if (!j.is_array() || j.empty())
        throw ParseError(std::string("rational spec: \"") + which +
                         "\" must be a nonempty list of exact-rational strings");
    std::vector<Rat> coeffs;
    for (const auto& item : j) {
        if (!item.is_string())
            throw ParseError(std::string("rational spec: coefficients of \"") + which +
                             "\" must be strings");
        try {
            coeffs.push_back(parse_rat(item.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("rational spec: ") + e.what());
        }
    }
    return LaurentPoly::from_coeffs(coeffs);
}

GammaSpec gamma_spec(std::map<long, Rat> terms, GammaFlavor flavor) {
    GammaSpec s;
    s.gamma = LaurentPoly(std::move(terms));
    s.flavor = flavor;
    return s;
}

ProblemSpec gamma_problem(std::map<long, Rat> terms, GammaFlavor flavor) {
    ProblemSpec p;
    p.kind = ProblemSpec::Kind::gamma;
    p.gamma = gamma_spec(std::move(terms), flavor);
    return p;
}

ProblemSpec rational_problem(std::vector<Rat> pc, std::vector<Rat> qc) {
    ProblemSpec s;
    s.kind = ProblemSpec::Kind::rational;
    s.p = LaurentPoly::from_coeffs(pc);
    s.q = LaurentPoly::from_coeffs(qc);
    return s;
}

}  // namespace

ProblemSpec ProblemSpec::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("spec: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("spec: expected a JSON object");
    if (j.contains("gamma")) {
        ProblemSpec s;
        s.kind = Kind::gamma;
        s.gamma = GammaSpec::from_json(text);
        return s;
    }
    if (j.contains("p") && j.contains("q")) {
        ProblemSpec s;
        s.kind = Kind::rational;
        s.p = poly_from_json_list(j["p"], "p");
        s.q = poly_from_json_list(j["q"], "q");
        return s;
    }
    throw ParseError("spec: expected either a \"gamma\" or a \"p\"/\"q\" object");
}

std::string ProblemSpec::describe() const {
    if (kind == Kind::gamma)
        return std::string("g ") + (gamma.flavor == GammaFlavor::ogf ? "= 1 + z*" : "= exp(z*") +
               "gamma(g)" + (gamma.flavor == GammaFlavor::egf ? ")" : "") +
               ", gamma = " + gamma.gamma.str();
    return "g = (" + p.str() + ") / (" + q.str() + ")";
}

Series spec_g(const ProblemSpec& spec, int n) {
    if (spec.kind == ProblemSpec::Kind::gamma) return solve_g(spec.gamma, n);
    return mul(spec.p.to_series(n), recip(spec.q.to_series(n)));
}

Series spec_f(const ProblemSpec& spec, int n) {
    if (spec.kind == ProblemSpec::Kind::gamma)
        return companion_from_gamma(spec.gamma, n).truncated(n);
    return companion_of(spec_g(spec, n), n);
}

const char* b_method_name(BMethod m) {
    switch (m) {
        case BMethod::definition: return "definition";
        case BMethod::matrix: return "matrix";
        case BMethod::half: return "half";
        case BMethod::gamma: return "gamma";
        case BMethod::rational: return "rational";
    }
    return "?";
}

std::optional<BMethod> parse_b_method(const std::string& name) {
    for (BMethod m : {BMethod::definition, BMethod::matrix, BMethod::half, BMethod::gamma,
                      BMethod::rational})
        if (name == b_method_name(m)) return m;
    return std::nullopt;
}

bool method_applicable(const ProblemSpec& spec, BMethod m) {
    switch (m) {
        case BMethod::gamma: return spec.kind == ProblemSpec::Kind::gamma;
        case BMethod::rational: return spec.kind == ProblemSpec::Kind::rational;
        default: return true;
    }
}

std::vector<BMethod> default_methods(const ProblemSpec& spec) {
    std::vector<BMethod> out{BMethod::definition, BMethod::matrix, BMethod::half};
    out.push_back(spec.kind == ProblemSpec::Kind::gamma ? BMethod::gamma : BMethod::rational);
    return out;
}

BSequence b_by_method(const ProblemSpec& spec, BMethod m, int n) {
    if (!method_applicable(spec, m))
        throw DomainError(Errc::unknown_name, std::string("method \"") + b_method_name(m) +
                                                  "\" does not apply to this spec");
    int deep = 2 * n + 2;  // b_n needs coefficient 2n+2 of f
    switch (m) {
        case BMethod::definition:
            return b_from_f(spec_f(spec, deep), n);
        case BMethod::matrix: {
            Series g = spec_g(spec, deep);
            Series f = spec_f(spec, deep);
            // The antidiagonal recurrence reads the ordinary materialization;
            // (g, f) is a pseudo-involution in both flavors, so this also
            // covers egf recipes.
            BSequence b = b_from_matrix(entries(RiordanArray(g, f), deep));
            b.b.resize(static_cast<size_t>(n) + 1);
            return b;
        }
        case BMethod::half:
            return BSequence{b_from_half(pseudo_half(spec_f(spec, deep))).b, "half"};
        case BMethod::gamma:
            return spec.gamma.flavor == GammaFlavor::ogf
                       ? b_from_gamma_ogf(spec.gamma.gamma, n)
                       : b_from_gamma_egf(spec.gamma.gamma, n);
        case BMethod::rational: {
            BivariatePoly phi = b_equation(spec.p, spec.q);
            try {
                Series x = solve_series_root(phi, n + 1);
                return BSequence{shift_down(x, 1).coeffs(), "rational"};
            } catch (const DomainError& e) {
                if (e.code() != Errc::not_a_simple_root) throw;
                // Root not simple at the origin: fall back to the generic
                // companion solve. The origin tag flags the instance.
                BSequence b = b_from_f(spec_f(spec, deep), n);
                b.origin = "rational-fallback-definition";
                return b;
            }
        }
    }
    throw std::logic_error("unreachable");
}

const std::vector<ExampleEntry>& example_registry() {
    static const std::vector<ExampleEntry> entries = [] {
        std::vector<ExampleEntry> v;

        {
            ExampleEntry e;
            e.name = "pascal";
            e.spec = gamma_problem({{1, Rat(1)}}, GammaFlavor::ogf);
            e.expected["g"] = {"1", "1", "1", "1", "1", "1", "1", "1"};
            e.expected["f"] = {"0", "1", "1", "1", "1", "1", "1", "1"};
            e.expected["B"] = {"1", "0", "0", "0", "0", "0", "0", "0"};
            e.notes["g"] = "geometric series 1/(1-z)";
            e.notes["f"] = "z/(1-z); darga-2 palindrome gives f = z*g";
            e.notes["B"] = "f - z = z^2/(1-z) = (z*f)*1, so B = 1";
            e.sequence_refs = "A000012";
            v.push_back(std::move(e));
        }
        {
            ExampleEntry e;
            e.name = "schroeder-little";
            e.spec = gamma_problem({{1, Rat(-1)}, {2, Rat(2)}}, GammaFlavor::ogf);
            e.expected["g"] = {"1", "1", "3", "11", "45", "197", "903", "4279"};
            e.expected["f"] = {"0", "1", "5", "25", "127", "655", "3421", "18053"};
            e.expected["B"] = {"5", "2", "-4", "8", "-16", "32", "-64", "128"};
            e.notes["g"] = "fixed point of s = 1 + z(-s + 2s^2); little Schroeder numbers";
            e.notes["f"] = "(z(1+z)/(1-z)) o (z r s) with r = 1/(1-2zs)";
            e.notes["B"] = "expansion of (5+12z)/(1+2z): b_0 = 5, b_n = (-1)^{n-1} 2^n";
            e.sequence_refs = "A001003 A006318";
            v.push_back(std::move(e));
        }
        {
            ExampleEntry e;
            e.name = "motzkin-ext-doubled";
            e.spec = gamma_problem({{0, Rat(3, 2)}, {2, Rat(1, 2)}}, GammaFlavor::ogf);
            e.expected["g"] = {"1", "2", "2", "4", "8", "18", "42", "102", "254", "646"};
            e.expected["f"] = {"0", "1", "0", "0", "2", "0", "6", "8", "24", "60"};
            e.expected["B"] = {"0", "2", "6", "24", "108", "522", "2646", "13878"};
            e.notes["g"] = "1 + 2z*m with m the Motzkin series; fixed point of g = 1 + z(3+g^2)/2";
            e.notes["f"] = "z*gamma(g)/(g*gamma(1/g))";
            e.notes["B"] = "expansion of (1 - 3z - sqrt(1-6z-3z^2))/(3z)";
            e.sequence_refs = "A001006 A086246 A007971 A348189 A107264";
            v.push_back(std::move(e));
        }
        {
            ExampleEntry e;
            e.name = "catalan-doubled";
            e.spec = gamma_problem({{0, Rat(1, 2)}, {1, Rat(1)}, {2, Rat(1, 2)}},
                                   GammaFlavor::ogf);
            e.expected["g"] = {"1", "2", "4", "10", "28", "84", "264", "858"};
            e.expected["f"] = {"0", "1", "2", "4", "10", "28", "84", "264"};
            e.expected["B"] = {"2", "2", "4", "10", "28", "84", "264", "858"};
            e.notes["g"] = "2C - 1 with C the Catalan series; gamma = (1+z)^2/2 is a darga-2 palindrome";
            e.notes["f"] = "z*g = z(2C - 1)";
            e.notes["B"] = "2C, twice the Catalan series";
            e.sequence_refs = "A000108";
            v.push_back(std::move(e));
        }
        {
            ExampleEntry e;
            e.name = "fibonacci";
            e.spec = rational_problem({Rat(1)}, {Rat(1), Rat(-1), Rat(-1)});
            e.expected["g"] = {"1", "1", "2", "3", "5", "8", "13", "21", "34", "55"};
            e.expected["f"] = {"0", "1", "3", "9", "32", "126", "538", "2429"};
            e.expected["B"] = {"3", "5", "25", "150", "1000", "7125", "53125", "409375"};
            e.notes["g"] = "1/(1-z-z^2), Fibonacci numbers from 1, 1";
            e.notes["f"] = "(zC) o (g - 1)";
            e.notes["B"] = "expansion of (1 + z - sqrt(1-10z+5z^2))/(2z)";
            e.sequence_refs = "A000045";
            v.push_back(std::move(e));
        }
        {
            ExampleEntry e;
            e.name = "labeled-trees";
            e.spec = gamma_problem({{1, Rat(1)}}, GammaFlavor::egf);
            e.expected["g"] = {"1", "1", "3/2", "8/3", "125/24", "54/5", "16807/720",
                               "16384/315"};
            e.expected["f"] = {"0", "1", "2", "4", "25/3", "18", "2401/60", "4096/45"};
            e.expected["B"] = {"2", "1/3", "1/60", "1/2520", "1/181440", "1/19958400"};
            e.expected["beta"] = {"2", "2", "2", "2", "2", "2", "2", "2", "2", "2", "2"};
            e.notes["g"] = "T = exp(zT); EGF counting rooted labeled trees, n![z^n]T = (n+1)^{n-1}";
            e.notes["f"] = "z*T^2 (darga-2 palindrome)";
            e.notes["B"] = "2 sinh(sqrt z)/sqrt z, so b_n = 2/(2n+1)!";
            e.notes["beta"] = "(2n+1)! b_n = 2 for all n";
            e.sequence_refs = "A000272";
            v.push_back(std::move(e));
        }
        {
            ExampleEntry e;
            e.name = "labeled-trees-2colored";
            e.spec = gamma_problem({{0, Rat(1)}, {1, Rat(1)}}, GammaFlavor::egf);
            e.expected["g"] = {"1", "2", "4", "28/3", "24", "328/5", "8416/45", "173216/315"};
            e.expected["f"] = {"0", "1", "2", "4", "28/3", "24", "328/5", "8416/45"};
            e.expected["B"] = {"2", "4/3", "8/5", "736/315", "2144/567", "339008/51975",
                               "2041856/173745"};
            e.notes["g"] = "S = exp(z(1+S)); trees with 2-colored leaves, singleton 1-colored";
            e.notes["f"] = "z*S (darga-1 palindrome)";
            e.notes["B"] = "2 (sinh o comp_inverse(z sech z))/z o sqrt(z)";
            e.sequence_refs = "";
            v.push_back(std::move(e));
        }
        return v;
    }();
    return entries;
}

const ExampleEntry* find_example(const std::string& name) {
    for (const auto& e : example_registry())
        if (e.name == name) return &e;
    return nullptr;
}

std::vector<std::string> example_names() {
    std::vector<std::string> out;
    for (const auto& e : example_registry()) out.push_back(e.name);
    return out;
}

}  // namespace riordan
