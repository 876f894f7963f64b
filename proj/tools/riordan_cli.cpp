// Command-line front end: named examples and JSON specs in, exact-rational
// series, B-sequences, and triangles out.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage/parse error,
// 3 math-domain error, 4 cross-method disagreement.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "riordan/chebyshev.hpp"
#include "riordan/registry.hpp"
#include "riordan/verify.hpp"

namespace {

using nlohmann::json;
using namespace riordan;

constexpr int kMaxPrecision = 512;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMathDomain = 3;
constexpr int kExitDisagreement = 4;

struct SpecArgs {
    std::string name;
    std::string spec_json;
    std::string spec_file;
};

void add_spec_options(CLI::App* cmd, SpecArgs& args) {
    auto* name = cmd->add_option("--name", args.name, "named example from the registry");
    auto* spec = cmd->add_option("--spec", args.spec_json, "inline JSON spec");
    auto* file = cmd->add_option("--spec-file", args.spec_file, "path to a JSON spec file");
    name->excludes(spec)->excludes(file);
    spec->excludes(file);
}

// Resolves --name/--spec/--spec-file to a ProblemSpec. ParseError and
// unknown names surface as exit code 2 at the call sites.
ProblemSpec resolve_spec(const SpecArgs& args) {
    int given = !args.name.empty() + !args.spec_json.empty() + !args.spec_file.empty();
    if (given != 1) throw ParseError("exactly one of --name, --spec, --spec-file is required");
    if (!args.name.empty()) {
        const ExampleEntry* entry = find_example(args.name);
        if (!entry) {
            std::string known;
            for (const auto& n : example_names()) known += " " + n;
            throw ParseError("unknown example \"" + args.name + "\"; known:" + known);
        }
        return entry->spec;
    }
    if (!args.spec_json.empty()) return ProblemSpec::from_json(args.spec_json);
    std::ifstream in(args.spec_file);
    if (!in) throw ParseError("cannot open spec file " + args.spec_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return ProblemSpec::from_json(buffer.str());
}

json rats_json(const std::vector<Rat>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(rat_str(x));
    return out;
}

json error_json(const DomainError& e) {
    json out{{"kind", errc_name(e.code())}, {"message", e.what()}};
    if (e.detail_a() >= 0) out["degree"] = e.detail_a();
    if (e.detail_b() >= 0) out["detail"] = e.detail_b();
    return out;
}

int cmd_series(const SpecArgs& spec_args, int n) {
    ProblemSpec spec = resolve_spec(spec_args);
    json out;
    out["spec"] = spec.describe();
    if (!spec_args.name.empty()) out["name"] = spec_args.name;
    out["precision"] = n;
    bool domain_error = false;
    out["g"] = rats_json(spec_g(spec, n).coeffs());
    try {
        out["f"] = rats_json(spec_f(spec, n).coeffs());
    } catch (const DomainError& e) {
        out["f_error"] = error_json(e);
        domain_error = true;
    }
    std::cout << out.dump(2) << "\n";
    return domain_error ? kExitMathDomain : kExitOk;
}

int cmd_bfun(const SpecArgs& spec_args, int n, const std::string& methods_csv, bool with_beta) {
    ProblemSpec spec = resolve_spec(spec_args);
    std::vector<BMethod> methods;
    if (methods_csv.empty()) {
        methods = default_methods(spec);
    } else {
        std::stringstream ss(methods_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto m = parse_b_method(item);
            if (!m) throw ParseError("unknown method \"" + item + "\"");
            if (!method_applicable(spec, *m))
                throw ParseError("method \"" + item + "\" does not apply to this spec");
            methods.push_back(*m);
        }
        if (methods.empty()) throw ParseError("--methods given but empty");
    }

    json out;
    if (!spec_args.name.empty()) out["name"] = spec_args.name;
    out["spec"] = spec.describe();
    out["N"] = n;
    std::vector<BSequence> results;
    json per_method = json::object();
    for (BMethod m : methods) {
        BSequence b = b_by_method(spec, m, n);
        if (b.origin == "rational-fallback-definition")
            std::cerr << "note: series root not simple at origin; fell back to the definition"
                      << " solve\n";
        per_method[b_method_name(m)] = rats_json(b.b);
        results.push_back(std::move(b));
    }
    out["methods"] = per_method;
    long disagree_at = -1;
    for (size_t i = 1; i < results.size() && disagree_at < 0; ++i)
        disagree_at = first_difference(results[0], results[i]);
    out["agree"] = disagree_at < 0;
    if (disagree_at >= 0) out["first_differing_index"] = disagree_at;
    if (disagree_at < 0) {
        out["b"] = rats_json(results.front().b);
        if (with_beta) out["beta"] = rats_json(results.front().beta());
    }
    std::cout << out.dump(2) << "\n";
    if (disagree_at >= 0) {
        std::cerr << "cross-method disagreement at index " << disagree_at << "\n";
        return kExitDisagreement;
    }
    return kExitOk;
}

int cmd_matrix(const SpecArgs& spec_args, const std::string& cheb_family, int n,
               const std::string& flavor_name_arg, const std::string& format) {
    std::optional<TriangularMatrix> matrix;
    if (!cheb_family.empty()) {
        PolyFamily fam;
        if (cheb_family == "p") fam = PolyFamily::p;
        else if (cheb_family == "P") fam = PolyFamily::P;
        else if (cheb_family == "Q") fam = PolyFamily::Q;
        else if (cheb_family == "R") fam = PolyFamily::R;
        else throw ParseError("--cheb expects one of p, P, Q, R");
        matrix = TriangularMatrix(family_triangle(fam, n));
    } else {
        ProblemSpec spec = resolve_spec(spec_args);
        Flavor flavor = Flavor::ordinary;
        if (flavor_name_arg == "exponential") flavor = Flavor::exponential;
        else if (flavor_name_arg != "ordinary")
            throw ParseError("--flavor expects ordinary or exponential");
        Series g = spec_g(spec, n);
        Series f = spec_f(spec, n);
        matrix = entries(RiordanArray(g, f, flavor), n);
    }
    if (format == "csv")
        std::cout << matrix->to_csv();
    else if (format == "json")
        std::cout << matrix->to_json() << "\n";
    else
        throw ParseError("--format expects json or csv");
    return kExitOk;
}

int cmd_verify(const std::string& suite) {
    SuiteReport report = run_suite(suite);
    std::cout << report.render();
    return report.failures() == 0 ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riordan-array pseudo-involution toolkit: companions, B-sequences, triangles"};
    app.require_subcommand(1);

    SpecArgs series_spec;
    int series_n = 16;
    auto* series = app.add_subcommand("series", "emit g and its pseudo-involutory companion f");
    add_spec_options(series, series_spec);
    series->add_option("-N,--precision", series_n, "number of coefficients minus one")
        ->check(CLI::Range(0, kMaxPrecision));

    SpecArgs bfun_spec;
    int bfun_n = 16;
    std::string methods_csv;
    bool with_beta = false;
    auto* bfun = app.add_subcommand("bfun", "B-sequence by one or more methods, cross-validated");
    add_spec_options(bfun, bfun_spec);
    bfun->add_option("-N,--precision", bfun_n, "last B index to compute")
        ->check(CLI::Range(0, kMaxPrecision));
    bfun->add_option("--methods", methods_csv,
                     "comma list of definition,matrix,half,gamma,rational");
    bfun->add_flag("--beta", with_beta, "include the beta view (2n+1)! b_n");

    SpecArgs matrix_spec;
    int matrix_n = 8;
    std::string cheb_family, matrix_flavor = "ordinary", matrix_format = "json";
    auto* matrix = app.add_subcommand("matrix", "materialize a triangle (array or family block)");
    add_spec_options(matrix, matrix_spec);
    matrix->add_option("--cheb", cheb_family, "polynomial family triangle: p, P, Q, or R");
    matrix->add_option("-N,--precision", matrix_n, "last row index")
        ->check(CLI::Range(0, kMaxPrecision));
    matrix->add_option("--flavor", matrix_flavor, "ordinary or exponential");
    matrix->add_option("--format", matrix_format, "json or csv");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a named check suite");
    verify->add_option("suite", suite, "examples or identities")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (series->parsed()) return cmd_series(series_spec, series_n);
        if (bfun->parsed()) return cmd_bfun(bfun_spec, bfun_n, methods_csv, with_beta);
        if (matrix->parsed())
            return cmd_matrix(matrix_spec, cheb_family, matrix_n, matrix_flavor, matrix_format);
        if (verify->parsed()) return cmd_verify(suite);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        if (e.code() == Errc::unknown_name) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMathDomain;
    }
    return kExitUsage;
}
