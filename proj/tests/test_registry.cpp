#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riordan/registry.hpp"
#include "riordan/verify.hpp"

using namespace riordan;

TEST_CASE("canonical rational rendering") {
    CHECK(rat_str(parse_rat("4/6")) == "2/3");
    CHECK(rat_str(parse_rat("-4/6")) == "-2/3");
    CHECK(rat_str(parse_rat("3/-6")) == "-1/2");
    CHECK(rat_str(parse_rat("7/1")) == "7");
    CHECK(rat_str(Rat(0)) == "0");
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("problem specs parse from JSON") {
    ProblemSpec gamma = ProblemSpec::from_json(R"({"flavor":"ogf","gamma":{"1":"-1","2":"2"}})");
    CHECK(gamma.kind == ProblemSpec::Kind::gamma);
    CHECK(gamma.gamma.gamma.coeff(2) == 2);

    ProblemSpec rational = ProblemSpec::from_json(R"({"p":["1"],"q":["1","-1","-1"]})");
    CHECK(rational.kind == ProblemSpec::Kind::rational);
    CHECK(rational.q.coeff(2) == -1);

    CHECK_THROWS_AS(ProblemSpec::from_json("{}"), ParseError);
    CHECK_THROWS_AS(ProblemSpec::from_json(R"({"p":["1"]})"), ParseError);
    CHECK_THROWS_AS(ProblemSpec::from_json(R"({"p":["1"],"q":[1]})"), ParseError);
    CHECK_THROWS_AS(ProblemSpec::from_json("not json"), ParseError);
}

TEST_CASE("registry lookups") {
    CHECK(find_example("schroeder-little") != nullptr);
    CHECK(find_example("missing") == nullptr);
    CHECK(example_names().size() == example_registry().size());
    // Every entry carries a derivation note for each expected prefix.
    for (const auto& e : example_registry()) {
        for (const auto& [quantity, prefix] : e.expected) {
            CHECK(!prefix.empty());
            CHECK(e.notes.count(quantity) == 1);
        }
    }
}

TEST_CASE("method applicability and dispatch") {
    const ExampleEntry* fib = find_example("fibonacci");
    REQUIRE(fib != nullptr);
    CHECK(method_applicable(fib->spec, BMethod::rational));
    CHECK_FALSE(method_applicable(fib->spec, BMethod::gamma));
    const ExampleEntry* sch = find_example("schroeder-little");
    REQUIRE(sch != nullptr);
    CHECK(method_applicable(sch->spec, BMethod::gamma));
    CHECK_FALSE(method_applicable(sch->spec, BMethod::rational));
    CHECK_THROWS_AS(b_by_method(sch->spec, BMethod::rational, 4), DomainError);
    CHECK(parse_b_method("definition").has_value());
    CHECK_FALSE(parse_b_method("bogus").has_value());
}

TEST_CASE("every expected prefix is reproduced by at least two independent routes") {
    for (const auto& entry : example_registry()) {
        // Route counting: g and f have the recipe route plus the
        // pseudo-involution certificate tying them together; B has one route
        // per applicable method (always >= 2: definition and matrix at
        // minimum).
        auto methods = default_methods(entry.spec);
        CHECK(methods.size() >= 2);
        auto expected_b = entry.expected.find("B");
        if (expected_b == entry.expected.end()) continue;
        auto want = parse_rats(expected_b->second);
        int agreeing = 0;
        for (BMethod m : methods) {
            BSequence b = b_by_method(entry.spec, m, static_cast<int>(want.size()) - 1);
            bool ok = true;
            for (size_t i = 0; i < want.size(); ++i) ok = ok && b.b[i] == want[i];
            CHECK(ok);
            agreeing += ok;
        }
        CHECK(agreeing >= 2);
    }
}

TEST_CASE("g and f prefixes certify as pseudo-involutions") {
    for (const auto& entry : example_registry()) {
        int n = 12;
        Series g = spec_g(entry.spec, n);
        Series f = spec_f(entry.spec, n);
        CHECK(is_pseudo_involution(RiordanArray(g, f), n));
        if (auto it = entry.expected.find("g"); it != entry.expected.end()) {
            auto want = parse_rats(it->second);
            for (size_t i = 0; i < want.size() && i <= static_cast<size_t>(n); ++i)
                CHECK(g.at(static_cast<int>(i)) == want[i]);
        }
    }
}

TEST_CASE("verify suites pass and reject unknown names") {
    SuiteReport examples = run_suite("examples");
    CHECK(examples.failures() == 0);
    CHECK(examples.checks.size() > 20);
    SuiteReport identities = run_suite("identities");
    CHECK(identities.failures() == 0);
    CHECK_THROWS_AS(run_suite("nonsense-suite"), DomainError);
    CHECK(suite_names().size() == 2);
}

TEST_CASE("BSequence JSON carries exact strings and the beta view on request") {
    BSequence b{{Rat(5), Rat(2), Rat(-4)}, "definition"};
    CHECK(b.to_json() == R"({"origin":"definition","b":["5","2","-4"]})");
    BSequence trees{{Rat(2), Rat(1, 3)}, "gamma"};
    CHECK(trees.to_json(true) ==
          R"({"origin":"gamma","b":["2","1/3"],"beta":["2","2"]})");
}
