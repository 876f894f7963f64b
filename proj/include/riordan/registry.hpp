#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "riordan/gamma.hpp"
#include "riordan/rational_g.hpp"

namespace riordan {

// How a named (or JSON-supplied) problem constructs its g: either a
// functional-equation recipe gamma (ogf/egf) or a rational g = p/q.
struct ProblemSpec {
    enum class Kind { gamma, rational };
    Kind kind = Kind::gamma;
    GammaSpec gamma;
    LaurentPoly p, q;

    // Accepts {"flavor":...,"gamma":{...}} or {"p":[...],"q":[...]} with
    // coefficient lists from degree 0 as exact-rational strings.
    static ProblemSpec from_json(const std::string& text);
    std::string describe() const;
};

// g to precision n.
Series spec_g(const ProblemSpec& spec, int n);
// Pseudo-involutory companion of g to precision n (gamma formula when
// available, otherwise the generic triangular solve).
Series spec_f(const ProblemSpec& spec, int n);

// One named worked example: the construction recipe plus expected coefficient
// prefixes frozen from independent derivations. The note for each quantity
// records how the prefix was derived; sequence_refs carries OEIS identifiers
// as documentation anchors only (nothing is fetched).
struct ExampleEntry {
    std::string name;
    ProblemSpec spec;
    std::map<std::string, std::vector<std::string>> expected;  // g, f, B, beta
    std::map<std::string, std::string> notes;
    std::string sequence_refs;
};

const std::vector<ExampleEntry>& example_registry();
const ExampleEntry* find_example(const std::string& name);
std::vector<std::string> example_names();

// B-sequence computation methods the CLI can dispatch on.
enum class BMethod { definition, matrix, half, gamma, rational };

const char* b_method_name(BMethod m);
std::optional<BMethod> parse_b_method(const std::string& name);

bool method_applicable(const ProblemSpec& spec, BMethod m);
std::vector<BMethod> default_methods(const ProblemSpec& spec);

// B-sequence b_0..b_n by the given method; throws DomainError when the
// method does not apply to the spec kind.
BSequence b_by_method(const ProblemSpec& spec, BMethod m, int n);

}  // namespace riordan
