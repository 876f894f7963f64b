#pragma once

#include <string>

#include "riordan/bfunction.hpp"
#include "riordan/laurent.hpp"

namespace riordan {

enum class GammaFlavor { ogf, egf };

const char* gamma_flavor_name(GammaFlavor f);

// A functional-equation recipe for g: either g = 1 + z gamma(g) (ogf) or
// g = exp(z gamma(g)) (egf), with gamma a Laurent polynomial and
// gamma(1) != 0.
struct GammaSpec {
    LaurentPoly gamma;
    GammaFlavor flavor = GammaFlavor::ogf;

    // {"flavor":"ogf","gamma":{"-1":"0","0":"3/2","2":"1/2"}}; exponent keys
    // are decimal integers, coefficients exact-rational strings.
    static GammaSpec from_json(const std::string& text);
    std::string to_json() const;
};

// Unique power-series fixed point with g(0) = 1, to precision n. Iterates
// n + 1 times (each pass pins at least one more coefficient) and then
// re-checks the defining residual.
Series solve_g(const GammaSpec& spec, int n);

// f = z gamma(g) / (g gamma(1/g)) for ogf, z gamma(g) / gamma(1/g) for egf;
// the pseudo-involutory companion of solve_g(spec). Result precision n + 1.
Series companion_from_gamma(const GammaSpec& spec, int n);

// The invertible h with f = h o pseudo_inverse(h):
//   ogf: h = (z / gamma(1-z)) o (2z / (2+z)),  egf: h = z / gamma(e^{-z}).
Series h_from_gamma(const GammaSpec& spec, int n);

struct EtaH {
    LaurentPoly eta;  // eta(z) = gamma0(1)^2 + z sum_n (sum_j c'_j c'_{n+j}) p_{n-1}(z)
    LaurentPoly h;    // H(z) = sum_n c_n P_{n-1}(z), negative indices via P_{-n} = -P_{n-1}
};

// Both are exact polynomials; eta uses the shifted coefficients of
// gamma = z^l gamma0 since gamma(z) gamma(1/z) = gamma0(z) gamma0(1/z).
EtaH eta_H_laurent(const LaurentPoly& gamma);

// B_f = H o comp_inverse(z / eta) to index n; checks H(0) against
// 2 gamma'(1) - gamma(1) before composing.
BSequence b_from_gamma_ogf(const LaurentPoly& gamma, int n);

// B_f = E o comp_inverse(z / eps) o sqrt(z) with
// eps = sqrt(gamma(e^z) gamma(e^{-z})) on the branch eps(0) = gamma(1) and
// E = (gamma(e^z) - gamma(e^{-z})) / z. The composition with sqrt(z) runs
// through the half-integer grading and must certify integral before
// projecting.
BSequence b_from_gamma_egf(const LaurentPoly& gamma, int n);

// B-sequence of F = (1/k) f(kz): coefficients b_n k^{2n+1}.
BSequence b_scale(const BSequence& b, const Rat& k);

// Closed form for gamma = a + b z + c z^2 with a + b + c != 0:
//   B = (-a+b+3c) + ((a+b+c) c z C(a c z^2)) o ((a+b+c) z / (1-(ab+bc+4ac) z))
// with C the Catalan series.
BSequence quad_closed_form(const Rat& a, const Rat& b, const Rat& c, int n);

// C = 1 + z C^2 to precision n; shared fixture generating function.
Series catalan(int n);

}  // namespace riordan
