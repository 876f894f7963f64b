#pragma once

#include <string>
#include <vector>

#include "riordan/array.hpp"
#include "riordan/series.hpp"

namespace riordan {

// Coefficient list (b_0 .. b_N) of a B-function, tagged with the method that
// produced it. The beta view beta_n = (2n+1)! b_n is the exponential-flavor
// reading of the same data.
struct BSequence {
    std::vector<Rat> b;
    std::string origin;

    int max_index() const { return static_cast<int>(b.size()) - 1; }
    std::vector<Rat> beta() const;
    Series to_series() const { return Series(b); }

    std::string to_json(bool with_beta = false) const;
};

// First index at which two sequences differ, or -1 if equal on the shared
// prefix.
long first_difference(const BSequence& a, const BSequence& b);

// Solves f - z = sum b_n (z f)^{n+1} for b_0..b_n by matching coefficients.
// Even-degree equations each pin one new unknown; odd-degree equations carry
// no unknown and must vanish, which certifies f pseudo-involutory within the
// stored window. Requires order(f) = 1, f'(0) = 1 and prec(f) >= 2n + 2.
BSequence b_from_f(const Series& f, int n);

// Extracts b_j from the k = 0 instances of
//   d_{n+1,k+1} = d_{n,k} + sum_j b_j d_{n-j,k+j+1}
// and verifies every other instance the matrix can express.
BSequence b_from_matrix(const TriangularMatrix& m);

std::vector<Rat> beta_from_b(const BSequence& b);

// Checks the exponential-flavor recurrence
//   a_{n+1,k+1} = a_{n,k} + sum_j binom(n-k, 2j+1) beta_j a_{n-j,k+j+1}
// with a_{n,k} = d_{n,k} / binom(n,k), for every instance inside m. The beta
// list must be long enough to cover the instances (j <= (n-k-1)/2).
bool beta_check_matrix(const TriangularMatrix& m, const std::vector<Rat>& beta);

// The unique f with f(0) = 0, f'(0) = 1 making (g, f) a pseudo-involution,
// solved degree by degree from g * (g o (-f)) = 1 and then verified against
// the mirror condition on comp_inverse(f). Pivots sit on the coefficient of
// the newest unknown; a missing pivot with zero residual means any odd
// conjugate works (UnderdeterminedCompanion), a nonzero residual or a failed
// verification means no companion exists (NoCompanion).
Series companion_of(const Series& g, int n);

// Pseudo-inverse of sqrt(z f); satisfies f = h_f o pseudo_inverse(h_f).
// Certifies f pseudo-involutory first (via the B-equation) and rejects
// f'(0) != 1.
Series pseudo_half(const Series& f);

// B-sequence of f = h o pseudo_inverse(h) computed without constructing f:
//   z B_f = (2 z h_e) o comp_inverse(z h_o^2 - z^2 h_e^2).
// Accepts any invertible h (order 1); returns as many coefficients as
// prec(h) certifies.
BSequence b_from_half(const Series& h);

// h_f = z sqrt(1 + (z B(z^2))^2 / 4) + z^2 B(z^2) / 2; the canonical
// pseudo-half recovered from a B-function.
Series half_from_b(const Series& b);

// g = exp(phi(sqrt(z f))) for odd phi; every such g has pseudo-involutory
// companion f.
Series g_family(const Series& f, const Series& phi);

// X = (sqrt g, sqrt(z f)); satisfies X * pseudo_inverse(X) = D.
RiordanArray canonical_root(const RiordanArray& d);

}  // namespace riordan
