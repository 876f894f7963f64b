#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace riordan {

// Exact rational scalar. All kernel arithmetic happens in this type; the
// library never touches floating point.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p", or "p/q" (decimal). Throws std::invalid_argument on
// malformed input or zero denominator.
Rat parse_rat(std::string_view text);

// Canonical rendering: reduced, "p/q" with q > 0, plain "p" when q == 1.
std::string rat_str(const Rat& q);

std::vector<std::string> rat_strs(const std::vector<Rat>& qs);
std::vector<Rat> parse_rats(const std::vector<std::string>& texts);

// binom(a, b) with the convention that it vanishes unless 0 <= b <= a.
// Callers that need the half-integer guard (R-family coefficients) check
// integrality before calling.
Int binomial(long a, long b);

Int factorial(unsigned long n);

bool is_square(const Rat& q);

// Exact square root of a perfect-square rational, positive branch.
// Throws std::domain_error if q is not a square.
Rat rat_sqrt(const Rat& q);

// k-th power with negative exponents allowed (q != 0 in that case).
Rat rat_pow(const Rat& q, long k);

}  // namespace riordan
