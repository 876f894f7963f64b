#pragma once

#include <stdexcept>
#include <string>

namespace riordan {

// Every recoverable domain failure in the library throws DomainError with a
// machine-readable kind. Parse failures of external inputs (JSON specs, CLI
// rationals) throw ParseError instead; the CLI maps the two to distinct exit
// codes.
enum class Errc {
    zero_constant_term,
    divergent_composition,
    not_order_one,
    odd_order,
    nonsquare_leading_coefficient,
    bad_constant_term,
    nonzero_constant,
    non_integral_half_series,
    insufficient_precision,
    flavor_mismatch,
    inconsistent_b_equation,
    recurrence_violated,
    underdetermined_companion,
    no_companion,
    not_pseudo_involutory,
    phi_not_odd,
    zero_polynomial,
    zero_scale,
    gamma_vanishes_at_one,
    not_monic_at_zero,
    degenerate_rational,
    not_a_simple_root,
    unknown_name,
};

const char* errc_name(Errc e);

class DomainError : public std::runtime_error {
public:
    DomainError(Errc code, std::string message, long detail_a = -1, long detail_b = -1)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code),
          detail_a_(detail_a),
          detail_b_(detail_b) {}

    Errc code() const { return code_; }
    // Degree / index payload, operation specific (-1 when unused).
    long detail_a() const { return detail_a_; }
    long detail_b() const { return detail_b_; }

private:
    Errc code_;
    long detail_a_;
    long detail_b_;
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace riordan
