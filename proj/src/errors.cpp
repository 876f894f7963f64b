#include "riordan/errors.hpp"

namespace riordan {

const char* errc_name(Errc e) {
    switch (e) {
        case Errc::zero_constant_term: return "ZeroConstantTerm";
        case Errc::divergent_composition: return "DivergentComposition";
        case Errc::not_order_one: return "NotOrderOne";
        case Errc::odd_order: return "OddOrder";
        case Errc::nonsquare_leading_coefficient: return "NonSquareLeadingCoefficient";
        case Errc::bad_constant_term: return "BadConstantTerm";
        case Errc::nonzero_constant: return "NonzeroConstant";
        case Errc::non_integral_half_series: return "NonIntegralHalfSeries";
        case Errc::insufficient_precision: return "InsufficientPrecision";
        case Errc::flavor_mismatch: return "FlavorMismatch";
        case Errc::inconsistent_b_equation: return "InconsistentBEquation";
        case Errc::recurrence_violated: return "RecurrenceViolated";
        case Errc::underdetermined_companion: return "UnderdeterminedCompanion";
        case Errc::no_companion: return "NoCompanion";
        case Errc::not_pseudo_involutory: return "NotPseudoInvolutory";
        case Errc::phi_not_odd: return "PhiNotOdd";
        case Errc::zero_polynomial: return "ZeroPolynomial";
        case Errc::zero_scale: return "ZeroScale";
        case Errc::gamma_vanishes_at_one: return "GammaVanishesAtOne";
        case Errc::not_monic_at_zero: return "NotMonicAtZero";
        case Errc::degenerate_rational: return "DegenerateRational";
        case Errc::not_a_simple_root: return "NotASimpleRoot";
        case Errc::unknown_name: return "UnknownName";
    }
    return "DomainError";
}

}  // namespace riordan
