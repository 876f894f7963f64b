#include "riordan/laurent.hpp"

#include <sstream>

namespace riordan {

LaurentPoly::LaurentPoly(std::map<long, Rat> terms) : t_(std::move(terms)) {
    for (auto it = t_.begin(); it != t_.end();) {
        if (it->second == 0)
            it = t_.erase(it);
        else
            ++it;
    }
}

LaurentPoly LaurentPoly::from_coeffs(const std::vector<Rat>& coeffs, long shift) {
    std::map<long, Rat> t;
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) t[static_cast<long>(i) + shift] = coeffs[i];
    return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::constant(const Rat& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Rat& c, long exponent) {
    std::map<long, Rat> t;
    if (c != 0) t[exponent] = c;
    return LaurentPoly(std::move(t));
}

Rat LaurentPoly::coeff(long exponent) const {
    auto it = t_.find(exponent);
    return it == t_.end() ? Rat(0) : it->second;
}

long LaurentPoly::min_degree() const {
    if (t_.empty()) throw DomainError(Errc::zero_polynomial, "zero polynomial has no degree");
    return t_.begin()->first;
}

long LaurentPoly::max_degree() const {
    if (t_.empty()) throw DomainError(Errc::zero_polynomial, "zero polynomial has no degree");
    return t_.rbegin()->first;
}

Rat LaurentPoly::at_one() const {
    Rat s(0);
    for (const auto& [e, c] : t_) s += c;
    return s;
}

Rat LaurentPoly::derivative_at_one() const {
    Rat s(0);
    for (const auto& [e, c] : t_) s += Rat(e) * c;
    return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.t_) {
        Rat& slot = t_[e];
        slot += c;
        if (slot == 0) t_.erase(e);
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    std::map<long, Rat> t;
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) t[ea + eb] += ca * cb;
    return LaurentPoly(std::move(t));
}

LaurentPoly operator*(const Rat& c, const LaurentPoly& p) {
    std::map<long, Rat> t;
    if (c != 0)
        for (const auto& [e, pc] : p.t_) t[e] = c * pc;
    return LaurentPoly(std::move(t));
}

LaurentPoly operator-(const LaurentPoly& p) { return Rat(-1) * p; }

std::string LaurentPoly::str(const std::string& var) const {
    if (t_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (!first) out << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) out << "-";
        first = false;
        Rat a = abs(c);
        if (e == 0) {
            out << rat_str(a);
        } else {
            if (a != 1) out << rat_str(a) << "*";
            out << var;
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

Series LaurentPoly::to_series(int prec) const {
    if (has_negative_exponents())
        throw DomainError(Errc::not_monic_at_zero,
                          "Laurent polynomial with negative exponents is not a power series");
    long deg = t_.empty() ? 0 : max_degree();
    if (prec < 0) prec = static_cast<int>(deg);
    if (prec < deg)
        throw DomainError(Errc::insufficient_precision, "polynomial degree exceeds precision",
                          deg, prec);
    std::vector<Rat> v(prec + 1, Rat(0));
    for (const auto& [e, c] : t_) v[static_cast<size_t>(e)] = c;
    return Series(std::move(v));
}

Series eval_laurent(const LaurentPoly& gamma, const Series& s) {
    int n = s.prec();
    Series acc = Series::zero(n);
    if (gamma.is_zero()) return acc;
    if (gamma.has_negative_exponents() && s.at(0) == 0)
        throw DomainError(Errc::zero_constant_term,
                          "negative exponents need an invertible argument");
    // Split into nonnegative part (Horner) and negative part (Horner in 1/s).
    long lo = gamma.min_degree(), hi = gamma.max_degree();
    if (hi >= 0) {
        Series horner = Series::constant(gamma.coeff(hi), n);
        for (long e = hi - 1; e >= 0; --e) {
            horner = mul(horner, s);
            horner = add(horner, Series::constant(gamma.coeff(e), n));
        }
        acc = add(acc, horner);
    }
    if (lo < 0) {
        Series si = recip(s);
        Series horner = Series::constant(gamma.coeff(lo), n);
        for (long e = lo + 1; e <= -1; ++e) {
            horner = mul(horner, si);
            horner = add(horner, Series::constant(gamma.coeff(e), n));
        }
        // horner now holds sum_{e<0} c_e s^{e+1} scaled by one extra 1/s.
        acc = add(acc, mul(horner, si));
    }
    return acc;
}

long darga(const LaurentPoly& gamma) { return gamma.min_degree() + gamma.max_degree(); }

bool is_generalized_palindrome(const LaurentPoly& gamma) {
    long lo = gamma.min_degree(), hi = gamma.max_degree();
    for (long e = lo; lo + hi - e >= e; ++e)
        if (gamma.coeff(e) != gamma.coeff(lo + hi - e)) return false;
    return true;
}

}  // namespace riordan
