#include "riordan/half_series.hpp"

#include <algorithm>

namespace riordan {

HalfSeries::HalfSeries(std::vector<Rat> tcoeffs) : c_(std::move(tcoeffs)) {
    if (c_.empty()) throw std::invalid_argument("HalfSeries: needs at least the constant slot");
}

HalfSeries HalfSeries::zero(int tprec) {
    return HalfSeries(std::vector<Rat>(tprec + 1, Rat(0)));
}

HalfSeries HalfSeries::lift(const Series& a) {
    std::vector<Rat> v(2 * a.prec() + 2, Rat(0));
    for (int i = 0; i <= a.prec(); ++i) v[2 * static_cast<size_t>(i)] = a.at(i);
    return HalfSeries(std::move(v));
}

HalfSeries HalfSeries::substitute_sqrt(const Series& a) { return HalfSeries(a.coeffs()); }

const Rat& HalfSeries::tcoeff(int j) const {
    if (j < 0 || j > tprec())
        throw DomainError(Errc::insufficient_precision, "half-series slot beyond precision", j,
                          tprec());
    return c_[static_cast<size_t>(j)];
}

bool HalfSeries::is_integral() const {
    for (size_t j = 1; j < c_.size(); j += 2)
        if (c_[j] != 0) return false;
    return true;
}

Series HalfSeries::project() const {
    for (size_t j = 1; j < c_.size(); j += 2)
        if (c_[j] != 0)
            throw DomainError(Errc::non_integral_half_series,
                              "nonzero coefficient at half-integer exponent " +
                                  std::to_string(j) + "/2",
                              static_cast<long>(j));
    std::vector<Rat> v(static_cast<size_t>(zprec()) + 1);
    for (size_t i = 0; i < v.size(); ++i) v[i] = c_[2 * i];
    return Series(std::move(v));
}

HalfSeries& HalfSeries::operator+=(const HalfSeries& other) {
    size_t n = std::min(c_.size(), other.c_.size());
    c_.resize(n);
    for (size_t i = 0; i < n; ++i) c_[i] += other.c_[i];
    return *this;
}

HalfSeries operator*(const HalfSeries& a, const HalfSeries& b) {
    size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<Rat> v(n, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; i + j < n; ++j)
            if (b.c_[j] != 0) v[i + j] += a.c_[i] * b.c_[j];
    }
    return HalfSeries(std::move(v));
}

HalfSeries operator*(const Rat& c, HalfSeries a) {
    for (auto& x : a.c_) x *= c;
    return a;
}

}  // namespace riordan
