#include "riordan/rational_g.hpp"

#include <sstream>

#include "riordan/chebyshev.hpp"

namespace riordan {

BivariatePoly::BivariatePoly(std::map<std::pair<long, long>, Rat> terms) : t_(std::move(terms)) {
    for (auto it = t_.begin(); it != t_.end();) {
        if (it->second == 0)
            it = t_.erase(it);
        else
            ++it;
    }
}

BivariatePoly BivariatePoly::monomial(const Rat& c, long i, long j) {
    std::map<std::pair<long, long>, Rat> t;
    if (c != 0) t[{i, j}] = c;
    return BivariatePoly(std::move(t));
}

Rat BivariatePoly::coeff(long i, long j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Rat(0) : it->second;
}

long BivariatePoly::degree_x() const {
    long d = -1;
    for (const auto& [ij, c] : t_) d = std::max(d, ij.first);
    return d;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& other) {
    for (const auto& [ij, c] : other.t_) {
        Rat& slot = t_[ij];
        slot += c;
        if (slot == 0) t_.erase(ij);
    }
    return *this;
}

BivariatePoly operator-(const BivariatePoly& p) { return Rat(-1) * p; }

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    std::map<std::pair<long, long>, Rat> t;
    for (const auto& [ij, c] : a.t_)
        for (const auto& [kl, d] : b.t_)
            t[{ij.first + kl.first, ij.second + kl.second}] += c * d;
    return BivariatePoly(std::move(t));
}

BivariatePoly operator*(const Rat& c, const BivariatePoly& p) {
    std::map<std::pair<long, long>, Rat> t;
    if (c != 0)
        for (const auto& [ij, pc] : p.t_) t[ij] = c * pc;
    return BivariatePoly(std::move(t));
}

BivariatePoly BivariatePoly::negate_x() const {
    std::map<std::pair<long, long>, Rat> t;
    for (const auto& [ij, c] : t_) t[ij] = ij.first % 2 ? -c : c;
    return BivariatePoly(std::move(t));
}

BivariatePoly BivariatePoly::negate_y() const {
    std::map<std::pair<long, long>, Rat> t;
    for (const auto& [ij, c] : t_) t[ij] = ij.second % 2 ? -c : c;
    return BivariatePoly(std::move(t));
}

BivariatePoly BivariatePoly::derivative_x() const {
    std::map<std::pair<long, long>, Rat> t;
    for (const auto& [ij, c] : t_)
        if (ij.first > 0) t[{ij.first - 1, ij.second}] = Rat(ij.first) * c;
    return BivariatePoly(std::move(t));
}

Series BivariatePoly::eval_at_series(const Series& a) const {
    int n = a.prec();
    auto coeff_series = [&](long i) {
        std::vector<Rat> v(static_cast<size_t>(n) + 1, Rat(0));
        for (const auto& [ij, c] : t_)
            if (ij.first == i && ij.second <= n) v[static_cast<size_t>(ij.second)] = c;
        return Series(std::move(v));
    };
    long dx = std::max(degree_x(), 0L);
    Series acc = coeff_series(dx);
    for (long i = dx - 1; i >= 0; --i) acc = add(mul(acc, a), coeff_series(i));
    return acc;
}

LaurentPoly BivariatePoly::coeff_of_x(long i) const {
    std::map<long, Rat> t;
    for (const auto& [ij, c] : t_)
        if (ij.first == i) t[ij.second] = c;
    return LaurentPoly(std::move(t));
}

std::string BivariatePoly::str(const std::string& xvar, const std::string& yvar) const {
    if (t_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [ij, c] : t_) {
        if (!first)
            out << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0)
            out << "-";
        first = false;
        Rat a = abs(c);
        bool has_var = ij.first != 0 || ij.second != 0;
        if (!has_var || a != 1) out << rat_str(a);
        bool star = a != 1;
        if (ij.first != 0) {
            out << (star ? "*" : "") << xvar;
            if (ij.first != 1) out << "^" << ij.first;
            star = true;
        }
        if (ij.second != 0) {
            out << (star ? "*" : "") << yvar;
            if (ij.second != 1) out << "^" << ij.second;
        }
    }
    return out.str();
}

namespace {

void check_rational_pair(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero() || p.has_negative_exponents() || q.has_negative_exponents() ||
        p.coeff(0) != 1 || q.coeff(0) != 1)
        throw DomainError(Errc::not_monic_at_zero,
                          "numerator and denominator must be polynomials with p(0) = q(0) = 1");
    if (p == q)
        throw DomainError(Errc::degenerate_rational,
                          "p = q gives g = 1; the symmetric reduction is identically zero");
}

}  // namespace

BivariatePoly symmetrize(const LaurentPoly& p, const LaurentPoly& q) {
    check_rational_pair(p, q);
    long d = std::max(p.max_degree(), q.max_degree());
    // Power sums u^m + v^m as polynomials in (x, y) = (u + v, uv):
    // s_0 = 2, s_1 = x, s_m = x s_{m-1} - y s_{m-2}.
    std::vector<BivariatePoly> s;
    s.push_back(BivariatePoly::monomial(Rat(2), 0, 0));
    s.push_back(BivariatePoly::monomial(Rat(1), 1, 0));
    BivariatePoly x = BivariatePoly::monomial(Rat(1), 1, 0);
    BivariatePoly y = BivariatePoly::monomial(Rat(1), 0, 1);
    for (long m = 2; m <= d; ++m) s.push_back(x * s[m - 1] - y * s[m - 2]);

    // r_{ab} = p_a p_b - q_a q_b; the (a, b) + (b, a) pair contributes
    // r_{ab} y^b s_{a-b}, the diagonal r_{aa} y^a.
    BivariatePoly result;
    for (long a = 0; a <= d; ++a) {
        for (long b = 0; b <= a; ++b) {
            Rat r = p.coeff(a) * p.coeff(b) - q.coeff(a) * q.coeff(b);
            if (r == 0) continue;
            if (a == b)
                result += BivariatePoly::monomial(r, 0, a);
            else
                result += r * (BivariatePoly::monomial(Rat(1), 0, b) * s[a - b]);
        }
    }
    if (result.coeff(0, 0) != 0)
        throw std::logic_error("symmetrize: S(0,0) must vanish for monic-at-zero p, q");
    return result;
}

BivariatePoly b_equation(const LaurentPoly& p, const LaurentPoly& q) {
    // g(-f) = 1/g unfolds to S(z - f, -z f) = 0, and z - f = -(z B_f) o (z f),
    // so x = z B_f(z) is the power-series root of S(-x, -z).
    return symmetrize(p, q).negate_x().negate_y();
}

BivariatePoly ChebEquation::to_bivariate() const {
    BivariatePoly out;
    for (size_t i = 0; i < coeff_by_ypow.size(); ++i) {
        Series c = coeff_by_ypow[i].project();
        for (int j = 0; j <= c.prec(); ++j)
            out += BivariatePoly::monomial(c.at(j), static_cast<long>(i), j);
    }
    return out;
}

Series ChebEquation::eval(const Series& b) const { return to_bivariate().eval_at_series(b); }

ChebEquation b_equation_cheb(const LaurentPoly& p, const LaurentPoly& q) {
    check_rational_pair(p, q);
    long d = std::max(p.max_degree(), q.max_degree());
    std::vector<PolyFamilyRow> r_rows;
    for (long k = 0; k <= d; ++k) r_rows.push_back(R_poly(k));
    auto alpha = [&](long k, long j) -> Rat {
        const auto& row = r_rows[static_cast<size_t>(k)].coeffs;
        return j < static_cast<long>(row.size()) ? row[static_cast<size_t>(j)] : Rat(0);
    };
    // sum_{n,k} (-1)^n (c_n c_{n+k} - d_n d_{n+k}) z^{n+k/2} R_k(-sqrt(z) y):
    // the monomial y^j picks up alpha_{k,j} (-1)^j at t-exponent 2n + k + j.
    std::vector<std::vector<Rat>> acc;  // [j][t-exponent]
    long tmax = 4 * d;
    auto slot = [&](size_t j) -> std::vector<Rat>& {
        if (acc.size() <= j) acc.resize(j + 1, std::vector<Rat>(tmax + 1, Rat(0)));
        return acc[j];
    };
    slot(0);
    for (long n = 0; n <= d; ++n) {
        for (long k = 0; n + k <= d; ++k) {
            Rat w = p.coeff(n) * p.coeff(n + k) - q.coeff(n) * q.coeff(n + k);
            if (n % 2) w = -w;
            if (w == 0) continue;
            for (long j = 0; j <= k; ++j) {
                Rat a = alpha(k, j);
                if (a == 0) continue;
                Rat term = w * a;
                if (j % 2) term = -term;
                slot(static_cast<size_t>(j))[static_cast<size_t>(2 * n + k + j)] += term;
            }
        }
    }
    ChebEquation eq;
    for (auto& v : acc) eq.coeff_by_ypow.push_back(HalfSeries(std::move(v)));
    return eq;
}

Series solve_series_root(const BivariatePoly& phi, int n) {
    if (phi.coeff(0, 0) != 0)
        throw DomainError(Errc::not_a_simple_root, "x = 0 is not a root of Phi(x, 0) at z = 0");
    BivariatePoly dphi = phi.derivative_x();
    if (dphi.coeff(0, 0) == 0)
        throw DomainError(Errc::not_a_simple_root, "dPhi/dx vanishes at the origin");
    // Newton in the z-adic metric: a guess right mod z^{m+1} comes back right
    // mod z^{2m+2}. The padded zeros only extend the guess, never a claim.
    Series x = Series::zero(0);
    int correct = 0;
    while (correct < n) {
        int next = std::min(2 * correct + 1, n);
        Series xt = x.padded(next);
        Series val = phi.eval_at_series(xt);
        Series der = dphi.eval_at_series(xt);
        x = sub(xt, mul(val, recip(der)));
        correct = next;
    }
    if (!phi.eval_at_series(x).is_zero())
        throw std::logic_error("solve_series_root: Newton residual nonzero at target precision");
    return x;
}

}  // namespace riordan
