#include "riordan/chebyshev.hpp"

#include <stdexcept>

namespace riordan {

namespace {

std::vector<Rat> trimmed(std::vector<Rat> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

// Three-term recurrence with the given base cases, over exact rationals.
std::vector<Rat> cheb_recurrence(long n, std::vector<Rat> prev, std::vector<Rat> cur) {
    // prev = row 0, cur = row 1; next = 2 z cur - prev.
    if (n == 0) return prev;
    for (long i = 1; i < n; ++i) {
        std::vector<Rat> next(cur.size() + 1, Rat(0));
        for (size_t k = 0; k < cur.size(); ++k) next[k + 1] = 2 * cur[k];
        for (size_t k = 0; k < prev.size(); ++k) next[k] -= prev[k];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

PolyFamilyRow cheb_U(long n) {
    if (n < 0) {
        // U_{-m-1} = -U_{m-1}; in particular U_{-1} = 0.
        if (n == -1) return PolyFamilyRow{PolyFamily::U, n, {}};
        PolyFamilyRow row = cheb_U(-n - 2);
        for (auto& c : row.coeffs) c = -c;
        row.index = n;
        return row;
    }
    auto coeffs = cheb_recurrence(n, {Rat(1)}, {Rat(0), Rat(2)});
    return PolyFamilyRow{PolyFamily::U, n, trimmed(std::move(coeffs))};
}

PolyFamilyRow cheb_T(long n) {
    if (n < 0) n = -n;  // T_{-n} = T_n
    auto coeffs = cheb_recurrence(n, {Rat(1)}, {Rat(0), Rat(1)});
    return PolyFamilyRow{PolyFamily::T, n, trimmed(std::move(coeffs))};
}

PolyFamilyRow p_poly(long n) {
    if (n == -1) return PolyFamilyRow{PolyFamily::p, n, {}};
    long m = n < -1 ? -n - 2 : n;
    std::vector<Rat> coeffs(m + 1);
    for (long k = 0; k <= m; ++k)
        coeffs[k] = Rat(m + 1) / Rat(k + 1) * Rat(binomial(m + k + 1, 2 * k + 1));
    return PolyFamilyRow{PolyFamily::p, n, trimmed(std::move(coeffs))};
}

PolyFamilyRow P_poly(long n) {
    if (n < 0) {
        PolyFamilyRow row = P_poly(-n - 1);
        for (auto& c : row.coeffs) c = -c;
        row.index = n;
        return row;
    }
    std::vector<Rat> coeffs(n + 1);
    for (long k = 0; k <= n; ++k)
        coeffs[k] = Rat(2 * n + 1) / Rat(2 * k + 1) * Rat(binomial(n + k, 2 * k));
    return PolyFamilyRow{PolyFamily::P, n, trimmed(std::move(coeffs))};
}

PolyFamilyRow Q_poly(long n) {
    if (n < 0) throw std::invalid_argument("Q_poly: index must be nonnegative");
    std::vector<Rat> coeffs(n + 1);
    for (long k = 0; k <= n; ++k)
        coeffs[k] = Rat(binomial(n + k, 2 * k)) + Rat(binomial(n + k - 1, 2 * k));
    return PolyFamilyRow{PolyFamily::Q, n, trimmed(std::move(coeffs))};
}

PolyFamilyRow R_poly(long n) {
    if (n < 0) throw std::invalid_argument("R_poly: index must be nonnegative");
    std::vector<Rat> coeffs(n + 1, Rat(0));
    for (long k = 0; k <= n; ++k) {
        if ((n + k) % 2 != 0) continue;  // binom of a half-integer is set to 0
        long half = (n + k) / 2;
        coeffs[k] = Rat(binomial(half, k)) + Rat(binomial(half - 1, k));
    }
    return PolyFamilyRow{PolyFamily::R, n, trimmed(std::move(coeffs))};
}

std::vector<std::vector<Rat>> family_triangle(PolyFamily fam, long n) {
    std::vector<std::vector<Rat>> rows;
    for (long i = 0; i <= n; ++i) {
        PolyFamilyRow row{fam, i, {}};
        switch (fam) {
            case PolyFamily::p: row = p_poly(i); break;
            case PolyFamily::P: row = P_poly(i); break;
            case PolyFamily::Q: row = Q_poly(i); break;
            case PolyFamily::R: row = R_poly(i); break;
            default: throw std::invalid_argument("family_triangle: p, P, Q, R only");
        }
        row.coeffs.resize(i + 1, Rat(0));
        rows.push_back(std::move(row.coeffs));
    }
    return rows;
}

const char* family_name(PolyFamily fam) {
    switch (fam) {
        case PolyFamily::p: return "p";
        case PolyFamily::P: return "P";
        case PolyFamily::Q: return "Q";
        case PolyFamily::R: return "R";
        case PolyFamily::T: return "T";
        case PolyFamily::U: return "U";
    }
    return "?";
}

}  // namespace riordan
