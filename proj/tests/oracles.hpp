#pragma once

// Test-only oracles, deliberately independent of the library code paths they
// cross-check.

#include <random>
#include <vector>

#include "riordan/array.hpp"
#include "riordan/series.hpp"

namespace riordan::testing {

// Lagrange inversion: [z^n] fbar = (1/n) [z^{n-1}] (z/f)^n. Redundant route
// for comp_inverse, which solves the triangular system instead.
inline Series lagrange_inverse(const Series& f) {
    int n = f.prec();
    Series base = recip(shift_down(f, 1));  // z/f as a unit series
    std::vector<Rat> g(static_cast<size_t>(n) + 1, Rat(0));
    Series pw = Series::one(n);
    for (int m = 1; m <= n; ++m) {
        pw = mul(pw, base);
        g[static_cast<size_t>(m)] = pw.at(m - 1) / m;
    }
    return Series(std::move(g));
}

// Plain nested-loop convolution over raw vectors.
inline std::vector<Rat> convolve(const std::vector<Rat>& a, const std::vector<Rat>& b, size_t n) {
    std::vector<Rat> out(n + 1, Rat(0));
    for (size_t i = 0; i < a.size() && i <= n; ++i)
        for (size_t j = 0; j < b.size() && i + j <= n; ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Exact product of lower-triangular blocks.
inline TriangularMatrix matrix_product(const TriangularMatrix& a, const TriangularMatrix& b) {
    int rows = std::min(a.row_count(), b.row_count());
    std::vector<std::vector<Rat>> out(rows);
    for (int n = 0; n < rows; ++n) {
        out[n].assign(n + 1, Rat(0));
        for (int k = 0; k <= n; ++k)
            for (int j = k; j <= n; ++j) out[n][k] += a.entry(n, j) * b.entry(j, k);
    }
    return TriangularMatrix(std::move(out));
}

// Inverse of a lower-triangular block with nonzero diagonal, by forward
// substitution.
inline TriangularMatrix matrix_inverse(const TriangularMatrix& a) {
    int rows = a.row_count();
    std::vector<std::vector<Rat>> inv(rows);
    for (int n = 0; n < rows; ++n) inv[n].assign(n + 1, Rat(0));
    for (int k = 0; k < rows; ++k) {
        inv[k][k] = Rat(1) / a.entry(k, k);
        for (int n = k + 1; n < rows; ++n) {
            Rat s(0);
            for (int j = k; j < n; ++j) s += a.entry(n, j) * inv[j][k];
            inv[n][k] = -s / a.entry(n, n);
        }
    }
    return TriangularMatrix(std::move(inv));
}

// Binomial transform b_n = sum_k binom(n, k) h_k; what Pascal does to a
// coefficient column.
inline std::vector<Rat> binomial_transform(const std::vector<Rat>& h) {
    std::vector<Rat> out(h.size(), Rat(0));
    for (size_t n = 0; n < h.size(); ++n)
        for (size_t k = 0; k <= n; ++k)
            out[n] += Rat(binomial(static_cast<long>(n), static_cast<long>(k))) * h[k];
    return out;
}

inline Series random_series(std::mt19937_64& rng, int prec, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> coeff(lo, hi);
    std::vector<Rat> v(static_cast<size_t>(prec) + 1);
    for (auto& x : v) x = Rat(coeff(rng));
    return Series(std::move(v));
}

inline Series random_unit(std::mt19937_64& rng, int prec) {
    Series s = random_series(rng, prec);
    std::vector<Rat> v = s.coeffs();
    v[0] = Rat(1);
    return Series(std::move(v));
}

inline Series random_order_one(std::mt19937_64& rng, int prec, bool monic = true) {
    Series s = random_series(rng, prec);
    std::vector<Rat> v = s.coeffs();
    v[0] = Rat(0);
    if (monic || v[1] == 0) v[1] = Rat(1);
    return Series(std::move(v));
}

}  // namespace riordan::testing
