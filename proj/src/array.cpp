#include "riordan/array.hpp"

#include <sstream>

namespace riordan {

const char* flavor_name(Flavor f) {
    return f == Flavor::ordinary ? "ordinary" : "exponential";
}

TriangularMatrix::TriangularMatrix(std::vector<std::vector<Rat>> rows) : rows_(std::move(rows)) {
    for (size_t n = 0; n < rows_.size(); ++n)
        if (rows_[n].size() != n + 1)
            throw std::invalid_argument("TriangularMatrix: row " + std::to_string(n) +
                                        " must have " + std::to_string(n + 1) + " entries");
}

const Rat& TriangularMatrix::entry(int n, int k) const {
    static const Rat zero(0);
    if (n < 0 || n >= row_count()) throw std::out_of_range("TriangularMatrix::entry row");
    if (k < 0 || k > n) return zero;
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

bool TriangularMatrix::unit_diagonal() const {
    for (int n = 0; n < row_count(); ++n)
        if (entry(n, n) != 1) return false;
    return true;
}

std::string TriangularMatrix::to_csv() const {
    std::ostringstream out;
    for (const auto& row : rows_) {
        for (size_t k = 0; k < row.size(); ++k) {
            if (k) out << ",";
            out << rat_str(row[k]);
        }
        out << "\n";
    }
    return out.str();
}

std::string TriangularMatrix::to_json() const {
    std::ostringstream out;
    out << "[";
    for (size_t n = 0; n < rows_.size(); ++n) {
        if (n) out << ",";
        out << "[";
        for (size_t k = 0; k < rows_[n].size(); ++k) {
            if (k) out << ",";
            out << '"' << rat_str(rows_[n][k]) << '"';
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

RiordanArray::RiordanArray(Series g_, Series f_, Flavor flavor_)
    : g(std::move(g_)), f(std::move(f_)), flavor(flavor_) {
    if (g.at(0) != 1)
        throw DomainError(Errc::bad_constant_term, "Riordan array requires g(0) = 1");
    auto ord = f.order();
    if (!ord.has_value() || *ord != 1 || (f.at(1) != 1 && f.at(1) != -1))
        throw DomainError(Errc::not_order_one,
                          "Riordan array requires order(f) = 1 with f'(0) = +-1");
}

RiordanArray RiordanArray::identity(int prec, Flavor flavor) {
    return RiordanArray(Series::one(prec), Series::identity(prec), flavor);
}

RiordanArray RiordanArray::pascal(int prec) {
    Series g = recip(sub(Series::one(prec), Series::identity(prec)));
    return RiordanArray(g, shift_up(g, 1).truncated(prec));
}

TriangularMatrix entries(const RiordanArray& d, int n) {
    if (n > d.prec())
        throw DomainError(Errc::insufficient_precision, "matrix rows beyond stored precision", n,
                          d.prec());
    std::vector<std::vector<Rat>> rows(n + 1);
    for (int r = 0; r <= n; ++r) rows[r].assign(r + 1, Rat(0));
    Series col = d.g.truncated(n);
    for (int k = 0; k <= n; ++k) {
        if (k > 0) col = mul(col, d.f.truncated(n));
        for (int r = k; r <= n; ++r) rows[r][k] = col.at(r);
    }
    if (d.flavor == Flavor::exponential) {
        for (int r = 0; r <= n; ++r) {
            // Multiplier for column k is the integer r!/k!, accumulated
            // rightmost column first.
            Int ratio(1);
            for (int k = r; k >= 0; --k) {
                rows[r][k] *= Rat(ratio);
                ratio *= k;  // r!/(k-1)! for the next iteration
            }
        }
    }
    return TriangularMatrix(std::move(rows));
}

RiordanArray multiply(const RiordanArray& a, const RiordanArray& b) {
    if (a.flavor != b.flavor)
        throw DomainError(Errc::flavor_mismatch, "cannot multiply arrays of different flavors");
    return RiordanArray(mul(a.g, compose(b.g, a.f)), compose(b.f, a.f), a.flavor);
}

RiordanArray inverse(const RiordanArray& d) {
    Series fbar = comp_inverse(d.f);
    return RiordanArray(recip(compose(d.g, fbar)), fbar, d.flavor);
}

RiordanArray pseudo_inverse(const RiordanArray& d) {
    Series fbar = comp_inverse(d.f);
    Series fhat = negate(reflect(fbar));  // (-z) o fbar o (-z)
    return RiordanArray(compose(recip(d.g), reflect(fbar)), fhat, d.flavor);
}

bool is_pseudo_involution(const RiordanArray& d, int n) {
    if (d.prec() < n)
        throw DomainError(Errc::insufficient_precision,
                          "pseudo-involution certificate needs n stored coefficients", n,
                          d.prec());
    // g o (-f) = 1/g, i.e. g * (g o (-f)) = 1.
    Series lhs = mul(d.g, compose(d.g, negate(d.f)));
    if (!prefix_equal(lhs, Series::one(n), n)) return false;
    // comp_inverse(f) = (-z) o f o (-z) = -f(-z).
    Series fbar = comp_inverse(d.f);
    return prefix_equal(fbar, negate(reflect(d.f)), n);
}

bool is_checkerboard(const RiordanArray& d) {
    for (int i = 1; i <= d.g.prec(); i += 2)
        if (d.g.at(i) != 0) return false;
    for (int i = 0; i <= d.f.prec(); i += 2)
        if (d.f.at(i) != 0) return false;
    return true;
}

Series apply_sequence(const RiordanArray& d, const Series& h) {
    return mul(d.g, compose(h, d.f));
}

}  // namespace riordan
