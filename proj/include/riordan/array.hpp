#pragma once

#include <string>
#include <vector>

#include "riordan/series.hpp"

namespace riordan {

enum class Flavor { ordinary, exponential };

const char* flavor_name(Flavor f);

// Lower triangular block of exact rationals: row n carries n+1 entries.
class TriangularMatrix {
public:
    explicit TriangularMatrix(std::vector<std::vector<Rat>> rows);

    int row_count() const { return static_cast<int>(rows_.size()); }
    int max_row() const { return row_count() - 1; }
    const Rat& entry(int n, int k) const;
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }

    bool unit_diagonal() const;

    std::string to_csv() const;
    std::string to_json() const;  // rows of decimal strings of exact rationals

    bool operator==(const TriangularMatrix& other) const = default;

private:
    std::vector<std::vector<Rat>> rows_;
};

// Group element (g, f): column k of the ordinary materialization has
// generating function g f^k; exponential flavor scales entry (n, k) by
// n!/k!. Requires g(0) = 1, order(f) = 1, f'(0) = +-1.
struct RiordanArray {
    Series g;
    Series f;
    Flavor flavor = Flavor::ordinary;

    RiordanArray(Series g_, Series f_, Flavor flavor_ = Flavor::ordinary);

    static RiordanArray identity(int prec, Flavor flavor = Flavor::ordinary);
    static RiordanArray pascal(int prec);  // (1/(1-z), z/(1-z))

    int prec() const { return std::min(g.prec(), f.prec()); }
};

TriangularMatrix entries(const RiordanArray& d, int n);

// (g, f)(G, F) = (g * (G o f), F o f); materializes to the matrix product.
RiordanArray multiply(const RiordanArray& a, const RiordanArray& b);

RiordanArray inverse(const RiordanArray& d);

// (1, -z) d^{-1} (1, -z); fixed points are exactly the pseudo-involutions.
RiordanArray pseudo_inverse(const RiordanArray& d);

// Certifies g o (-f) = 1/g and comp_inverse(f) = (-z) o f o (-z) through
// coefficient index n. The certificate is precision-bounded: both components
// must store at least n coefficients.
bool is_pseudo_involution(const RiordanArray& d, int n);

// g even and f odd within stored precision.
bool is_checkerboard(const RiordanArray& d);

// Generating function of d applied to the coefficient column of h, i.e.
// g * (h o f).
Series apply_sequence(const RiordanArray& d, const Series& h);

}  // namespace riordan
