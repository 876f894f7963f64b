#include "riordan/bfunction.hpp"

#include <sstream>

namespace riordan {

std::vector<Rat> BSequence::beta() const {
    std::vector<Rat> out(b.size());
    for (size_t n = 0; n < b.size(); ++n)
        out[n] = b[n] * Rat(factorial(2 * static_cast<unsigned long>(n) + 1));
    return out;
}

std::string BSequence::to_json(bool with_beta) const {
    std::ostringstream out;
    out << "{\"origin\":\"" << origin << "\",\"b\":[";
    for (size_t i = 0; i < b.size(); ++i) {
        if (i) out << ",";
        out << '"' << rat_str(b[i]) << '"';
    }
    out << "]";
    if (with_beta) {
        out << ",\"beta\":[";
        auto bv = beta();
        for (size_t i = 0; i < bv.size(); ++i) {
            if (i) out << ",";
            out << '"' << rat_str(bv[i]) << '"';
        }
        out << "]";
    }
    out << "}";
    return out.str();
}

long first_difference(const BSequence& a, const BSequence& b) {
    size_t n = std::min(a.b.size(), b.b.size());
    for (size_t i = 0; i < n; ++i)
        if (a.b[i] != b.b[i]) return static_cast<long>(i);
    return -1;
}

BSequence b_from_f(const Series& f, int n) {
    auto ord = f.order();
    if (!ord.has_value() || *ord != 1 || f.at(1) != 1)
        throw DomainError(Errc::not_order_one, "B-equation requires order(f) = 1, f'(0) = 1");
    int need = 2 * n + 2;
    if (f.prec() < need)
        throw DomainError(Errc::insufficient_precision,
                          "b_from_f needs prec(f) >= 2n + 2", need, f.prec());
    int p = f.prec();
    Series zf = shift_up(f, 1).truncated(p);
    Series lhs = sub(f, Series::identity(p));
    Series rhs = Series::zero(p);
    Series pw = zf;  // (z f)^{j+1}
    std::vector<Rat> b;
    b.reserve(n + 1);
    for (int j = 0; j <= n; ++j) {
        int m = 2 * (j + 1);
        // (z f)^{j+1} = z^{2(j+1)} (1 + ...), so the pivot is 1.
        Rat bj = lhs.at(m) - rhs.at(m);
        b.push_back(bj);
        rhs = add(rhs, scale(pw, bj));
        if (j < n) pw = mul(pw, zf);
    }
    // Everything not used as a pivot is a consistency equation.
    Series resid = sub(lhs, rhs);
    int check_to = std::min(p, 2 * n + 3);
    for (int m = 0; m <= check_to; ++m)
        if (resid.at(m) != 0)
            throw DomainError(Errc::inconsistent_b_equation,
                              "B-equation has no solution at degree " + std::to_string(m) +
                                  "; f is not pseudo-involutory",
                              m);
    return BSequence{std::move(b), "definition"};
}

BSequence b_from_matrix(const TriangularMatrix& m) {
    if (!m.unit_diagonal())
        throw std::invalid_argument("b_from_matrix: matrix must have a unit diagonal");
    int top = m.max_row();
    // b_j is pinned by the (n, k) = (2j+1, 0) instance, where the summand
    // b_j d_{j+1,j+1} hits the diagonal.
    std::vector<Rat> b;
    for (int j = 0; 2 * j + 2 <= top; ++j) {
        int n = 2 * j + 1;
        Rat s = m.entry(n, 0);
        for (int i = 0; i < j; ++i) s += b[static_cast<size_t>(i)] * m.entry(n - i, i + 1);
        b.push_back(m.entry(n + 1, 1) - s);
    }
    // Verify every instance whose b-range the extraction covered.
    for (int n = 0; n + 1 <= top; ++n) {
        for (int k = 0; k <= n; ++k) {
            long jmax = (n - k - 1) / 2;
            if (n - k - 1 < 0) jmax = -1;
            if (jmax >= static_cast<long>(b.size())) continue;
            Rat s = m.entry(n, k);
            for (long j = 0; j <= jmax; ++j)
                s += b[static_cast<size_t>(j)] * m.entry(n - static_cast<int>(j),
                                                         k + static_cast<int>(j) + 1);
            if (s != m.entry(n + 1, k + 1))
                throw DomainError(Errc::recurrence_violated,
                                  "antidiagonal recurrence fails at (" + std::to_string(n) + "," +
                                      std::to_string(k) + ")",
                                  n, k);
        }
    }
    return BSequence{std::move(b), "matrix"};
}

std::vector<Rat> beta_from_b(const BSequence& b) { return b.beta(); }

bool beta_check_matrix(const TriangularMatrix& m, const std::vector<Rat>& beta) {
    if (!m.unit_diagonal())
        throw std::invalid_argument("beta_check_matrix: matrix must have a unit diagonal");
    int top = m.max_row();
    long needed = top >= 2 ? (top - 2) / 2 : -1;
    if (needed >= static_cast<long>(beta.size()))
        throw DomainError(Errc::insufficient_precision,
                          "beta list too short for the matrix instances", needed,
                          static_cast<long>(beta.size()) - 1);
    auto alpha = [&](int n, int k) -> Rat {
        if (k > n) return Rat(0);
        return m.entry(n, k) / Rat(binomial(n, k));
    };
    for (int n = 0; n + 1 <= top; ++n) {
        for (int k = 0; k <= n; ++k) {
            Rat s = alpha(n, k);
            for (long j = 0; 2 * j + 1 <= n - k; ++j)
                s += Rat(binomial(n - k, 2 * j + 1)) * beta[static_cast<size_t>(j)] *
                     alpha(n - static_cast<int>(j), k + static_cast<int>(j) + 1);
            if (s != alpha(n + 1, k + 1)) return false;
        }
    }
    return true;
}

Series companion_of(const Series& g, int n) {
    if (g.at(0) != 1)
        throw DomainError(Errc::bad_constant_term, "companion requires g(0) = 1");
    Series gm1 = sub(g, Series::one(g.prec()));
    auto j0opt = gm1.order();
    if (!j0opt.has_value())
        // g = 1 within precision: g * (g o (-f)) = 1 holds for every odd
        // conjugate f, so nothing pins the coefficients.
        throw DomainError(Errc::underdetermined_companion,
                          "g = 1 leaves every companion coefficient free", 2);
    int j0 = *j0opt;
    if (j0 % 2 == 0)
        // The degree-j0 equation reads g_{j0} (1 + (-1)^{j0}) = 0 with no
        // unknown available; even j0 makes it 2 g_{j0} != 0.
        throw DomainError(Errc::no_companion,
                          "consistency equation fails at degree " + std::to_string(j0), j0);
    int need = n + j0 - 1;
    if (g.prec() < need)
        throw DomainError(Errc::insufficient_precision,
                          "companion to index n needs prec(g) >= n + order(g-1) - 1", need,
                          g.prec());
    // Unknown f_t enters equation degree m = t + j0 - 1 with pivot
    // -j0 g_{j0} (odd j0), so the system is triangular with a constant pivot
    // and the solution is unique. The generic j0 = 1 case is solved by
    // Newton lifting on Phi(f) = g (g o (-f)) - 1 (same system, quadratic
    // convergence); larger odd j0 falls back to the per-degree solve.
    Series result = Series::identity(1);
    if (j0 == 1) {
        std::vector<Rat> dg(static_cast<size_t>(g.prec()), Rat(0));
        for (int k = 1; k <= g.prec(); ++k) dg[k - 1] = Rat(k) * g.at(k);
        Series gprime(std::move(dg));  // prec(g) - 1
        int correct = 1;  // f matches the companion mod z^{correct+1}
        Series f = Series::identity(1);
        while (correct < n) {
            int next = std::min(2 * correct + 1, n);
            Series fk = f.padded(next);
            Series neg_fk = negate(fk);
            Series phi =
                sub(mul(g.truncated(next), compose(g.truncated(next), neg_fk)),
                    Series::one(next));
            // phi has order > correct; divide it out so the unit factor only
            // needs precision next - correct - 1.
            Series unit = recip(mul(g.truncated(next - 1),
                                    compose(gprime.truncated(next - 1),
                                            neg_fk.truncated(next - 1))));
            Series correction =
                shift_up(mul(shift_down(phi, correct + 1), unit), correct + 1).truncated(next);
            f = add(fk, correction);
            correct = next;
        }
        result = f;
    } else {
        std::vector<Rat> f(static_cast<size_t>(n) + 1, Rat(0));
        f[1] = Rat(1);
        Rat pivot = Rat(-j0) * g.at(j0);
        for (int t = 2; t <= n; ++t) {
            int m = t + j0 - 1;
            Series partial(
                std::vector<Rat>(f.begin(), f.begin() + std::min<size_t>(f.size(), m + 1)));
            Series lhs = mul(g.truncated(m), compose(g.truncated(m), negate(partial.padded(m))));
            f[static_cast<size_t>(t)] = -lhs.at(m) / pivot;
        }
        result = Series(std::move(f));
    }
    // Residual of the first condition over the full solved window.
    Series lhs = mul(g.truncated(need), compose(g.truncated(need), negate(result.padded(need))));
    for (int m = 0; m <= need; ++m)
        if (lhs.at(m) != (m == 0 ? Rat(1) : Rat(0)))
            throw DomainError(Errc::no_companion,
                              "first pseudo-involution condition fails at degree " +
                                  std::to_string(m),
                              m);
    // Mirror condition: comp_inverse(f) = -f(-z).
    Series fbar = comp_inverse(result);
    Series mirror = negate(reflect(result));
    for (int m = 0; m <= n; ++m)
        if (fbar.at(m) != mirror.at(m))
            throw DomainError(Errc::no_companion,
                              "mirror condition fails at degree " + std::to_string(m), m);
    return result;
}

Series pseudo_half(const Series& f) {
    auto ord = f.order();
    if (!ord.has_value() || *ord != 1 || f.at(1) != 1)
        throw DomainError(Errc::not_order_one, "pseudo-half requires order(f) = 1, f'(0) = 1");
    int certifiable = (f.prec() - 2) / 2;
    try {
        b_from_f(f, certifiable);
    } catch (const DomainError& e) {
        if (e.code() == Errc::inconsistent_b_equation)
            throw DomainError(Errc::not_pseudo_involutory,
                              "pseudo-half is defined only for pseudo-involutory f", e.detail_a());
        throw;
    }
    return pseudo_inverse_series(sqrt_series(shift_up(f, 1)));
}

BSequence b_from_half(const Series& h) {
    // Any invertible h works: f = h o pseudo_inverse(h) always has f'(0) = 1,
    // and the inner series below has leading coefficient h'(0)^2 != 0.
    auto ord = h.order();
    if (!ord.has_value() || *ord != 1)
        throw DomainError(Errc::not_order_one, "b_from_half requires an invertible h (order 1)");
    ParityParts parts = parity_parts(h);
    int m = std::min(parts.odd.prec(), parts.even.prec());
    Series ho = parts.odd.truncated(m), he = parts.even.truncated(m);
    Series inner = sub(shift_up(mul(ho, ho), 1), shift_up(mul(he, he), 2).truncated(m + 1));
    Series inv = comp_inverse(inner);
    Series zb = compose(shift_up(scale(he, Rat(2)), 1).truncated(m + 1), inv);
    Series b = shift_down(zb, 1);
    return BSequence{b.coeffs(), "half"};
}

Series half_from_b(const Series& b) {
    Series b2 = stretch(b, 2);           // B(z^2)
    Series zb2 = shift_up(b2, 1);        // z B(z^2)
    Series z2b2 = shift_up(b2, 2);       // z^2 B(z^2)
    int p = zb2.prec();
    Series inside = add(Series::one(p), scale(mul(zb2, zb2), Rat(1, 4)));
    return add(shift_up(sqrt_series(inside), 1).truncated(p), scale(z2b2.truncated(p), Rat(1, 2)));
}

Series g_family(const Series& f, const Series& phi) {
    for (int i = 0; i <= phi.prec(); i += 2)
        if (phi.at(i) != 0)
            throw DomainError(Errc::phi_not_odd,
                              "phi has a nonzero even coefficient at index " + std::to_string(i),
                              i);
    Series root = sqrt_series(shift_up(f, 1));
    return exp_series(compose(phi, root));
}

RiordanArray canonical_root(const RiordanArray& d) {
    Series root_g = sqrt_series(d.g);
    Series root_zf = sqrt_series(shift_up(d.f, 1));
    return RiordanArray(root_g, root_zf.truncated(std::min(root_g.prec(), root_zf.prec())),
                        d.flavor);
}

}  // namespace riordan
