#include "riordan/series.hpp"

#include <algorithm>

namespace riordan {

namespace {

void require(bool ok, Errc code, const char* msg, long a = -1, long b = -1) {
    if (!ok) throw DomainError(code, msg, a, b);
}

}  // namespace

Series::Series(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("Series: needs at least the constant coefficient");
}

Series Series::zero(int prec) { return Series(std::vector<Rat>(prec + 1, Rat(0))); }

Series Series::one(int prec) { return constant(Rat(1), prec); }

Series Series::identity(int prec) { return monomial(Rat(1), 1, prec); }

Series Series::constant(const Rat& c, int prec) {
    std::vector<Rat> v(prec + 1, Rat(0));
    v[0] = c;
    return Series(std::move(v));
}

Series Series::monomial(const Rat& c, int degree, int prec) {
    if (degree < 0 || degree > prec)
        throw std::invalid_argument("Series::monomial: degree out of window");
    std::vector<Rat> v(prec + 1, Rat(0));
    v[degree] = c;
    return Series(std::move(v));
}

Series Series::from_strings(const std::vector<std::string>& coeffs) {
    return Series(parse_rats(coeffs));
}

const Rat& Series::at(int k) const {
    if (k < 0 || k > prec())
        throw DomainError(Errc::insufficient_precision,
                          "coefficient index beyond stored precision", k, prec());
    return c_[static_cast<size_t>(k)];
}

std::vector<Rat> Series::prefix(int n) const {
    if (n > prec())
        throw DomainError(Errc::insufficient_precision, "prefix longer than stored precision", n,
                          prec());
    return std::vector<Rat>(c_.begin(), c_.begin() + n + 1);
}

std::optional<int> Series::order() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return std::nullopt;
}

Series Series::truncated(int prec) const {
    if (prec > this->prec())
        throw DomainError(Errc::insufficient_precision, "cannot truncate upward", prec,
                          this->prec());
    return Series(std::vector<Rat>(c_.begin(), c_.begin() + prec + 1));
}

Series Series::padded(int prec) const {
    if (prec <= this->prec()) return truncated(prec);
    std::vector<Rat> v = c_;
    v.resize(prec + 1, Rat(0));
    return Series(std::move(v));
}

bool prefix_equal(const Series& a, const Series& b, int n) {
    if (n > a.prec() || n > b.prec())
        throw DomainError(Errc::insufficient_precision, "prefix_equal beyond stored precision", n,
                          std::min(a.prec(), b.prec()));
    for (int i = 0; i <= n; ++i)
        if (a.at(i) != b.at(i)) return false;
    return true;
}

Series add(const Series& a, const Series& b) {
    int n = std::min(a.prec(), b.prec());
    std::vector<Rat> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = a.at(i) + b.at(i);
    return Series(std::move(v));
}

Series sub(const Series& a, const Series& b) { return add(a, negate(b)); }

Series negate(const Series& a) {
    std::vector<Rat> v = a.coeffs();
    for (auto& x : v) x = -x;
    return Series(std::move(v));
}

Series scale(const Series& a, const Rat& c) {
    std::vector<Rat> v = a.coeffs();
    for (auto& x : v) x *= c;
    return Series(std::move(v));
}

Series mul(const Series& a, const Series& b) {
    int n = std::min(a.prec(), b.prec());
    std::vector<Rat> v(n + 1, Rat(0));
    for (int i = 0; i <= n; ++i) {
        const Rat& ai = a.at(i);
        if (ai == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.at(j) == 0) continue;
            v[i + j] += ai * b.at(j);
        }
    }
    return Series(std::move(v));
}

Series shift_up(const Series& a, int k) {
    if (k < 0) return shift_down(a, -k);
    std::vector<Rat> v(a.coeffs().size() + k, Rat(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) v[i + k] = a.coeffs()[i];
    return Series(std::move(v));
}

Series shift_down(const Series& a, int k) {
    if (k < 0) return shift_up(a, -k);
    if (k == 0) return a;
    auto ord = a.order();
    require(!ord.has_value() || *ord >= k, Errc::not_order_one,
            "shift_down below a nonzero coefficient", k);
    require(a.prec() >= k, Errc::insufficient_precision, "shift_down past precision", k, a.prec());
    std::vector<Rat> v(a.coeffs().begin() + k, a.coeffs().end());
    return Series(std::move(v));
}

Series stretch(const Series& a, int k) {
    if (k <= 0) throw std::invalid_argument("stretch: factor must be positive");
    int n = a.prec() * k + k - 1;
    std::vector<Rat> v(n + 1, Rat(0));
    for (int i = 0; i <= a.prec(); ++i) v[static_cast<size_t>(i) * k] = a.at(i);
    return Series(std::move(v));
}

Series recip(const Series& a) {
    require(a.at(0) != 0, Errc::zero_constant_term, "recip requires a(0) != 0");
    int n = a.prec();
    std::vector<Rat> r(n + 1);
    r[0] = Rat(1) / a.at(0);
    for (int m = 1; m <= n; ++m) {
        Rat s(0);
        for (int k = 1; k <= m; ++k)
            if (a.at(k) != 0) s += a.at(k) * r[m - k];
        r[m] = -s / a.at(0);
    }
    return Series(std::move(r));
}

Series compose(const Series& outer, const Series& inner) {
    auto inner_order = inner.order();
    if (!inner_order.has_value()) {
        // inner == 0 within precision: the composition collapses to outer(0).
        return Series::constant(outer.at(0), inner.prec());
    }
    int result_prec;
    int outer_degree = outer.prec();
    if (*inner_order >= 1) {
        long raw = static_cast<long>(outer.prec()) * *inner_order;
        result_prec = static_cast<int>(std::min<long>(raw, inner.prec()));
    } else {
        // Nonzero constant term: only a certified polynomial can be
        // evaluated. We accept outer when its stored window shows a trailing
        // zero margin; otherwise the tail could contribute at every degree.
        int top = -1;
        for (int i = 0; i <= outer.prec(); ++i)
            if (outer.at(i) != 0) top = i;
        require(top < outer.prec(), Errc::divergent_composition,
                "composition with unit inner requires a polynomial outer", top);
        outer_degree = std::max(top, 0);
        result_prec = inner.prec();
    }
    // Horner on the stored coefficients of outer.
    Series inner_window = inner.truncated(std::min(inner.prec(), result_prec));
    Series acc = Series::constant(outer.at(outer_degree), result_prec);
    for (int k = outer_degree - 1; k >= 0; --k)
        acc = add(mul(acc, inner_window), Series::constant(outer.at(k), result_prec));
    return acc.truncated(result_prec);
}

Series comp_inverse(const Series& f) {
    auto ord = f.order();
    require(ord.has_value() && *ord == 1, Errc::not_order_one,
            "compositional inverse requires order exactly 1");
    int n = f.prec();
    const Rat& f1 = f.at(1);
    std::vector<Rat> g(n + 1, Rat(0));
    g[1] = Rat(1) / f1;
    // Maintain powers of f; the degree-m equation of g(f) = z is triangular
    // in g_m because f^k has order k.
    std::vector<std::vector<Rat>> fpow;  // fpow[k] = coeffs of f^{k+1}
    fpow.push_back(f.coeffs());
    for (int k = 2; k <= n; ++k) {
        const auto& prev = fpow.back();
        std::vector<Rat> cur(n + 1, Rat(0));
        for (int i = 1; i <= n; ++i) {
            if (f.at(i) == 0) continue;
            for (int j = k - 1; i + j <= n; ++j) cur[i + j] += f.at(i) * prev[j];
        }
        fpow.push_back(std::move(cur));
    }
    Rat f1pow = f1;  // f1^m while solving degree m
    for (int m = 2; m <= n; ++m) {
        f1pow *= f1;
        Rat s(0);
        for (int k = 1; k < m; ++k)
            if (g[k] != 0) s += g[k] * fpow[k - 1][m];
        g[m] = -s / f1pow;
    }
    return Series(std::move(g));
}

Series sqrt_series(const Series& a) {
    auto ord = a.order();
    if (!ord.has_value()) return a;  // sqrt(0) = 0, exactly
    require(*ord % 2 == 0, Errc::odd_order, "square root of odd-order series", *ord);
    int m = *ord / 2;
    const Rat& lead = a.at(*ord);
    require(is_square(lead), Errc::nonsquare_leading_coefficient,
            "leading coefficient is not the square of a rational");
    int inner_prec = a.prec() - *ord;
    Rat r0 = rat_sqrt(lead);
    // b^2 = a with b = z^m (r0 + ...): coefficient m+t of b is fixed by
    // coefficient 2m+t of a.
    std::vector<Rat> b(inner_prec + 1, Rat(0));
    b[0] = r0;
    for (int t = 1; t <= inner_prec; ++t) {
        Rat s(0);
        for (int i = 1; i < t; ++i) s += b[i] * b[t - i];
        b[t] = (a.at(*ord + t) - s) / (2 * r0);
    }
    return shift_up(Series(std::move(b)), m);
}

Series exp_series(const Series& a) {
    require(a.at(0) == 0, Errc::bad_constant_term, "exp requires a(0) = 0");
    int n = a.prec();
    std::vector<Rat> b(n + 1, Rat(0));
    b[0] = Rat(1);
    // b' = a' b, so m b_m = sum k a_k b_{m-k}.
    for (int m = 1; m <= n; ++m) {
        Rat s(0);
        for (int k = 1; k <= m; ++k)
            if (a.at(k) != 0) s += Rat(k) * a.at(k) * b[m - k];
        b[m] = s / m;
    }
    return Series(std::move(b));
}

Series log_series(const Series& a) {
    require(a.at(0) == 1, Errc::bad_constant_term, "log requires a(0) = 1");
    int n = a.prec();
    if (n == 0) return Series::zero(0);
    // l' = a'/a integrated termwise, with l(0) = 0. The derivative is known
    // only to precision n-1, which still pins l up to the z^n coefficient.
    std::vector<Rat> da(n, Rat(0));
    for (int k = 1; k <= n; ++k) da[k - 1] = Rat(k) * a.at(k);
    Series quotient = mul(Series(std::move(da)), recip(a));
    std::vector<Rat> l(n + 1, Rat(0));
    for (int m = 1; m <= n; ++m) l[m] = quotient.at(m - 1) / m;
    return Series(std::move(l));
}

Series reflect(const Series& a) {
    std::vector<Rat> v = a.coeffs();
    for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return Series(std::move(v));
}

Series pseudo_inverse_series(const Series& a) {
    return negate(reflect(comp_inverse(a)));
}

ParityParts parity_parts(const Series& h) {
    require(h.at(0) == 0, Errc::nonzero_constant, "parity split requires h(0) = 0");
    require(h.prec() >= 2, Errc::insufficient_precision,
            "parity split needs at least the z^2 coefficient", h.prec());
    int n = h.prec();
    std::vector<Rat> odd((n - 1) / 2 + 1), even((n - 2) / 2 + 1);
    for (size_t k = 0; k < odd.size(); ++k) odd[k] = h.at(2 * static_cast<int>(k) + 1);
    for (size_t k = 0; k < even.size(); ++k) even[k] = h.at(2 * static_cast<int>(k) + 2);
    return ParityParts{Series(std::move(odd)), Series(std::move(even))};
}

}  // namespace riordan
