#include "riordan/rational.hpp"

namespace riordan {

Rat parse_rat(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::string s(text);
    mpq_t raw;
    mpq_init(raw);
    if (mpq_set_str(raw, s.c_str(), 10) != 0) {
        mpq_clear(raw);
        throw std::invalid_argument("malformed rational literal: " + s);
    }
    if (mpz_sgn(mpq_denref(raw)) == 0) {
        mpq_clear(raw);
        throw std::invalid_argument("zero denominator in rational literal: " + s);
    }
    mpq_canonicalize(raw);
    Rat q(raw);
    mpq_clear(raw);
    return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

std::vector<std::string> rat_strs(const std::vector<Rat>& qs) {
    std::vector<std::string> out;
    out.reserve(qs.size());
    for (const auto& q : qs) out.push_back(rat_str(q));
    return out;
}

std::vector<Rat> parse_rats(const std::vector<std::string>& texts) {
    std::vector<Rat> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_rat(t));
    return out;
}

Int binomial(long a, long b) {
    if (b < 0 || a < 0 || b > a) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

bool is_square(const Rat& q) {
    if (sgn(q) < 0) return false;
    return mpz_perfect_square_p(q.get_num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(q.get_den().get_mpz_t()) != 0;
}

Rat rat_sqrt(const Rat& q) {
    if (!is_square(q)) throw std::domain_error("rat_sqrt: not a perfect square: " + rat_str(q));
    Int num, den;
    mpz_sqrt(num.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den().get_mpz_t());
    return Rat(num, den);
}

Rat rat_pow(const Rat& q, long k) {
    if (k == 0) return Rat(1);
    bool inv = k < 0;
    unsigned long e = static_cast<unsigned long>(inv ? -k : k);
    if (inv && sgn(q) == 0) throw std::domain_error("rat_pow: negative power of zero");
    Rat base = q;
    Rat acc(1);
    while (e != 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    if (inv) acc = Rat(1) / acc;
    return acc;
}

}  // namespace riordan
