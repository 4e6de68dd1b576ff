#include "heun/rational.hpp"

namespace heun {

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw error("empty rational literal");
    try {
        Rational r(s);
        if (r.get_den() == 0) throw error("division by zero in rational literal: " + s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw error("malformed rational literal: " + s);
    }
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

bool rational_is_integer(const Rational& r) { return r.get_den() == 1; }

std::optional<long> rational_to_long(const Rational& r) {
    if (!rational_is_integer(r)) return std::nullopt;
    if (!r.get_num().fits_slong_p()) return std::nullopt;
    return r.get_num().get_si();
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    const mpz_class& num = r.get_num();
    const mpz_class& den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rational out(sn, sd);
    out.canonicalize();
    return out;
}

Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (inv && base == 0) throw error("division by zero");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), k);
    Rational out = inv ? Rational(den, num) : Rational(num, den);
    out.canonicalize();
    return out;
}

}  // namespace heun
