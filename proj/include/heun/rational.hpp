#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace heun {

// All exact arithmetic sits on GMP rationals; values are always canonical
// (reduced, positive denominator).
using Rational = mpq_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rational_of(long n, long d = 1) {
    if (d == 0) throw error("division by zero");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q".
Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);

bool rational_is_integer(const Rational& r);
std::optional<long> rational_to_long(const Rational& r);

// Exact square root when r is the square of a rational, nullopt otherwise.
std::optional<Rational> rational_sqrt(const Rational& r);

Rational rational_pow(const Rational& base, long e);

inline double rational_to_double(const Rational& r) { return r.get_d(); }

}  // namespace heun
