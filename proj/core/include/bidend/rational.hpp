#ifndef BIDEND_RATIONAL_HPP
#define BIDEND_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace bidend {

// Exact scalars. All coefficients in this library are rationals, never
// floats: every identity we verify is an equality, not a tolerance.
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// The two-argument mpq_class constructor does not reduce; route fractions
// through here to keep every stored value canonical.
inline Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Canonical text form: "p" for integers, "p/q" with q > 1 otherwise.
inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline Rational rat_parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational: '" + text + "'");
    q.canonicalize();
    if (sgn(q.get_den()) <= 0)
        throw std::invalid_argument("nonpositive denominator: '" + text + "'");
    return q;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace bidend

#endif
