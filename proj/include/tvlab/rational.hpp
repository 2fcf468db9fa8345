#ifndef TVLAB_RATIONAL_HPP
#define TVLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "tvlab/errors.hpp"

namespace tvlab {

// Arbitrary-precision integers and rationals.  Rational values are kept
// canonical by GMP: lowest terms, positive denominator.  All geometry in this
// library is exact; floating point appears only in clearly marked diagnostic
// helpers (pi_map, closeness_probe, stretched_distance on non-grid points).
using Int = mpz_class;
using Rational = mpq_class;

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline Sign sign_of(const Rational& q) {
    const int s = sgn(q);
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

inline Sign sign_of(const Int& z) {
    const int s = sgn(z);
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

inline Sign opposite(Sign s) {
    return static_cast<Sign>(-static_cast<int>(s));
}

inline char sign_char(Sign s) {
    return s == Sign::negative ? '-' : (s == Sign::positive ? '+' : '0');
}

// Parses "p" or "p/q" (optionally signed, base 10).  Throws ParseError on
// malformed text or a zero denominator.
inline Rational rational_from_string(const std::string& text) {
    Rational q;
    if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) {
        throw ParseError("invalid rational literal: \"" + text + "\"");
    }
    if (sgn(q.get_den()) == 0) {
        throw ParseError("zero denominator in rational literal: \"" + text + "\"");
    }
    q.canonicalize();
    return q;
}

// Renders canonically as "p" (denominator one) or "p/q".
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline std::string to_string(const Int& z) {
    return z.get_str();
}

// log2 of a positive integer with absolute error well below 1e-9 for any
// operand this library produces (mantissa exact to 53 bits, exponent exact).
inline double log2_approx(const Int& z) {
    if (sgn(z) <= 0) throw PreconditionError("log2_approx requires a positive integer");
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t()); // z = mant * 2^exp2, mant in [0.5, 1)
    return static_cast<double>(exp2) + std::log2(mant);
}

// log2 of a positive rational, same error bound as log2_approx on integers.
inline double log2_approx(const Rational& q) {
    if (sgn(q) <= 0) throw PreconditionError("log2_approx requires a positive rational");
    return log2_approx(Int(q.get_num())) - log2_approx(Int(q.get_den()));
}

} // namespace tvlab

#endif
