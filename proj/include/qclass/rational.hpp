#ifndef QCLASS_RATIONAL_HPP
#define QCLASS_RATIONAL_HPP

// Exact rational scalars (GMP) plus the handful of integer helpers the rest of
// the library needs: binomial coefficients with arbitrary integer upper
// argument, factorials, and canonical string forms.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "qclass/util.hpp"

namespace qclass {

using Int = mpz_class;
using Rat = mpq_class;

// binom(x, k) for any integer x (possibly negative) and k >= 0:
// x(x-1)...(x-k+1)/k!.
inline Int binomial(const Int& x, long k) {
    if (k < 0) return 0;
    Int num = 1;
    for (long i = 0; i < k; ++i) num *= x - i;
    Int den = 1;
    for (long i = 2; i <= k; ++i) den *= i;
    return num / den;
}

inline Int binomial(long x, long k) { return binomial(Int(x), k); }

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// mpq_class(num, den) does not reduce; GMP comparisons require canonical form.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw invalid_input_error("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Canonical text form: "n" for integers, "p/q" otherwise (q > 0, reduced).
inline std::string rat_to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline bool rat_is_integer(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_den() == 1;
}

// Exact integer value of a rational known to be integral.
inline Int rat_to_int(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() != 1) throw integrity_error("expected integer, got " + rat_to_string(r));
    return c.get_num();
}

// --- ring concept hooks for Rat -------------------------------------------
// Generic containers (quasisymmetric expressions, t-polynomials, binomial
// polynomials) manipulate their coefficient ring only through these hooks, so
// a ring never has to synthesize a zero out of thin air.

inline Rat ring_add(const Rat& a, const Rat& b) { return a + b; }
inline Rat ring_sub(const Rat& a, const Rat& b) { return a - b; }
inline Rat ring_neg(const Rat& a) { return -a; }
inline Rat ring_scale(const Rat& a, const Rat& s) { return a * s; }
inline bool ring_is_zero(const Rat& a) { return a == 0; }
inline Rat ring_zero_like(const Rat&) { return Rat(0); }

}  // namespace qclass

#endif  // QCLASS_RATIONAL_HPP
