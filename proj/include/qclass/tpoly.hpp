#ifndef QCLASS_TPOLY_HPP
#define QCLASS_TPOLY_HPP

// Dense polynomials in the grading variable t over an arbitrary coefficient
// ring R.  The empty coefficient vector is the zero polynomial, so TPoly can
// always produce its own zero without synthesizing an R value.

#include <vector>

#include "qclass/rational.hpp"

namespace qclass {

template <class R>
struct TPoly {
    std::vector<R> c;  // c[k] multiplies t^k; no trailing zero coefficients

    TPoly() = default;
    explicit TPoly(std::vector<R> coeffs) : c(std::move(coeffs)) { normalize(); }

    // x * t^k as a polynomial.
    static TPoly monomial(R x, int k) {
        TPoly p;
        if (!ring_is_zero(x)) {
            for (int i = 0; i < k; ++i) p.c.push_back(ring_zero_like(x));
            p.c.push_back(std::move(x));
        }
        return p;
    }

    void normalize() {
        while (!c.empty() && ring_is_zero(c.back())) c.pop_back();
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero

    // Coefficient of t^k; requires the polynomial to be nonzero so a zero of
    // the right shape exists.
    R coeff(int k) const {
        if (k >= 0 && k < static_cast<int>(c.size())) return c[k];
        if (c.empty()) throw integrity_error("coefficient of the zero polynomial has no ring shape");
        return ring_zero_like(c.front());
    }

    bool operator==(const TPoly& other) const = default;
};

template <class R>
TPoly<R> ring_add(const TPoly<R>& a, const TPoly<R>& b) {
    if (a.c.empty()) return b;
    if (b.c.empty()) return a;
    TPoly<R> out;
    std::size_t n = std::max(a.c.size(), b.c.size());
    out.c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < a.c.size() && i < b.c.size())
            out.c.push_back(ring_add(a.c[i], b.c[i]));
        else if (i < a.c.size())
            out.c.push_back(a.c[i]);
        else
            out.c.push_back(b.c[i]);
    }
    out.normalize();
    return out;
}

template <class R>
TPoly<R> ring_neg(const TPoly<R>& a) {
    TPoly<R> out;
    out.c.reserve(a.c.size());
    for (const R& x : a.c) out.c.push_back(ring_neg(x));
    return out;
}

template <class R>
TPoly<R> ring_sub(const TPoly<R>& a, const TPoly<R>& b) {
    return ring_add(a, ring_neg(b));
}

template <class R>
TPoly<R> ring_scale(const TPoly<R>& a, const Rat& s) {
    if (s == 0) return TPoly<R>{};
    TPoly<R> out;
    out.c.reserve(a.c.size());
    for (const R& x : a.c) out.c.push_back(ring_scale(x, s));
    out.normalize();
    return out;
}

template <class R>
bool ring_is_zero(const TPoly<R>& a) {
    return a.c.empty();
}

template <class R>
TPoly<R> ring_zero_like(const TPoly<R>&) {
    return TPoly<R>{};
}

// Multiply by t^k.
template <class R>
TPoly<R> tpoly_shift(const TPoly<R>& a, int k) {
    if (a.c.empty()) return a;
    TPoly<R> out;
    out.c.reserve(a.c.size() + k);
    for (int i = 0; i < k; ++i) out.c.push_back(ring_zero_like(a.c.front()));
    for (const R& x : a.c) out.c.push_back(x);
    return out;
}

}  // namespace qclass

#endif  // QCLASS_TPOLY_HPP
