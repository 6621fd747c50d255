#ifndef QCLASS_BINPOLY_HPP
#define QCLASS_BINPOLY_HPP

// Polynomials in a numeric variable expressed in the binomial basis
// binom(x,0), binom(x,1), ..., with coefficients in an arbitrary ring R.
// This is the natural house for order-polynomial "f-vectors": the coefficient
// of binom(x,i) counts (with R-valued multiplicity) the patterns with exactly
// i blocks.

#include <vector>

#include "qclass/rational.hpp"

namespace qclass {

template <class R>
struct BinPoly {
    std::vector<R> f;  // f[i] multiplies binom(x, i); fixed length, zeros kept

    bool operator==(const BinPoly& other) const = default;

    int dimension() const { return static_cast<int>(f.size()) - 1; }

    // Exact value at an integer (possibly negative) argument.
    R evaluate(long n) const {
        if (f.empty()) throw integrity_error("evaluating an empty binomial polynomial");
        R acc = ring_zero_like(f.front());
        for (std::size_t i = 0; i < f.size(); ++i)
            acc = ring_add(acc, ring_scale(f[i], Rat(binomial(n, static_cast<long>(i)))));
        return acc;
    }
};

template <class R>
BinPoly<R> ring_add(const BinPoly<R>& a, const BinPoly<R>& b) {
    BinPoly<R> out;
    std::size_t n = std::max(a.f.size(), b.f.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (i < a.f.size() && i < b.f.size())
            out.f.push_back(ring_add(a.f[i], b.f[i]));
        else if (i < a.f.size())
            out.f.push_back(a.f[i]);
        else
            out.f.push_back(b.f[i]);
    }
    return out;
}

template <class R>
BinPoly<R> ring_neg(const BinPoly<R>& a) {
    BinPoly<R> out;
    for (const R& x : a.f) out.f.push_back(ring_neg(x));
    return out;
}

template <class R>
BinPoly<R> ring_sub(const BinPoly<R>& a, const BinPoly<R>& b) {
    return ring_add(a, ring_neg(b));
}

// p(x) -> p(-x), still in the binomial basis:
// binom(-x,i) = (-1)^i sum_j binom(i-1, i-j) binom(x,j).
template <class R>
BinPoly<R> negate_variable(const BinPoly<R>& p) {
    if (p.f.empty()) return p;
    BinPoly<R> out;
    std::size_t n = p.f.size();
    for (std::size_t j = 0; j < n; ++j) {
        R acc = ring_zero_like(p.f.front());
        for (std::size_t i = j; i < n; ++i) {
            Rat w(binomial(static_cast<long>(i) - 1, static_cast<long>(i - j)));
            if (i % 2) w = -w;
            acc = ring_add(acc, ring_scale(p.f[i], w));
        }
        // binom(-x,0) contributes to j = 0 via i = 0 (handled above: the i=0
        // term has weight binom(-1,0) = 1).
        out.f.push_back(std::move(acc));
    }
    return out;
}

// h-vector of an f-vector relative to dimension d (the homogeneous degree of
// the originating quasisymmetric expression):
// h_j = sum_i f_i (-1)^{j-i} binom(d-i, j-i).
template <class R>
std::vector<R> h_from_f(const std::vector<R>& f, int d) {
    if (f.empty()) return {};
    std::vector<R> h;
    for (int j = 0; j <= d; ++j) {
        R acc = ring_zero_like(f.front());
        for (int i = 0; i <= j && i < static_cast<int>(f.size()); ++i) {
            Rat w(binomial(static_cast<long>(d - i), static_cast<long>(j - i)));
            if ((j - i) % 2) w = -w;
            acc = ring_add(acc, ring_scale(f[i], w));
        }
        h.push_back(std::move(acc));
    }
    return h;
}

}  // namespace qclass

#endif  // QCLASS_BINPOLY_HPP
