#ifndef QCLASS_QSYM_HPP
#define QCLASS_QSYM_HPP

// Homogeneous quasisymmetric expressions over an arbitrary coefficient ring R,
// in the monomial (M) or fundamental (F) basis, with the basis change, the
// antipode, reversal, and the principal specialization into binomial-basis
// polynomials.
//
// Terms are kept in the canonical composition order and zero coefficients are
// never stored.  All operations are exact.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qclass/binpoly.hpp"
#include "qclass/composition.hpp"
#include "qclass/rational.hpp"

namespace qclass {

enum class Basis : char { M = 'M', F = 'F' };

template <class R>
struct QSym {
    int degree = 0;  // homogeneous degree; every term's composition has this weight
    Basis basis = Basis::M;
    std::map<Composition, R, CompLess> terms;

    bool operator==(const QSym& other) const = default;

    bool is_zero() const { return terms.empty(); }

    // Add c * B_alpha into this expression.
    void add_term(const Composition& alpha, const R& c) {
        if (comp_weight(alpha) != degree)
            throw invalid_input_error("term weight differs from expression degree");
        if (ring_is_zero(c)) return;
        auto it = terms.find(alpha);
        if (it == terms.end()) {
            terms.emplace(alpha, c);
        } else {
            it->second = ring_add(it->second, c);
            if (ring_is_zero(it->second)) terms.erase(it);
        }
    }

    // Coefficient of B_alpha, if present.
    const R* coeff_ptr(const Composition& alpha) const {
        auto it = terms.find(alpha);
        return it == terms.end() ? nullptr : &it->second;
    }
};

template <class R>
QSym<R> qsym_single(int degree, Basis basis, const Composition& alpha, const R& c) {
    QSym<R> q;
    q.degree = degree;
    q.basis = basis;
    q.add_term(alpha, c);
    return q;
}

template <class R>
QSym<R> ring_add(const QSym<R>& a, const QSym<R>& b) {
    if (a.terms.empty() && a.degree == 0 && b.degree != 0) {
        // A structurally zero degree-0 expression acts as the universal zero.
    } else if (b.terms.empty() && b.degree == 0 && a.degree != 0) {
        // likewise
    } else if (a.degree != b.degree) {
        throw invalid_input_error("adding expressions of different degrees");
    } else if (a.basis != b.basis) {
        throw invalid_input_error("adding expressions in different bases");
    }
    if (a.terms.empty()) return b.terms.empty() ? a : b;
    if (b.terms.empty()) return a;
    QSym<R> out = a;
    for (const auto& [alpha, c] : b.terms) out.add_term(alpha, c);
    return out;
}

template <class R>
QSym<R> ring_neg(const QSym<R>& a) {
    QSym<R> out;
    out.degree = a.degree;
    out.basis = a.basis;
    for (const auto& [alpha, c] : a.terms) out.terms.emplace(alpha, ring_neg(c));
    return out;
}

template <class R>
QSym<R> ring_sub(const QSym<R>& a, const QSym<R>& b) {
    return ring_add(a, ring_neg(b));
}

template <class R>
QSym<R> ring_scale(const QSym<R>& a, const Rat& s) {
    QSym<R> out;
    out.degree = a.degree;
    out.basis = a.basis;
    if (s == 0) return out;
    for (const auto& [alpha, c] : a.terms) {
        R sc = ring_scale(c, s);
        if (!ring_is_zero(sc)) out.terms.emplace(alpha, std::move(sc));
    }
    return out;
}

template <class R>
bool ring_is_zero(const QSym<R>& a) {
    return a.terms.empty();
}

// Change of basis.  Since F_alpha = sum_{beta refining alpha} M_beta, the
// coefficient families m/f of one expression satisfy
//   m_gamma = sum_{beta coarsening gamma} f_beta,
//   f_beta  = sum_{alpha coarsening beta} (-1)^{l(beta)-l(alpha)} m_alpha.
template <class R>
QSym<R> to_basis(const QSym<R>& q, Basis target) {
    if (q.basis == target) return q;
    QSym<R> out;
    out.degree = q.degree;
    out.basis = target;
    if (q.terms.empty()) return out;
    for (const Composition& gamma : compositions_of(q.degree)) {
        std::optional<R> acc;
        for (const Composition& beta : coarsenings_of(gamma)) {
            const R* c = q.coeff_ptr(beta);
            if (!c) continue;
            R term = *c;
            if (target == Basis::F && (gamma.size() - beta.size()) % 2) term = ring_neg(term);
            acc = acc ? ring_add(*acc, term) : std::move(term);
        }
        if (acc && !ring_is_zero(*acc)) out.terms.emplace(gamma, std::move(*acc));
    }
    return out;
}

// Reversal automorphism: B_alpha -> B_{reverse(alpha)} in either basis.
template <class R>
QSym<R> qsym_reverse(const QSym<R>& q) {
    QSym<R> out;
    out.degree = q.degree;
    out.basis = q.basis;
    for (const auto& [alpha, c] : q.terms) out.terms.emplace(reverse_composition(alpha), c);
    return out;
}

// Antipode on the monomial basis:
//   S(M_alpha) = (-1)^{l(alpha)} sum_{beta coarsening alpha} M_{reverse(beta)}.
// Input in the F basis is converted through M and converted back.
template <class R>
QSym<R> antipode(const QSym<R>& q) {
    if (q.basis == Basis::F) return to_basis(antipode(to_basis(q, Basis::M)), Basis::F);
    QSym<R> out;
    out.degree = q.degree;
    out.basis = Basis::M;
    for (const auto& [alpha, c] : q.terms) {
        R signedc = (alpha.size() % 2) ? ring_neg(c) : c;
        for (const Composition& beta : coarsenings_of(alpha))
            out.add_term(reverse_composition(beta), signedc);
    }
    return out;
}

// Principal specialization: the f-vector of the expression.  The coefficient
// of binom(x,i) is the sum of the monomial coefficients over compositions with
// i parts; evaluating the result at a nonnegative integer n is the
// substitution x_1 = ... = x_n = 1, x_{>n} = 0.
template <class R>
BinPoly<R> principal_specialization(const QSym<R>& q) {
    QSym<R> m = to_basis(q, Basis::M);
    if (m.terms.empty())
        throw invalid_input_error("principal specialization of the zero expression needs a ring shape");
    R zero = ring_zero_like(m.terms.begin()->second);
    BinPoly<R> out;
    out.f.assign(m.degree + 1, zero);
    for (const auto& [alpha, c] : m.terms)
        out.f[alpha.size()] = ring_add(out.f[alpha.size()], c);
    return out;
}

// h-vector: h_j is the sum of the fundamental-basis coefficients over
// compositions with j parts.
template <class R>
std::vector<R> h_vector(const QSym<R>& q) {
    QSym<R> f = to_basis(q, Basis::F);
    if (f.terms.empty())
        throw invalid_input_error("h-vector of the zero expression needs a ring shape");
    R zero = ring_zero_like(f.terms.begin()->second);
    std::vector<R> h(f.degree + 1, zero);
    for (const auto& [alpha, c] : f.terms)
        h[alpha.size()] = ring_add(h[alpha.size()], c);
    return h;
}

}  // namespace qclass

#endif  // QCLASS_QSYM_HPP
