#ifndef QCLASS_CLASSFUN_HPP
#define QCLASS_CLASSFUN_HPP

// Class functions on a finite permutation group: one exact cyclotomic value
// per conjugacy class.  These serve as the coefficient ring for equivariant
// quasisymmetric expressions.

#include <functional>
#include <string>
#include <vector>

#include "qclass/cyclotomic.hpp"
#include "qclass/group.hpp"
#include "qclass/rational.hpp"
#include "qclass/util.hpp"

namespace qclass {

struct ClassFun {
    PermGroup G;              // null only for a default-constructed placeholder
    std::vector<Cyc> v;       // values at class representatives, in class order

    ClassFun() = default;
    explicit ClassFun(PermGroup g) : G(std::move(g)), v(G->num_classes()) {}
    ClassFun(PermGroup g, std::vector<Cyc> vals) : G(std::move(g)), v(std::move(vals)) {
        if (v.size() != static_cast<std::size_t>(G->num_classes()))
            throw invalid_input_error("class function has the wrong number of values");
    }
};

inline void require_same_group(const ClassFun& a, const ClassFun& b) {
    if (!a.G || !b.G || a.G != b.G)
        throw integrity_error("class functions belong to different group objects");
}

inline ClassFun ring_add(const ClassFun& a, const ClassFun& b) {
    require_same_group(a, b);
    ClassFun r(a.G);
    for (std::size_t i = 0; i < a.v.size(); ++i) r.v[i] = ring_add(a.v[i], b.v[i]);
    return r;
}

inline ClassFun ring_neg(const ClassFun& a) {
    ClassFun r(a.G);
    for (std::size_t i = 0; i < a.v.size(); ++i) r.v[i] = ring_neg(a.v[i]);
    return r;
}

inline ClassFun ring_sub(const ClassFun& a, const ClassFun& b) { return ring_add(a, ring_neg(b)); }

inline ClassFun ring_scale(const ClassFun& a, const Rat& s) {
    ClassFun r(a.G);
    for (std::size_t i = 0; i < a.v.size(); ++i) r.v[i] = ring_scale(a.v[i], s);
    return r;
}

inline bool ring_is_zero(const ClassFun& a) {
    for (const Cyc& x : a.v)
        if (!ring_is_zero(x)) return false;
    return true;
}

inline ClassFun ring_zero_like(const ClassFun& a) { return ClassFun(a.G); }

inline bool operator==(const ClassFun& a, const ClassFun& b) {
    if (!a.G || !b.G || a.G != b.G) return false;
    for (std::size_t i = 0; i < a.v.size(); ++i)
        if (!cyc_eq(a.v[i], b.v[i])) return false;
    return true;
}
inline bool operator!=(const ClassFun& a, const ClassFun& b) { return !(a == b); }

inline ClassFun trivial_character(const PermGroup& G) {
    ClassFun r(G);
    for (Cyc& x : r.v) x = Cyc(Rat(1));
    return r;
}

// Restriction of the sign character of the ambient symmetric group.
inline ClassFun sign_character(const PermGroup& G) {
    ClassFun r(G);
    for (int c = 0; c < G->num_classes(); ++c)
        r.v[c] = Cyc(Rat(perm_sign(G->elements[G->class_rep[c]])));
    return r;
}

inline ClassFun classfun_from_counts(const PermGroup& G, const std::vector<long>& counts) {
    if (counts.size() != static_cast<std::size_t>(G->num_classes()))
        throw invalid_input_error("count vector has the wrong number of classes");
    ClassFun r(G);
    for (std::size_t i = 0; i < counts.size(); ++i) r.v[i] = Cyc(Rat(counts[i]));
    return r;
}

// Value at the class containing element index e.
inline const Cyc& classfun_at_element(const ClassFun& f, int elem_idx) {
    return f.v[f.G->class_of[elem_idx]];
}

// Pointwise product (e.g. twisting by the sign character).
inline ClassFun classfun_pointwise_mul(const ClassFun& a, const ClassFun& b) {
    require_same_group(a, b);
    ClassFun r(a.G);
    for (std::size_t i = 0; i < a.v.size(); ++i) r.v[i] = cyc_mul(a.v[i], b.v[i]);
    return r;
}

// Standard Hermitian inner product, conjugate-linear in the FIRST argument:
// (1/|G|) sum_j |C_j| conj(a_j) b_j.
inline Cyc inner_product(const ClassFun& a, const ClassFun& b) {
    require_same_group(a, b);
    Cyc acc;
    for (std::size_t j = 0; j < a.v.size(); ++j) {
        Cyc term = cyc_mul(cyc_conj(a.v[j]), b.v[j]);
        acc = ring_add(acc, ring_scale(term, Rat(static_cast<long>(a.G->classes[j].size()))));
    }
    return ring_scale(acc, Rat(Int(1), Int(a.G->order())));
}

// Character of the permutation action of G on a finite set: the action is
// given by the image of each domain point under each group element.
// fixed(c) must return the number of domain points fixed by the class rep.
inline ClassFun permutation_character_from_fixed(const PermGroup& G,
                                                 const std::function<long(const Perm&)>& fixed) {
    ClassFun r(G);
    for (int c = 0; c < G->num_classes(); ++c)
        r.v[c] = Cyc(Rat(fixed(G->elements[G->class_rep[c]])));
    return r;
}

// Degree (value at the identity class, which is always class 0).
inline Cyc classfun_degree(const ClassFun& f) { return f.v[0]; }

// Induction of a class function from a subgroup H (same ambient degree n) to G:
// ind(g) = (1/|H|) * sum over k in G with k g k^{-1} in H of f(k g k^{-1}).
inline ClassFun induce(const ClassFun& f, const PermGroup& G) {
    const PermGroup& H = f.G;
    if (!H) throw invalid_input_error("cannot induce an empty class function");
    if (H->n != G->n) throw invalid_input_error("subgroup acts on a different ground set");
    for (const Perm& h : H->elements)
        if (!G->contains(h)) throw invalid_input_error("induction source is not a subgroup");
    ClassFun r(G);
    for (int c = 0; c < G->num_classes(); ++c) {
        const Perm& g = G->elements[G->class_rep[c]];
        Cyc acc;
        for (const Perm& k : G->elements) {
            Perm conj = compose(compose(k, g), inverse_perm(k));
            auto it = H->index_of.find(conj);
            if (it == H->index_of.end()) continue;
            acc = ring_add(acc, f.v[H->class_of[it->second]]);
        }
        r.v[c] = ring_scale(acc, Rat(Int(1), Int(H->order())));
    }
    return r;
}

// Restriction of a class function on G to a subgroup H (used by tests).
inline ClassFun restrict_character(const ClassFun& f, const PermGroup& H) {
    const PermGroup& G = f.G;
    if (H->n != G->n) throw invalid_input_error("subgroup acts on a different ground set");
    ClassFun r(H);
    for (int c = 0; c < H->num_classes(); ++c) {
        const Perm& h = H->elements[H->class_rep[c]];
        auto it = G->index_of.find(h);
        if (it == G->index_of.end())
            throw invalid_input_error("restriction target is not a subgroup");
        r.v[c] = f.v[G->class_of[it->second]];
    }
    return r;
}

}  // namespace qclass

#endif  // QCLASS_CLASSFUN_HPP
