#ifndef QCLASS_VERIFY_HPP
#define QCLASS_VERIFY_HPP

// Mechanical checkers for the identities satisfied by the enumerators:
// reciprocity between an expression and the enumerator of its dual (double
// posets) or of its weak variant (digraphs), effectiveness and monotonicity
// of coefficients, flawless coefficient sequences, orbit-counting invariants
// obtained by averaging over the group, and the reciprocity identities those
// averages satisfy.  Every checker computes the two sides of its identity
// through independent code paths and compares exactly, reporting a first
// witness (class, coefficient location, and the two unequal values) when a
// comparison fails.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qclass/binpoly.hpp"
#include "qclass/chartable.hpp"
#include "qclass/classfun.hpp"
#include "qclass/digraph.hpp"
#include "qclass/dposet.hpp"
#include "qclass/qsym.hpp"
#include "qclass/tpoly.hpp"

namespace qclass {

// ---------------------------------------------------------------------------
// Reports.

struct VerdictReport {
    std::string theorem;   // which identity or property was checked
    std::string instance;  // description of the checked input
    bool pass = true;
    std::string witness;   // populated exactly when pass is false
};

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", static_cast<unsigned>(ch));
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

// Canonical JSON: keys in alphabetical order, no whitespace.
inline std::string to_json(const VerdictReport& r) {
    return std::string("{\"instance\":\"") + json_escape(r.instance) +
           "\",\"pass\":" + (r.pass ? "true" : "false") + ",\"theorem\":\"" +
           json_escape(r.theorem) + "\",\"witness\":\"" + json_escape(r.witness) + "\"}";
}

namespace detail {

inline std::string ground_set_string(const Universe& u) {
    std::string s = "{";
    for (int i = 0; i < u.size(); ++i) {
        if (i) s += ", ";
        s += u.labels[i];
    }
    return s + "}";
}

inline std::string describe_dposet(const DoublePoset& D, const PermGroup& G) {
    return "double poset on " + ground_set_string(D.u) + " with a group of order " +
           std::to_string(G->order());
}

inline std::string describe_digraph(const Digraph& G, const PermGroup& H) {
    return "digraph on " + ground_set_string(G.u) + " with " +
           std::to_string(G.edges.size()) + " edges and a group of order " +
           std::to_string(H->order());
}

inline std::string class_string(const PermGroup& G, const Universe& u, int cls) {
    return perm_to_cycle_string(G->elements[G->class_rep[cls]], u);
}

inline std::string value_pair(const Cyc& x, const Cyc& y) {
    return cyc_to_string(x) + " vs " + cyc_to_string(y);
}

// First position where two expressions with class-function coefficients
// differ.  A missing coefficient counts as zero.
inline std::optional<std::string> qsym_cf_mismatch(const QSym<ClassFun>& a,
                                                   const QSym<ClassFun>& b,
                                                   const PermGroup& G, const Universe& u) {
    for (const Composition& alpha : compositions_of(a.degree)) {
        const ClassFun* pa = a.coeff_ptr(alpha);
        const ClassFun* pb = b.coeff_ptr(alpha);
        if (!pa && !pb) continue;
        ClassFun va = pa ? *pa : ClassFun(G);
        ClassFun vb = pb ? *pb : ClassFun(G);
        for (int c = 0; c < G->num_classes(); ++c)
            if (!cyc_eq(va.v[c], vb.v[c]))
                return "class " + class_string(G, u, c) + ", coefficient of M_" +
                       comp_to_string(alpha) + ": " + value_pair(va.v[c], vb.v[c]);
    }
    return std::nullopt;
}

inline std::optional<std::string> qsym_tcf_mismatch(const QSym<TPoly<ClassFun>>& a,
                                                    const QSym<TPoly<ClassFun>>& b,
                                                    const PermGroup& G, const Universe& u) {
    for (const Composition& alpha : compositions_of(a.degree)) {
        const TPoly<ClassFun>* pa = a.coeff_ptr(alpha);
        const TPoly<ClassFun>* pb = b.coeff_ptr(alpha);
        if (!pa && !pb) continue;
        std::size_t ka = pa ? pa->c.size() : 0, kb = pb ? pb->c.size() : 0;
        for (std::size_t k = 0; k < std::max(ka, kb); ++k) {
            ClassFun va = (pa && k < ka) ? pa->c[k] : ClassFun(G);
            ClassFun vb = (pb && k < kb) ? pb->c[k] : ClassFun(G);
            for (int c = 0; c < G->num_classes(); ++c)
                if (!cyc_eq(va.v[c], vb.v[c]))
                    return "class " + class_string(G, u, c) + ", coefficient of M_" +
                           comp_to_string(alpha) + " at t^" + std::to_string(k) + ": " +
                           value_pair(va.v[c], vb.v[c]);
        }
    }
    return std::nullopt;
}

inline std::optional<std::string> qsym_rat_mismatch(const QSym<Rat>& a, const QSym<Rat>& b) {
    for (const Composition& alpha : compositions_of(a.degree)) {
        const Rat* pa = a.coeff_ptr(alpha);
        const Rat* pb = b.coeff_ptr(alpha);
        Rat va = pa ? *pa : Rat(0), vb = pb ? *pb : Rat(0);
        if (va != vb)
            return "coefficient of M_" + comp_to_string(alpha) + ": " + rat_to_string(va) +
                   " vs " + rat_to_string(vb);
    }
    return std::nullopt;
}

inline std::optional<std::string> qsym_trat_mismatch(const QSym<TPoly<Rat>>& a,
                                                     const QSym<TPoly<Rat>>& b) {
    for (const Composition& alpha : compositions_of(a.degree)) {
        const TPoly<Rat>* pa = a.coeff_ptr(alpha);
        const TPoly<Rat>* pb = b.coeff_ptr(alpha);
        if (!pa && !pb) continue;
        std::size_t ka = pa ? pa->c.size() : 0, kb = pb ? pb->c.size() : 0;
        for (std::size_t k = 0; k < std::max(ka, kb); ++k) {
            Rat va = (pa && k < ka) ? pa->c[k] : Rat(0);
            Rat vb = (pb && k < kb) ? pb->c[k] : Rat(0);
            if (va != vb)
                return "coefficient of M_" + comp_to_string(alpha) + " at t^" +
                       std::to_string(k) + ": " + rat_to_string(va) + " vs " + rat_to_string(vb);
        }
    }
    return std::nullopt;
}

inline std::optional<std::string> binpoly_cf_mismatch(const BinPoly<ClassFun>& a,
                                                      const BinPoly<ClassFun>& b,
                                                      const PermGroup& G, const Universe& u) {
    std::size_t n = std::max(a.f.size(), b.f.size());
    for (std::size_t i = 0; i < n; ++i) {
        ClassFun va = i < a.f.size() ? a.f[i] : ClassFun(G);
        ClassFun vb = i < b.f.size() ? b.f[i] : ClassFun(G);
        for (int c = 0; c < G->num_classes(); ++c)
            if (!cyc_eq(va.v[c], vb.v[c]))
                return "class " + class_string(G, u, c) + ", coefficient of binom(x," +
                       std::to_string(i) + "): " + value_pair(va.v[c], vb.v[c]);
    }
    return std::nullopt;
}

inline std::optional<std::string> binpoly_tcf_mismatch(const BinPoly<TPoly<ClassFun>>& a,
                                                       const BinPoly<TPoly<ClassFun>>& b,
                                                       const PermGroup& G, const Universe& u) {
    std::size_t n = std::max(a.f.size(), b.f.size());
    for (std::size_t i = 0; i < n; ++i) {
        const TPoly<ClassFun>* pa = i < a.f.size() ? &a.f[i] : nullptr;
        const TPoly<ClassFun>* pb = i < b.f.size() ? &b.f[i] : nullptr;
        std::size_t ka = pa ? pa->c.size() : 0, kb = pb ? pb->c.size() : 0;
        for (std::size_t k = 0; k < std::max(ka, kb); ++k) {
            ClassFun va = (pa && k < ka) ? pa->c[k] : ClassFun(G);
            ClassFun vb = (pb && k < kb) ? pb->c[k] : ClassFun(G);
            for (int c = 0; c < G->num_classes(); ++c)
                if (!cyc_eq(va.v[c], vb.v[c]))
                    return "class " + class_string(G, u, c) + ", coefficient of binom(x," +
                           std::to_string(i) + ") at t^" + std::to_string(k) + ": " +
                           value_pair(va.v[c], vb.v[c]);
        }
    }
    return std::nullopt;
}

inline std::optional<std::string> binpoly_rat_mismatch(const BinPoly<Rat>& a,
                                                       const BinPoly<Rat>& b) {
    std::size_t n = std::max(a.f.size(), b.f.size());
    for (std::size_t i = 0; i < n; ++i) {
        Rat va = i < a.f.size() ? a.f[i] : Rat(0);
        Rat vb = i < b.f.size() ? b.f[i] : Rat(0);
        if (va != vb)
            return "coefficient of binom(x," + std::to_string(i) + "): " + rat_to_string(va) +
                   " vs " + rat_to_string(vb);
    }
    return std::nullopt;
}

inline std::optional<std::string> binpoly_trat_mismatch(const BinPoly<TPoly<Rat>>& a,
                                                        const BinPoly<TPoly<Rat>>& b) {
    std::size_t n = std::max(a.f.size(), b.f.size());
    for (std::size_t i = 0; i < n; ++i) {
        static const TPoly<Rat> zero{};
        const TPoly<Rat>& va = i < a.f.size() ? a.f[i] : zero;
        const TPoly<Rat>& vb = i < b.f.size() ? b.f[i] : zero;
        std::size_t kk = std::max(va.c.size(), vb.c.size());
        for (std::size_t k = 0; k < kk; ++k) {
            Rat x = k < va.c.size() ? va.c[k] : Rat(0);
            Rat y = k < vb.c.size() ? vb.c[k] : Rat(0);
            if (x != y)
                return "coefficient of binom(x," + std::to_string(i) + ") at t^" +
                       std::to_string(k) + ": " + rat_to_string(x) + " vs " + rat_to_string(y);
        }
    }
    return std::nullopt;
}

inline TPoly<ClassFun> twist_tpoly(const TPoly<ClassFun>& p, const ClassFun& chi) {
    std::vector<ClassFun> c;
    c.reserve(p.c.size());
    for (const ClassFun& x : p.c) c.push_back(classfun_pointwise_mul(x, chi));
    return TPoly<ClassFun>(std::move(c));
}

}  // namespace detail

// Multiply every coefficient pointwise by a character of the same group
// (e.g. the sign-character twist appearing in the reciprocity identities).
inline QSym<ClassFun> scale_by_character(const QSym<ClassFun>& q, const ClassFun& chi) {
    QSym<ClassFun> out;
    out.degree = q.degree;
    out.basis = q.basis;
    for (const auto& [alpha, c] : q.terms) out.add_term(alpha, classfun_pointwise_mul(c, chi));
    return out;
}

inline QSym<TPoly<ClassFun>> scale_by_character(const QSym<TPoly<ClassFun>>& q,
                                                const ClassFun& chi) {
    QSym<TPoly<ClassFun>> out;
    out.degree = q.degree;
    out.basis = q.basis;
    for (const auto& [alpha, c] : q.terms) out.add_term(alpha, detail::twist_tpoly(c, chi));
    return out;
}

// ---------------------------------------------------------------------------
// Reciprocity for double posets.
//
// Left side: the antipode of the enumerator, twisted by the sign character and
// by (-1)^n.  Right side: the enumerator of the dual, computed by direct
// pattern enumeration.  The polynomial form substitutes -x into the counting
// polynomial and compares against the counting polynomial of the dual.

inline VerdictReport check_reciprocity_dposet(const DoublePoset& D, const PermGroup& G,
                                              bool require_locally_special = true) {
    if (require_locally_special && !is_locally_special(D))
        throw precondition_error(
            "reciprocity requires a locally special double poset (some strict cover in the "
            "first order is incomparable in the second)");
    require_subgroup_of_automorphisms(D, G);
    VerdictReport r;
    r.theorem = "dual reciprocity (double poset)";
    r.instance = detail::describe_dposet(D, G);
    int n = D.size();
    DoublePoset Dd = dual(D);

    QSym<ClassFun> omega = omega_qcf(D, G);
    QSym<ClassFun> omega_dual = omega_qcf(Dd, G);
    QSym<ClassFun> lhs = scale_by_character(antipode(omega), sign_character(G));
    if (n % 2) lhs = ring_scale(lhs, Rat(-1));
    if (!(lhs == omega_dual)) {
        r.pass = false;
        auto w = detail::qsym_cf_mismatch(lhs, omega_dual, G, D.u);
        r.witness = "quasisymmetric identity fails at " +
                    (w ? *w : std::string("an undetermined position"));
        return r;
    }

    BinPoly<ClassFun> p = order_poly_cf(D, G);
    BinPoly<ClassFun> p_dual = order_poly_cf(Dd, G);
    BinPoly<ClassFun> plhs = negate_variable(p);
    ClassFun sgn = sign_character(G);
    for (ClassFun& c : plhs.f) {
        c = classfun_pointwise_mul(c, sgn);
        if (n % 2) c = ring_scale(c, Rat(-1));
    }
    if (!(plhs == p_dual)) {
        r.pass = false;
        auto w = detail::binpoly_cf_mismatch(plhs, p_dual, G, D.u);
        r.witness = "polynomial identity fails at " +
                    (w ? *w : std::string("an undetermined position"));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Reciprocity for digraphs.
//
// Left side: antipode of the sign-twisted chromatic expression, times (-1)^n.
// Right side: the weak enumerator, computed by direct enumeration of weakly
// compatible pairs.  The polynomial form uses the substitution x -> -x.

inline VerdictReport check_reciprocity_digraph(const Digraph& G, const PermGroup& H) {
    require_subgroup_of_automorphisms(G, H);
    VerdictReport r;
    r.theorem = "weak reciprocity (digraph)";
    r.instance = detail::describe_digraph(G, H);
    int n = G.size();

    QSym<TPoly<ClassFun>> chrom = chromatic_qcf(G, H);
    QSym<TPoly<ClassFun>> bar = bar_chromatic_qcf(G, H);
    QSym<TPoly<ClassFun>> lhs = antipode(scale_by_character(chrom, sign_character(H)));
    if (n % 2) lhs = ring_scale(lhs, Rat(-1));
    if (!(lhs == bar)) {
        r.pass = false;
        auto w = detail::qsym_tcf_mismatch(lhs, bar, H, G.u);
        r.witness = "quasisymmetric identity fails at " +
                    (w ? *w : std::string("an undetermined position"));
        return r;
    }

    BinPoly<TPoly<ClassFun>> p = chromatic_poly_cf(G, H);
    BinPoly<TPoly<ClassFun>> p_bar = principal_specialization(bar);
    BinPoly<TPoly<ClassFun>> plhs = negate_variable(p);
    ClassFun sgn = sign_character(H);
    for (TPoly<ClassFun>& c : plhs.f) {
        c = detail::twist_tpoly(c, sgn);
        if (n % 2) c = ring_scale(c, Rat(-1));
    }
    if (!(plhs == p_bar)) {
        r.pass = false;
        auto w = detail::binpoly_tcf_mismatch(plhs, p_bar, H, G.u);
        r.witness = "polynomial identity fails at " +
                    (w ? *w : std::string("an undetermined position"));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Effectiveness and monotonicity of coefficients.

namespace detail {

inline std::string describe_qcf(int degree, const PermGroup& G) {
    return "quasisymmetric class function of degree " + std::to_string(degree) +
           " over a group of order " + std::to_string(G->order());
}

inline const PermGroup* group_of(const QSym<ClassFun>& q) {
    if (q.terms.empty()) return nullptr;
    return &q.terms.begin()->second.G;
}

inline const PermGroup* group_of(const QSym<TPoly<ClassFun>>& q) {
    for (const auto& [alpha, p] : q.terms)
        for (const ClassFun& c : p.c) return &c.G;
    return nullptr;
}

// Slice out the coefficient of t^k, keeping the composition grading.
inline QSym<ClassFun> tpoly_slice(const QSym<TPoly<ClassFun>>& q, std::size_t k) {
    QSym<ClassFun> out;
    out.degree = q.degree;
    out.basis = q.basis;
    for (const auto& [alpha, p] : q.terms)
        if (k < p.c.size()) out.add_term(alpha, p.c[k]);
    return out;
}

inline std::size_t max_t_degree(const QSym<TPoly<ClassFun>>& q) {
    std::size_t m = 0;
    for (const auto& [alpha, p] : q.terms) m = std::max(m, p.c.size());
    return m;
}

}  // namespace detail

// Every coefficient in the F basis decomposes into irreducible characters
// with nonnegative integer multiplicities.
inline VerdictReport check_F_effective(const QSym<ClassFun>& q, const std::string& instance = "") {
    VerdictReport r;
    r.theorem = "F-effectiveness";
    r.instance = instance;
    const PermGroup* G = detail::group_of(q);
    if (!G) return r;  // the zero expression has nothing to decompose
    if (instance.empty()) r.instance = detail::describe_qcf(q.degree, *G);
    CharTable T = character_table(*G);
    QSym<ClassFun> f = to_basis(q, Basis::F);
    for (const auto& [alpha, c] : f.terms) {
        Decomposition d = decompose(c, T);
        if (d.verdict != Verdict::EFFECTIVE) {
            r.pass = false;
            r.witness = "coefficient of F_" + detail::comp_to_string(alpha) + " is " +
                        verdict_name(d.verdict);
            return r;
        }
    }
    return r;
}

inline VerdictReport check_F_effective(const QSym<TPoly<ClassFun>>& q,
                                       const std::string& instance = "") {
    VerdictReport r;
    r.theorem = "F-effectiveness";
    r.instance = instance;
    const PermGroup* G = detail::group_of(q);
    if (!G) return r;
    if (instance.empty()) r.instance = detail::describe_qcf(q.degree, *G);
    CharTable T = character_table(*G);
    QSym<TPoly<ClassFun>> f = to_basis(q, Basis::F);
    for (std::size_t k = 0; k < detail::max_t_degree(f); ++k) {
        QSym<ClassFun> slice = detail::tpoly_slice(f, k);
        for (const auto& [alpha, c] : slice.terms) {
            Decomposition d = decompose(c, T);
            if (d.verdict != Verdict::EFFECTIVE) {
                r.pass = false;
                r.witness = "coefficient of F_" + detail::comp_to_string(alpha) + " at t^" +
                            std::to_string(k) + " is " + verdict_name(d.verdict);
                return r;
            }
        }
    }
    return r;
}

// Whenever one composition refines another, the difference of the monomial
// coefficients (finer minus coarser) is an effective character.
inline VerdictReport check_M_increasing(const QSym<ClassFun>& q, const std::string& instance = "") {
    VerdictReport r;
    r.theorem = "M-increasing coefficients";
    r.instance = instance;
    const PermGroup* Gp = detail::group_of(q);
    if (!Gp) return r;
    const PermGroup& G = *Gp;
    if (instance.empty()) r.instance = detail::describe_qcf(q.degree, G);
    CharTable T = character_table(G);
    QSym<ClassFun> m = to_basis(q, Basis::M);
    ClassFun zero(G);
    for (const Composition& beta : compositions_of(m.degree)) {
        const ClassFun* pb = m.coeff_ptr(beta);
        const ClassFun& cb = pb ? *pb : zero;
        for (const Composition& alpha : coarsenings_of(beta)) {
            if (alpha == beta) continue;
            const ClassFun* pa = m.coeff_ptr(alpha);
            const ClassFun& ca = pa ? *pa : zero;
            if (!order_leq(ca, cb, T)) {
                r.pass = false;
                r.witness = "coefficient of M_" + detail::comp_to_string(alpha) +
                            " is not dominated by coefficient of M_" +
                            detail::comp_to_string(beta);
                return r;
            }
        }
    }
    return r;
}

inline VerdictReport check_M_increasing(const QSym<TPoly<ClassFun>>& q,
                                        const std::string& instance = "") {
    VerdictReport r;
    r.theorem = "M-increasing coefficients";
    r.instance = instance;
    const PermGroup* G = detail::group_of(q);
    if (!G) return r;
    if (instance.empty()) r.instance = detail::describe_qcf(q.degree, *G);
    QSym<TPoly<ClassFun>> m = to_basis(q, Basis::M);
    for (std::size_t k = 0; k < detail::max_t_degree(m); ++k) {
        VerdictReport sub = check_M_increasing(detail::tpoly_slice(m, k), r.instance);
        if (!sub.pass) {
            r.pass = false;
            r.witness = "at t^" + std::to_string(k) + ": " + sub.witness;
            return r;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Flawless sequences and h-effectiveness.
//
// The stored coefficient sequence (c_0, ..., c_d) passes when
//   c_i <= c_{i+1}   for 0 <= i <= (d-1)/2, and
//   c_i <= c_{d-i}   for 0 <= i <= d/2,
// with <= meaning "the difference is an effective character".

namespace detail {

inline VerdictReport check_flawless_sequence(const std::vector<ClassFun>& seq,
                                             const std::string& instance) {
    VerdictReport r;
    r.theorem = "flawless coefficient sequence";
    r.instance = instance;
    if (seq.empty()) return r;
    int d = static_cast<int>(seq.size()) - 1;
    CharTable T = character_table(seq.front().G);
    for (int i = 0; 2 * i <= d - 1; ++i)
        if (!order_leq(seq[i], seq[i + 1], T)) {
            r.pass = false;
            r.witness = "entry " + std::to_string(i) + " is not dominated by entry " +
                        std::to_string(i + 1);
            return r;
        }
    for (int i = 0; 2 * i <= d; ++i)
        if (!order_leq(seq[i], seq[d - i], T)) {
            r.pass = false;
            r.witness = "entry " + std::to_string(i) + " is not dominated by entry " +
                        std::to_string(d - i);
            return r;
        }
    return r;
}

inline std::string describe_pcf(const BinPoly<ClassFun>& p) {
    if (p.f.empty()) return "empty polynomial class function";
    return "polynomial class function of dimension " + std::to_string(p.dimension()) +
           " over a group of order " + std::to_string(p.f.front().G->order());
}

}  // namespace detail

// The binomial-basis coefficient sequence of a counting polynomial is
// flawless in the sense above.
inline VerdictReport check_flawless(const BinPoly<ClassFun>& p, const std::string& instance = "") {
    return detail::check_flawless_sequence(
        p.f, instance.empty() ? detail::describe_pcf(p) : instance);
}

inline VerdictReport check_flawless(const BinPoly<TPoly<ClassFun>>& p,
                                    const std::string& instance = "") {
    VerdictReport r;
    r.theorem = "flawless coefficient sequence";
    r.instance = instance;
    const PermGroup* G = nullptr;
    std::size_t tmax = 0;
    for (const TPoly<ClassFun>& c : p.f) {
        tmax = std::max(tmax, c.c.size());
        if (!G)
            for (const ClassFun& x : c.c) {
                G = &x.G;
                break;
            }
    }
    if (!G) return r;
    if (instance.empty())
        r.instance = "polynomial class function of dimension " + std::to_string(p.dimension()) +
                     " over a group of order " + std::to_string((*G)->order());
    for (std::size_t k = 0; k < tmax; ++k) {
        std::vector<ClassFun> seq;
        seq.reserve(p.f.size());
        for (const TPoly<ClassFun>& c : p.f)
            seq.push_back(k < c.c.size() ? c.c[k] : ClassFun(*G));
        VerdictReport sub = detail::check_flawless_sequence(seq, r.instance);
        if (!sub.pass) {
            r.pass = false;
            r.witness = "at t^" + std::to_string(k) + ": " + sub.witness;
            return r;
        }
    }
    return r;
}

// Every entry of the derived h-sequence decomposes effectively.  The
// h-sequence is computed directly from the binomial-basis coefficients; the
// fundamental-basis route through the quasisymmetric expression is available
// to tests as an independent cross-check.
inline VerdictReport check_h_effective(const BinPoly<ClassFun>& p,
                                       const std::string& instance = "") {
    VerdictReport r;
    r.theorem = "h-effectiveness";
    r.instance = instance.empty() ? detail::describe_pcf(p) : instance;
    if (p.f.empty()) return r;
    CharTable T = character_table(p.f.front().G);
    std::vector<ClassFun> h = h_from_f(p.f, p.dimension());
    for (std::size_t i = 0; i < h.size(); ++i) {
        Decomposition d = decompose(h[i], T);
        if (d.verdict != Verdict::EFFECTIVE) {
            r.pass = false;
            r.witness = "h_" + std::to_string(i) + " is " + verdict_name(d.verdict);
            return r;
        }
    }
    return r;
}

inline VerdictReport check_h_effective(const BinPoly<TPoly<ClassFun>>& p,
                                       const std::string& instance = "") {
    VerdictReport r;
    r.theorem = "h-effectiveness";
    r.instance = instance;
    const PermGroup* G = nullptr;
    std::size_t tmax = 0;
    for (const TPoly<ClassFun>& c : p.f) {
        tmax = std::max(tmax, c.c.size());
        if (!G)
            for (const ClassFun& x : c.c) {
                G = &x.G;
                break;
            }
    }
    if (!G) return r;
    if (instance.empty())
        r.instance = "polynomial class function of dimension " + std::to_string(p.dimension()) +
                     " over a group of order " + std::to_string((*G)->order());
    for (std::size_t k = 0; k < tmax; ++k) {
        BinPoly<ClassFun> slice;
        slice.f.reserve(p.f.size());
        for (const TPoly<ClassFun>& c : p.f)
            slice.f.push_back(k < c.c.size() ? c.c[k] : ClassFun(*G));
        VerdictReport sub = check_h_effective(slice, r.instance);
        if (!sub.pass) {
            r.pass = false;
            r.witness = "at t^" + std::to_string(k) + ": " + sub.witness;
            return r;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Orbit-counting invariants.
//
// The orbital expression averages the class-function values over the group;
// its coefficients count orbits.  The coeven variant weights the average by
// the sign character; its coefficients count orbits of elements whose
// stabilizer contains only even permutations.  Each coefficient is computed
// two ways — an explicit class-size-weighted sum and an inner product with
// the corresponding character — and the two must agree and be integers.

namespace detail {

inline Rat averaged_coeff(const ClassFun& cf, const ClassFun& weight, const char* what) {
    const PermGroup& G = cf.G;
    Cyc acc;
    for (std::size_t c = 0; c < cf.v.size(); ++c) {
        Cyc term = cyc_mul(weight.v[c], cf.v[c]);
        acc = ring_add(acc, ring_scale(term, Rat(static_cast<long>(G->classes[c].size()))));
    }
    acc = ring_scale(acc, make_rat(Int(1), Int(G->order())));
    Cyc ip = inner_product(weight, cf);
    if (!cyc_eq(acc, ip))
        throw integrity_error(std::string(what) + ": averaging and the inner product disagree");
    if (!cyc_is_rational(acc))
        throw integrity_error(std::string(what) + ": averaged coefficient is not rational");
    Rat r = cyc_to_rat(acc);
    if (!rat_is_integer(r))
        throw integrity_error(std::string(what) +
                              ": averaged coefficient is not an integer, got " + rat_to_string(r));
    return r;
}

inline TPoly<Rat> averaged_tpoly(const TPoly<ClassFun>& p, const ClassFun& weight,
                                 const char* what) {
    std::vector<Rat> c;
    c.reserve(p.c.size());
    for (const ClassFun& x : p.c) c.push_back(averaged_coeff(x, weight, what));
    return TPoly<Rat>(std::move(c));
}

}  // namespace detail

inline QSym<Rat> orbital(const QSym<ClassFun>& q) {
    QSym<Rat> out;
    out.degree = q.degree;
    out.basis = q.basis;
    if (q.terms.empty()) return out;
    ClassFun w = trivial_character(q.terms.begin()->second.G);
    for (const auto& [alpha, c] : q.terms)
        out.add_term(alpha, detail::averaged_coeff(c, w, "orbital"));
    return out;
}

inline QSym<Rat> coeven(const QSym<ClassFun>& q) {
    QSym<Rat> out;
    out.degree = q.degree;
    out.basis = q.basis;
    if (q.terms.empty()) return out;
    ClassFun w = sign_character(q.terms.begin()->second.G);
    for (const auto& [alpha, c] : q.terms)
        out.add_term(alpha, detail::averaged_coeff(c, w, "coeven"));
    return out;
}

inline QSym<TPoly<Rat>> orbital(const QSym<TPoly<ClassFun>>& q) {
    QSym<TPoly<Rat>> out;
    out.degree = q.degree;
    out.basis = q.basis;
    const PermGroup* G = detail::group_of(q);
    if (!G) return out;
    ClassFun w = trivial_character(*G);
    for (const auto& [alpha, c] : q.terms)
        out.add_term(alpha, detail::averaged_tpoly(c, w, "orbital"));
    return out;
}

inline QSym<TPoly<Rat>> coeven(const QSym<TPoly<ClassFun>>& q) {
    QSym<TPoly<Rat>> out;
    out.degree = q.degree;
    out.basis = q.basis;
    const PermGroup* G = detail::group_of(q);
    if (!G) return out;
    ClassFun w = sign_character(*G);
    for (const auto& [alpha, c] : q.terms)
        out.add_term(alpha, detail::averaged_tpoly(c, w, "coeven"));
    return out;
}

inline BinPoly<Rat> orbital(const BinPoly<ClassFun>& p) {
    BinPoly<Rat> out;
    if (p.f.empty()) return out;
    ClassFun w = trivial_character(p.f.front().G);
    for (const ClassFun& c : p.f) out.f.push_back(detail::averaged_coeff(c, w, "orbital"));
    return out;
}

inline BinPoly<Rat> coeven(const BinPoly<ClassFun>& p) {
    BinPoly<Rat> out;
    if (p.f.empty()) return out;
    ClassFun w = sign_character(p.f.front().G);
    for (const ClassFun& c : p.f) out.f.push_back(detail::averaged_coeff(c, w, "coeven"));
    return out;
}

inline BinPoly<TPoly<Rat>> orbital(const BinPoly<TPoly<ClassFun>>& p) {
    BinPoly<TPoly<Rat>> out;
    const PermGroup* G = nullptr;
    for (const TPoly<ClassFun>& c : p.f)
        for (const ClassFun& x : c.c) {
            G = &x.G;
            break;
        }
    for (const TPoly<ClassFun>& c : p.f)
        out.f.push_back(G ? detail::averaged_tpoly(c, trivial_character(*G), "orbital")
                          : TPoly<Rat>{});
    return out;
}

inline BinPoly<TPoly<Rat>> coeven(const BinPoly<TPoly<ClassFun>>& p) {
    BinPoly<TPoly<Rat>> out;
    const PermGroup* G = nullptr;
    for (const TPoly<ClassFun>& c : p.f)
        for (const ClassFun& x : c.c) {
            G = &x.G;
            break;
        }
    for (const TPoly<ClassFun>& c : p.f)
        out.f.push_back(G ? detail::averaged_tpoly(c, sign_character(*G), "coeven")
                          : TPoly<Rat>{});
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force orbit oracles.  `image` maps (element index, point) -> point.
// These delegate to the union-find counters; they are the independent side of
// the Burnside comparisons made in tests and in the orbital invariants.

inline long orbit_count_oracle(const PermGroup& G, int domain,
                               const std::function<int(int, int)>& image) {
    return orbit_count(G, domain, image);
}

// Counts orbits of the points whose stabilizer contains only even
// permutations (evenness measured in the ambient symmetric group on the
// ground set the permutations act on).
inline long coeven_orbit_oracle(const PermGroup& G, int domain,
                                const std::function<int(int, int)>& image) {
    return coeven_orbit_count(G, domain, image);
}

// ---------------------------------------------------------------------------
// Orbital reciprocity.
//
// Four identities per input kind: the antipode identity and the negated-
// variable identity, once from the orbital expression of the input to the
// coeven expression of the transformed input and once with the two roles
// swapped.  Left sides transform the direct enumerator of the input; right
// sides enumerate the dual (or weak) side directly.

inline VerdictReport check_orbital_reciprocity(const DoublePoset& D, const PermGroup& G) {
    if (!is_locally_special(D))
        throw precondition_error(
            "orbital reciprocity requires a locally special double poset (some strict cover in "
            "the first order is incomparable in the second)");
    require_subgroup_of_automorphisms(D, G);
    VerdictReport r;
    r.theorem = "orbital reciprocity (double poset)";
    r.instance = detail::describe_dposet(D, G);
    int n = D.size();
    DoublePoset Dd = dual(D);
    QSym<ClassFun> omega = omega_qcf(D, G);
    QSym<ClassFun> omega_dual = omega_qcf(Dd, G);

    auto flip = [&](QSym<Rat> q) { return n % 2 ? ring_scale(q, Rat(-1)) : q; };
    QSym<Rat> lhs1 = flip(antipode(orbital(omega)));
    QSym<Rat> rhs1 = coeven(omega_dual);
    if (!(lhs1 == rhs1)) {
        r.pass = false;
        auto w = detail::qsym_rat_mismatch(lhs1, rhs1);
        r.witness = "antipode identity (orbital to coeven) fails at " +
                    (w ? *w : std::string("an undetermined position"));
        return r;
    }
    QSym<Rat> lhs2 = flip(antipode(coeven(omega)));
    QSym<Rat> rhs2 = orbital(omega_dual);
    if (!(lhs2 == rhs2)) {
        r.pass = false;
        auto w = detail::qsym_rat_mismatch(lhs2, rhs2);
        r.witness = "antipode identity (coeven to orbital) fails at " +
                    (w ? *w : std::string("an undetermined position"));
        return r;
    }

    BinPoly<ClassFun> p = order_poly_cf(D, G);
    BinPoly<ClassFun> p_dual = order_poly_cf(Dd, G);
    auto pflip = [&](BinPoly<Rat> q) { return n % 2 ? ring_neg(q) : q; };
    BinPoly<Rat> lhs3 = pflip(negate_variable(orbital(p)));
    BinPoly<Rat> rhs3 = coeven(p_dual);
    if (!(lhs3 == rhs3)) {
        r.pass = false;
        auto w = detail::binpoly_rat_mismatch(lhs3, rhs3);
        r.witness = "negated-variable identity (orbital to coeven) fails at " +
                    (w ? *w : std::string("an undetermined position"));
        return r;
    }
    BinPoly<Rat> lhs4 = pflip(negate_variable(coeven(p)));
    BinPoly<Rat> rhs4 = orbital(p_dual);
    if (!(lhs4 == rhs4)) {
        r.pass = false;
        auto w = detail::binpoly_rat_mismatch(lhs4, rhs4);
        r.witness = "negated-variable identity (coeven to orbital) fails at " +
                    (w ? *w : std::string("an undetermined position"));
    }
    return r;
}

inline VerdictReport check_orbital_reciprocity(const Digraph& G, const PermGroup& H) {
    require_subgroup_of_automorphisms(G, H);
    VerdictReport r;
    r.theorem = "orbital reciprocity (digraph)";
    r.instance = detail::describe_digraph(G, H);
    int n = G.size();
    QSym<TPoly<ClassFun>> chrom = chromatic_qcf(G, H);
    QSym<TPoly<ClassFun>> bar = bar_chromatic_qcf(G, H);

    auto flip = [&](QSym<TPoly<Rat>> q) { return n % 2 ? ring_scale(q, Rat(-1)) : q; };
    QSym<TPoly<Rat>> lhs1 = flip(antipode(orbital(chrom)));
    QSym<TPoly<Rat>> rhs1 = coeven(bar);
    if (!(lhs1 == rhs1)) {
        r.pass = false;
        auto w = detail::qsym_trat_mismatch(lhs1, rhs1);
        r.witness = "antipode identity (orbital to coeven) fails at " +
                    (w ? *w : std::string("an undetermined position"));
        return r;
    }
    QSym<TPoly<Rat>> lhs2 = flip(antipode(coeven(chrom)));
    QSym<TPoly<Rat>> rhs2 = orbital(bar);
    if (!(lhs2 == rhs2)) {
        r.pass = false;
        auto w = detail::qsym_trat_mismatch(lhs2, rhs2);
        r.witness = "antipode identity (coeven to orbital) fails at " +
                    (w ? *w : std::string("an undetermined position"));
        return r;
    }

    BinPoly<TPoly<ClassFun>> p = chromatic_poly_cf(G, H);
    BinPoly<TPoly<ClassFun>> p_bar = principal_specialization(bar);
    auto pflip = [&](BinPoly<TPoly<Rat>> q) { return n % 2 ? ring_neg(q) : q; };
    BinPoly<TPoly<Rat>> lhs3 = pflip(negate_variable(orbital(p)));
    BinPoly<TPoly<Rat>> rhs3 = coeven(p_bar);
    if (!(lhs3 == rhs3)) {
        r.pass = false;
        auto w = detail::binpoly_trat_mismatch(lhs3, rhs3);
        r.witness = "negated-variable identity (orbital to coeven) fails at " +
                    (w ? *w : std::string("an undetermined position"));
        return r;
    }
    BinPoly<TPoly<Rat>> lhs4 = pflip(negate_variable(coeven(p)));
    BinPoly<TPoly<Rat>> rhs4 = orbital(p_bar);
    if (!(lhs4 == rhs4)) {
        r.pass = false;
        auto w = detail::binpoly_trat_mismatch(lhs4, rhs4);
        r.witness = "negated-variable identity (coeven to orbital) fails at " +
                    (w ? *w : std::string("an undetermined position"));
    }
    return r;
}

}  // namespace qclass

#endif  // QCLASS_VERIFY_HPP
