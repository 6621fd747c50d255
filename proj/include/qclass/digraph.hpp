#ifndef QCLASS_DIGRAPH_HPP
#define QCLASS_DIGRAPH_HPP

// Directed graphs with at most one edge per unordered pair, their proper
// colorings graded by the ascent statistic, acyclic orientations with the
// group action, the double poset of an orientation, the equivariant chromatic
// enumerator and its weak counterpart, chromatic polynomials, and the
// orientation-decomposition identity checker.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qclass/classfun.hpp"
#include "qclass/composition.hpp"
#include "qclass/dposet.hpp"
#include "qclass/group.hpp"
#include "qclass/qsym.hpp"
#include "qclass/tpoly.hpp"
#include "qclass/util.hpp"

namespace qclass {

struct Digraph {
    Universe u;
    std::vector<std::pair<int, int>> edges;      // ordered pairs, loop-free
    std::vector<Mask> out_mask, nbr_mask;        // per-vertex successors / all neighbors
    std::map<std::pair<int, int>, int> slot;     // (min,max) endpoint pair -> edge index

    int size() const { return u.size(); }
};

inline Digraph make_digraph(Universe u, const std::vector<LabelPair>& edges) {
    Digraph G;
    G.u = std::move(u);
    int n = G.u.size();
    G.out_mask.assign(n, 0);
    G.nbr_mask.assign(n, 0);
    for (const auto& [a, b] : edges) {
        int x = G.u.index(a), y = G.u.index(b);
        if (x == y) throw invalid_input_error("loops are not allowed");
        auto key = std::minmax(x, y);
        if (!G.slot.emplace(key, static_cast<int>(G.edges.size())).second)
            throw invalid_input_error("at most one edge per unordered pair");
        G.edges.emplace_back(x, y);
        G.out_mask[x] |= Mask(1) << y;
        G.nbr_mask[x] |= Mask(1) << y;
        G.nbr_mask[y] |= Mask(1) << x;
    }
    return G;
}

inline bool preserves_digraph(const Digraph& G, const Perm& p) {
    for (const auto& [x, y] : G.edges)
        if (!((G.out_mask[p[x]] >> p[y]) & 1)) return false;
    // Edge counts match and images of edges are edges, so p permutes the edges.
    return true;
}

inline PermGroup automorphisms(const Digraph& G) {
    int n = G.size();
    if (n > max_ground_n())
        throw resource_error("automorphism search exceeds the ground-set bound");
    std::vector<Perm> found;
    Perm p = identity_perm(n);
    do {
        if (preserves_digraph(G, p)) found.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return generate(n, found, std::max<std::size_t>(found.size(), 100000));
}

inline void require_subgroup_of_automorphisms(const Digraph& G, const PermGroup& H) {
    if (H->n != G.size()) throw invalid_input_error("group degree differs from the vertex set");
    for (const Perm& g : H->elements)
        if (!preserves_digraph(G, g))
            throw invalid_input_error("group is not contained in the automorphism group");
}

// ---------------------------------------------------------------------------
// Acyclic orientations.

struct AcyclicOrientation {
    Digraph ref;                             // the digraph being oriented
    std::vector<std::pair<int, int>> edges;  // one direction per reference edge
    long asc = 0;                            // reference edges reversed (= descent count)
    std::uint32_t mask = 0;                  // bit i set: reference edge i is reversed
};

namespace detail {

inline bool edges_acyclic(int n, const std::vector<std::pair<int, int>>& es) {
    std::vector<Mask> reach(n, 0);
    for (const auto& [a, b] : es) reach[a] |= Mask(1) << b;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if ((reach[i] >> k) & 1) reach[i] |= reach[k];
    for (int i = 0; i < n; ++i)
        if ((reach[i] >> i) & 1) return false;
    return true;
}

}  // namespace detail

// All acyclic orientations of G's unordered support, in increasing order of
// the reversal mask.
inline std::vector<AcyclicOrientation> acyclic_orientations(const Digraph& G) {
    int m = static_cast<int>(G.edges.size());
    if (m > 20) throw resource_error("too many edges to enumerate orientations");
    std::vector<AcyclicOrientation> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask) {
        AcyclicOrientation O;
        O.ref = G;
        O.mask = mask;
        for (int i = 0; i < m; ++i) {
            auto [a, b] = G.edges[i];
            if ((mask >> i) & 1) {
                O.edges.emplace_back(b, a);
                O.asc += 1;
            } else {
                O.edges.emplace_back(a, b);
            }
        }
        if (detail::edges_acyclic(G.size(), O.edges)) out.push_back(std::move(O));
    }
    return out;
}

// Relabel an orientation by a digraph automorphism.
inline AcyclicOrientation act(const Perm& h, const AcyclicOrientation& O) {
    const Digraph& G = O.ref;
    AcyclicOrientation R;
    R.ref = G;
    R.edges.resize(G.edges.size());
    for (const auto& [a, b] : O.edges) {
        int x = h[a], y = h[b];
        auto it = G.slot.find(std::minmax(x, y));
        if (it == G.slot.end())
            throw invalid_input_error("permutation does not preserve the edge set");
        R.edges[it->second] = {x, y};
        if (G.edges[it->second] != std::make_pair(x, y)) {
            R.mask |= std::uint32_t(1) << it->second;
            R.asc += 1;
        }
    }
    return R;
}

// The double poset of an acyclic orientation: x is below y in the first order
// exactly when y reaches x along directed edges; the second order is the
// opposite, so every strict first-order relation is an inversion.
inline DoublePoset orientation_poset(const AcyclicOrientation& O) {
    int n = O.ref.size();
    std::vector<Mask> reach(n, 0);
    for (const auto& [a, b] : O.edges) reach[a] |= Mask(1) << b;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if ((reach[i] >> k) & 1) reach[i] |= reach[k];
    for (int i = 0; i < n; ++i)
        if ((reach[i] >> i) & 1) throw precondition_error("orientation is cyclic");
    DoublePoset D;
    D.u = O.ref.u;
    D.leq1.assign(n, 0);
    D.leq2.assign(n, 0);
    D.weights.assign(n, 1);
    for (int x = 0; x < n; ++x) {
        D.leq2[x] = reach[x] | (Mask(1) << x);
        for (int y = 0; y < n; ++y)
            if (y == x || ((reach[y] >> x) & 1)) D.leq1[x] |= Mask(1) << y;
    }
    return D;
}

// ---------------------------------------------------------------------------
// The chromatic enumerator.

namespace detail {

// Ordered set partitions into independent blocks (unions of the given units),
// graded by the number of edges pointing from an earlier block into a later
// one.  counts[type][k] accumulates the t^k multiplicity.
inline void indep_block_recurse(const Digraph& G, const std::vector<Mask>& unit_mask,
                                const std::vector<int>& unit_value, int rem, Mask placed,
                                long asc, Composition& type,
                                std::map<Composition, std::vector<long>, CompLess>& counts) {
    if (rem == 0) {
        auto& profile = counts[type];
        if (static_cast<long>(profile.size()) <= asc) profile.resize(asc + 1, 0);
        profile[asc] += 1;
        return;
    }
    for (int S = rem; S; S = (S - 1) & rem) {
        Mask block = 0;
        int value = 0;
        for (int i = 0; i < static_cast<int>(unit_mask.size()); ++i)
            if ((S >> i) & 1) {
                block |= unit_mask[i];
                value += unit_value[i];
            }
        bool independent = true;
        long gained = 0;
        for (int x = 0; x < G.size(); ++x) {
            if ((block >> x) & 1) {
                if (G.nbr_mask[x] & block) {
                    independent = false;
                    break;
                }
            } else if ((placed >> x) & 1) {
                gained += popcount_mask(G.out_mask[x] & block);
            }
        }
        if (!independent) continue;
        type.push_back(value);
        indep_block_recurse(G, unit_mask, unit_value, rem & ~S, placed | block, asc + gained,
                            type, counts);
        type.pop_back();
    }
}

inline std::map<Composition, std::vector<long>, CompLess> proper_pattern_profiles(
    const Digraph& G, const Perm& g) {
    std::vector<int> sizes;
    auto units = cycle_masks(g, &sizes);
    std::map<Composition, std::vector<long>, CompLess> counts;
    Composition type;
    indep_block_recurse(G, units, sizes, (1 << static_cast<int>(units.size())) - 1, 0, 0, type,
                        counts);
    return counts;
}

// Assemble per-class t-profiles into a single expression with t-polynomial
// class-function coefficients.
inline QSym<TPoly<ClassFun>> assemble_tpoly_qcf(
    const PermGroup& G, int degree,
    const std::map<Composition, std::vector<std::vector<long>>, CompLess>& table) {
    QSym<TPoly<ClassFun>> q;
    q.degree = degree;
    q.basis = Basis::M;
    for (const auto& [type, per_class] : table) {
        std::size_t maxlen = 0;
        for (const auto& prof : per_class) maxlen = std::max(maxlen, prof.size());
        std::vector<ClassFun> coeffs;
        for (std::size_t k = 0; k < maxlen; ++k) {
            std::vector<long> vals(G->num_classes(), 0);
            for (int c = 0; c < G->num_classes(); ++c)
                if (k < per_class[c].size()) vals[c] = per_class[c][k];
            coeffs.push_back(classfun_from_counts(G, vals));
        }
        q.add_term(type, TPoly<ClassFun>(std::move(coeffs)));
    }
    return q;
}

}  // namespace detail

// chi(G, H, t, x): the coefficient of M_alpha at a class is the t-polynomial
// counting the class representative's fixed set compositions of type alpha
// with independent blocks, graded by cross-block ascents.
inline QSym<TPoly<ClassFun>> chromatic_qcf(const Digraph& G, const PermGroup& H) {
    if (G.size() > max_ground_n())
        throw resource_error("enumeration exceeds the ground-set bound");
    require_subgroup_of_automorphisms(G, H);
    std::map<Composition, std::vector<std::vector<long>>, CompLess> table;
    for (int c = 0; c < H->num_classes(); ++c) {
        for (auto& [type, prof] :
             detail::proper_pattern_profiles(G, H->elements[H->class_rep[c]])) {
            auto it = table.find(type);
            if (it == table.end())
                it = table.emplace(type, std::vector<std::vector<long>>(H->num_classes())).first;
            it->second[c] = std::move(prof);
        }
    }
    return detail::assemble_tpoly_qcf(H, G.size(), table);
}

// Extract the plain t-polynomial expression at one class.
inline QSym<TPoly<Rat>> qsym_tpoly_value_at_class(const QSym<TPoly<ClassFun>>& q, int cls) {
    QSym<TPoly<Rat>> out;
    out.degree = q.degree;
    out.basis = q.basis;
    for (const auto& [alpha, poly] : q.terms) {
        std::vector<Rat> coeffs;
        for (const ClassFun& cf : poly.c) coeffs.push_back(cyc_to_rat(cf.v[cls]));
        TPoly<Rat> p(std::move(coeffs));
        if (!ring_is_zero(p)) out.add_term(alpha, p);
    }
    return out;
}

// ---------------------------------------------------------------------------
// The weak counterpart: pairs of an acyclic orientation and a weakly
// compatible pattern, weighted by the orientation's descent count.

inline QSym<TPoly<ClassFun>> bar_chromatic_qcf(const Digraph& G, const PermGroup& H) {
    if (G.size() > max_ground_n())
        throw resource_error("enumeration exceeds the ground-set bound");
    require_subgroup_of_automorphisms(G, H);
    auto orients = acyclic_orientations(G);
    std::map<Composition, std::vector<std::vector<long>>, CompLess> table;
    for (int c = 0; c < H->num_classes(); ++c) {
        const Perm& g = H->elements[H->class_rep[c]];
        std::vector<int> sizes;
        auto units = detail::cycle_masks(g, &sizes);
        for (const AcyclicOrientation& O : orients) {
            if (act(g, O).mask != O.mask) continue;
            // A pattern is weakly compatible with O when along every O-edge
            // the source's block comes no later than the target's, i.e. each
            // block's O-in-neighbors lie in the preceding blocks or itself.
            int n = G.size();
            std::vector<Mask> in_nbr(n, 0);
            for (const auto& [a, b] : O.edges) in_nbr[b] |= Mask(1) << a;
            int nu = static_cast<int>(units.size());
            std::vector<Mask> ud(nu, 0), ui(nu, 0);
            for (int i = 0; i < nu; ++i)
                for (int x = 0; x < n; ++x)
                    if ((units[i] >> x) & 1) ud[i] |= in_nbr[x];
            std::map<Composition, long, CompLess> cnts;
            Composition type;
            detail::unit_block_recurse(units, ud, ui, sizes, (1 << nu) - 1, 0, type, cnts);
            for (const auto& [tp, cnt] : cnts) {
                auto it = table.find(tp);
                if (it == table.end())
                    it = table.emplace(tp, std::vector<std::vector<long>>(H->num_classes()))
                             .first;
                auto& prof = it->second[c];
                if (static_cast<long>(prof.size()) <= O.asc) prof.resize(O.asc + 1, 0);
                prof[O.asc] += cnt;
            }
        }
    }
    return detail::assemble_tpoly_qcf(H, G.size(), table);
}

// ---------------------------------------------------------------------------
// Chromatic polynomials.

inline BinPoly<TPoly<ClassFun>> chromatic_poly_cf(const Digraph& G, const PermGroup& H) {
    return principal_specialization(chromatic_qcf(G, H));
}

// Independent oracle: enumerate every map N -> [n]; keep proper colorings
// fixed by the class representative; grade by ascents.
inline std::vector<TPoly<Rat>> count_colorings(const Digraph& G, const PermGroup& H, long n) {
    int sz = G.size();
    double total = 1;
    for (int i = 0; i < sz; ++i) total *= static_cast<double>(n);
    if (total > 2e6) throw resource_error("oracle enumeration too large");
    std::vector<std::vector<long>> profiles(H->num_classes());
    if (sz == 0) {
        for (auto& p : profiles) p.assign(1, 1);  // the empty coloring
    } else if (n > 0) {
        std::vector<long> f(sz, 1);
        while (true) {
            bool proper = true;
            long asc = 0;
            for (const auto& [x, y] : G.edges) {
                if (f[x] == f[y]) {
                    proper = false;
                    break;
                }
                if (f[x] < f[y]) asc += 1;
            }
            if (proper) {
                for (int c = 0; c < H->num_classes(); ++c) {
                    const Perm& g = H->elements[H->class_rep[c]];
                    bool fixed = true;
                    for (int x = 0; x < sz && fixed; ++x)
                        if (f[g[x]] != f[x]) fixed = false;
                    if (fixed) {
                        auto& prof = profiles[c];
                        if (static_cast<long>(prof.size()) <= asc) prof.resize(asc + 1, 0);
                        prof[asc] += 1;
                    }
                }
            }
            int pos = sz - 1;
            while (pos >= 0 && f[pos] == n) {
                f[pos] = 1;
                --pos;
            }
            if (pos < 0) break;
            f[pos] += 1;
        }
    }
    std::vector<TPoly<Rat>> out;
    for (const auto& prof : profiles) {
        std::vector<Rat> coeffs;
        for (long v : prof) coeffs.emplace_back(v);
        out.emplace_back(std::move(coeffs));
    }
    return out;
}

// ---------------------------------------------------------------------------
// The orientation decomposition.

struct DecompositionReport {
    bool ok = true;
    std::string witness;  // empty when ok
};

namespace detail {

inline std::string comp_to_string(const Composition& alpha) {
    std::string s = "(";
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(alpha[i]);
    }
    return s + ")";
}

}  // namespace detail

// Checks, through independent code paths, that the chromatic enumerator
// decomposes over acyclic orientations:
//   part 1 (per class): the value at a class equals the sum over fixed
//     orientations O of t^{asc(O)} times the orientation poset's fixed-pattern
//     expression;
//   part 3 (transversal): the whole expression equals the sum over orbit
//     representatives O of t^{asc(O)} times the induction of the orientation
//     poset's enumerator from the stabilizer.
inline DecompositionReport verify_orientation_decomposition(const Digraph& G,
                                                            const PermGroup& H) {
    require_subgroup_of_automorphisms(G, H);
    QSym<TPoly<ClassFun>> chrom = chromatic_qcf(G, H);
    auto orients = acyclic_orientations(G);

    // part 1
    for (int c = 0; c < H->num_classes(); ++c) {
        const Perm& g = H->elements[H->class_rep[c]];
        QSym<TPoly<Rat>> lhs = qsym_tpoly_value_at_class(chrom, c);
        QSym<TPoly<Rat>> rhs;
        rhs.degree = G.size();
        rhs.basis = Basis::M;
        for (const AcyclicOrientation& O : orients) {
            if (act(g, O).mask != O.mask) continue;
            QSym<Rat> om = omega_fixed_by(orientation_poset(O), g);
            for (const auto& [alpha, r] : om.terms)
                rhs.add_term(alpha, TPoly<Rat>::monomial(r, static_cast<int>(O.asc)));
        }
        if (!(lhs == rhs)) {
            for (const Composition& alpha : compositions_of(G.size())) {
                const TPoly<Rat>* a = lhs.coeff_ptr(alpha);
                const TPoly<Rat>* b = rhs.coeff_ptr(alpha);
                bool same = (a == nullptr && b == nullptr) ||
                            (a != nullptr && b != nullptr && *a == *b);
                if (!same)
                    return {false, "part 1 mismatch at class " +
                                       perm_to_cycle_string(g, G.u) + ", coefficient of M_" +
                                       detail::comp_to_string(alpha)};
            }
            return {false, "part 1 mismatch at class " + perm_to_cycle_string(g, G.u)};
        }
    }

    // part 3: orbits of the H-action on orientations
    std::map<std::uint32_t, int> index_of;
    for (std::size_t i = 0; i < orients.size(); ++i) index_of[orients[i].mask] = static_cast<int>(i);
    std::vector<bool> seen(orients.size(), false);
    QSym<TPoly<ClassFun>> rhs;
    rhs.degree = G.size();
    rhs.basis = Basis::M;
    for (std::size_t i = 0; i < orients.size(); ++i) {
        if (seen[i]) continue;
        // mark the whole orbit, keeping orients[i] as the representative
        std::vector<Perm> stab;
        for (const Perm& h : H->elements) {
            auto img = act(h, orients[i]);
            seen[index_of.at(img.mask)] = true;
            if (img.mask == orients[i].mask) stab.push_back(h);
        }
        PermGroup S = generate(G.size(), stab, std::max<std::size_t>(stab.size(), 100000));
        QSym<ClassFun> om = omega_qcf(orientation_poset(orients[i]), S);
        for (const auto& [alpha, cf] : om.terms)
            rhs.add_term(alpha, TPoly<ClassFun>::monomial(induce(cf, H),
                                                          static_cast<int>(orients[i].asc)));
    }
    if (!(chrom == rhs)) {
        for (const Composition& alpha : compositions_of(G.size())) {
            const TPoly<ClassFun>* a = chrom.coeff_ptr(alpha);
            const TPoly<ClassFun>* b = rhs.coeff_ptr(alpha);
            bool same = (a == nullptr && b == nullptr) ||
                        (a != nullptr && b != nullptr && *a == *b);
            if (!same)
                return {false,
                        "part 3 mismatch at coefficient of M_" + detail::comp_to_string(alpha)};
        }
        return {false, "part 3 mismatch"};
    }
    return {};
}

}  // namespace qclass

#endif  // QCLASS_DIGRAPH_HPP
