#ifndef QCLASS_DPOSET_HPP
#define QCLASS_DPOSET_HPP

// Double posets: one ground set carrying two partial orders, with optional
// positive integer weights.  Provides inversions and descents, the locally-
// special test, automorphism groups, the equivariant quasisymmetric enumerator
// over D-partition patterns, order-polynomial class functions, duals,
// quotients by an automorphism, weighted enumerators, and compatible linear
// orders.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qclass/binpoly.hpp"
#include "qclass/classfun.hpp"
#include "qclass/composition.hpp"
#include "qclass/group.hpp"
#include "qclass/permutation.hpp"
#include "qclass/qsym.hpp"
#include "qclass/rational.hpp"
#include "qclass/util.hpp"

namespace qclass {

struct DoublePoset {
    Universe u;
    std::vector<Mask> leq1, leq2;  // leq[x] = bitmask of y with x <= y (reflexive, transitive)
    std::vector<long> weights;     // positive; all 1 unless supplied
    bool weighted = false;         // whether weights were given explicitly

    int size() const { return u.size(); }
};

using LabelPair = std::pair<std::string, std::string>;

namespace detail {

inline std::vector<Mask> close_relation(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Mask> leq(n, 0);
    for (int i = 0; i < n; ++i) leq[i] |= Mask(1) << i;
    for (auto [x, y] : pairs) leq[x] |= Mask(1) << y;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (leq[i] & (Mask(1) << k)) leq[i] |= leq[k];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((leq[i] & (Mask(1) << j)) && (leq[j] & (Mask(1) << i)))
                throw invalid_input_error("relation is not antisymmetric");
    return leq;
}

}  // namespace detail

inline DoublePoset make_double_poset(
    Universe u, const std::vector<LabelPair>& rel1, const std::vector<LabelPair>& rel2,
    const std::optional<std::map<std::string, long>>& weights = std::nullopt) {
    DoublePoset D;
    D.u = std::move(u);
    int n = D.u.size();
    auto to_index_pairs = [&](const std::vector<LabelPair>& rel) {
        std::vector<std::pair<int, int>> out;
        out.reserve(rel.size());
        for (const auto& [a, b] : rel) out.emplace_back(D.u.index(a), D.u.index(b));
        return out;
    };
    D.leq1 = detail::close_relation(n, to_index_pairs(rel1));
    D.leq2 = detail::close_relation(n, to_index_pairs(rel2));
    D.weights.assign(n, 1);
    if (weights) {
        D.weighted = true;
        for (const auto& [label, w] : *weights) {
            if (w <= 0) throw invalid_input_error("weights must be positive integers");
            D.weights[D.u.index(label)] = w;
        }
    }
    return D;
}

// ---------------------------------------------------------------------------
// Relation queries.

inline bool leq1_of(const DoublePoset& D, int x, int y) { return (D.leq1[x] >> y) & 1; }
inline bool leq2_of(const DoublePoset& D, int x, int y) { return (D.leq2[x] >> y) & 1; }
inline bool less1_of(const DoublePoset& D, int x, int y) { return x != y && leq1_of(D, x, y); }
inline bool less2_of(const DoublePoset& D, int x, int y) { return x != y && leq2_of(D, x, y); }

// (x, y) is an inversion when x <_1 y and y <_2 x.
inline bool is_inversion(const DoublePoset& D, int x, int y) {
    return less1_of(D, x, y) && less2_of(D, y, x);
}

inline bool is_cover1(const DoublePoset& D, int x, int y) {
    if (!less1_of(D, x, y)) return false;
    for (int z = 0; z < D.size(); ++z)
        if (z != x && z != y && less1_of(D, x, z) && less1_of(D, z, y)) return false;
    return true;
}

// A descent pair is an inversion along a <=_1 cover.
inline bool is_descent_pair(const DoublePoset& D, int x, int y) {
    return is_inversion(D, x, y) && is_cover1(D, x, y);
}

inline bool is_inversion(const DoublePoset& D, const std::string& x, const std::string& y) {
    return is_inversion(D, D.u.index(x), D.u.index(y));
}
inline bool is_descent_pair(const DoublePoset& D, const std::string& x, const std::string& y) {
    return is_descent_pair(D, D.u.index(x), D.u.index(y));
}

// Every <=_1 cover pair must be <=_2 comparable.
inline bool is_locally_special(const DoublePoset& D) {
    for (int x = 0; x < D.size(); ++x)
        for (int y = 0; y < D.size(); ++y)
            if (is_cover1(D, x, y) && !leq2_of(D, x, y) && !leq2_of(D, y, x)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Automorphisms.

inline bool preserves_double_poset(const DoublePoset& D, const Perm& p) {
    int n = D.size();
    for (int x = 0; x < n; ++x) {
        if (D.weighted && D.weights[p[x]] != D.weights[x]) return false;
        for (int y = 0; y < n; ++y) {
            if (leq1_of(D, x, y) != leq1_of(D, p[x], p[y])) return false;
            if (leq2_of(D, x, y) != leq2_of(D, p[x], p[y])) return false;
        }
    }
    return true;
}

inline PermGroup automorphisms(const DoublePoset& D) {
    int n = D.size();
    if (n > max_ground_n())
        throw resource_error("automorphism search exceeds the ground-set bound");
    std::vector<Perm> found;
    Perm p = identity_perm(n);
    do {
        if (preserves_double_poset(D, p)) found.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // The set is already closed, so closure cannot outgrow it; the real
    // resource limit here is the ground-set bound above.
    return generate(n, found, std::max<std::size_t>(found.size(), 100000));
}

// ---------------------------------------------------------------------------
// D-partition patterns: set compositions whose prefixes are <=_1 ideals and
// whose blocks contain no inversion pair.

inline bool is_dpartition_pattern(const DoublePoset& D, const SetComposition& c) {
    Mask prefix = 0;
    for (const Mask block : c.blocks) {
        // prefix union block must be down-closed under <=_1
        for (int x = 0; x < D.size(); ++x) {
            if (!((block >> x) & 1)) continue;
            for (int y = 0; y < D.size(); ++y) {
                if (less1_of(D, y, x) && !(((prefix | block) >> y) & 1)) return false;
                if (((block >> y) & 1) && is_inversion(D, x, y)) return false;
            }
        }
        prefix |= block;
    }
    return true;
}

// All D-partition patterns, in the canonical set-composition order.
inline std::vector<SetComposition> enumerate_dpartition_patterns(const DoublePoset& D) {
    std::vector<SetComposition> out;
    for (const SetComposition& c : enumerate_set_compositions(D.size()))
        if (is_dpartition_pattern(D, c)) out.push_back(c);
    return out;
}

namespace detail {

// Core enumerator: count, per type, the D-partition patterns whose blocks are
// unions of the given units (e.g. the cycles of a group element).  A block
// contributes the sum of its units' values to the type.  Prefixes that are
// not ideals are pruned immediately.
inline void unit_block_recurse(const std::vector<Mask>& unit_mask,
                               const std::vector<Mask>& unit_down, const std::vector<Mask>& unit_inv,
                               const std::vector<int>& unit_value, int rem, Mask prefix,
                               Composition& type, std::map<Composition, long, CompLess>& counts) {
    if (rem == 0) {
        counts[type] += 1;
        return;
    }
    for (int S = rem; S; S = (S - 1) & rem) {
        Mask block = 0, down = 0, inv = 0;
        int value = 0;
        for (int i = 0; i < static_cast<int>(unit_mask.size()); ++i)
            if ((S >> i) & 1) {
                block |= unit_mask[i];
                down |= unit_down[i];
                inv |= unit_inv[i];
                value += unit_value[i];
            }
        if (down & ~(prefix | block)) continue;  // prefix+block is not an ideal
        if (inv & block) continue;               // an inversion pair inside the block
        type.push_back(value);
        unit_block_recurse(unit_mask, unit_down, unit_inv, unit_value, rem & ~S,
                           prefix | block, type, counts);
        type.pop_back();
    }
}

inline std::map<Composition, long, CompLess> unit_block_type_counts(
    const DoublePoset& D, const std::vector<Mask>& unit_mask, const std::vector<int>& unit_value) {
    int n = D.size();
    std::vector<Mask> down1(n, 0), inv_mask(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (less1_of(D, y, x)) down1[x] |= Mask(1) << y;
            if (is_inversion(D, x, y) || is_inversion(D, y, x)) inv_mask[x] |= Mask(1) << y;
        }
    int u = static_cast<int>(unit_mask.size());
    std::vector<Mask> ud(u, 0), ui(u, 0);
    for (int i = 0; i < u; ++i)
        for (int x = 0; x < n; ++x)
            if ((unit_mask[i] >> x) & 1) {
                ud[i] |= down1[x];
                ui[i] |= inv_mask[x];
            }
    std::map<Composition, long, CompLess> counts;
    Composition type;
    unit_block_recurse(unit_mask, ud, ui, unit_value, (1 << u) - 1, 0, type, counts);
    return counts;
}

inline std::vector<Mask> cycle_masks(const Perm& g, std::vector<int>* sizes = nullptr) {
    std::vector<Mask> masks;
    for (const auto& cyc : cycles_of(g, /*with_fixed=*/true)) {
        Mask m = 0;
        for (int x : cyc) m |= Mask(1) << x;
        masks.push_back(m);
        if (sizes) sizes->push_back(static_cast<int>(cyc.size()));
    }
    return masks;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The equivariant enumerator.

// Checks that every element of G preserves both relations (and weights).
inline void require_subgroup_of_automorphisms(const DoublePoset& D, const PermGroup& G) {
    if (G->n != D.size()) throw invalid_input_error("group degree differs from the ground set");
    for (const Perm& g : G->elements)
        if (!preserves_double_poset(D, g))
            throw invalid_input_error("group is not contained in the automorphism group");
}

// Omega(D, G, x): for each composition alpha, the class function whose value
// at a class is the number of its representative's fixed D-partition patterns
// of type alpha.
inline QSym<ClassFun> omega_qcf(const DoublePoset& D, const PermGroup& G) {
    if (D.size() > max_ground_n())
        throw resource_error("enumeration exceeds the ground-set bound");
    require_subgroup_of_automorphisms(D, G);
    std::map<Composition, std::vector<long>, CompLess> table;  // type -> per-class counts
    for (int c = 0; c < G->num_classes(); ++c) {
        std::vector<int> sizes;
        auto units = detail::cycle_masks(G->elements[G->class_rep[c]], &sizes);
        for (const auto& [type, cnt] : detail::unit_block_type_counts(D, units, sizes)) {
            auto it = table.find(type);
            if (it == table.end())
                it = table.emplace(type, std::vector<long>(G->num_classes(), 0)).first;
            it->second[c] = cnt;
        }
    }
    QSym<ClassFun> q;
    q.degree = D.size();
    q.basis = Basis::M;
    for (const auto& [type, counts] : table) q.add_term(type, classfun_from_counts(G, counts));
    return q;
}

// The plain (rational-coefficient) enumerator at one class representative.
inline QSym<Rat> omega_fixed_by(const DoublePoset& D, const Perm& g) {
    if (D.size() > max_ground_n())
        throw resource_error("enumeration exceeds the ground-set bound");
    if (!preserves_double_poset(D, g))
        throw invalid_input_error("permutation is not an automorphism");
    std::vector<int> sizes;
    auto units = detail::cycle_masks(g, &sizes);
    QSym<Rat> q;
    q.degree = D.size();
    q.basis = Basis::M;
    for (const auto& [type, cnt] : detail::unit_block_type_counts(D, units, sizes))
        q.add_term(type, Rat(cnt));
    return q;
}

// Weighted enumerator: blocks are unions of the cycles of g (the identity for
// the plain form), and each block contributes its total weight to the type.
inline QSym<Rat> weighted_omega_fixed_by(const DoublePoset& D, const Perm& g) {
    if (D.size() > max_ground_n())
        throw resource_error("enumeration exceeds the ground-set bound");
    if (!preserves_double_poset(D, g))
        throw invalid_input_error("permutation is not an automorphism");
    auto units = detail::cycle_masks(g);
    std::vector<int> values;
    long total = 0;
    for (Mask m : units) {
        int v = 0;
        for (int x = 0; x < D.size(); ++x)
            if ((m >> x) & 1) v += static_cast<int>(D.weights[x]);
        values.push_back(v);
        total += v;
    }
    if (total > 31) throw resource_error("total weight exceeds the degree bound");
    QSym<Rat> q;
    q.degree = static_cast<int>(total);
    q.basis = Basis::M;
    for (const auto& [type, cnt] : detail::unit_block_type_counts(D, units, values))
        q.add_term(type, Rat(cnt));
    return q;
}

inline QSym<Rat> weighted_omega(const DoublePoset& D) {
    return weighted_omega_fixed_by(D, identity_perm(D.size()));
}

// Extract the plain expression a QSym-valued class function takes at a class.
inline QSym<Rat> qsym_value_at_class(const QSym<ClassFun>& q, int cls) {
    QSym<Rat> out;
    out.degree = q.degree;
    out.basis = q.basis;
    for (const auto& [alpha, cf] : q.terms) {
        Rat v = cyc_to_rat(cf.v[cls]);
        if (v != 0) out.add_term(alpha, v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dual and quotient.

// Reverse the first order; keep the second order and the weights.
inline DoublePoset dual(const DoublePoset& D) {
    DoublePoset R = D;
    int n = D.size();
    for (int x = 0; x < n; ++x) {
        Mask m = 0;
        for (int y = 0; y < n; ++y)
            if ((D.leq1[y] >> x) & 1) m |= Mask(1) << y;
        R.leq1[x] = m;
    }
    return R;
}

// Quotient by an automorphism: elements are the cycles of g; C <= C' when some
// members compare; weights are summed over cycles.  Membership of g in the
// automorphism group is the caller's responsibility; a non-automorphism is
// detected when the induced relation fails antisymmetry.
inline DoublePoset quotient(const DoublePoset& D, const Perm& g) {
    if (static_cast<int>(g.size()) != D.size())
        throw invalid_input_error("permutation degree differs from the ground set");
    auto cycles = cycles_of(g, /*with_fixed=*/true);
    std::vector<std::string> labels;
    for (const auto& cyc : cycles) {
        if (cyc.size() == 1) {
            labels.push_back(D.u.labels[cyc[0]]);
        } else {
            std::string lab = "{";
            for (int x : cyc) lab += D.u.labels[x];
            lab += "}";
            labels.push_back(lab);
        }
    }
    std::vector<LabelPair> rel1, rel2;
    for (std::size_t a = 0; a < cycles.size(); ++a)
        for (std::size_t b = 0; b < cycles.size(); ++b) {
            if (a == b) continue;
            bool r1 = false, r2 = false;
            for (int x : cycles[a])
                for (int y : cycles[b]) {
                    if (leq1_of(D, x, y)) r1 = true;
                    if (leq2_of(D, x, y)) r2 = true;
                }
            if (r1) rel1.emplace_back(labels[a], labels[b]);
            if (r2) rel2.emplace_back(labels[a], labels[b]);
        }
    std::map<std::string, long> w;
    for (std::size_t a = 0; a < cycles.size(); ++a) {
        long s = 0;
        for (int x : cycles[a]) s += D.weights[x];
        w.emplace(labels[a], s);
    }
    try {
        return make_double_poset(Universe(labels), rel1, rel2, w);
    } catch (const invalid_input_error& e) {
        throw integrity_error(std::string("quotient is not a double poset: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Order polynomials.

// The f-vector of class functions: entry i sums the M-coefficients of the
// compositions with i parts.  Evaluating the resulting polynomial at n counts
// the fixed D-partitions with values in [n].
inline BinPoly<ClassFun> order_poly_cf(const DoublePoset& D, const PermGroup& G) {
    return principal_specialization(omega_qcf(D, G));
}

// Independent oracle: enumerate every map N -> [n] and count, per class, the
// maps that the representative fixes and that respect both orders.
inline std::vector<long> count_partitions(const DoublePoset& D, const PermGroup& G, long n) {
    int sz = D.size();
    double total = 1;
    for (int i = 0; i < sz; ++i) total *= static_cast<double>(n);
    if (total > 2e6) throw resource_error("oracle enumeration too large");
    std::vector<long> counts(G->num_classes(), 0);
    std::vector<long> f(sz, 1);
    auto is_dpartition = [&]() {
        for (int x = 0; x < sz; ++x)
            for (int y = 0; y < sz; ++y) {
                if (!less1_of(D, x, y)) continue;
                if (f[x] > f[y]) return false;
                if (is_inversion(D, x, y) && f[x] == f[y]) return false;
            }
        return true;
    };
    if (sz == 0) {
        for (int c = 0; c < G->num_classes(); ++c) counts[c] = 1;
        return counts;
    }
    if (n <= 0) return counts;
    while (true) {
        if (is_dpartition()) {
            for (int c = 0; c < G->num_classes(); ++c) {
                const Perm& g = G->elements[G->class_rep[c]];
                bool fixed = true;
                for (int x = 0; x < sz && fixed; ++x)
                    if (f[g[x]] != f[x]) fixed = false;
                if (fixed) counts[c] += 1;
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
    return counts;
}

// ---------------------------------------------------------------------------
// Compatible orders.

// Rank vector of a linear order built from the cover digraph: covers x < y are
// directed upward unless they are descent pairs, which are reversed; the order
// reads the digraph sources-first with lexicographic tie-breaks.
inline std::vector<int> compatible_order(const DoublePoset& D) {
    if (!is_locally_special(D))
        throw precondition_error("compatible orders require a locally special double poset");
    int n = D.size();
    std::vector<std::vector<int>> succ(n);
    std::vector<int> indeg(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!is_cover1(D, x, y)) continue;
            int from = x, to = y;
            if (is_descent_pair(D, x, y)) std::swap(from, to);
            succ[from].push_back(to);
            indeg[to] += 1;
        }
    std::vector<int> rank(n, -1);
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int x = 0; x < n; ++x)
            if (!placed[x] && indeg[x] == 0 && (pick == -1 || D.u.labels[x] < D.u.labels[pick]))
                pick = x;
        if (pick == -1)
            throw integrity_error("cover digraph of a locally special double poset is cyclic");
        rank[pick] = step;
        placed[pick] = true;
        for (int y : succ[pick]) indeg[y] -= 1;
    }
    return rank;
}

// Definitional check over all ideal pairs I contained in J: the difference
// J minus I is inversion-free exactly when the linear order sorts it
// consistently with <_1.
inline bool is_compatible(const DoublePoset& D, const std::vector<int>& rank) {
    int n = D.size();
    if (static_cast<int>(rank.size()) != n)
        throw invalid_input_error("rank vector has the wrong length");
    if (n > 8) throw resource_error("ideal-pair check is limited to 8 elements");
    std::vector<Mask> ideals;
    for (Mask m = 0; m < (Mask(1) << n); ++m) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            if ((m >> x) & 1)
                for (int y = 0; y < n; ++y)
                    if (less1_of(D, y, x) && !((m >> y) & 1)) {
                        ok = false;
                        break;
                    }
        if (ok) ideals.push_back(m);
    }
    for (Mask I : ideals)
        for (Mask J : ideals) {
            if ((I & ~J) != 0) continue;
            Mask S = J & ~I;
            bool has_inversion = false;
            bool sorted = true;
            for (int x = 0; x < n; ++x) {
                if (!((S >> x) & 1)) continue;
                for (int y = 0; y < n; ++y) {
                    if (!((S >> y) & 1)) continue;
                    if (is_inversion(D, x, y)) has_inversion = true;
                    if (less1_of(D, x, y) && rank[x] > rank[y]) sorted = false;
                }
            }
            if (has_inversion == sorted) return false;  // must be opposites
        }
    return true;
}

}  // namespace qclass

#endif  // QCLASS_DPOSET_HPP
