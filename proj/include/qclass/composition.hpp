#ifndef QCLASS_COMPOSITION_HPP
#define QCLASS_COMPOSITION_HPP

// Integer compositions, ordered set partitions (set compositions) over a small
// labelled universe, the refinement order, and the coarsening/action
// operations used by the enumerators.
//
// Canonical orders used everywhere (serialization, term order, enumeration):
//   - compositions: by length, then lexicographically on the part sequence;
//   - set compositions: by number of blocks, then lexicographically on the
//     block sequence, each block read as its ascending element list.
// Universe labels are opaque strings; their canonical order is lexicographic,
// and indices below always refer to that order.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "qclass/util.hpp"

namespace qclass {

using Composition = std::vector<int>;
using Mask = std::uint32_t;

// ---------------------------------------------------------------------------
// Universe of labels.

struct Universe {
    std::vector<std::string> labels;  // sorted lexicographically, all distinct

    Universe() = default;
    explicit Universe(std::vector<std::string> raw) : labels(std::move(raw)) {
        std::sort(labels.begin(), labels.end());
        for (std::size_t i = 1; i < labels.size(); ++i)
            if (labels[i] == labels[i - 1])
                throw invalid_input_error("duplicate label: " + labels[i]);
        if (static_cast<int>(labels.size()) > 31)
            throw resource_error("ground sets beyond 31 elements are unsupported");
    }

    int size() const { return static_cast<int>(labels.size()); }

    int index(const std::string& label) const {
        auto it = std::lower_bound(labels.begin(), labels.end(), label);
        if (it == labels.end() || *it != label)
            throw invalid_input_error("unknown element: " + label);
        return static_cast<int>(it - labels.begin());
    }
};

// ---------------------------------------------------------------------------
// Compositions.

inline int comp_weight(const Composition& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

// Canonical composition order: shorter first, then lexicographic.
inline bool comp_less(const Composition& a, const Composition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct CompLess {
    bool operator()(const Composition& a, const Composition& b) const {
        return comp_less(a, b);
    }
};

inline Composition reverse_composition(Composition a) {
    std::reverse(a.begin(), a.end());
    return a;
}

// S ⊆ {1,...,n-1} (as positions) -> the composition of n with those partial
// sums.  The empty subset gives the one-part composition (n); n = 0 gives the
// empty composition.
inline Composition subset_to_composition(std::vector<int> subset, int n) {
    if (n < 0) throw invalid_input_error("negative weight");
    std::sort(subset.begin(), subset.end());
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 1 || subset[i] > n - 1)
            throw invalid_input_error("subset entry out of range");
        if (i > 0 && subset[i] == subset[i - 1])
            throw invalid_input_error("repeated subset entry");
    }
    Composition alpha;
    int prev = 0;
    for (int s : subset) {
        alpha.push_back(s - prev);
        prev = s;
    }
    if (n > prev) alpha.push_back(n - prev);
    return alpha;
}

// Partial sums of alpha except the last (the descent-set bijection inverse).
inline std::vector<int> composition_to_subset(const Composition& alpha) {
    std::vector<int> subset;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < alpha.size(); ++i) {
        acc += alpha[i];
        subset.push_back(acc);
    }
    return subset;
}

// Does `fine` refine `coarse`?  (Equivalently: the partial-sum set of `coarse`
// is contained in that of `fine`.)  Mismatched weights are a domain error.
inline bool refines(const Composition& fine, const Composition& coarse) {
    for (int p : fine)
        if (p <= 0) throw invalid_input_error("nonpositive part");
    for (int p : coarse)
        if (p <= 0) throw invalid_input_error("nonpositive part");
    if (comp_weight(fine) != comp_weight(coarse))
        throw invalid_input_error("refinement compares compositions of equal weight only");
    std::vector<int> sf = composition_to_subset(fine);
    std::vector<int> sc = composition_to_subset(coarse);
    return std::includes(sf.begin(), sf.end(), sc.begin(), sc.end());
}

// All compositions of n in canonical order.
inline std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw invalid_input_error("negative weight");
    std::vector<Composition> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    // Subsets of the n-1 possible partial sums.
    for (std::uint32_t bits = 0; bits < (1u << (n - 1)); ++bits) {
        Composition alpha;
        int prev = 0;
        for (int s = 1; s < n; ++s)
            if (bits & (1u << (s - 1))) {
                alpha.push_back(s - prev);
                prev = s;
            }
        alpha.push_back(n - prev);
        out.push_back(std::move(alpha));
    }
    std::sort(out.begin(), out.end(), comp_less);
    return out;
}

// Compositions coarser than alpha (merging runs of adjacent parts), canonical
// order.  Includes alpha itself.
inline std::vector<Composition> coarsenings_of(const Composition& alpha) {
    int k = static_cast<int>(alpha.size());
    std::vector<Composition> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    for (std::uint32_t bits = 0; bits < (1u << (k - 1)); ++bits) {
        // bit i set = keep the boundary after part i.
        Composition beta;
        int acc = alpha[0];
        for (int i = 0; i + 1 < k; ++i) {
            if (bits & (1u << i)) {
                beta.push_back(acc);
                acc = 0;
            }
            acc += alpha[i + 1];
        }
        beta.push_back(acc);
        out.push_back(std::move(beta));
    }
    std::sort(out.begin(), out.end(), comp_less);
    return out;
}

// Compositions finer than alpha (refining each part independently), canonical
// order.  Includes alpha itself.
inline std::vector<Composition> refinements_of(const Composition& alpha) {
    std::vector<Composition> out{{}};
    for (int part : alpha) {
        std::vector<Composition> next;
        for (const Composition& prefix : out)
            for (const Composition& piece : compositions_of(part)) {
                Composition c = prefix;
                c.insert(c.end(), piece.begin(), piece.end());
                next.push_back(std::move(c));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), comp_less);
    return out;
}

// ---------------------------------------------------------------------------
// Set compositions.

struct SetComposition {
    std::vector<Mask> blocks;  // nonempty, pairwise disjoint

    bool operator==(const SetComposition& other) const = default;
};

inline int popcount_mask(Mask m) { return __builtin_popcount(m); }

inline Composition type_of(const SetComposition& c) {
    Composition t;
    t.reserve(c.blocks.size());
    for (Mask b : c.blocks) t.push_back(popcount_mask(b));
    return t;
}

// Lexicographic comparison of two blocks read as ascending element lists.
inline bool mask_list_less(Mask a, Mask b) {
    while (a && b) {
        int ia = __builtin_ctz(a), ib = __builtin_ctz(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

// Canonical set-composition order: fewer blocks first, then lexicographic on
// the block sequence.
inline bool set_comp_less(const SetComposition& a, const SetComposition& b) {
    if (a.blocks.size() != b.blocks.size()) return a.blocks.size() < b.blocks.size();
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        if (a.blocks[i] == b.blocks[i]) continue;
        return mask_list_less(a.blocks[i], b.blocks[i]);
    }
    return false;
}

// All set compositions of {0,...,n-1} in canonical order.  Guarded: the count
// grows like the ordered Bell numbers.
inline std::vector<SetComposition> enumerate_set_compositions(int n) {
    if (n < 0) throw invalid_input_error("negative universe size");
    if (n > max_set_composition_n())
        throw resource_error("set-composition enumeration beyond the configured bound");
    std::vector<SetComposition> out;
    SetComposition cur;
    Mask full = (n == 32) ? ~Mask(0) : ((Mask(1) << n) - 1);
    // Recursive first-block choice over the remaining elements.
    auto rec = [&](auto&& self, Mask remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        // Nonempty submasks of `remaining`.
        for (Mask sub = remaining; sub; sub = (sub - 1) & remaining) {
            cur.blocks.push_back(sub);
            self(self, remaining & ~sub);
            cur.blocks.pop_back();
        }
    };
    rec(rec, full);
    std::sort(out.begin(), out.end(), set_comp_less);
    return out;
}

// Merge adjacent blocks of c so the result has type tau; the grouping is
// unique when it exists.
inline SetComposition coarsen_to_type(const SetComposition& c, const Composition& tau) {
    if (comp_weight(type_of(c)) != comp_weight(tau))
        throw invalid_input_error("coarsening target has different weight");
    SetComposition out;
    std::size_t i = 0;
    for (int part : tau) {
        if (part <= 0) throw invalid_input_error("nonpositive part");
        Mask merged = 0;
        int size = 0;
        while (size < part) {
            if (i >= c.blocks.size())
                throw invalid_input_error("type does not coarsen the set composition");
            merged |= c.blocks[i];
            size += popcount_mask(c.blocks[i]);
            ++i;
        }
        if (size != part)
            throw invalid_input_error("type does not coarsen the set composition");
        out.blocks.push_back(merged);
    }
    if (i != c.blocks.size())
        throw invalid_input_error("type does not coarsen the set composition");
    return out;
}

// Apply a permutation (images by index) to every block, keeping block order:
// g(C_1)|g(C_2)|...
inline SetComposition act(const std::vector<int>& images, const SetComposition& c) {
    SetComposition out;
    out.blocks.reserve(c.blocks.size());
    for (Mask b : c.blocks) {
        Mask nb = 0;
        for (Mask m = b; m; m &= m - 1) nb |= Mask(1) << images[__builtin_ctz(m)];
        out.blocks.push_back(nb);
    }
    return out;
}

// Render with labels, e.g. "ac|b|d".
inline std::string set_comp_to_string(const SetComposition& c, const Universe& u) {
    std::string s;
    for (std::size_t i = 0; i < c.blocks.size(); ++i) {
        if (i) s += '|';
        for (Mask m = c.blocks[i]; m; m &= m - 1) s += u.labels[__builtin_ctz(m)];
    }
    return s;
}

}  // namespace qclass

#endif  // QCLASS_COMPOSITION_HPP
