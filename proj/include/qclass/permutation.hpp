#ifndef QCLASS_PERMUTATION_HPP
#define QCLASS_PERMUTATION_HPP

// Permutations of a labelled universe: composition, inversion, sign, cycle
// decomposition, and the cycle-notation text form ("(a c)(b d)", "()" for the
// identity; elements inside a cycle are space-separated since labels are
// arbitrary strings).

#include <cctype>
#include <numeric>
#include <string>
#include <vector>

#include "qclass/composition.hpp"
#include "qclass/util.hpp"

namespace qclass {

using Perm = std::vector<int>;  // images by index: p[x] = g(x)

inline Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline bool is_permutation(const Perm& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

// (g . h)(x) = g(h(x)): h is applied first.
inline Perm compose(const Perm& g, const Perm& h) {
    Perm r(h.size());
    for (std::size_t x = 0; x < h.size(); ++x) r[x] = g[h[x]];
    return r;
}

inline Perm inverse_perm(const Perm& g) {
    Perm r(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) r[g[x]] = static_cast<int>(x);
    return r;
}

// Cycles sorted by minimal element, each starting at its minimal element.
// Fixed points are included only when `with_fixed` is set.
inline std::vector<std::vector<int>> cycles_of(const Perm& g, bool with_fixed = false) {
    int n = static_cast<int>(g.size());
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> cycles;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> cyc;
        int x = s;
        do {
            cyc.push_back(x);
            seen[x] = true;
            x = g[x];
        } while (x != s);
        if (cyc.size() > 1 || with_fixed) cycles.push_back(std::move(cyc));
    }
    return cycles;
}

inline int perm_sign(const Perm& g) {
    int sign = 1;
    for (const auto& c : cycles_of(g))
        if (c.size() % 2 == 0) sign = -sign;
    return sign;
}

inline long perm_order(const Perm& g) {
    long ord = 1;
    for (const auto& c : cycles_of(g)) ord = std::lcm(ord, static_cast<long>(c.size()));
    return ord;
}

inline std::string perm_to_cycle_string(const Perm& g, const Universe& u) {
    auto cycles = cycles_of(g);
    if (cycles.empty()) return "()";
    std::string s;
    for (const auto& cyc : cycles) {
        s += '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) s += ' ';
            s += u.labels[cyc[i]];
        }
        s += ')';
    }
    return s;
}

// Parse "(a c)(b d)"-style notation; unlisted elements are fixed.  "()" (or an
// all-whitespace string) is the identity.
inline Perm parse_cycle_string(const std::string& text, const Universe& u) {
    Perm p = identity_perm(u.size());
    std::vector<bool> used(u.size(), false);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw invalid_input_error("expected '(' in cycle notation: " + text);
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (i >= text.size()) throw invalid_input_error("unterminated cycle: " + text);
            if (text[i] == ')') {
                ++i;
                break;
            }
            std::string label;
            while (i < text.size() && text[i] != ')' &&
                   !std::isspace(static_cast<unsigned char>(text[i]))) {
                if (text[i] == '(') throw invalid_input_error("nested '(' in cycle notation");
                label += text[i++];
            }
            int idx = u.index(label);
            if (used[idx]) throw invalid_input_error("element repeated in cycle notation: " + label);
            used[idx] = true;
            cyc.push_back(idx);
        }
        for (std::size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
        skip_ws();
    }
    return p;
}

}  // namespace qclass

#endif  // QCLASS_PERMUTATION_HPP
