#ifndef QCLASS_RANDOMGEN_HPP
#define QCLASS_RANDOMGEN_HPP

// Seeded random instance generators for the verification harness: double
// posets (general, guaranteed locally special, and guaranteed not locally
// special), digraphs, and random subgroups of a given permutation group.
// Everything is driven by an explicit engine so runs are reproducible and
// batches can partition seeds across workers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "qclass/digraph.hpp"
#include "qclass/dposet.hpp"
#include "qclass/group.hpp"

namespace qclass {

struct RandomGen {
    std::mt19937_64 eng;

    explicit RandomGen(std::uint64_t seed) : eng(seed) {}

    // Uniform integer in [lo, hi], inclusive.
    int uniform(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(eng);
    }

    bool coin() { return uniform(0, 1) == 1; }
};

namespace detail {

inline Universe letter_universe(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    return Universe(std::move(labels));
}

// Random strict-order pairs oriented along a random linear order, so the
// generated relation is always acyclic.
inline std::vector<LabelPair> random_order_pairs(RandomGen& rng, const Universe& u) {
    int n = u.size();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng.eng);
    std::vector<LabelPair> rel;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.coin())
                rel.push_back({u.labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])],
                               u.labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]});
    return rel;
}

// A random total order given as a chain of adjacent pairs.
inline std::vector<LabelPair> random_total_order(RandomGen& rng, const Universe& u) {
    int n = u.size();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng.eng);
    std::vector<LabelPair> rel;
    for (int i = 0; i + 1 < n; ++i)
        rel.push_back({u.labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])],
                       u.labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(i + 1)])]});
    return rel;
}

}  // namespace detail

// Both orders random.  May or may not be locally special.
inline DoublePoset random_dposet(RandomGen& rng, int n) {
    Universe u = detail::letter_universe(n);
    std::vector<LabelPair> rel1 = detail::random_order_pairs(rng, u);
    std::vector<LabelPair> rel2 = detail::random_order_pairs(rng, u);
    return make_double_poset(u, rel1, rel2);
}

// First order random, second order total: every pair is comparable in the
// second order, so the result is locally special by construction.
inline DoublePoset random_locally_special_dposet(RandomGen& rng, int n) {
    Universe u = detail::letter_universe(n);
    std::vector<LabelPair> rel1 = detail::random_order_pairs(rng, u);
    std::vector<LabelPair> rel2 = detail::random_total_order(rng, u);
    return make_double_poset(u, rel1, rel2);
}

// Rejection-samples general double posets until one fails the locally
// special test.  Needs n >= 2 to be satisfiable.
inline DoublePoset random_non_locally_special_dposet(RandomGen& rng, int n) {
    if (n < 2)
        throw invalid_input_error(
            "a double poset on fewer than two elements is always locally special");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        DoublePoset D = random_dposet(rng, n);
        if (!is_locally_special(D)) return D;
    }
    throw integrity_error("rejection sampling failed to find a non-locally-special instance");
}

// Each unordered pair of vertices is independently absent, oriented one way,
// or oriented the other, uniformly.
inline Digraph random_digraph(RandomGen& rng, int n) {
    Universe u = detail::letter_universe(n);
    std::vector<LabelPair> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int kind = rng.uniform(0, 2);
            if (kind == 1)
                edges.push_back({u.labels[static_cast<std::size_t>(i)],
                                 u.labels[static_cast<std::size_t>(j)]});
            else if (kind == 2)
                edges.push_back({u.labels[static_cast<std::size_t>(j)],
                                 u.labels[static_cast<std::size_t>(i)]});
        }
    return make_digraph(u, edges);
}

// Subgroup generated by up to two random elements of the given group
// (possibly the trivial subgroup).
inline PermGroup random_subgroup(RandomGen& rng, const PermGroup& full) {
    int k = rng.uniform(0, 2);
    std::vector<Perm> gens;
    for (int i = 0; i < k; ++i) {
        int idx = rng.uniform(0, static_cast<int>(full->elements.size()) - 1);
        gens.push_back(full->elements[static_cast<std::size_t>(idx)]);
    }
    std::size_t bound = std::max<std::size_t>(static_cast<std::size_t>(full->order()), 100000);
    return generate(full->n, gens, bound);
}

}  // namespace qclass

#endif  // QCLASS_RANDOMGEN_HPP
