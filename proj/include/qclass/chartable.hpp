#ifndef QCLASS_CHARTABLE_HPP
#define QCLASS_CHARTABLE_HPP

// Complete character tables of permutation groups, computed two independent
// ways: the modular eigenvector method (class matrices over a suitable prime
// field, then an exact lift through a discrete Fourier transform of root-of-
// unity multiplicities), and — for small groups — direct common-eigenvector
// splitting over the cyclotomic field with candidate eigenvalues enumerated
// from root-of-unity sums.  Both paths verify orthonormality exactly before
// returning.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "qclass/classfun.hpp"
#include "qclass/cyclotomic.hpp"
#include "qclass/group.hpp"
#include "qclass/tpoly.hpp"
#include "qclass/util.hpp"

namespace qclass {

struct CharTable {
    PermGroup G;
    CycFieldPtr field;            // Q(zeta_e), e = exponent of G
    std::vector<ClassFun> chars;  // irreducible characters, canonical order
};

namespace detail {

// ---- modular arithmetic helpers (p fits comfortably in long) ----

inline long mulmod(long a, long b, long p) { return (a * b) % p; }

inline long powmod(long a, long e, long p) {
    a %= p;
    if (a < 0) a += p;
    long r = 1;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline long invmod(long a, long p) { return powmod(a, p - 2, p); }

inline bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Smallest prime p with p = 1 (mod e) and p*p > 4*order.
inline long find_split_prime(long e, long order) {
    for (long p = e + 1;; p += e) {
        if (p < 3) continue;
        if (!is_prime_long(p)) continue;
        if (p * p > 4 * order) return p;
    }
}

// A generator of the multiplicative group mod p.
inline long primitive_root(long p) {
    std::vector<long> prime_factors;
    long n = p - 1;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            prime_factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) prime_factors.push_back(n);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : prime_factors)
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw integrity_error("no primitive root found");
}

// Nullspace basis of an r x c matrix over F_p (row-major).
inline std::vector<std::vector<long>> kernel_mod_p(std::vector<std::vector<long>> m, long p) {
    std::size_t rows = m.size();
    std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<int> pivot_col_of_row;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        long inv = invmod(((m[rank][col] % p) + p) % p, p);
        for (std::size_t j = col; j < cols; ++j) m[rank][j] = mulmod(((m[rank][j] % p) + p) % p, inv, p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            long f = ((m[r][col] % p) + p) % p;
            if (f == 0) continue;
            for (std::size_t j = col; j < cols; ++j) {
                m[r][j] = ((m[r][j] - mulmod(f, m[rank][j], p)) % p + p) % p;
            }
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int pc : pivot_col_of_row) is_pivot[pc] = true;
    std::vector<std::vector<long>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<long> v(cols, 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < rank; ++r) {
            long pc = pivot_col_of_row[r];
            v[pc] = ((-m[r][free_col]) % p + p) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Structure constants a[i][j][l] = #{x in C_i : x^{-1} z_l in C_j} for a fixed
// representative z_l of class l.  Index order: a[i][l] is a row over j? We
// store a[i] as a k x k matrix with (row j, column l).
inline std::vector<std::vector<std::vector<long>>> class_matrices(const PermGroup& G) {
    int k = G->num_classes();
    std::vector<std::vector<std::vector<long>>> M(
        k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
    for (int l = 0; l < k; ++l) {
        const Perm& z = G->elements[G->class_rep[l]];
        for (int xi = 0; xi < G->order(); ++xi) {
            int i = G->class_of[xi];
            Perm y = compose(G->elements[G->inverse_of[xi]], z);
            int j = G->class_of[G->index(y)];
            M[i][j][l] += 1;
        }
    }
    return M;
}

// ---- cyclotomic linear algebra (oracle path) ----

using CycVec = std::vector<Cyc>;
using CycMat = std::vector<CycVec>;

// Nullspace basis over the cyclotomic field.
inline std::vector<CycVec> kernel_cyc(CycMat m) {
    std::size_t rows = m.size();
    std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<int> pivot_col_of_row;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && ring_is_zero(m[piv][col])) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        Cyc inv = cyc_inv(m[rank][col]);
        for (std::size_t j = col; j < cols; ++j) m[rank][j] = cyc_mul(m[rank][j], inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            if (ring_is_zero(m[r][col])) continue;
            Cyc f = m[r][col];
            for (std::size_t j = col; j < cols; ++j)
                m[r][j] = ring_sub(m[r][j], cyc_mul(f, m[rank][j]));
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int pc : pivot_col_of_row) is_pivot[pc] = true;
    std::vector<CycVec> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        CycVec v(cols);
        v[free_col] = Cyc(Rat(1));
        for (std::size_t r = 0; r < rank; ++r) {
            long pc = pivot_col_of_row[r];
            v[pc] = ring_neg(m[r][free_col]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline int cmp_classfun_rows(const ClassFun& a, const ClassFun& b) {
    for (std::size_t i = 0; i < a.v.size(); ++i) {
        int c = cyc_cmp(a.v[i], b.v[i]);
        if (c != 0) return c;
    }
    return 0;
}

inline bool char_row_less(const ClassFun& a, const ClassFun& b) {
    Rat da = cyc_to_rat(a.v[0]), db = cyc_to_rat(b.v[0]);
    if (da != db) return da < db;
    return cmp_classfun_rows(a, b) < 0;
}

// Shared final step: verify exact orthonormality, degree sanity, and sort.
inline void finalize_table(CharTable& T) {
    const PermGroup& G = T.G;
    int k = G->num_classes();
    if (static_cast<int>(T.chars.size()) != k)
        throw integrity_error("character count differs from class count");
    Int degsq_sum = 0;
    for (const ClassFun& chi : T.chars) {
        Cyc d = chi.v[0];
        if (!cyc_is_rational(d)) throw integrity_error("character degree is not rational");
        Rat dr = cyc_to_rat(d);
        if (!rat_is_integer(dr) || dr <= 0) throw integrity_error("character degree is not a positive integer");
        Int di = rat_to_int(dr);
        degsq_sum += di * di;
    }
    if (degsq_sum != G->order()) throw integrity_error("degree squares do not sum to the group order");
    for (std::size_t r = 0; r < T.chars.size(); ++r)
        for (std::size_t s = r; s < T.chars.size(); ++s) {
            Cyc ip = inner_product(T.chars[r], T.chars[s]);
            Cyc expect(Rat(r == s ? 1 : 0));
            if (!cyc_eq(ip, expect)) throw integrity_error("characters are not orthonormal");
        }
    std::sort(T.chars.begin(), T.chars.end(), char_row_less);
}

}  // namespace detail

// Character table via the modular eigenvector method.
inline CharTable character_table(const PermGroup& G) {
    using namespace detail;
    int k = G->num_classes();
    long order = G->order();
    long e = G->exponent;
    long p = find_split_prime(e, order);
    CycFieldPtr F = get_cyc_field(e);

    auto A = class_matrices(G);  // A[i]: k x k with (row j, col l)

    // Split the common eigenspaces of the class matrices over F_p.
    std::vector<std::vector<std::vector<long>>> subspaces;  // each: list of k-vectors
    {
        std::vector<std::vector<long>> full;
        for (int j = 0; j < k; ++j) {
            std::vector<long> ej(k, 0);
            ej[j] = 1;
            full.push_back(std::move(ej));
        }
        subspaces.push_back(std::move(full));
    }
    for (int i = 1; i < k; ++i) {
        bool all_one = true;
        for (const auto& B : subspaces)
            if (B.size() > 1) all_one = false;
        if (all_one) break;
        std::vector<std::vector<std::vector<long>>> next;
        for (auto& B : subspaces) {
            std::size_t dim = B.size();
            if (dim <= 1) {
                next.push_back(std::move(B));
                continue;
            }
            // Columns of MB: image of each basis vector under A[i].
            std::vector<std::vector<long>> MB(k, std::vector<long>(dim, 0));
            for (std::size_t b = 0; b < dim; ++b)
                for (int j = 0; j < k; ++j) {
                    long acc = 0;
                    for (int l = 0; l < k; ++l)
                        acc = (acc + mulmod(A[i][j][l] % p, B[b][l], p)) % p;
                    MB[j][b] = acc;
                }
            std::size_t found = 0;
            for (long lam = 0; lam < p && found < dim; ++lam) {
                std::vector<std::vector<long>> M(k, std::vector<long>(dim, 0));
                for (int j = 0; j < k; ++j)
                    for (std::size_t b = 0; b < dim; ++b)
                        M[j][b] = ((MB[j][b] - mulmod(lam, B[b][j], p)) % p + p) % p;
                auto ker = kernel_mod_p(M, p);
                if (ker.empty()) continue;
                std::vector<std::vector<long>> sub;
                for (const auto& y : ker) {
                    std::vector<long> v(k, 0);
                    for (std::size_t b = 0; b < dim; ++b)
                        for (int j = 0; j < k; ++j)
                            v[j] = (v[j] + mulmod(y[b], B[b][j], p)) % p;
                    sub.push_back(std::move(v));
                }
                found += sub.size();
                next.push_back(std::move(sub));
            }
            if (found != dim) throw integrity_error("eigenspace splitting lost dimensions");
        }
        subspaces = std::move(next);
    }
    for (const auto& B : subspaces)
        if (B.size() != 1) throw integrity_error("class matrices failed to separate characters");

    // Inverse-class map and class sizes.
    std::vector<int> inv_class(k);
    std::vector<long> csize(k);
    for (int c = 0; c < k; ++c) {
        inv_class[c] = G->class_of[G->inverse_of[G->class_rep[c]]];
        csize[c] = static_cast<long>(G->classes[c].size());
    }

    long z = powmod(primitive_root(p), (p - 1) / e, p);
    long inv_e = invmod(((e % p) + p) % p, p);

    CharTable T;
    T.G = G;
    T.field = F;
    for (const auto& B : subspaces) {
        std::vector<long> u = B[0];
        if (u[0] % p == 0) throw integrity_error("eigenvector vanishes at the identity class");
        long norm = invmod(((u[0] % p) + p) % p, p);
        for (long& x : u) x = mulmod(((x % p) + p) % p, norm, p);
        // u now holds the eigenvalue vector omega_i = |C_i| chi(g_i) / d mod p.
        long s = 0;
        for (int c = 0; c < k; ++c)
            s = (s + mulmod(mulmod(u[c], u[inv_class[c]], p), invmod(csize[c] % p, p), p)) % p;
        long dsq = mulmod(order % p, invmod(s, p), p);
        long d = -1;
        for (long r = 1; r <= p / 2; ++r)
            if (mulmod(r, r, p) == dsq) {
                d = r;
                break;
            }
        if (d < 0) throw integrity_error("degree square has no small modular square root");
        std::vector<long> chi_p(k);
        for (int c = 0; c < k; ++c) chi_p[c] = mulmod(mulmod(d, u[c], p), invmod(csize[c] % p, p), p);
        // Lift each value: chi(g) = sum_l m_l zeta_e^l with m_l the multiplicity
        // of the l-th root among the eigenvalues of the representing matrix.
        ClassFun chi(G);
        for (int c = 0; c < k; ++c) {
            Cyc val;
            long mult_sum = 0;
            for (long l = 0; l < e; ++l) {
                long acc = 0;
                for (long j = 0; j < e; ++j) {
                    long pc = G->power_class(G->class_rep[c], j);
                    long zexp = ((e - (j * l) % e) % e);
                    acc = (acc + mulmod(chi_p[pc], powmod(z, zexp, p), p)) % p;
                }
                long ml = mulmod(inv_e, acc, p);
                if (ml > d) throw integrity_error("lifted multiplicity exceeds the degree");
                if (ml != 0) val = ring_add(val, ring_scale(cyc_zeta_pow(F, l), Rat(ml)));
                mult_sum += ml;
            }
            if (c == 0 && mult_sum != d)
                throw integrity_error("multiplicities at the identity do not sum to the degree");
            chi.v[c] = cyc_lift(val, F);
        }
        T.chars.push_back(std::move(chi));
    }
    detail::finalize_table(T);
    return T;
}

// Independent small-group path: exact common-eigenvector splitting over the
// cyclotomic field, with candidate eigenvalues enumerated as scaled sums of
// roots of unity.  Structure constants are recomputed from all element pairs.
inline CharTable character_table_oracle(const PermGroup& G) {
    using namespace detail;
    if (G->order() > 24)
        throw resource_error("direct character-table computation is limited to order 24");
    int k = G->num_classes();
    long e = G->exponent;
    CycFieldPtr F = get_cyc_field(e);

    // b[i][j][l] = #{(x,y) in C_i x C_j : xy in C_l}; a = b / |C_l|.
    std::vector<std::vector<std::vector<long>>> b(
        k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
    for (int xi = 0; xi < G->order(); ++xi)
        for (int yi = 0; yi < G->order(); ++yi) {
            int l = G->class_of[G->index(compose(G->elements[xi], G->elements[yi]))];
            b[G->class_of[xi]][G->class_of[yi]][l] += 1;
        }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l) {
                long cs = static_cast<long>(G->classes[l].size());
                if (b[i][j][l] % cs != 0)
                    throw integrity_error("pair counts are not class-size divisible");
                b[i][j][l] /= cs;
            }

    // Candidate eigenvalues for the i-th class matrix: (|C_i|/d) * (sum of d
    // roots of unity of order dividing o(g_i)), for each possible degree d.
    std::vector<long> divisors;
    for (long d = 1; d * d <= G->order(); ++d)
        if (G->order() % d == 0) divisors.push_back(d);
    auto candidates_for = [&](int i) {
        std::vector<Cyc> cands;
        auto push_unique = [&](const Cyc& c) {
            for (const Cyc& x : cands)
                if (cyc_eq(x, c)) return;
            cands.push_back(c);
        };
        long o = perm_order(G->elements[G->class_rep[i]]);
        long stride = e / o;
        Rat ci(static_cast<long>(G->classes[i].size()));
        for (long d : divisors) {
            // multisets of size d of exponents in [0, o)
            std::vector<long> idx(d, 0);
            while (true) {
                Cyc sum;
                for (long t = 0; t < d; ++t)
                    sum = ring_add(sum, cyc_zeta_pow(F, idx[t] * stride));
                push_unique(ring_scale(sum, ci / Rat(d)));
                long pos = d - 1;
                while (pos >= 0 && idx[pos] == o - 1) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (long t = pos + 1; t < d; ++t) idx[t] = idx[pos];
            }
        }
        return cands;
    };

    std::vector<std::vector<CycVec>> subspaces;
    {
        std::vector<CycVec> full;
        for (int j = 0; j < k; ++j) {
            CycVec ej(k);
            ej[j] = Cyc(Rat(1));
            full.push_back(std::move(ej));
        }
        subspaces.push_back(std::move(full));
    }
    for (int i = 1; i < k; ++i) {
        bool all_one = true;
        for (const auto& B : subspaces)
            if (B.size() > 1) all_one = false;
        if (all_one) break;
        auto cands = candidates_for(i);
        std::vector<std::vector<CycVec>> next;
        for (auto& B : subspaces) {
            std::size_t dim = B.size();
            if (dim <= 1) {
                next.push_back(std::move(B));
                continue;
            }
            CycMat MB(k, CycVec(dim));
            for (std::size_t bb = 0; bb < dim; ++bb)
                for (int j = 0; j < k; ++j) {
                    Cyc acc;
                    for (int l = 0; l < k; ++l) {
                        if (b[i][j][l] == 0) continue;
                        acc = ring_add(acc, ring_scale(B[bb][l], Rat(b[i][j][l])));
                    }
                    MB[j][bb] = acc;
                }
            std::size_t found = 0;
            for (const Cyc& lam : cands) {
                if (found >= dim) break;
                CycMat M(k, CycVec(dim));
                for (int j = 0; j < k; ++j)
                    for (std::size_t bb = 0; bb < dim; ++bb)
                        M[j][bb] = ring_sub(MB[j][bb], cyc_mul(lam, B[bb][j]));
                auto ker = kernel_cyc(M);
                if (ker.empty()) continue;
                std::vector<CycVec> sub;
                for (const auto& y : ker) {
                    CycVec v(k);
                    for (std::size_t bb = 0; bb < dim; ++bb)
                        for (int j = 0; j < k; ++j)
                            v[j] = ring_add(v[j], cyc_mul(y[bb], B[bb][j]));
                    sub.push_back(std::move(v));
                }
                found += sub.size();
                next.push_back(std::move(sub));
            }
            if (found != dim) throw integrity_error("candidate eigenvalues missed part of the spectrum");
        }
        subspaces = std::move(next);
    }
    for (const auto& B : subspaces)
        if (B.size() != 1) throw integrity_error("class matrices failed to separate characters");

    CharTable T;
    T.G = G;
    T.field = F;
    for (const auto& B : subspaces) {
        CycVec u = B[0];
        if (ring_is_zero(u[0])) throw integrity_error("eigenvector vanishes at the identity class");
        Cyc norm = cyc_inv(u[0]);
        for (Cyc& x : u) x = cyc_mul(x, norm);
        Cyc s;
        for (int c = 0; c < k; ++c) {
            Cyc term = cyc_mul(u[c], cyc_conj(u[c]));
            s = ring_add(s, ring_scale(term, Rat(Int(1), Int(static_cast<long>(G->classes[c].size())))));
        }
        Cyc dsq_c = cyc_div(Cyc(Rat(G->order())), s);
        Rat dsq = cyc_to_rat(dsq_c);
        if (!rat_is_integer(dsq) || dsq <= 0)
            throw integrity_error("degree square is not a positive integer");
        Int dsq_i = rat_to_int(dsq);
        Int d = sqrt(dsq_i);
        if (d * d != dsq_i) throw integrity_error("degree square is not a perfect square");
        ClassFun chi(G);
        for (int c = 0; c < k; ++c) {
            Rat scale = Rat(d) / Rat(static_cast<long>(G->classes[c].size()));
            chi.v[c] = cyc_lift(ring_scale(u[c], scale), F);
        }
        T.chars.push_back(std::move(chi));
    }
    detail::finalize_table(T);
    return T;
}

// Do two tables over the same group object contain the same rows (as sets)?
inline bool same_character_rows(const CharTable& a, const CharTable& b) {
    if (a.G != b.G || a.chars.size() != b.chars.size()) return false;
    std::vector<bool> used(b.chars.size(), false);
    for (const ClassFun& x : a.chars) {
        bool matched = false;
        for (std::size_t j = 0; j < b.chars.size(); ++j) {
            if (used[j]) continue;
            if (x == b.chars[j]) {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

// ---- decomposition into irreducible multiplicities ----

enum class Verdict { EFFECTIVE, VIRTUAL, NON_CHARACTER };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::EFFECTIVE: return "EFFECTIVE";
        case Verdict::VIRTUAL: return "VIRTUAL";
        default: return "NON-CHARACTER";
    }
}

struct Decomposition {
    Verdict verdict = Verdict::NON_CHARACTER;
    std::vector<Cyc> mult;  // multiplicity of each irreducible, table order
};

inline Decomposition decompose(const ClassFun& f, const CharTable& T) {
    if (f.G != T.G) throw integrity_error("class function and table use different group objects");
    Decomposition out;
    bool all_int = true, all_nonneg = true;
    for (const ClassFun& chi : T.chars) {
        Cyc m = inner_product(chi, f);
        if (!cyc_is_rational(m) || !rat_is_integer(cyc_to_rat(m))) {
            all_int = false;
        } else if (cyc_to_rat(m) < 0) {
            all_nonneg = false;
        }
        out.mult.push_back(std::move(m));
    }
    out.verdict = !all_int ? Verdict::NON_CHARACTER
                           : (all_nonneg ? Verdict::EFFECTIVE : Verdict::VIRTUAL);
    return out;
}

struct DecompositionT {
    Verdict verdict = Verdict::EFFECTIVE;
    std::vector<TPoly<Rat>> mult;  // per irreducible, coefficients in t
};

inline DecompositionT decompose_tpoly(const TPoly<ClassFun>& f, const CharTable& T) {
    DecompositionT out;
    out.mult.assign(T.chars.size(), TPoly<Rat>{});
    for (auto& m : out.mult) m.c.assign(f.c.size(), Rat(0));
    bool any_noninteger = false, any_negative = false;
    for (std::size_t deg = 0; deg < f.c.size(); ++deg) {
        Decomposition d = decompose(f.c[deg], T);
        if (d.verdict == Verdict::NON_CHARACTER) any_noninteger = true;
        for (std::size_t i = 0; i < d.mult.size(); ++i) {
            if (cyc_is_rational(d.mult[i])) {
                Rat r = cyc_to_rat(d.mult[i]);
                if (r < 0) any_negative = true;
                out.mult[i].c[deg] = r;
            } else {
                any_noninteger = true;
            }
        }
    }
    for (auto& m : out.mult) m.normalize();
    out.verdict = any_noninteger ? Verdict::NON_CHARACTER
                                 : (any_negative ? Verdict::VIRTUAL : Verdict::EFFECTIVE);
    return out;
}

// Partial order on class functions: a <= b iff b - a is a genuine character
// (or zero), i.e. decomposes with nonnegative integer multiplicities.
inline bool order_leq(const ClassFun& a, const ClassFun& b, const CharTable& T) {
    return decompose(ring_sub(b, a), T).verdict == Verdict::EFFECTIVE;
}

}  // namespace qclass

#endif  // QCLASS_CHARTABLE_HPP
