#ifndef QCLASS_CYCLOTOMIC_HPP
#define QCLASS_CYCLOTOMIC_HPP

// Exact arithmetic in cyclotomic fields Q(zeta_m): elements are rational
// residues modulo the m-th cyclotomic polynomial.  A null field pointer means
// a plain rational (the universal scalar embeddable in every field); mixing
// two distinct nontrivial fields requires an explicit embedding.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qclass/rational.hpp"
#include "qclass/util.hpp"

namespace qclass {

using RatPoly = std::vector<Rat>;  // dense, ascending degree

inline void poly_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

// Quotient and remainder of a by b (b nonzero).
inline std::pair<RatPoly, RatPoly> poly_divmod(RatPoly a, RatPoly b) {
    poly_trim(a);
    poly_trim(b);
    if (b.empty()) throw integrity_error("polynomial division by zero");
    RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size()) {
        Rat c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        poly_trim(a);  // the leading term cancels exactly, so this always shrinks a
    }
    poly_trim(q);
    return {q, a};
}

struct CycField {
    long m = 1;          // conductor: the field Q(zeta_m)
    RatPoly phi;         // m-th cyclotomic polynomial (monic)
    int deg = 1;         // deg(phi) = euler_phi(m)
    std::vector<RatPoly> xpow;  // x^k reduced mod phi, k = 0 .. max(m-1, 2deg-2)
};

using CycFieldPtr = std::shared_ptr<const CycField>;

namespace detail {

inline RatPoly cyclotomic_poly(long m, std::map<long, RatPoly>& memo) {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    // x^m - 1 divided by the cyclotomic polynomials of the proper divisors.
    RatPoly num(m + 1, Rat(0));
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d)
        if (m % d == 0) {
            auto [q, r] = poly_divmod(num, cyclotomic_poly(d, memo));
            if (!r.empty()) throw integrity_error("cyclotomic polynomial division left a remainder");
            num = std::move(q);
        }
    memo.emplace(m, num);
    return num;
}

}  // namespace detail

inline CycFieldPtr get_cyc_field(long m) {
    // The caches make repeated field lookups cheap; the lock keeps them safe
    // when verification batches run on several threads.
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    static std::map<long, CycFieldPtr> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m < 1) throw invalid_input_error("cyclotomic conductor must be positive");
    auto F = std::make_shared<CycField>();
    F->m = m;
    static std::map<long, RatPoly> memo;
    F->phi = detail::cyclotomic_poly(m, memo);
    F->deg = static_cast<int>(F->phi.size()) - 1;
    long maxk = std::max<long>(m - 1, 2L * F->deg - 2);
    F->xpow.reserve(maxk + 1);
    RatPoly cur{Rat(1)};
    for (long k = 0; k <= maxk; ++k) {
        F->xpow.push_back(cur);
        // multiply by x, reduce mod phi
        cur.insert(cur.begin(), Rat(0));
        poly_trim(cur);
        if (static_cast<int>(cur.size()) == F->deg + 1) {
            Rat lead = cur.back();
            for (int i = 0; i <= F->deg; ++i) cur[i] -= lead * F->phi[i];
            poly_trim(cur);
        }
    }
    cache.emplace(m, F);
    return F;
}

struct Cyc {
    CycFieldPtr F;       // null: plain rational
    std::vector<Rat> c;  // residue coefficients; size F->deg when F, else size 1

    Cyc() : c{Rat(0)} {}
    explicit Cyc(Rat r) : c{std::move(r)} {}
    Cyc(CycFieldPtr field, std::vector<Rat> coeffs) : F(std::move(field)), c(std::move(coeffs)) {
        if (F) c.resize(F->deg, Rat(0));
    }
};

inline Cyc cyc_rat(const Rat& r) { return Cyc(r); }

// zeta_m^k as an element of the field.
inline Cyc cyc_zeta_pow(const CycFieldPtr& F, long k) {
    k %= F->m;
    if (k < 0) k += F->m;
    std::vector<Rat> c(F->deg, Rat(0));
    const RatPoly& p = F->xpow[k];
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = p[i];
    return Cyc(F, std::move(c));
}

inline Cyc cyc_lift(const Cyc& a, const CycFieldPtr& F) {
    if (!F) {
        if (a.F) throw integrity_error("cannot drop a cyclotomic value to the rationals");
        return a;
    }
    if (!a.F) {
        std::vector<Rat> c(F->deg, Rat(0));
        c[0] = a.c[0];
        return Cyc(F, std::move(c));
    }
    if (a.F == F || a.F->m == F->m) {
        if (a.F->m == F->m) return Cyc(F, a.c);
        return a;
    }
    if (F->m % a.F->m != 0)
        throw integrity_error("no embedding between the cyclotomic fields involved");
    // zeta_{m'} -> zeta_m^{m/m'}
    long stride = F->m / a.F->m;
    std::vector<Rat> acc(F->deg, Rat(0));
    for (int i = 0; i < a.F->deg; ++i) {
        if (a.c[i] == 0) continue;
        const RatPoly& p = F->xpow[(static_cast<long>(i) * stride) % F->m];
        for (std::size_t j = 0; j < p.size(); ++j) acc[j] += a.c[i] * p[j];
    }
    return Cyc(F, std::move(acc));
}

// Common field of two values (null if both rational).
inline CycFieldPtr cyc_common_field(const Cyc& a, const Cyc& b) {
    if (!a.F) return b.F;
    if (!b.F) return a.F;
    if (a.F == b.F || a.F->m == b.F->m) return a.F;
    long lcm_m = std::lcm(a.F->m, b.F->m);
    return get_cyc_field(lcm_m);
}

inline Cyc ring_add(const Cyc& a, const Cyc& b) {
    CycFieldPtr F = cyc_common_field(a, b);
    if (!F) return Cyc(a.c[0] + b.c[0]);
    Cyc x = cyc_lift(a, F), y = cyc_lift(b, F);
    for (int i = 0; i < F->deg; ++i) x.c[i] += y.c[i];
    return x;
}

inline Cyc ring_neg(const Cyc& a) {
    Cyc r = a;
    for (Rat& v : r.c) v = -v;
    return r;
}

inline Cyc ring_sub(const Cyc& a, const Cyc& b) { return ring_add(a, ring_neg(b)); }

inline Cyc ring_scale(const Cyc& a, const Rat& s) {
    Cyc r = a;
    for (Rat& v : r.c) v *= s;
    return r;
}

inline bool ring_is_zero(const Cyc& a) {
    for (const Rat& v : a.c)
        if (v != 0) return false;
    return true;
}

inline Cyc ring_zero_like(const Cyc&) { return Cyc(); }

inline Cyc cyc_mul(const Cyc& a, const Cyc& b) {
    CycFieldPtr F = cyc_common_field(a, b);
    if (!F) return Cyc(a.c[0] * b.c[0]);
    Cyc x = cyc_lift(a, F), y = cyc_lift(b, F);
    std::vector<Rat> prod(2 * F->deg - 1, Rat(0));
    for (int i = 0; i < F->deg; ++i) {
        if (x.c[i] == 0) continue;
        for (int j = 0; j < F->deg; ++j) {
            if (y.c[j] == 0) continue;
            prod[i + j] += x.c[i] * y.c[j];
        }
    }
    std::vector<Rat> acc(F->deg, Rat(0));
    for (std::size_t k = 0; k < prod.size(); ++k) {
        if (prod[k] == 0) continue;
        const RatPoly& p = F->xpow[k];
        for (std::size_t j = 0; j < p.size(); ++j) acc[j] += prod[k] * p[j];
    }
    return Cyc(F, std::move(acc));
}

inline bool cyc_eq(const Cyc& a, const Cyc& b) { return ring_is_zero(ring_sub(a, b)); }

// Complex conjugation: zeta -> zeta^{m-1}.
inline Cyc cyc_conj(const Cyc& a) {
    if (!a.F) return a;
    std::vector<Rat> acc(a.F->deg, Rat(0));
    for (int i = 0; i < a.F->deg; ++i) {
        if (a.c[i] == 0) continue;
        const RatPoly& p = a.F->xpow[(a.F->m - i) % a.F->m];
        for (std::size_t j = 0; j < p.size(); ++j) acc[j] += a.c[i] * p[j];
    }
    return Cyc(a.F, std::move(acc));
}

inline bool cyc_is_rational(const Cyc& a) {
    for (std::size_t i = 1; i < a.c.size(); ++i)
        if (a.c[i] != 0) return false;
    return true;
}

inline Rat cyc_to_rat(const Cyc& a) {
    if (!cyc_is_rational(a)) throw integrity_error("cyclotomic value is not rational");
    return a.c[0];
}

// Multiplicative inverse via the extended Euclidean algorithm against phi.
inline Cyc cyc_inv(const Cyc& a) {
    if (ring_is_zero(a)) throw integrity_error("inverse of zero");
    if (!a.F || cyc_is_rational(a)) {
        Cyc r = a;
        Rat v = a.c[0];
        for (Rat& x : r.c) x = 0;
        r.c[0] = 1 / v;
        return r;
    }
    // Extended gcd of res(x) and phi(x) over Q[x].
    RatPoly r0 = a.F->phi, r1(a.c.begin(), a.c.end());
    poly_trim(r1);
    RatPoly s0{}, s1{Rat(1)};  // coefficients of res(x) in the Bezout identity
    while (true) {
        auto [q, rem] = poly_divmod(r0, r1);
        if (rem.empty()) break;
        RatPoly qs = poly_mul(q, s1);
        RatPoly s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()), Rat(0));
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        poly_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.size() != 1)
        throw integrity_error("residue shares a factor with the cyclotomic polynomial");
    Rat unit = r1[0];
    std::vector<Rat> inv(a.F->deg, Rat(0));
    for (std::size_t i = 0; i < s1.size() && i < inv.size(); ++i) inv[i] = s1[i] / unit;
    if (s1.size() > static_cast<std::size_t>(a.F->deg)) {
        // reduce mod phi just in case
        Cyc red(a.F, std::vector<Rat>(a.F->deg, Rat(0)));
        for (std::size_t k = 0; k < s1.size(); ++k) {
            const RatPoly& p = a.F->xpow[k];
            for (std::size_t j = 0; j < p.size(); ++j) red.c[j] += (s1[k] / unit) * p[j];
        }
        return red;
    }
    return Cyc(a.F, std::move(inv));
}

inline Cyc cyc_div(const Cyc& a, const Cyc& b) { return cyc_mul(a, cyc_inv(b)); }

// Deterministic ordering key (used to canonicalize character-table rows).
inline int cyc_cmp(const Cyc& a, const Cyc& b) {
    Cyc d = ring_sub(a, b);
    for (std::size_t i = 0; i < d.c.size(); ++i) {
        if (d.c[i] < 0) return -1;
        if (d.c[i] > 0) return 1;
    }
    return 0;
}

// Text form, e.g. "1-2z6+z6^2" (z{m} denotes a primitive m-th root of unity).
inline std::string cyc_to_string(const Cyc& a) {
    if (cyc_is_rational(a)) return rat_to_string(a.c[0]);
    std::string var = "z" + std::to_string(a.F->m);
    std::string s;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        Rat v = a.c[i];
        std::string term;
        if (i == 0) {
            term = rat_to_string(v < 0 ? Rat(-v) : v);
        } else {
            Rat av = v < 0 ? Rat(-v) : v;
            term = (av == 1 ? "" : rat_to_string(av) + "*") + var;
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (s.empty())
            s += (v < 0 ? "-" : "") + term;
        else
            s += (v < 0 ? "-" : "+") + term;
    }
    return s.empty() ? "0" : s;
}

}  // namespace qclass

#endif  // QCLASS_CYCLOTOMIC_HPP
