// Permutation groups: generation, conjugacy classes, cycle notation, orbit
// counting, and class-function basics (inner products, induction).

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "qclass/classfun.hpp"
#include "qclass/group.hpp"
#include "qclass/permutation.hpp"

using namespace qclass;

namespace {

Universe abcde() { return Universe({"a", "b", "c", "d", "e"}); }

// Encode maps {0..n-1} -> {1..colors} as integers base `colors`.
int apply_to_coloring(const Perm& g, int code, int n, int colors) {
    std::vector<int> f(n);
    for (int i = 0; i < n; ++i) {
        f[i] = code % colors;
        code /= colors;
    }
    std::vector<int> moved(n);
    for (int i = 0; i < n; ++i) moved[g[i]] = f[i];
    int out = 0;
    for (int i = n - 1; i >= 0; --i) out = out * colors + moved[i];
    return out;
}

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

TEST_CASE("cycle notation parses and prints", "[groups]") {
    Universe u = abcde();
    Perm g = parse_cycle_string("(a b c)", u);
    CHECK(g[u.index("a")] == u.index("b"));
    CHECK(g[u.index("b")] == u.index("c"));
    CHECK(g[u.index("c")] == u.index("a"));
    CHECK(g[u.index("d")] == u.index("d"));
    CHECK(perm_to_cycle_string(g, u) == "(a b c)");

    Perm h = parse_cycle_string("(a c)(b d)", u);
    CHECK(perm_to_cycle_string(h, u) == "(a c)(b d)");
    CHECK(parse_cycle_string("()", u) == identity_perm(5));
    CHECK(perm_to_cycle_string(identity_perm(5), u) == "()");
    CHECK(parse_cycle_string("  ", u) == identity_perm(5));

    CHECK_THROWS_AS(parse_cycle_string("(a a)", u), invalid_input_error);
    CHECK_THROWS_AS(parse_cycle_string("(a b)(b c)", u), invalid_input_error);
    CHECK_THROWS_AS(parse_cycle_string("(a z)", u), invalid_input_error);
    CHECK_THROWS_AS(parse_cycle_string("(a b", u), invalid_input_error);
}

TEST_CASE("permutation arithmetic", "[groups]") {
    Universe u = abcde();
    Perm t = parse_cycle_string("(a b)", u);
    Perm c3 = parse_cycle_string("(a b c)", u);
    CHECK(perm_sign(t) == -1);
    CHECK(perm_sign(c3) == 1);
    CHECK(perm_sign(parse_cycle_string("(a c)(b d)", u)) == 1);
    CHECK(perm_order(parse_cycle_string("(a b c)(d e)", u)) == 6);
    CHECK(compose(t, t) == identity_perm(5));
    // compose applies the right factor first
    Perm ct = compose(c3, t);  // t then c3: a->b->c, b->a->b, c->c->a
    CHECK(ct[u.index("a")] == u.index("c"));
    CHECK(ct[u.index("b")] == u.index("b"));
    CHECK(ct[u.index("c")] == u.index("a"));
    CHECK(compose(c3, inverse_perm(c3)) == identity_perm(5));
}

TEST_CASE("symmetric group on three letters", "[groups]") {
    Universe u(std::vector<std::string>{"a", "b", "c"});
    PermGroup G = generate_from_cycles(u, {"(a b)", "(a b c)"});
    REQUIRE(G->order() == 6);
    CHECK(G->elements[0] == identity_perm(3));
    REQUIRE(G->num_classes() == 3);
    // Class sizes in enumeration order: identity, transpositions, 3-cycles.
    CHECK(G->classes[0].size() == 1);
    CHECK(G->classes[1].size() == 3);
    CHECK(G->classes[2].size() == 2);
    CHECK(G->exponent == 6);
    for (int i = 0; i < G->order(); ++i)
        CHECK(compose(G->elements[i], G->elements[G->inverse_of[i]]) == identity_perm(3));
    // power_class walks cyclic subgroups correctly
    int c3i = G->index(parse_cycle_string("(a b c)", u));
    CHECK(G->power_class(c3i, 0) == 0);
    CHECK(G->power_class(c3i, 3) == 0);
    CHECK(G->power_class(c3i, 2) == G->class_of[G->index(parse_cycle_string("(a c b)", u))]);
    CHECK(G->power_class(c3i, -1) == G->class_of[G->index(parse_cycle_string("(a c b)", u))]);
}

TEST_CASE("generation guards", "[groups]") {
    CHECK_THROWS_AS(generate(3, {Perm{0, 0, 2}}), invalid_input_error);
    CHECK_THROWS_AS(generate(3, {Perm{0, 1}}), invalid_input_error);
    // Closure larger than the bound stops with a resource error.
    Perm rot6{1, 2, 3, 4, 5, 0};
    Perm swap6{1, 0, 2, 3, 4, 5};
    CHECK_THROWS_AS(generate(6, {rot6, swap6}, 100), resource_error);
    CHECK(generate(6, {rot6, swap6})->order() == 720);
}

TEST_CASE("orbit counting on colorings", "[groups]") {
    // Two incomparable points, two colors: four maps, three orbits under the
    // swap; the two constant maps are fixed by the odd swap, so exactly the
    // two injective maps are coeven and they form one coeven orbit.
    Universe u(std::vector<std::string>{"a", "b"});
    PermGroup S2 = generate_from_cycles(u, {"(a b)"});
    auto image = [&](int gi, int code) { return apply_to_coloring(S2->elements[gi], code, 2, 2); };
    CHECK(orbit_count(S2, 4, image) == 3);
    CHECK(coeven_orbit_count(S2, 4, image) == 1);
    auto fixed = fixed_point_counts(S2, 4, image);
    REQUIRE(fixed.size() == 2);
    CHECK(fixed[0] == 4);
    CHECK(fixed[1] == 2);

    PermGroup T = trivial_group(2);
    auto id_image = [&](int, int code) { return code; };
    CHECK(orbit_count(T, 4, id_image) == 4);
    CHECK(coeven_orbit_count(T, 4, id_image) == 4);
}

TEST_CASE("orbit counts agree with averaged fixed points", "[groups]") {
    // Burnside and its sign-weighted variant, exercised on coloring actions of
    // several small groups (domain size <= 200).
    Universe u4(std::vector<std::string>{"a", "b", "c", "d"});
    std::vector<PermGroup> groups{
        generate_from_cycles(u4, {"(a b c d)"}),
        generate_from_cycles(u4, {"(a b)", "(a b c d)"}),
        generate_from_cycles(u4, {"(a b)(c d)", "(a b c d)"}),
        generate_from_cycles(u4, {"(a b c)"}),
        trivial_group(4),
    };
    for (const PermGroup& G : groups) {
        for (int colors = 2; colors <= 3; ++colors) {
            int domain = static_cast<int>(ipow(colors, 4));
            REQUIRE(domain <= 200);
            auto image = [&](int gi, int code) {
                return apply_to_coloring(G->elements[gi], code, 4, colors);
            };
            long plain = 0, signed_sum = 0;
            for (int gi = 0; gi < G->order(); ++gi) {
                long fix = 0;
                for (int x = 0; x < domain; ++x)
                    if (image(gi, x) == x) ++fix;
                plain += fix;
                signed_sum += perm_sign(G->elements[gi]) * fix;
            }
            REQUIRE(plain % G->order() == 0);
            REQUIRE(signed_sum % G->order() == 0);
            CHECK(orbit_count(G, domain, image) == plain / G->order());
            CHECK(coeven_orbit_count(G, domain, image) == signed_sum / G->order());
        }
    }
}

TEST_CASE("class function arithmetic and inner products", "[groups]") {
    Universe u(std::vector<std::string>{"a", "b", "c"});
    PermGroup G = generate_from_cycles(u, {"(a b)", "(a b c)"});
    ClassFun triv = trivial_character(G);
    ClassFun sgn = sign_character(G);
    CHECK(cyc_eq(sgn.v[0], Cyc(Rat(1))));
    CHECK(cyc_eq(sgn.v[1], Cyc(Rat(-1))));
    CHECK(cyc_eq(sgn.v[2], Cyc(Rat(1))));
    CHECK(cyc_eq(inner_product(triv, triv), Cyc(Rat(1))));
    CHECK(cyc_eq(inner_product(sgn, sgn), Cyc(Rat(1))));
    CHECK(cyc_eq(inner_product(triv, sgn), Cyc(Rat(0))));
    CHECK(ring_is_zero(ring_sub(triv, triv)));
    CHECK(ring_add(triv, ring_neg(triv)) == ring_zero_like(triv));
    CHECK(classfun_pointwise_mul(sgn, sgn) == triv);
    // Natural permutation character of the action on {a,b,c}: fixed points
    // 3, 1, 0 at the three classes.
    ClassFun nat = permutation_character_from_fixed(G, [&](const Perm& g) {
        long f = 0;
        for (int i = 0; i < 3; ++i)
            if (g[i] == i) ++f;
        return f;
    });
    CHECK(cyc_eq(nat.v[0], Cyc(Rat(3))));
    CHECK(cyc_eq(nat.v[1], Cyc(Rat(1))));
    CHECK(cyc_eq(nat.v[2], Cyc(Rat(0))));
    CHECK(cyc_eq(inner_product(triv, nat), Cyc(Rat(1))));

    PermGroup H = trivial_group(3);
    ClassFun other(H);
    CHECK_THROWS_AS(ring_add(triv, other), integrity_error);
}

TEST_CASE("induction of class functions", "[groups]") {
    Universe u2(std::vector<std::string>{"a", "b"});
    PermGroup Z2 = generate_from_cycles(u2, {"(a b)"});
    PermGroup E = trivial_group(2);
    // Inducing the trivial character of the trivial subgroup gives the regular
    // character (|G|, 0, ..., 0).
    ClassFun reg = induce(trivial_character(E), Z2);
    CHECK(cyc_eq(reg.v[0], Cyc(Rat(2))));
    CHECK(cyc_eq(reg.v[1], Cyc(Rat(0))));

    Universe u4(std::vector<std::string>{"a", "b", "c", "d"});
    PermGroup C4 = generate_from_cycles(u4, {"(a b c d)"});
    PermGroup C2 = generate_from_cycles(u4, {"(a c)(b d)"});
    ClassFun up = induce(trivial_character(C2), C4);
    // Values (2, 0, 2, 0) on the classes of e, g, g^2, g^3.
    std::vector<Rat> expect{Rat(2), Rat(0), Rat(2), Rat(0)};
    REQUIRE(C4->num_classes() == 4);
    for (int c = 0; c < 4; ++c) {
        long ord = perm_order(C4->elements[C4->class_rep[c]]);
        Rat want = (ord == 1 || ord == 2) ? Rat(2) : Rat(0);
        CHECK(cyc_eq(up.v[c], Cyc(want)));
    }

    // Induction in stages agrees with direct induction (C2 < C4 < S4).
    PermGroup S4 = generate_from_cycles(u4, {"(a b)", "(a b c d)"});
    CHECK(induce(induce(trivial_character(C2), C4), S4) == induce(trivial_character(C2), S4));

    // Frobenius reciprocity for arbitrary rational class functions.
    ClassFun psi = classfun_from_counts(C4, {3, 1, 4, 1});
    ClassFun chi = classfun_from_counts(S4, {2, 7, 1, 8, 2});
    CHECK(cyc_eq(inner_product(induce(psi, S4), chi), inner_product(psi, restrict_character(chi, C4))));
    CHECK(cyc_eq(inner_product(chi, induce(psi, S4)), inner_product(restrict_character(chi, C4), psi)));

    // Inducing from a non-subgroup is rejected.
    Universe u3(std::vector<std::string>{"a", "b", "c"});
    PermGroup S3 = generate_from_cycles(u3, {"(a b)", "(a b c)"});
    PermGroup C3 = generate_from_cycles(u3, {"(a b c)"});
    CHECK_THROWS_AS(induce(trivial_character(C3), C4), invalid_input_error);
    CHECK_NOTHROW(induce(trivial_character(C3), S3));
}
