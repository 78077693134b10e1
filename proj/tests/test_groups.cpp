#include "doctest.h"
#include "extcoh/groups.hpp"

#include <algorithm>
#include <set>

using namespace extcoh;

namespace {

// Independent oracle: count automorphisms by scanning all bijections that
// fix the identity. Only usable at tiny orders, which is the point.
int brute_aut_count(const FiniteGroup& G) {
    std::vector<int> rest;
    for (int x = 0; x < G.order; ++x)
        if (x != G.identity) rest.push_back(x);
    std::sort(rest.begin(), rest.end());
    std::vector<int> perm(rest);
    int count = 0;
    do {
        Perm p(G.order);
        p[G.identity] = G.identity;
        for (size_t i = 0; i < rest.size(); ++i) p[rest[i]] = perm[i];
        if (is_homomorphism(G, G, p)) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// Independent oracle: center by scanning all commuting pairs.
std::vector<int> brute_center(const FiniteGroup& G) {
    std::vector<int> z;
    for (int x = 0; x < G.order; ++x) {
        bool ok = true;
        for (int g = 0; g < G.order; ++g)
            if (G.table[x][g] != G.table[g][x]) ok = false;
        if (ok) z.push_back(x);
    }
    return z;
}

}  // namespace

TEST_CASE("validate_group_table accepts Z4 and recomputes structure") {
    std::vector<std::vector<int>> t{{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
    FiniteGroup G = validate_group_table(t, "Z4");
    CHECK(G.order == 4);
    CHECK(G.identity == 0);
    CHECK(G.inverse[1] == 3);
    CHECK(G.inverse[2] == 2);
    // revalidation reproduces the group exactly
    FiniteGroup H = validate_group_table(G.table, G.label);
    CHECK(H.table == G.table);
    CHECK(H.identity == G.identity);
    CHECK(H.inverse == G.inverse);
}

TEST_CASE("left-projection law has no identity") {
    std::vector<std::vector<int>> t{{0, 0}, {1, 1}};  // x*y = x
    CHECK_THROWS_AS(validate_group_table(t), ValidationError);
    try {
        validate_group_table(t);
    } catch (const ValidationError& e) {
        CHECK(e.fault == Fault::NoIdentity);
    }
}

TEST_CASE("non-associative table is rejected with a witness triple") {
    // tweak Z3: make 1*1 = 1 (idempotent breaks associativity or identity)
    std::vector<std::vector<int>> t{{0, 1, 2}, {1, 1, 0}, {2, 0, 1}};
    try {
        validate_group_table(t);
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK((e.fault == Fault::NotAssociative || e.fault == Fault::NoInverse ||
               e.fault == Fault::NoIdentity));
        if (e.fault == Fault::NotAssociative) {
            CHECK(e.witness.size() == 3);
            int x = e.witness[0], y = e.witness[1], z = e.witness[2];
            CHECK(t[t[x][y]][z] != t[x][t[y][z]]);
        }
    }
}

TEST_CASE("S3 built from permutation composition matches dihedral table") {
    FiniteGroup S3 = symmetric3();
    CHECK(S3.order == 6);
    CHECK_FALSE(S3.is_abelian());
    CHECK(brute_aut_count(S3) == 6);
}

TEST_CASE("automorphism towers match the brute-force oracle") {
    struct Case {
        FiniteGroup g;
        int aut, inn, out;
    };
    std::vector<Case> cases;
    cases.push_back({cyclic_group(4), 2, 1, 2});
    cases.push_back({symmetric3(), 6, 6, 1});
    cases.push_back({klein_group(), 6, 1, 6});
    for (auto& c : cases) {
        CAPTURE(c.g.label);
        const AutTower& T = automorphism_tower(c.g);
        CHECK(T.autGroup.order == c.aut);
        CHECK(static_cast<int>(T.innIndices.size()) == c.inn);
        CHECK(T.outGroup.order == c.out);
        CHECK(brute_aut_count(c.g) == c.aut);
        // canonical ordering: strictly increasing permutation arrays
        for (size_t i = 1; i < T.autElems.size(); ++i)
            CHECK(T.autElems[i - 1].map < T.autElems[i].map);
    }
}

TEST_CASE("tower via generator backtracking agrees with full scan at order 8") {
    for (const FiniteGroup& G : {dihedral_group(4), quaternion8(), cyclic_group(8)}) {
        CAPTURE(G.label);
        const AutTower& T = automorphism_tower(G);
        CHECK(T.autGroup.order == brute_aut_count(G));
        // |Inn| = |G| / |Z(G)|
        Subgroup Z = center(G);
        CHECK(static_cast<int>(T.innIndices.size()) == G.order / Z.group.order);
    }
}

TEST_CASE("centers match the commuting-pair scan") {
    CHECK(brute_center(symmetric3()) == center(symmetric3()).elems);
    CHECK(center(symmetric3()).group.order == 1);
    CHECK(center(cyclic_group(4)).group.order == 4);
    FiniteGroup D4 = dihedral_group(4);
    Subgroup Z = center(D4);
    CHECK(Z.group.order == 2);
    CHECK(brute_center(D4) == Z.elems);
}

TEST_CASE("quotients: cyclic, S3/A3, and a non-normal rejection") {
    FiniteGroup Z4 = cyclic_group(4);
    Subgroup two = generated_subgroup(Z4, {2});
    Quotient q = quotient_by_normal(Z4, two);
    CHECK(q.group.order == 2);

    FiniteGroup S3 = symmetric3();
    // A3 = rotation subgroup {0,1,2} in the dihedral indexing
    Subgroup A3 = generated_subgroup(S3, {1});
    CHECK(A3.group.order == 3);
    Quotient q2 = quotient_by_normal(S3, A3);
    CHECK(q2.group.order == 2);

    // an order-2 subgroup of S3 is not normal
    Subgroup refl = generated_subgroup(S3, {3});
    CHECK(refl.group.order == 2);
    try {
        quotient_by_normal(S3, refl);
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(e.fault == Fault::NotNormal);
        CHECK(e.witness.size() == 2);
        int g = e.witness[0], x = e.witness[1];
        CHECK_FALSE(refl.contains(S3.conj(g, x)));
    }
}

TEST_CASE("quotient pullback of the full projection returns G") {
    FiniteGroup G = dihedral_group(4);
    Subgroup triv = generated_subgroup(G, {});
    Quotient q = quotient_by_normal(G, triv);
    CHECK(q.group.order == G.order);
    CHECK(q.group.table == G.table);
}

TEST_CASE("semidirect products: inversion actions and the trivial action") {
    FiniteGroup Z3 = cyclic_group(3);
    FiniteGroup Z2 = cyclic_group(2);
    const AutTower& T3 = automorphism_tower(Z3);
    REQUIRE(T3.autGroup.order == 2);
    // find the inversion automorphism
    int invAut = -1;
    for (int a = 0; a < 2; ++a)
        if (T3.autElems[a].map[1] == 2) invAut = a;
    REQUIRE(invAut >= 0);
    int idAut = 1 - invAut;

    SemidirectProduct P = semidirect_product(Z3, Z2, {idAut, invAut});
    CHECK(P.group.order == 6);
    CHECK(find_isomorphism(P.group, symmetric3()).has_value());

    // trivial action gives the direct product, identically on pairs
    SemidirectProduct D = semidirect_product(Z3, Z2, {idAut, idAut});
    CHECK(D.group.table == direct_product(Z3, Z2).table);

    // Z4 x| Z2 with inversion is D4
    FiniteGroup Z4 = cyclic_group(4);
    const AutTower& T4 = automorphism_tower(Z4);
    int inv4 = -1, id4 = -1;
    for (int a = 0; a < T4.autGroup.order; ++a) {
        if (T4.autElems[a].map[1] == 3) inv4 = a;
        if (T4.autElems[a].map[1] == 1) id4 = a;
    }
    SemidirectProduct P4 = semidirect_product(Z4, Z2, {id4, inv4});
    CHECK(find_isomorphism(P4.group, dihedral_group(4)).has_value());

    // a non-homomorphic action map is rejected
    CHECK_THROWS_AS(semidirect_product(Z3, Z2, {invAut, invAut}), ValidationError);
}

TEST_CASE("Q8 is the expected group") {
    FiniteGroup Q = quaternion8();
    CHECK(Q.order == 8);
    CHECK(center(Q).group.order == 2);
    int order4 = 0;
    for (int x = 0; x < 8; ++x)
        if (Q.elem_order(x) == 4) ++order4;
    CHECK(order4 == 6);  // distinguishes Q8 from D4
    CHECK_FALSE(find_isomorphism(Q, dihedral_group(4)).has_value());
}

TEST_CASE("determinism: towers and digests are stable across calls") {
    FiniteGroup G = dihedral_group(4);
    const AutTower& a = automorphism_tower(G);
    const AutTower& b = automorphism_tower(G);
    CHECK(&a == &b);  // memoized
    CHECK(G.digest() == dihedral_group(4).digest());
    CHECK(G.digest() != quaternion8().digest());
}

TEST_CASE("subgroup utilities") {
    FiniteGroup G = dihedral_group(6);
    std::vector<int> gens = minimal_generating_set(G);
    CHECK(generated_subgroup(G, gens).group.order == G.order);
    CHECK(gens.size() == 2);
    CHECK_THROWS_AS(subgroup_from_elements(G, {0, 1}), ValidationError);  // not closed
}
