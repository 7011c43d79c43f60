#include "endolab/errors.hpp"
#include "endolab/search.hpp"
#include "endolab/structure.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace endolab;

TEST_CASE("check_morphism basics")
{
    Structure k11 = complete_bipartite(1);

    CHECK(check_morphism(k11, k11, FiniteMap::identity(2), MorphismKind::Aut));
    CHECK(check_morphism(k11, k11, FiniteMap(2, 2, {1, 0}), MorphismKind::Aut));
    // the edge (0,1) would land on the missing loop (0,0)
    CHECK_FALSE(check_morphism(k11, k11, FiniteMap::constant(2, 0), MorphismKind::Hom));

    CHECK_THROWS_AS(check_morphism(edge_copies(1), complete_bipartite(2), FiniteMap(2, 4, {0, 2}),
                                   MorphismKind::Emb),
                    IncompatibleSignatures);
    CHECK_THROWS_AS(check_morphism(k11, k11, FiniteMap(3, 2, {0, 1, 0}), MorphismKind::Hom),
                    InvalidParameter);
}

TEST_CASE("find_morphism basics")
{
    // a single edge embeds into the larger bipartite graph
    CHECK(find_morphism(complete_bipartite(1), complete_bipartite(2), MorphismKind::Emb).has_value());
    CHECK_THROWS_AS(find_morphism(edge_copies(1), complete_bipartite(2), MorphismKind::Emb),
                    IncompatibleSignatures);

    // K3 is not 2-colourable
    CHECK_FALSE(
        find_morphism(complete_graph(3, false), complete_graph(2, false), MorphismKind::Hom).has_value());

    Structure loop = complete_graph(1, true);
    auto f = find_morphism(loop, loop, MorphismKind::Aut);
    REQUIRE(f.has_value());
    CHECK(*f == FiniteMap::identity(1));
}

TEST_CASE("enumeration counts against the brute-force oracle")
{
    Structure k11 = complete_bipartite(1);
    Structure k22 = complete_bipartite(2);

    auto check_counts = [](const Structure & a, MorphismKind kind, std::size_t expected) {
        std::vector<FiniteMap> searched = enumerate_morphisms(a, a, kind);
        std::vector<FiniteMap> brute = oracle::brute_force_morphisms(a, a, kind);
        CHECK(searched == brute);
        CHECK(searched.size() == expected);
    };

    check_counts(k11, MorphismKind::Hom, 2);
    check_counts(k22, MorphismKind::Hom, 32); // 2 * m^(2m)
    check_counts(k22, MorphismKind::Aut, 8);  // 2 * (m!)^2
}

TEST_CASE("enumeration order and limit")
{
    Structure k22 = complete_bipartite(2);
    std::vector<FiniteMap> all = enumerate_morphisms(k22, k22, MorphismKind::Hom);
    CHECK(std::is_sorted(all.begin(), all.end()));

    std::vector<FiniteMap> prefix = enumerate_morphisms(k22, k22, MorphismKind::Hom, 5);
    REQUIRE(prefix.size() == 5);
    CHECK(std::equal(prefix.begin(), prefix.end(), all.begin()));
}

TEST_CASE("isomorphism checks")
{
    Structure g22 = bipartite_copies(2, 2);
    CHECK(is_isomorphic(g22, g22));

    std::vector<int> bases;
    for (int i = 0; i < 2; ++i)
        for (int e : {+1, -1})
            bases.push_back(encode_vertex({i, e, 0}, 2));
    CHECK(is_isomorphic(edge_copies(2), induced_substructure(g22, bases)));

    CHECK_FALSE(is_isomorphic(complete_bipartite(2), complete_graph(4, false)));
}

TEST_CASE("embeddings imply injective homomorphisms")
{
    Structure g21 = bipartite_copies(2, 1);
    for (const auto & f : enumerate_morphisms(g21, g21, MorphismKind::Emb)) {
        CHECK(f.is_injective());
        CHECK(check_morphism(g21, g21, f, MorphismKind::Hom));
    }
}

TEST_CASE("endomorphisms are closed under composition")
{
    for (const Structure & a : {complete_bipartite(2), bipartite_copies(2, 1), edge_copies(2)}) {
        std::vector<FiniteMap> end = enumerate_morphisms(a, a, MorphismKind::Hom);
        for (const auto & f : end)
            for (const auto & g : end)
                CHECK(std::binary_search(end.begin(), end.end(), compose(f, g)));
    }
}

TEST_CASE("higher-arity relations")
{
    // a single directed triangle as a ternary relation
    Structure tri = Structure::make("tri", 3, {Relation{"R", 3, {{0, 1, 2}}}});
    Structure two = Structure::make("two", 4,
                                    {Relation{"R", 3, {{0, 1, 2}, {1, 2, 3}}}});

    CHECK(check_morphism(tri, two, FiniteMap(3, 4, {0, 1, 2}), MorphismKind::Hom));
    CHECK(check_morphism(tri, two, FiniteMap(3, 4, {1, 2, 3}), MorphismKind::Emb));
    CHECK_FALSE(check_morphism(tri, two, FiniteMap(3, 4, {0, 1, 3}), MorphismKind::Hom));

    // reflection has to hold for wide tuples as well
    Structure bare = Structure::make("bare", 3, {Relation{"R", 3, {}}});
    Structure full = Structure::make("full", 3, {Relation{"R", 3, {{0, 1, 2}}}});
    CHECK(check_morphism(bare, full, FiniteMap::identity(3), MorphismKind::Hom));
    CHECK_FALSE(check_morphism(bare, full, FiniteMap::identity(3), MorphismKind::Emb));

    CHECK(oracle::brute_force_morphisms(tri, two, MorphismKind::Hom) ==
          enumerate_morphisms(tri, two, MorphismKind::Hom));
    CHECK(oracle::brute_force_morphisms(tri, two, MorphismKind::Emb) ==
          enumerate_morphisms(tri, two, MorphismKind::Emb));
    CHECK(oracle::brute_force_morphisms(two, two, MorphismKind::Aut) ==
          enumerate_morphisms(two, two, MorphismKind::Aut));

    // seeded random ternary structures against the oracle
    std::mt19937 rng(515);
    std::uniform_int_distribution<int> size_dist(1, 4);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int round = 0; round < 15; ++round) {
        int na = size_dist(rng), nb = size_dist(rng);
        auto random_ternary = [&](int n) {
            Relation r{"R", 3, {}};
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        if (coin(rng) < 0.2)
                            r.tuples.push_back({a, b, c});
            return r;
        };
        Structure a = Structure::make("A", na, {random_ternary(na)});
        Structure b = Structure::make("B", nb, {random_ternary(nb)});
        for (MorphismKind kind : {MorphismKind::Hom, MorphismKind::Emb, MorphismKind::Iso})
            CHECK(oracle::brute_force_morphisms(a, b, kind) == enumerate_morphisms(a, b, kind));
    }
}

TEST_CASE("automorphism kind requires one structure")
{
    Structure looped = complete_graph(2, true);
    Structure plain = complete_graph(2, false);
    CHECK_THROWS_AS(check_morphism(looped, plain, FiniteMap::identity(2), MorphismKind::Aut),
                    InvalidParameter);
    CHECK_THROWS_AS(enumerate_morphisms(looped, plain, MorphismKind::Aut), InvalidParameter);

    // structurally equal copies are fine; the single edge is the two-vertex
    // complete graph
    CHECK(check_morphism(complete_bipartite(1), complete_graph(2, false), FiniteMap::identity(2),
                         MorphismKind::Aut));
}

TEST_CASE("search agrees with brute force on random structures")
{
    std::mt19937 rng(20240);
    for (int round = 0; round < 25; ++round) {
        Structure a = oracle::random_structure(rng, 4, "A");
        Structure b = oracle::random_structure(rng, 4, "B");
        // align the signatures: reuse a's relation names over b's domain
        std::vector<Relation> rels;
        for (const auto & rel : a.relations) {
            const Relation * other = b.find_relation(rel.name);
            rels.push_back(other ? *other : Relation{rel.name, rel.arity, {}});
        }
        b = Structure::make("B", b.domain_size, rels);

        for (MorphismKind kind : {MorphismKind::Hom, MorphismKind::Emb, MorphismKind::Iso}) {
            std::vector<FiniteMap> brute = oracle::brute_force_morphisms(a, b, kind);
            std::vector<FiniteMap> searched = enumerate_morphisms(a, b, kind);
            CHECK(brute == searched);
            CHECK(find_morphism(a, b, kind).has_value() == !brute.empty());
        }
        CHECK(oracle::brute_force_morphisms(a, a, MorphismKind::Aut) ==
              enumerate_morphisms(a, a, MorphismKind::Aut));
    }
}
