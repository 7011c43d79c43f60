#include "endolab/errors.hpp"
#include "endolab/search.hpp"
#include "endolab/structure.hpp"
#include "endolab/wreath.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace endolab;

namespace {

WreathElement make_element(int n, int m, FiniteMap tau, std::vector<FiniteMap> components)
{
    WreathElement w;
    w.n = n;
    w.m = m;
    w.tau = std::move(tau);
    w.components = std::move(components);
    return w;
}

// (tau, s) o (tau', s') = (tau tau', i -> s_{tau'(i)} s'_i)
WreathElement compose_wreath(const WreathElement & a, const WreathElement & b)
{
    WreathElement out;
    out.n = a.n;
    out.m = a.m;
    out.tau = compose(a.tau, b.tau);
    for (int i = 0; i < a.n; ++i)
        out.components.push_back(compose(a.components[static_cast<std::size_t>(b.tau(i))],
                                         b.components[static_cast<std::size_t>(i)]));
    return out;
}

}

TEST_CASE("part signs")
{
    CHECK(part_sign(part_collapse(2, +1), 2) == +1);
    CHECK(part_sign(part_collapse(2, -1), 2) == -1);
    CHECK(part_sign(part_collapse(3, -1), 3) == -1);

    CHECK(part_sign(FiniteMap::identity(2), 1) == +1);
    CHECK(part_sign(FiniteMap(2, 2, {1, 0}), 1) == -1);

    CHECK_THROWS_AS(part_sign(FiniteMap::constant(2, 0), 1), NotAnEndomorphism);
}

TEST_CASE("sign multiplicativity over the whole monoid")
{
    Structure k22 = complete_bipartite(2);
    std::vector<FiniteMap> end = enumerate_morphisms(k22, k22, MorphismKind::Hom);
    REQUIRE(end.size() == 32);
    for (const auto & s : end)
        for (const auto & t : end)
            CHECK(part_sign(compose(s, t), 2) == part_sign(s, 2) * part_sign(t, 2));
}

TEST_CASE("part collapses")
{
    CHECK(part_collapse(1, +1) == FiniteMap::identity(2));
    CHECK(part_collapse(1, -1) == FiniteMap(2, 2, {1, 0}));
    CHECK(part_collapse(2, +1) == FiniteMap(4, 4, {0, 0, 2, 2}));
    CHECK(part_collapse(2, -1) == FiniteMap(4, 4, {2, 2, 0, 0}));

    for (int m = 1; m <= 3; ++m) {
        Structure kmm = complete_bipartite(m);
        for (int sign : {+1, -1}) {
            FiniteMap c = part_collapse(m, sign);
            CHECK(check_morphism(kmm, kmm, c, MorphismKind::Hom));
            std::vector<int> image{base_vertex_plus(m), base_vertex_minus(m)};
            CHECK(c.image_set() == image);
        }
    }
}

TEST_CASE("wreath element to map")
{
    FiniteMap id2 = FiniteMap::identity(2);
    CHECK(wreath_to_map(make_element(2, 1, id2, {id2, id2})) == FiniteMap::identity(4));

    // swapping the copies exchanges the vertex blocks
    FiniteMap swap_copies(2, 2, {1, 0});
    CHECK(wreath_to_map(make_element(2, 1, swap_copies, {id2, id2})) ==
          FiniteMap(4, 4, {2, 3, 0, 1}));

    // a single copy is the fiber map itself
    FiniteMap some = part_collapse(2, -1);
    CHECK(wreath_to_map(make_element(1, 2, FiniteMap::identity(1), {some})) == some);

    CHECK_THROWS_AS(wreath_to_map(make_element(2, 1, FiniteMap::constant(2, 0), {id2, id2})),
                    InvalidParameter);
    CHECK_THROWS_AS(wreath_to_map(make_element(2, 1, id2, {FiniteMap::constant(2, 0), id2})),
                    NotAnEndomorphism);
}

TEST_CASE("decomposition round-trip")
{
    CHECK(map_to_wreath(FiniteMap::identity(4), 2, 1).tau == FiniteMap::identity(2));

    Structure k22 = complete_bipartite(2);
    std::vector<FiniteMap> fiber_end = enumerate_morphisms(k22, k22, MorphismKind::Hom);

    std::mt19937 rng(4711);
    std::uniform_int_distribution<std::size_t> pick(0, fiber_end.size() - 1);
    std::vector<int> perm = {0, 1, 2};
    for (int round = 0; round < 100; ++round) {
        std::shuffle(perm.begin(), perm.end(), rng);
        WreathElement w = make_element(3, 2, FiniteMap(3, 3, perm),
                                       {fiber_end[pick(rng)], fiber_end[pick(rng)],
                                        fiber_end[pick(rng)]});
        CHECK(map_to_wreath(wreath_to_map(w), 3, 2) == w);
    }

    CHECK_THROWS_AS(map_to_wreath(FiniteMap::constant(4, 0), 2, 1), NotAnEndomorphism);
}

TEST_CASE("endomorphisms are exactly the wreath maps")
{
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
        std::vector<WreathElement> elements = all_wreath_elements(n, m, false);
        Structure g = bipartite_copies(n, m);
        std::vector<FiniteMap> end = enumerate_morphisms(g, g, MorphismKind::Hom);
        CHECK(elements.size() == end.size());
        CHECK(check_wreath_characterization(n, m));
    }

    // three copies and a wider single fiber
    CHECK(check_wreath_characterization(3, 1));
    CHECK(check_wreath_characterization(1, 3));

    // n! * (2 m^(2m))^n
    CHECK(all_wreath_elements(1, 1, false).size() == 2);
    CHECK(all_wreath_elements(2, 1, false).size() == 8);
    CHECK(all_wreath_elements(1, 2, false).size() == 32);
    CHECK(all_wreath_elements(2, 2, false).size() == 2048);
    CHECK(all_wreath_elements(3, 1, false).size() == 48);
    CHECK(all_wreath_elements(1, 3, false).size() == 1458);

    CHECK_THROWS_AS(all_wreath_elements(4, 3, false, 1000), CapExceeded);
}

TEST_CASE("automorphisms are exactly the invertible wreath maps")
{
    for (auto [n, m] : {std::pair{2, 1}, {2, 2}}) {
        std::vector<WreathElement> elements = all_wreath_elements(n, m, true);
        std::vector<FiniteMap> maps;
        for (const auto & w : elements)
            maps.push_back(wreath_to_map(w));
        std::sort(maps.begin(), maps.end());

        Structure g = bipartite_copies(n, m);
        CHECK(maps == enumerate_morphisms(g, g, MorphismKind::Aut));
    }

    // n! * (2 (m!)^2)^n
    CHECK(all_wreath_elements(2, 2, true).size() == 128);
}

TEST_CASE("decomposition is a monoid isomorphism at small scale")
{
    std::vector<WreathElement> elements = all_wreath_elements(2, 1, false);
    REQUIRE(elements.size() == 8);
    for (const auto & a : elements)
        for (const auto & b : elements) {
            FiniteMap composed = compose(wreath_to_map(a), wreath_to_map(b));
            CHECK(composed == wreath_to_map(compose_wreath(a, b)));
            // extracted copy map matches the composed copy maps
            CHECK(map_to_wreath(composed, 2, 1).tau == compose(a.tau, b.tau));
        }
}
