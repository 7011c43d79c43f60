#include "endolab/errors.hpp"
#include "endolab/monoid.hpp"
#include "endolab/search.hpp"
#include "endolab/structure.hpp"
#include "endolab/wreath.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace endolab;

namespace {

// every self-map of [0,n)
std::vector<FiniteMap> all_maps(int n)
{
    std::vector<FiniteMap> out;
    std::vector<int> img(static_cast<std::size_t>(n), 0);
    for (;;) {
        out.emplace_back(n, n, img);
        int pos = n - 1;
        while (pos >= 0 && img[static_cast<std::size_t>(pos)] == n - 1)
            img[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0)
            break;
        ++img[static_cast<std::size_t>(pos)];
    }
    return out;
}

const FiniteMap id2 = FiniteMap::identity(2);
const FiniteMap swap2 = FiniteMap(2, 2, {1, 0});
const FiniteMap const0 = FiniteMap::constant(2, 0);

}

TEST_CASE("composition")
{
    FiniteMap f(3, 3, {1, 2, 0});
    CHECK(compose(FiniteMap::identity(3), f) == f);
    CHECK(compose(const0, swap2) == const0);
    CHECK(compose(f, FiniteMap(3, 3, {2, 0, 1})) == FiniteMap::identity(3));
    CHECK_THROWS_AS(compose(f, id2), DimensionMismatch);
}

TEST_CASE("word evaluation")
{
    // phi(s) = id s id = s
    Word pass_through({id2, id2});
    for (const auto & s : all_maps(2))
        CHECK(eval_word(pass_through, s) == s);

    // a length-zero word is constant
    Word constant({swap2});
    for (const auto & s : all_maps(2))
        CHECK(eval_word(constant, s) == swap2);

    // p_0 applies first: p_1 s p_0 with p_0 = swap, p_1 = id at s = const0
    Word w({swap2, id2});
    CHECK(eval_word(w, const0) == compose(id2, compose(const0, swap2)));
    CHECK(eval_word(w, const0) == const0);

    CHECK_THROWS_AS(Word({}), InvalidParameter);
    CHECK_THROWS_AS(Word({id2, FiniteMap::identity(3)}), DimensionMismatch);
}

TEST_CASE("basic set membership separates a point")
{
    // phi(s) = s, psi(s) = s0: the complement of a singleton
    for (int n = 1; n <= 3; ++n) {
        FiniteMap id = FiniteMap::identity(n);
        for (const auto & s0 : all_maps(n)) {
            WordPair pair(Word({id, id}), Word({s0}));
            for (const auto & s : all_maps(n))
                CHECK(in_zariski_set(pair, s) == (s != s0));
        }
    }

    WordPair same(Word({id2, id2}), Word({id2, id2}));
    for (const auto & s : all_maps(2))
        CHECK_FALSE(in_zariski_set(same, s));

    WordPair mixed(Word({id2, id2}), Word({id2, swap2}));
    CHECK(in_zariski_set(mixed, id2)); // id != swap
}

TEST_CASE("translation contract, exhaustive on a two-point domain")
{
    std::vector<FiniteMap> maps = all_maps(2);

    auto check_pair = [&](const WordPair & pair) {
        for (const auto & t : maps) {
            WordPair left = translate_word_pair(pair, t, TranslationSide::Left);
            WordPair right = translate_word_pair(pair, t, TranslationSide::Right);
            for (const auto & s : maps) {
                CHECK(in_zariski_set(left, s) == in_zariski_set(pair, compose(t, s)));
                CHECK(in_zariski_set(right, s) == in_zariski_set(pair, compose(s, t)));
            }
        }
    };

    // every (k_phi, k_psi) = (1,1) pair
    for (const auto & p0 : maps)
        for (const auto & p1 : maps)
            for (const auto & q0 : maps)
                for (const auto & q1 : maps)
                    check_pair(WordPair(Word({p0, p1}), Word({q0, q1})));

    // every (2,0) pair
    for (const auto & p0 : maps)
        for (const auto & p1 : maps)
            for (const auto & p2 : maps)
                for (const auto & q0 : maps)
                    check_pair(WordPair(Word({p0, p1, p2}), Word({q0})));
}

TEST_CASE("translation contract on a three-point domain, seeded words")
{
    std::vector<FiniteMap> maps = all_maps(3);
    std::mt19937 rng(31337);
    std::uniform_int_distribution<std::size_t> pick(0, maps.size() - 1);
    std::uniform_int_distribution<int> length(0, 2);

    for (int round = 0; round < 300; ++round) {
        std::vector<FiniteMap> ps, qs;
        int kp = length(rng), kq = length(rng);
        for (int j = 0; j <= kp; ++j)
            ps.push_back(maps[pick(rng)]);
        for (int j = 0; j <= kq; ++j)
            qs.push_back(maps[pick(rng)]);
        WordPair pair{Word(ps), Word(qs)};

        for (const auto & t : maps) {
            WordPair left = translate_word_pair(pair, t, TranslationSide::Left);
            WordPair right = translate_word_pair(pair, t, TranslationSide::Right);
            for (const auto & s : maps) {
                CHECK(in_zariski_set(left, s) == in_zariski_set(pair, compose(t, s)));
                CHECK(in_zariski_set(right, s) == in_zariski_set(pair, compose(s, t)));
            }
        }
    }
}

TEST_CASE("translation by the identity changes nothing")
{
    WordPair pair(Word({id2, swap2}), Word({const0}));
    for (TranslationSide side : {TranslationSide::Left, TranslationSide::Right}) {
        WordPair moved = translate_word_pair(pair, id2, side);
        for (const auto & s : all_maps(2))
            CHECK(in_zariski_set(moved, s) == in_zariski_set(pair, s));
    }
}

TEST_CASE("left translation by a constant makes membership constant")
{
    WordPair pair(Word({id2, id2}), Word({const0}));
    WordPair moved = translate_word_pair(pair, const0, TranslationSide::Left);
    // const0 absorbs s, so membership no longer depends on s
    std::vector<FiniteMap> maps = all_maps(2);
    bool first = in_zariski_set(moved, maps.front());
    for (const auto & s : maps) {
        CHECK(in_zariski_set(moved, s) == first);
        CHECK(in_zariski_set(moved, s) == in_zariski_set(pair, compose(const0, s)));
    }
}

TEST_CASE("relabeling the domain relabels the basic set")
{
    // conjugating every coefficient by a permutation transports membership
    std::vector<FiniteMap> maps = all_maps(3);
    FiniteMap sigma(3, 3, {1, 2, 0});
    FiniteMap sigma_inv(3, 3, {2, 0, 1});

    auto conj = [&](const FiniteMap & f) { return compose(sigma, compose(f, sigma_inv)); };

    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, maps.size() - 1);
    for (int round = 0; round < 50; ++round) {
        Word phi({maps[pick(rng)], maps[pick(rng)]});
        Word psi({maps[pick(rng)]});
        WordPair pair(phi, psi);
        WordPair moved(Word({conj(phi.coefficients[0]), conj(phi.coefficients[1])}),
                       Word({conj(psi.coefficients[0])}));
        for (const auto & s : maps)
            CHECK(in_zariski_set(pair, s) == in_zariski_set(moved, conj(s)));
    }
}

TEST_CASE("monoid closure")
{
    CHECK(monoid_closure({FiniteMap::identity(2)}, 100) ==
          std::vector<FiniteMap>{FiniteMap::identity(2)});

    std::vector<FiniteMap> two = monoid_closure({swap2}, 100);
    CHECK(two.size() == 2);

    std::vector<FiniteMap> s3 =
        monoid_closure({FiniteMap(3, 3, {1, 2, 0}), FiniteMap(3, 3, {1, 0, 2})}, 100);
    CHECK(s3.size() == 6);
    for (const auto & f : s3)
        CHECK(f.is_permutation());

    CHECK_THROWS_AS(monoid_closure({FiniteMap(3, 3, {1, 2, 0}), FiniteMap(3, 3, {1, 0, 2})}, 3),
                    CapExceeded);
}

TEST_CASE("monoid closure agrees with the fixed-point oracle")
{
    // closure of {const0, swap}: both constants plus the two permutations
    std::vector<FiniteMap> closed = monoid_closure({const0, swap2}, 100);
    CHECK(closed.size() == 4);

    // independent fixed-point computation
    std::set<FiniteMap> oracle_set = {FiniteMap::identity(2), const0, swap2};
    for (;;) {
        std::set<FiniteMap> next = oracle_set;
        for (const auto & f : oracle_set)
            for (const auto & g : oracle_set)
                next.insert(compose(f, g));
        if (next == oracle_set)
            break;
        oracle_set = std::move(next);
    }
    CHECK(closed == std::vector<FiniteMap>(oracle_set.begin(), oracle_set.end()));
}

TEST_CASE("pointwise basic sets")
{
    Structure k11 = complete_bipartite(1);
    std::vector<FiniteMap> end11 = enumerate_morphisms(k11, k11, MorphismKind::Hom);
    CHECK(pointwise_basic({}, {}, end11) == end11);
    CHECK(pointwise_basic({0}, {0}, end11) == std::vector<FiniteMap>{FiniteMap::identity(2)});

    Structure k22 = complete_bipartite(2);
    std::vector<FiniteMap> end22 = enumerate_morphisms(k22, k22, MorphismKind::Hom);
    REQUIRE(end22.size() == 32);
    std::vector<FiniteMap> sent = pointwise_basic({0}, {2}, end22);
    CHECK(sent.size() == 8);
    for (const auto & s : sent) {
        CHECK(s(0) == 2);
        CHECK(part_sign(s, 2) == -1);
    }

    CHECK_THROWS_AS(pointwise_basic({0}, {}, end11), DimensionMismatch);
    CHECK_THROWS_AS(pointwise_basic({9}, {0}, end11), InvalidParameter);
}

TEST_CASE("partial injections")
{
    CHECK_THROWS_AS(PartialInjection(3, {{0, 1}, {2, 1}}), InvalidParameter);
    CHECK_THROWS_AS(PartialInjection(3, {{0, 5}}), InvalidParameter);

    PartialInjection p(4);
    CHECK(p.insert(3, 0));
    CHECK(p.insert(3, 0));       // consistent repeat
    CHECK_FALSE(p.insert(3, 1)); // contradicts 3 -> 0
    CHECK_FALSE(p.insert(1, 0)); // value already taken

    CHECK(p.extend_to_total() == FiniteMap(4, 4, {1, 2, 3, 0}));
    CHECK(PartialInjection(3).extend_to_total() == FiniteMap::identity(3));

    PartialInjection q(4);
    CHECK(q.insert(0, 2));
    CHECK(p.merge(q));
    CHECK_FALSE(p.merge(PartialInjection(4, {{0, 3}})));
}
