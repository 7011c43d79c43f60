#include "endolab/search.hpp"
#include "endolab/errors.hpp"

#include <algorithm>
#include <string>

namespace endolab {

namespace {

void require_compatible(const Structure & a, const Structure & b)
{
    if (!a.same_signature(b))
        throw IncompatibleSignatures("structures '" + a.name + "' and '" + b.name +
                                     "' have different signatures");
}

void require_kind_applicable(const Structure & a, const Structure & b, MorphismKind kind)
{
    if (kind == MorphismKind::Aut && !(a == b))
        throw InvalidParameter("AUT requires source and target to be the same structure");
}

bool preserves_relations(const Structure & a, const Structure & b, const FiniteMap & f)
{
    for (const auto & rel : a.relations) {
        const Relation * target = b.find_relation(rel.name);
        std::vector<int> mapped(static_cast<std::size_t>(rel.arity));
        for (const auto & tuple : rel.tuples) {
            for (std::size_t i = 0; i < tuple.size(); ++i)
                mapped[i] = f(tuple[i]);
            if (!target->contains(mapped))
                return false;
        }
    }
    return true;
}

// "f(a-bar) in S implies a-bar in R": every target tuple inside the image of
// the (injective) map must pull back to a source tuple.
bool reflects_relations(const Structure & a, const Structure & b, const FiniteMap & f)
{
    std::vector<int> preimage(static_cast<std::size_t>(b.domain_size), -1);
    for (int u = 0; u < f.source_size; ++u)
        preimage[static_cast<std::size_t>(f(u))] = u;

    for (const auto & rel : b.relations) {
        const Relation * source = a.find_relation(rel.name);
        std::vector<int> pulled(static_cast<std::size_t>(rel.arity));
        for (const auto & tuple : rel.tuples) {
            bool inside = true;
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                int p = preimage[static_cast<std::size_t>(tuple[i])];
                if (p < 0) {
                    inside = false;
                    break;
                }
                pulled[i] = p;
            }
            if (inside && !source->contains(pulled))
                return false;
        }
    }
    return true;
}

// Dense lookup tables for the solver: adjacency matrices per binary relation,
// membership flags per unary relation, and higher-arity tuples of the source
// grouped by their largest vertex (complete once that vertex is assigned).
struct SearchTables {
    int n = 0, m = 0;
    struct BinaryPair {
        std::vector<char> a; // n*n
        std::vector<char> b; // m*m
    };
    std::vector<BinaryPair> binary;
    struct UnaryPair {
        std::vector<char> a;
        std::vector<char> b;
    };
    std::vector<UnaryPair> unary;
    struct WideRelation {
        const Relation * source;
        const Relation * target;
        std::vector<std::vector<const std::vector<int> *>> by_max; // indexed by max entry
    };
    std::vector<WideRelation> wide;
};

SearchTables build_tables(const Structure & a, const Structure & b)
{
    SearchTables t;
    t.n = a.domain_size;
    t.m = b.domain_size;
    for (const auto & rel : a.relations) {
        const Relation * target = b.find_relation(rel.name);
        if (rel.arity == 2) {
            SearchTables::BinaryPair p;
            p.a.assign(static_cast<std::size_t>(t.n) * t.n, 0);
            p.b.assign(static_cast<std::size_t>(t.m) * t.m, 0);
            for (const auto & tup : rel.tuples)
                p.a[static_cast<std::size_t>(tup[0]) * t.n + tup[1]] = 1;
            for (const auto & tup : target->tuples)
                p.b[static_cast<std::size_t>(tup[0]) * t.m + tup[1]] = 1;
            t.binary.push_back(std::move(p));
        }
        else if (rel.arity == 1) {
            SearchTables::UnaryPair p;
            p.a.assign(static_cast<std::size_t>(t.n), 0);
            p.b.assign(static_cast<std::size_t>(t.m), 0);
            for (const auto & tup : rel.tuples)
                p.a[static_cast<std::size_t>(tup[0])] = 1;
            for (const auto & tup : target->tuples)
                p.b[static_cast<std::size_t>(tup[0])] = 1;
            t.unary.push_back(std::move(p));
        }
        else {
            SearchTables::WideRelation w;
            w.source = &rel;
            w.target = target;
            w.by_max.assign(static_cast<std::size_t>(t.n), {});
            for (const auto & tup : rel.tuples) {
                int mx = *std::max_element(tup.begin(), tup.end());
                w.by_max[static_cast<std::size_t>(mx)].push_back(&tup);
            }
            t.wide.push_back(std::move(w));
        }
    }
    return t;
}

struct Searcher {
    const SearchTables & tables;
    bool injective;
    bool reflect;
    const Structure & a;
    const Structure & b;
    MorphismKind kind;
    const std::function<bool(const FiniteMap &)> & visit;
    std::vector<int> assignment;
    bool stopped = false;

    bool unary_ok(int u, int t) const
    {
        for (const auto & p : tables.unary) {
            bool in_a = p.a[static_cast<std::size_t>(u)];
            bool in_b = p.b[static_cast<std::size_t>(t)];
            if (in_a && !in_b)
                return false;
            if (reflect && in_b && !in_a)
                return false;
        }
        for (const auto & p : tables.binary) {
            bool in_a = p.a[static_cast<std::size_t>(u) * tables.n + u];
            bool in_b = p.b[static_cast<std::size_t>(t) * tables.m + t];
            if (in_a && !in_b)
                return false;
            if (reflect && in_b && !in_a)
                return false;
        }
        return true;
    }

    bool pair_ok(int u, int t, int w, int c) const
    {
        for (const auto & p : tables.binary) {
            bool uw = p.a[static_cast<std::size_t>(u) * tables.n + w];
            bool tc = p.b[static_cast<std::size_t>(t) * tables.m + c];
            if (uw && !tc)
                return false;
            if (reflect && tc && !uw)
                return false;
            bool wu = p.a[static_cast<std::size_t>(w) * tables.n + u];
            bool ct = p.b[static_cast<std::size_t>(c) * tables.m + t];
            if (wu && !ct)
                return false;
            if (reflect && ct && !wu)
                return false;
        }
        return true;
    }

    bool wide_ok(int u) const
    {
        for (const auto & w : tables.wide) {
            for (const auto * tup : w.by_max[static_cast<std::size_t>(u)]) {
                std::vector<int> mapped(tup->size());
                for (std::size_t i = 0; i < tup->size(); ++i)
                    mapped[i] = assignment[static_cast<std::size_t>((*tup)[i])];
                if (!w.target->contains(mapped))
                    return false;
            }
        }
        return true;
    }

    void recurse(int u, const std::vector<std::vector<char>> & candidates)
    {
        if (stopped)
            return;
        if (u == tables.n) {
            FiniteMap f(tables.n, tables.m, assignment);
            if (check_morphism(a, b, f, kind)) {
                if (!visit(f))
                    stopped = true;
            }
            return;
        }
        for (int t = 0; t < tables.m && !stopped; ++t) {
            if (!candidates[static_cast<std::size_t>(u)][static_cast<std::size_t>(t)])
                continue;
            assignment[static_cast<std::size_t>(u)] = t;
            if (!wide_ok(u))
                continue;

            auto narrowed = candidates;
            bool dead = false;
            for (int w = u + 1; w < tables.n && !dead; ++w) {
                bool any = false;
                for (int c = 0; c < tables.m; ++c) {
                    auto & flag = narrowed[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)];
                    if (!flag)
                        continue;
                    if ((injective && c == t) || !pair_ok(u, t, w, c))
                        flag = 0;
                    else
                        any = true;
                }
                dead = !any;
            }
            if (!dead)
                recurse(u + 1, narrowed);
        }
    }
};

}

bool check_morphism(const Structure & a, const Structure & b, const FiniteMap & f, MorphismKind kind)
{
    require_compatible(a, b);
    require_kind_applicable(a, b, kind);
    if (f.source_size != a.domain_size || f.target_size != b.domain_size)
        throw InvalidParameter("check_morphism: map dimensions do not match the structures");

    if (!preserves_relations(a, b, f))
        return false;
    if (kind == MorphismKind::Hom)
        return true;
    if (!f.is_injective())
        return false;
    if (!reflects_relations(a, b, f))
        return false;
    if (kind == MorphismKind::Emb)
        return true;
    return f.is_surjective();
}

void for_each_morphism(const Structure & a, const Structure & b, MorphismKind kind,
                       const std::function<bool(const FiniteMap &)> & visit)
{
    require_compatible(a, b);
    require_kind_applicable(a, b, kind);

    bool needs_bijection = kind == MorphismKind::Iso || kind == MorphismKind::Aut;
    if (needs_bijection && a.domain_size != b.domain_size)
        return;
    if (a.domain_size == 0) {
        // the empty map; bijection-size filtering already happened above
        visit(FiniteMap(0, b.domain_size, {}));
        return;
    }
    if (b.domain_size == 0)
        return;

    SearchTables tables = build_tables(a, b);
    Searcher searcher{tables,
                      kind != MorphismKind::Hom,
                      kind != MorphismKind::Hom,
                      a,
                      b,
                      kind,
                      visit,
                      std::vector<int>(static_cast<std::size_t>(a.domain_size), 0)};

    std::vector<std::vector<char>> candidates(
        static_cast<std::size_t>(a.domain_size),
        std::vector<char>(static_cast<std::size_t>(b.domain_size), 1));
    for (int u = 0; u < a.domain_size; ++u)
        for (int t = 0; t < b.domain_size; ++t)
            if (!searcher.unary_ok(u, t))
                candidates[static_cast<std::size_t>(u)][static_cast<std::size_t>(t)] = 0;

    searcher.recurse(0, candidates);
}

std::optional<FiniteMap> find_morphism(const Structure & a, const Structure & b, MorphismKind kind)
{
    std::optional<FiniteMap> found;
    for_each_morphism(a, b, kind, [&](const FiniteMap & f) {
        found = f;
        return false;
    });
    return found;
}

std::vector<FiniteMap> enumerate_morphisms(const Structure & a, const Structure & b,
                                           MorphismKind kind, std::optional<std::size_t> limit)
{
    std::vector<FiniteMap> out;
    if (limit && *limit == 0)
        return out;
    for_each_morphism(a, b, kind, [&](const FiniteMap & f) {
        out.push_back(f);
        return !limit || out.size() < *limit;
    });
    return out;
}

bool is_isomorphic(const Structure & a, const Structure & b)
{
    return find_morphism(a, b, MorphismKind::Iso).has_value();
}

}
