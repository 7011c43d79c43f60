#include "endolab/structure.hpp"
#include "endolab/errors.hpp"

#include <algorithm>
#include <set>

namespace endolab {

bool operator==(const Relation & a, const Relation & b)
{
    return a.name == b.name && a.arity == b.arity && a.tuples == b.tuples;
}

bool Relation::contains(const std::vector<int> & tuple) const
{
    return std::binary_search(tuples.begin(), tuples.end(), tuple);
}

Structure Structure::make(std::string name, int domain_size, std::vector<Relation> relations)
{
    if (domain_size < 0)
        throw InvalidParameter("structure '" + name + "': negative domain size");

    std::sort(relations.begin(), relations.end(),
              [](const Relation & a, const Relation & b) { return a.name < b.name; });

    for (std::size_t i = 0; i + 1 < relations.size(); ++i)
        if (relations[i].name == relations[i + 1].name)
            throw InvalidParameter("structure '" + name + "': duplicate relation name '" +
                                   relations[i].name + "'");

    for (auto & rel : relations) {
        if (rel.arity < 1)
            throw InvalidParameter("relation '" + rel.name + "': arity must be positive");
        for (const auto & tuple : rel.tuples) {
            if (static_cast<int>(tuple.size()) != rel.arity)
                throw InvalidParameter("relation '" + rel.name + "': tuple length differs from arity");
            for (int v : tuple)
                if (v < 0 || v >= domain_size)
                    throw InvalidParameter("relation '" + rel.name + "': tuple entry " +
                                           std::to_string(v) + " out of range");
        }
        std::sort(rel.tuples.begin(), rel.tuples.end());
        rel.tuples.erase(std::unique(rel.tuples.begin(), rel.tuples.end()), rel.tuples.end());
    }

    Structure s;
    s.name = std::move(name);
    s.domain_size = domain_size;
    s.relations = std::move(relations);
    return s;
}

const Relation * Structure::find_relation(const std::string & rel_name) const
{
    for (const auto & rel : relations)
        if (rel.name == rel_name)
            return &rel;
    return nullptr;
}

bool Structure::same_signature(const Structure & other) const
{
    if (relations.size() != other.relations.size())
        return false;
    for (std::size_t i = 0; i < relations.size(); ++i)
        if (relations[i].name != other.relations[i].name ||
            relations[i].arity != other.relations[i].arity)
            return false;
    return true;
}

int encode_vertex(const VertexCode & code, int m)
{
    return 2 * m * code.copy + (code.part == +1 ? code.index : m + code.index);
}

VertexCode decode_vertex(int vertex, int m)
{
    VertexCode code;
    code.copy = vertex / (2 * m);
    int fiber = vertex % (2 * m);
    code.part = fiber < m ? +1 : -1;
    code.index = fiber < m ? fiber : fiber - m;
    return code;
}

Structure complete_bipartite(int m)
{
    if (m < 1)
        throw InvalidParameter("complete_bipartite: part size must be positive");

    Relation edges{"E", 2, {}};
    for (int u = 0; u < m; ++u)
        for (int v = m; v < 2 * m; ++v) {
            edges.tuples.push_back({u, v});
            edges.tuples.push_back({v, u});
        }
    return Structure::make("K(" + std::to_string(m) + "," + std::to_string(m) + ")", 2 * m, {edges});
}

Structure bipartite_copies(int n, int m)
{
    if (n < 1 || m < 1)
        throw InvalidParameter("bipartite_copies: parameters must be positive");

    int size = 2 * n * m;
    Relation between{"E1", 2, {}};
    Relation within{"E2", 2, {}};
    for (int u = 0; u < size; ++u) {
        VertexCode cu = decode_vertex(u, m);
        for (int v = 0; v < size; ++v) {
            VertexCode cv = decode_vertex(v, m);
            if (cu.copy != cv.copy)
                between.tuples.push_back({u, v});
            else if (cu.part != cv.part)
                within.tuples.push_back({u, v});
        }
    }
    return Structure::make("G(" + std::to_string(n) + "," + std::to_string(m) + ")", size,
                           {between, within});
}

Structure edge_copies(int n)
{
    if (n < 1)
        throw InvalidParameter("edge_copies: copy count must be positive");

    int size = 2 * n;
    Relation between{"E1", 2, {}};
    Relation within{"E2", 2, {}};
    for (int u = 0; u < size; ++u)
        for (int v = 0; v < size; ++v) {
            if (u / 2 != v / 2)
                between.tuples.push_back({u, v});
            else if (u != v)
                within.tuples.push_back({u, v});
        }
    return Structure::make("C(" + std::to_string(n) + ")", size, {between, within});
}

Structure complete_graph(int n, bool loops)
{
    if (n < 1)
        throw InvalidParameter("complete_graph: vertex count must be positive");

    Relation edges{"E", 2, {}};
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v || loops)
                edges.tuples.push_back({u, v});
    std::string name = "complete(" + std::to_string(n) + (loops ? ",loops)" : ")");
    return Structure::make(std::move(name), n, {edges});
}

Structure induced_substructure(const Structure & a, const std::vector<int> & vertices)
{
    std::set<int> chosen;
    for (int v : vertices) {
        if (v < 0 || v >= a.domain_size)
            throw InvalidParameter("induced_substructure: vertex " + std::to_string(v) +
                                   " out of range");
        chosen.insert(v);
    }

    std::vector<int> new_index(static_cast<std::size_t>(a.domain_size), -1);
    int next = 0;
    for (int v : chosen)
        new_index[static_cast<std::size_t>(v)] = next++;

    std::vector<Relation> rels;
    for (const auto & rel : a.relations) {
        Relation restricted{rel.name, rel.arity, {}};
        for (const auto & tuple : rel.tuples) {
            bool inside = std::all_of(tuple.begin(), tuple.end(), [&](int v) {
                return new_index[static_cast<std::size_t>(v)] >= 0;
            });
            if (!inside)
                continue;
            std::vector<int> mapped(tuple.size());
            for (std::size_t i = 0; i < tuple.size(); ++i)
                mapped[i] = new_index[static_cast<std::size_t>(tuple[i])];
            restricted.tuples.push_back(std::move(mapped));
        }
        rels.push_back(std::move(restricted));
    }

    std::string name = a.name + "[" + std::to_string(chosen.size()) + "]";
    return Structure::make(std::move(name), static_cast<int>(chosen.size()), std::move(rels));
}

}
