#pragma once

#include <string>
#include <vector>

namespace endolab {

// One named relation: a set of ordered tuples of fixed arity. Tuples are kept
// sorted and deduplicated, so relations compare and serialise canonically.
struct Relation {
    std::string name;
    int arity = 0;
    std::vector<std::vector<int>> tuples;

    bool contains(const std::vector<int> & tuple) const;
};

// A finite relational structure: domain {0,...,domain_size-1} plus named
// relations. Immutable after construction; safe to share across threads.
// The name is a display label and takes no part in equality.
struct Structure {
    std::string name;
    int domain_size = 0;
    std::vector<Relation> relations; // sorted by name, names unique

    static Structure make(std::string name, int domain_size, std::vector<Relation> relations);

    const Relation * find_relation(const std::string & rel_name) const;

    // true when both structures declare the same relation names with the
    // same arities (the precondition for morphism checks)
    bool same_signature(const Structure & other) const;

    friend bool operator==(const Structure & a, const Structure & b)
    {
        return a.domain_size == b.domain_size && a.relations == b.relations;
    }
};

bool operator==(const Relation & a, const Relation & b);

// Vertex codec for the layered structures below: copy i in [0,n), part
// e in {+1,-1}, index j in [0,m) <-> flat vertex 2m*i + (j or m+j).
struct VertexCode {
    int copy = 0;
    int part = +1;
    int index = 0;

    friend bool operator==(const VertexCode &, const VertexCode &) = default;
};

int encode_vertex(const VertexCode & code, int m);
VertexCode decode_vertex(int vertex, int m);

// K_{m,m}: complete bipartite graph with parts {0..m-1} and {m..2m-1},
// single symmetric irreflexive relation E.
Structure complete_bipartite(int m);

// n copies of K_{m,m}; E1 joins every pair of vertices in distinct copies,
// E2 is the bipartite edge relation within each copy.
Structure bipartite_copies(int n, int m);

// n copies of a single edge joined completely across copies: the structure
// bipartite_copies(n, m) induces on the base vertices {(i, e, 0)}.
Structure edge_copies(int n);

// complete graph on n vertices, reflexive pairs included iff loops
Structure complete_graph(int n, bool loops);

// substructure on the vertex set `vertices`, re-indexed order-preservingly
// onto {0..|vertices|-1}
Structure induced_substructure(const Structure & a, const std::vector<int> & vertices);

}
