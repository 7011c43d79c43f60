#pragma once

#include "endolab/finite_map.hpp"
#include "endolab/structure.hpp"

#include <cstddef>
#include <vector>

namespace endolab {

// fixed base vertices of K_{m,m}: one per part
inline int base_vertex_plus(int) { return 0; }
inline int base_vertex_minus(int m) { return m; }

// +1 when the endomorphism preserves the two parts of K_{m,m}, -1 when it
// swaps them. Throws NotAnEndomorphism when s is no endomorphism of K_{m,m},
// InconsistentParts when the part discipline is broken (a non-homomorphism
// slipped through an unchecked path).
int part_sign(const FiniteMap & s, int m);

// the endomorphism of K_{m,m} collapsing each part onto a base vertex;
// sign +1 keeps the parts, sign -1 swaps them
FiniteMap part_collapse(int m, int sign);

// tau |x (s_0,...,s_{n-1}): acts on copies by tau and inside copy i by s_i
struct WreathElement {
    int n = 0;
    int m = 0;
    FiniteMap tau;                    // injective self-map of [0,n)
    std::vector<FiniteMap> components; // n endomorphisms of K_{m,m}

    friend bool operator==(const WreathElement &, const WreathElement &) = default;
};

// throws unless the invariants hold (tau injective, components endomorphisms)
void validate_wreath(const WreathElement & w);

// the induced self-map of [0,2nm): (i,x) -> (tau(i), s_i(x))
FiniteMap wreath_to_map(const WreathElement & w);

// inverse decomposition; throws NotAnEndomorphism when f is no endomorphism
// of bipartite_copies(n,m), CopySplit when some copy is torn apart (only
// possible for bad input)
WreathElement map_to_wreath(const FiniteMap & f, int n, int m);

// every wreath element over [0,n) x End(K_{m,m}); with automorphisms_only,
// components are restricted to automorphisms. Throws CapExceeded past guard.
std::vector<WreathElement> all_wreath_elements(int n, int m, bool automorphisms_only,
                                               std::size_t guard = 1u << 22);

// End(bipartite_copies(n,m)) enumerated by search equals the set of wreath
// element maps
bool check_wreath_characterization(int n, int m, std::size_t guard = 1u << 22);

}
