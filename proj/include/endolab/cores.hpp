#pragma once

#include "endolab/finite_map.hpp"
#include "endolab/structure.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace endolab {

// true iff every endomorphism of a is an automorphism
bool is_core(const Structure & a);

struct CoreResult {
    Structure core;       // induced substructure of the input on `vertices`
    std::vector<int> vertices;
    FiniteMap retraction; // endomorphism of the input with image = vertices
};

// Minimal retract: shrink along non-injective endomorphisms until a core
// remains, then certify minimality against the full endomorphism monoid and
// pick the lexicographically least minimal image set.
CoreResult compute_core(const Structure & a);

// homomorphisms exist in both directions
bool hom_equivalent(const Structure & a, const Structure & b);

struct ImageBound {
    int min_image_size = 0;
    int core_size = 0;
    bool holds = false;
    FiniteMap witness; // an endomorphism attaining the minimal image
};

// minimal endomorphism image size vs core size
ImageBound check_image_bound(const Structure & a);

// vertices not covered by any endomorphism image inducing a copy of the
// core; empty iff the core is mobile
std::vector<int> mobile_core_uncovered(const Structure & a);

// every vertex lies in the image of some endomorphism whose image induces a
// copy of the core
bool mobile_core_check(const Structure & a);

// orbit of vertex a under the pointwise stabiliser of y inside Aut(A)
std::vector<int> relative_orbit(const Structure & structure, int a, const std::vector<int> & y);

bool is_transitive(const Structure & a);

// a partial isomorphism of size <= size_cap that no automorphism extends,
// as (domain tuple, image tuple); nullopt when none exists
std::optional<std::pair<std::vector<int>, std::vector<int>>>
homogeneity_counterexample(const Structure & a, int size_cap);

// every partial isomorphism on at most size_cap vertices extends to an
// automorphism
bool check_homogeneity(const Structure & a, int size_cap);

}
