#pragma once

#include "endolab/finite_map.hpp"
#include "endolab/structure.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace endolab {

// HOM: relation-preserving. EMB: injective, preserves and reflects relations.
// ISO: surjective embedding. AUT: isomorphism of a structure with itself.
enum class MorphismKind { Hom, Emb, Iso, Aut };

// true iff f satisfies the definition of the given kind between a and b.
// Throws IncompatibleSignatures when the structures disagree on relation
// names/arities, InvalidParameter on dimension mismatch or AUT across
// structurally distinct structures.
bool check_morphism(const Structure & a, const Structure & b, const FiniteMap & f, MorphismKind kind);

// Backtracking search with forward pruning on binary relations; variables in
// ascending vertex order, values ascending, so morphisms are visited in
// lexicographic image order. The visitor returns false to stop early.
void for_each_morphism(const Structure & a, const Structure & b, MorphismKind kind,
                       const std::function<bool(const FiniteMap &)> & visit);

// first morphism in the deterministic order, or nullopt
std::optional<FiniteMap> find_morphism(const Structure & a, const Structure & b, MorphismKind kind);

// all morphisms in lexicographic image order, truncated at limit if given
std::vector<FiniteMap> enumerate_morphisms(const Structure & a, const Structure & b,
                                           MorphismKind kind,
                                           std::optional<std::size_t> limit = std::nullopt);

bool is_isomorphic(const Structure & a, const Structure & b);

}
