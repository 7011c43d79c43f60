#pragma once

#include "endolab/finite_map.hpp"

#include <map>
#include <optional>
#include <vector>

namespace endolab {

// A word term phi(s) = p_k s p_{k-1} s ... s p_0 in one monoid variable s.
// coefficients[0] is p_0, the innermost map, applied first; the word applies
// s exactly coefficients.size()-1 times.
struct Word {
    std::vector<FiniteMap> coefficients;

    explicit Word(std::vector<FiniteMap> coeffs);

    int map_size() const { return coefficients.front().source_size; }
    int length() const { return static_cast<int>(coefficients.size()) - 1; }
};

// The Zariski basic data: the set of monoid elements where phi and psi
// disagree. Lengths of phi and psi may differ and either may be zero.
struct WordPair {
    Word phi;
    Word psi;

    WordPair(Word phi_word, Word psi_word);

    int map_size() const { return phi.map_size(); }
};

// phi(s): the alternating composite; a length-zero word returns p_0 for
// every s.
FiniteMap eval_word(const Word & w, const FiniteMap & s);

// s lies in the basic set of the pair, i.e. phi(s) != psi(s)
bool in_zariski_set(const WordPair & pair, const FiniteMap & s);

enum class TranslationSide { Left, Right };

// Structural translation: the returned pair satisfies, for every s,
//   Left:  in_zariski_set(result, s) == in_zariski_set(pair, compose(t, s))
//   Right: in_zariski_set(result, s) == in_zariski_set(pair, compose(s, t))
WordPair translate_word_pair(const WordPair & pair, const FiniteMap & t, TranslationSide side);

// Smallest composition-closed set containing the generators and the
// identity. Throws CapExceeded when the closure grows past cap.
std::vector<FiniteMap> monoid_closure(const std::vector<FiniteMap> & generators, std::size_t cap);

// members of s_set mapping the tuple a_bar pointwise onto b_bar
std::vector<FiniteMap> pointwise_basic(const std::vector<int> & a_bar, const std::vector<int> & b_bar,
                                       const std::vector<FiniteMap> & s_set);

// An injective partial self-map of the window [0,size). The currency of the
// separation constructions: constraints, witnesses, accumulated supports.
struct PartialInjection {
    int size = 0;
    std::map<int, int> assignments;

    PartialInjection() = default;
    explicit PartialInjection(int window) : size(window) {}
    PartialInjection(int window, std::map<int, int> pairs);

    std::optional<int> apply(int x) const;
    bool defines(int x) const { return assignments.count(x) > 0; }
    bool value_taken(int y) const;

    // adds x -> y; returns false on an injectivity or consistency conflict
    bool insert(int x, int y);

    // merge-in another partial injection over the same window; false on conflict
    bool merge(const PartialInjection & other);

    // total injection extending this one, filling unassigned points in
    // ascending order with the smallest unused value
    FiniteMap extend_to_total() const;

    friend bool operator==(const PartialInjection &, const PartialInjection &) = default;
};

}
