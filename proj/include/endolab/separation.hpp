#pragma once

#include "endolab/finite_map.hpp"
#include "endolab/monoid.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace endolab {

// A word term over the index window: injective coefficients xi_0..xi_k on a
// common window [0,U), coefficients[0] applied first. Evaluation threads a
// (possibly partial) injection tau through the k slots.
struct IndexWord {
    std::vector<FiniteMap> coefficients;

    explicit IndexWord(std::vector<FiniteMap> coeffs);

    int window() const { return coefficients.front().source_size; }
    int length() const { return static_cast<int>(coefficients.size()) - 1; }
};

struct IndexWordPair {
    IndexWord phi;
    IndexWord psi;

    IndexWordPair(IndexWord phi_word, IndexWord psi_word);

    int window() const { return phi.window(); }
};

// the composite value at x, or nullopt as soon as a tau-application point
// falls outside the constraint's domain
std::optional<int> eval_index_word(const IndexWord & w, const PartialInjection & tau, int x);

// same, with tau total; optionally records the tau-application points
int eval_index_word(const IndexWord & w, const FiniteMap & tau, int x,
                    std::vector<int> * applications = nullptr);

// A constraint (the partial injection) together with the witness position it
// was derived from.
struct ConstraintWitness {
    PartialInjection constraint;
    int witness = 0;
};

// Equal-length route, index-level disagreement: when the index words already
// differ at the identity, fixing the identity on the application points of
// the witness evaluation keeps every extension inside the basic set; any
// fiber component may then ride along.
ConstraintWitness index_witness_constraint(const IndexWordPair & pair);

// Equal-length route, fiber-level disagreement: the pair is over
// bipartite_copies(n,m), contains id x collapse(+1) and has equal index words
// at the identity. Derives membership of id x collapse(-1) by direct
// evaluation, then fixes the identity on the copies visited by the witness
// evaluation.
ConstraintWitness fiber_witness_constraint(const WordPair & pair, int n, int m);

// Sign bookkeeping for the fiber route: products of component signs along
// both sides at copy h (outermost coefficient excluded) and the images of the
// two base vertices under the outermost components actually applied at h.
struct SignTrace {
    int phi_sign = +1;
    int psi_sign = +1;
    std::pair<int, int> phi_outer; // (outermost phi component)(base+), (..)(base-)
    std::pair<int, int> psi_outer;
};

SignTrace sign_trace(const WordPair & pair, int n, int m, int h);

// Different-length route: extends the constraint by fresh links so that the
// two evaluations at `start` are forced through the constructed partial
// injection and end in distinct values; every total injective extension then
// lies in the basic set.
struct DenseWitness {
    PartialInjection tau_hat;
    int start = 0;            // x_0 = y_0
    std::vector<int> xs, xps; // x_0..x_k and x'_0..x'_k
    std::vector<int> ys, yps; // y_0..y_l and y'_0..y'_l
};

DenseWitness dense_witness(const IndexWord & phi, const IndexWord & psi,
                           const PartialInjection & constraint);

// a window size guaranteed sufficient for the constructions:
// constraint_size + sum over pairs of 2*(k+l+2)
int required_window(const std::vector<std::pair<int, int>> & shapes, int constraint_size);
int required_window(const std::vector<WordPair> & pairs, int constraint_size);

enum class WitnessRule { EqualLengthIndex, EqualLengthFiber, DifferentLength };

// wire tokens of the report format
std::string witness_rule_token(WitnessRule rule);

struct PairEvidence {
    WitnessRule rule = WitnessRule::EqualLengthIndex;
    int witness_index = 0;    // index or vertex the disagreement was observed at
    std::vector<int> support; // constrained window points contributed by this pair
    bool member = false;      // re-evaluated membership under the final tau
};

struct SeparationReport {
    int window = 0;
    FiniteMap tau;
    std::vector<PairEvidence> pairs;
    bool verified = false;
};

// Given basic Zariski data over bipartite_copies(n,m), each containing
// id x collapse(+1), produce a total injection tau on a possibly enlarged
// window n' >= n such that tau x collapse(-1) lies in every basic set;
// membership is re-verified by direct evaluation.
SeparationReport separate(const std::vector<WordPair> & pairs, int n, int m,
                          bool allow_enlarge = true);

// Common element of basic neighbourhoods around id x collapse(+1) and around
// id x collapse(-1): one tau x collapse(-1) inside every basic set of both
// families. Evidence lists the plus family first, then the minus family.
SeparationReport non_hausdorff_witness(const std::vector<WordPair> & pairs_plus,
                                       const std::vector<WordPair> & pairs_minus, int n, int m,
                                       bool allow_enlarge = true);

}
