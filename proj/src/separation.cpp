#include "endolab/separation.hpp"
#include "endolab/errors.hpp"
#include "endolab/wreath.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace endolab {

IndexWord::IndexWord(std::vector<FiniteMap> coeffs) : coefficients(std::move(coeffs))
{
    if (coefficients.empty())
        throw InvalidParameter("index word: coefficient sequence must be nonempty");
    int u = coefficients.front().source_size;
    for (const auto & c : coefficients) {
        if (c.source_size != u || c.target_size != u)
            throw DimensionMismatch("index word: coefficients must share one window");
        if (!c.is_injective())
            throw InvalidParameter("index word: coefficients must be injective");
    }
}

IndexWordPair::IndexWordPair(IndexWord phi_word, IndexWord psi_word)
    : phi(std::move(phi_word)), psi(std::move(psi_word))
{
    if (phi.window() != psi.window())
        throw DimensionMismatch("index word pair: windows differ");
}

std::optional<int> eval_index_word(const IndexWord & w, const PartialInjection & tau, int x)
{
    if (tau.size != w.window())
        throw DimensionMismatch("eval_index_word: constraint window differs from the word window");
    if (x < 0 || x >= w.window())
        throw InvalidParameter("eval_index_word: start point out of window");

    int v = w.coefficients.front()(x);
    for (std::size_t j = 1; j < w.coefficients.size(); ++j) {
        std::optional<int> t = tau.apply(v);
        if (!t)
            return std::nullopt;
        v = w.coefficients[j](*t);
    }
    return v;
}

int eval_index_word(const IndexWord & w, const FiniteMap & tau, int x, std::vector<int> * applications)
{
    if (tau.source_size != w.window() || tau.target_size != w.window())
        throw DimensionMismatch("eval_index_word: tau window differs from the word window");
    if (x < 0 || x >= w.window())
        throw InvalidParameter("eval_index_word: start point out of window");

    int v = w.coefficients.front()(x);
    for (std::size_t j = 1; j < w.coefficients.size(); ++j) {
        if (applications)
            applications->push_back(v);
        v = w.coefficients[j](tau(v));
    }
    return v;
}

ConstraintWitness index_witness_constraint(const IndexWordPair & pair)
{
    int k = pair.phi.length();
    if (k < 1 || pair.psi.length() != k)
        throw PreconditionViolated("index route: equal lengths k >= 1 required");

    int window = pair.window();
    FiniteMap id = FiniteMap::identity(window);

    int witness = -1;
    for (int h = 0; h < window && witness < 0; ++h)
        if (eval_index_word(pair.phi, id, h) != eval_index_word(pair.psi, id, h))
            witness = h;
    if (witness < 0)
        throw PreconditionViolated("index route: the index words agree at the identity");

    std::vector<int> applications;
    eval_index_word(pair.phi, id, witness, &applications);
    eval_index_word(pair.psi, id, witness, &applications);

    PartialInjection constraint(window);
    for (int p : applications)
        constraint.insert(p, p);
    return {std::move(constraint), witness};
}

namespace {

FiniteMap collapse_on_copies(int n, int m, const FiniteMap & tau, int sign)
{
    WreathElement w;
    w.n = n;
    w.m = m;
    w.tau = tau;
    w.components.assign(static_cast<std::size_t>(n), part_collapse(m, sign));
    return wreath_to_map(w);
}

// evaluate the word on s at one vertex, recording the copy index each time s
// is applied
int eval_word_at_traced(const Word & w, const FiniteMap & s, int vertex, int m,
                        std::vector<int> * copies)
{
    int v = w.coefficients.front()(vertex);
    for (std::size_t j = 1; j < w.coefficients.size(); ++j) {
        if (copies)
            copies->push_back(v / (2 * m));
        v = w.coefficients[j](s(v));
    }
    return v;
}

IndexWord index_word_of(const Word & w, int n, int m)
{
    std::vector<FiniteMap> taus;
    taus.reserve(w.coefficients.size());
    for (const auto & c : w.coefficients)
        taus.push_back(map_to_wreath(c, n, m).tau);
    return IndexWord(std::move(taus));
}

// shared step of the fiber route: find the least vertex where the two
// evaluations at id x collapse(-1) disagree, and fix the identity on every
// copy visited while applying s along both evaluations
std::optional<ConstraintWitness> fiber_constraint_core(const WordPair & pair, int n, int m)
{
    FiniteMap s_minus = collapse_on_copies(n, m, FiniteMap::identity(n), -1);
    FiniteMap u = eval_word(pair.phi, s_minus);
    FiniteMap v = eval_word(pair.psi, s_minus);
    if (u == v)
        return std::nullopt;

    int witness = 0;
    while (u(witness) == v(witness))
        ++witness;

    std::vector<int> copies;
    eval_word_at_traced(pair.phi, s_minus, witness, m, &copies);
    eval_word_at_traced(pair.psi, s_minus, witness, m, &copies);

    PartialInjection constraint(n);
    for (int c : copies)
        constraint.insert(c, c);
    return ConstraintWitness{std::move(constraint), witness};
}

bool tilde_words_equal_at_id(const IndexWord & phi, const IndexWord & psi)
{
    FiniteMap id = FiniteMap::identity(phi.window());
    for (int h = 0; h < phi.window(); ++h)
        if (eval_index_word(phi, id, h) != eval_index_word(psi, id, h))
            return false;
    return true;
}

}

ConstraintWitness fiber_witness_constraint(const WordPair & pair, int n, int m)
{
    int k = pair.phi.length();
    if (k < 1 || pair.psi.length() != k)
        throw PreconditionViolated("fiber route: equal lengths k >= 1 required");
    if (pair.map_size() != 2 * n * m)
        throw DimensionMismatch("fiber route: pair does not live on the given structure");

    FiniteMap s_plus = collapse_on_copies(n, m, FiniteMap::identity(n), +1);
    if (!in_zariski_set(pair, s_plus))
        throw PreconditionViolated("fiber route: the pair does not contain id x collapse(+1)");
    if (!tilde_words_equal_at_id(index_word_of(pair.phi, n, m), index_word_of(pair.psi, n, m)))
        throw PreconditionViolated("fiber route: index words differ at the identity; use the index route");

    std::optional<ConstraintWitness> cw = fiber_constraint_core(pair, n, m);
    if (!cw)
        throw std::logic_error("fiber route: id x collapse(-1) escaped the basic set");
    return *cw;
}

SignTrace sign_trace(const WordPair & pair, int n, int m, int h)
{
    if (pair.phi.length() != pair.psi.length())
        throw DimensionMismatch("sign_trace: the words have different lengths");
    if (h < 0 || h >= n)
        throw InvalidParameter("sign_trace: copy index out of window");
    if (pair.map_size() != 2 * n * m)
        throw DimensionMismatch("sign_trace: pair does not live on the given structure");

    auto trace_side = [&](const Word & w, int & sign_out, std::pair<int, int> & outer_out) {
        std::vector<WreathElement> elems;
        for (const auto & c : w.coefficients)
            elems.push_back(map_to_wreath(c, n, m));

        int sign = +1;
        int pos = h;
        for (std::size_t j = 0; j + 1 < elems.size(); ++j) {
            sign *= part_sign(elems[j].components[static_cast<std::size_t>(pos)], m);
            pos = elems[j].tau(pos);
        }
        const FiniteMap & outer = elems.back().components[static_cast<std::size_t>(pos)];
        sign_out = sign;
        outer_out = {outer(base_vertex_plus(m)), outer(base_vertex_minus(m))};
    };

    SignTrace trace;
    trace_side(pair.phi, trace.phi_sign, trace.phi_outer);
    trace_side(pair.psi, trace.psi_sign, trace.psi_outer);
    return trace;
}

DenseWitness dense_witness(const IndexWord & phi, const IndexWord & psi,
                           const PartialInjection & constraint)
{
    int k = phi.length();
    int l = psi.length();
    if (l >= k)
        throw PreconditionViolated("dense route: the first word must be strictly longer");
    int window = phi.window();
    if (psi.window() != window || constraint.size != window)
        throw DimensionMismatch("dense route: words and constraint must share the window");

    std::set<int> z_bar, w_bar;
    for (const auto & [x, y] : constraint.assignments) {
        z_bar.insert(x);
        w_bar.insert(y);
    }

    auto pick = [window](auto && admissible) -> int {
        for (int v = 0; v < window; ++v)
            if (admissible(v))
                return v;
        throw WindowTooSmall("dense route: no admissible fresh point left in the window");
    };

    const auto & xi = phi.coefficients;
    const auto & theta = psi.coefficients;

    DenseWitness w;
    int x0 = pick([&](int v) { return !z_bar.count(xi[0](v)) && !z_bar.count(theta[0](v)); });
    w.start = x0;
    w.xs = {x0};
    w.xps = {xi[0](x0)};
    w.ys = {x0};
    w.yps = {theta[0](x0)};

    std::set<int> plain = {x0};
    std::set<int> primed = {w.xps[0], w.yps[0]};

    auto plain_ok = [&](int v) { return !w_bar.count(v) && !plain.count(v); };
    auto primed_ok = [&](int v) { return !z_bar.count(v) && !primed.count(v); };

    for (int i = 1; i <= l; ++i) {
        int x_i, y_i;
        if (w.xps[static_cast<std::size_t>(i - 1)] == w.yps[static_cast<std::size_t>(i - 1)]) {
            // the previous primed points coincide, so the links must agree
            x_i = y_i = pick([&](int v) {
                return plain_ok(v) && primed_ok(xi[static_cast<std::size_t>(i)](v)) &&
                       primed_ok(theta[static_cast<std::size_t>(i)](v));
            });
        }
        else {
            x_i = pick([&](int v) {
                return plain_ok(v) && primed_ok(xi[static_cast<std::size_t>(i)](v));
            });
            y_i = pick([&](int v) {
                return v != x_i && plain_ok(v) && primed_ok(theta[static_cast<std::size_t>(i)](v));
            });
        }
        w.xs.push_back(x_i);
        w.xps.push_back(xi[static_cast<std::size_t>(i)](x_i));
        w.ys.push_back(y_i);
        w.yps.push_back(theta[static_cast<std::size_t>(i)](y_i));
        plain.insert(x_i);
        plain.insert(y_i);
        primed.insert(w.xps.back());
        primed.insert(w.yps.back());
    }

    for (int i = l + 1; i <= k; ++i) {
        int x_i = pick([&](int v) {
            return plain_ok(v) && primed_ok(xi[static_cast<std::size_t>(i)](v));
        });
        w.xs.push_back(x_i);
        w.xps.push_back(xi[static_cast<std::size_t>(i)](x_i));
        plain.insert(x_i);
        primed.insert(w.xps.back());
    }

    w.tau_hat = constraint;
    for (int j = 0; j < k; ++j)
        if (!w.tau_hat.insert(w.xps[static_cast<std::size_t>(j)], w.xs[static_cast<std::size_t>(j + 1)]))
            throw std::logic_error("dense route: x-link conflicts with the accumulated injection");
    for (int j = 0; j < l; ++j)
        if (!w.tau_hat.insert(w.yps[static_cast<std::size_t>(j)], w.ys[static_cast<std::size_t>(j + 1)]))
            throw std::logic_error("dense route: y-link conflicts with the accumulated injection");

    if (w.xps[static_cast<std::size_t>(k)] == w.yps[static_cast<std::size_t>(l)])
        throw std::logic_error("dense route: final primed points coincide");
    return w;
}

int required_window(const std::vector<std::pair<int, int>> & shapes, int constraint_size)
{
    int total = constraint_size;
    for (const auto & [k, l] : shapes)
        total += 2 * (k + l + 2);
    return total;
}

int required_window(const std::vector<WordPair> & pairs, int constraint_size)
{
    std::vector<std::pair<int, int>> shapes;
    shapes.reserve(pairs.size());
    for (const auto & p : pairs)
        shapes.emplace_back(p.phi.length(), p.psi.length());
    return required_window(shapes, constraint_size);
}

std::string witness_rule_token(WitnessRule rule)
{
    switch (rule) {
    case WitnessRule::EqualLengthIndex: return "4.5";
    case WitnessRule::EqualLengthFiber: return "4.6";
    case WitnessRule::DifferentLength: return "4.8";
    }
    throw std::logic_error("witness_rule_token: bad rule");
}

namespace {

WreathElement lift_element(const WreathElement & e, int window)
{
    WreathElement lifted;
    lifted.n = window;
    lifted.m = e.m;
    std::vector<int> tau_img(static_cast<std::size_t>(window));
    for (int i = 0; i < window; ++i)
        tau_img[static_cast<std::size_t>(i)] = i < e.n ? e.tau(i) : i;
    lifted.tau = FiniteMap(window, window, std::move(tau_img));
    lifted.components = e.components;
    lifted.components.resize(static_cast<std::size_t>(window), FiniteMap::identity(2 * e.m));
    return lifted;
}

struct PreparedPair {
    WordPair pair;        // lifted to the working window
    IndexWordPair tildes; // lifted index words
};

PreparedPair prepare_pair(const WordPair & pair, int n, int m, int window)
{
    auto lift_word = [&](const Word & word) {
        std::vector<FiniteMap> coeffs, taus;
        for (const auto & c : word.coefficients) {
            WreathElement e = lift_element(map_to_wreath(c, n, m), window);
            taus.push_back(e.tau);
            coeffs.push_back(wreath_to_map(e));
        }
        return std::pair{Word(std::move(coeffs)), IndexWord(std::move(taus))};
    };
    auto [phi, phi_tilde] = lift_word(pair.phi);
    auto [psi, psi_tilde] = lift_word(pair.psi);
    return {WordPair(std::move(phi), std::move(psi)),
            IndexWordPair(std::move(phi_tilde), std::move(psi_tilde))};
}

std::vector<int> constraint_domain(const PartialInjection & c)
{
    std::vector<int> keys;
    keys.reserve(c.assignments.size());
    for (const auto & [x, y] : c.assignments)
        keys.push_back(x);
    return keys;
}

SeparationReport synthesize(const std::vector<WordPair> & pairs, const std::vector<int> & anchors,
                            int n, int m, bool allow_enlarge)
{
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].map_size() != 2 * n * m)
            throw DimensionMismatch("separate: pair " + std::to_string(i) +
                                    " does not live on the given structure");

    // anchor membership at the original window
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        FiniteMap anchor = collapse_on_copies(n, m, FiniteMap::identity(n), anchors[i]);
        if (!in_zariski_set(pairs[i], anchor))
            throw PreconditionViolated("separate: pair " + std::to_string(i) +
                                       " does not contain id x collapse(" +
                                       (anchors[i] > 0 ? std::string("+1") : std::string("-1")) + ")");
    }

    int window = std::max(n, required_window(pairs, 0));
    if (window > n && !allow_enlarge)
        throw WindowTooSmall("separate: window " + std::to_string(n) + " is below the required " +
                             std::to_string(window) + " and enlargement is disallowed");

    std::vector<PreparedPair> prepared;
    prepared.reserve(pairs.size());
    for (const auto & p : pairs)
        prepared.push_back(prepare_pair(p, n, m, window));

    PartialInjection accumulated(window);
    std::vector<PairEvidence> evidence(pairs.size());

    // equal-length pairs first: their constraints only pin the identity and
    // can never collide; the dense constructions extend around them afterwards
    for (std::size_t i = 0; i < prepared.size(); ++i) {
        const PreparedPair & pp = prepared[i];
        int k = pp.pair.phi.length();
        if (k != pp.pair.psi.length())
            continue;

        if (k == 0) {
            // no slot for s: membership is independent of tau
            PairEvidence ev;
            const FiniteMap & p0 = pp.pair.phi.coefficients.front();
            const FiniteMap & q0 = pp.pair.psi.coefficients.front();
            const FiniteMap & p0_tilde = pp.tildes.phi.coefficients.front();
            const FiniteMap & q0_tilde = pp.tildes.psi.coefficients.front();
            if (p0_tilde != q0_tilde) {
                ev.rule = WitnessRule::EqualLengthIndex;
                ev.witness_index = 0;
                while (p0_tilde(ev.witness_index) == q0_tilde(ev.witness_index))
                    ++ev.witness_index;
            }
            else {
                ev.rule = WitnessRule::EqualLengthFiber;
                ev.witness_index = 0;
                while (p0(ev.witness_index) == q0(ev.witness_index))
                    ++ev.witness_index;
            }
            evidence[i] = std::move(ev);
            continue;
        }

        if (!tilde_words_equal_at_id(pp.tildes.phi, pp.tildes.psi)) {
            ConstraintWitness cw = index_witness_constraint(pp.tildes);
            if (!accumulated.merge(cw.constraint))
                throw std::logic_error("separate: identity constraints collided");
            evidence[i] = {WitnessRule::EqualLengthIndex, cw.witness,
                           constraint_domain(cw.constraint), false};
        }
        else {
            std::optional<ConstraintWitness> cw = fiber_constraint_core(pp.pair, window, m);
            if (!cw)
                throw std::logic_error("separate: id x collapse(-1) escaped an equal-length pair");
            if (!accumulated.merge(cw->constraint))
                throw std::logic_error("separate: identity constraints collided");
            evidence[i] = {WitnessRule::EqualLengthFiber, cw->witness,
                           constraint_domain(cw->constraint), false};
        }
    }

    for (std::size_t i = 0; i < prepared.size(); ++i) {
        const PreparedPair & pp = prepared[i];
        if (pp.pair.phi.length() == pp.pair.psi.length())
            continue;
        const IndexWord & longer =
            pp.pair.phi.length() > pp.pair.psi.length() ? pp.tildes.phi : pp.tildes.psi;
        const IndexWord & shorter =
            pp.pair.phi.length() > pp.pair.psi.length() ? pp.tildes.psi : pp.tildes.phi;

        DenseWitness dw = dense_witness(longer, shorter, accumulated);
        std::vector<int> added;
        for (const auto & [x, y] : dw.tau_hat.assignments)
            if (!accumulated.defines(x))
                added.push_back(x);
        accumulated = dw.tau_hat;
        evidence[i] = {WitnessRule::DifferentLength, dw.start, std::move(added), false};
    }

    SeparationReport report;
    report.window = window;
    report.tau = accumulated.extend_to_total();

    FiniteMap final_map = collapse_on_copies(window, m, report.tau, -1);
    report.verified = true;
    for (std::size_t i = 0; i < prepared.size(); ++i) {
        evidence[i].member = in_zariski_set(prepared[i].pair, final_map);
        report.verified = report.verified && evidence[i].member;
    }
    report.pairs = std::move(evidence);
    return report;
}

}

SeparationReport separate(const std::vector<WordPair> & pairs, int n, int m, bool allow_enlarge)
{
    return synthesize(pairs, std::vector<int>(pairs.size(), +1), n, m, allow_enlarge);
}

SeparationReport non_hausdorff_witness(const std::vector<WordPair> & pairs_plus,
                                       const std::vector<WordPair> & pairs_minus, int n, int m,
                                       bool allow_enlarge)
{
    std::vector<WordPair> all;
    all.reserve(pairs_plus.size() + pairs_minus.size());
    std::vector<int> anchors;
    for (const auto & p : pairs_plus) {
        all.push_back(p);
        anchors.push_back(+1);
    }
    for (const auto & p : pairs_minus) {
        all.push_back(p);
        anchors.push_back(-1);
    }
    return synthesize(all, anchors, n, m, allow_enlarge);
}

}
