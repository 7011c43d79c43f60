#include "endolab/monoid.hpp"
#include "endolab/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace endolab {

Word::Word(std::vector<FiniteMap> coeffs) : coefficients(std::move(coeffs))
{
    if (coefficients.empty())
        throw InvalidParameter("word: coefficient sequence must be nonempty");
    int n = coefficients.front().source_size;
    for (const auto & c : coefficients)
        if (c.source_size != n || c.target_size != n)
            throw DimensionMismatch("word: coefficients must be square maps of one common size");
}

WordPair::WordPair(Word phi_word, Word psi_word) : phi(std::move(phi_word)), psi(std::move(psi_word))
{
    if (phi.map_size() != psi.map_size())
        throw DimensionMismatch("word pair: phi and psi live on different map sizes");
}

FiniteMap eval_word(const Word & w, const FiniteMap & s)
{
    if (s.source_size != w.map_size() || s.target_size != w.map_size())
        throw DimensionMismatch("eval_word: s has the wrong size");
    FiniteMap value = w.coefficients.front();
    for (std::size_t j = 1; j < w.coefficients.size(); ++j)
        value = compose(w.coefficients[j], compose(s, value));
    return value;
}

bool in_zariski_set(const WordPair & pair, const FiniteMap & s)
{
    return eval_word(pair.phi, s) != eval_word(pair.psi, s);
}

namespace {

Word translate_word(const Word & w, const FiniteMap & t, TranslationSide side)
{
    std::vector<FiniteMap> coeffs = w.coefficients;
    std::size_t k = coeffs.size() - 1;
    if (side == TranslationSide::Left) {
        // phi(ts) = (p_k t) s (p_{k-1} t) s ... s (p_1 t) s p_0
        for (std::size_t j = 1; j <= k; ++j)
            coeffs[j] = compose(coeffs[j], t);
    }
    else {
        // phi(st) = p_k s (t p_{k-1}) s ... s (t p_0)
        for (std::size_t j = 0; j < k; ++j)
            coeffs[j] = compose(t, coeffs[j]);
    }
    return Word(std::move(coeffs));
}

}

WordPair translate_word_pair(const WordPair & pair, const FiniteMap & t, TranslationSide side)
{
    if (t.source_size != pair.map_size() || t.target_size != pair.map_size())
        throw DimensionMismatch("translate_word_pair: t has the wrong size");
    return WordPair(translate_word(pair.phi, t, side), translate_word(pair.psi, t, side));
}

std::vector<FiniteMap> monoid_closure(const std::vector<FiniteMap> & generators, std::size_t cap)
{
    int n = generators.empty() ? 0 : generators.front().source_size;
    for (const auto & g : generators)
        if (g.source_size != n || g.target_size != n)
            throw DimensionMismatch("monoid_closure: generators must be square maps of equal size");

    std::set<FiniteMap> closed;
    std::vector<FiniteMap> frontier;
    auto push = [&](const FiniteMap & f) {
        if (closed.insert(f).second) {
            if (closed.size() > cap)
                throw CapExceeded("monoid_closure: cap of " + std::to_string(cap) + " exceeded");
            frontier.push_back(f);
        }
    };

    push(FiniteMap::identity(n));
    for (const auto & g : generators)
        push(g);

    while (!frontier.empty()) {
        FiniteMap f = frontier.back();
        frontier.pop_back();
        // products with everything already present, both orders
        std::vector<FiniteMap> snapshot(closed.begin(), closed.end());
        for (const auto & g : snapshot) {
            push(compose(f, g));
            push(compose(g, f));
        }
    }
    return {closed.begin(), closed.end()};
}

std::vector<FiniteMap> pointwise_basic(const std::vector<int> & a_bar, const std::vector<int> & b_bar,
                                       const std::vector<FiniteMap> & s_set)
{
    if (a_bar.size() != b_bar.size())
        throw DimensionMismatch("pointwise_basic: tuples have different lengths");

    std::vector<FiniteMap> out;
    for (const auto & s : s_set) {
        for (std::size_t i = 0; i < a_bar.size(); ++i) {
            if (a_bar[i] < 0 || a_bar[i] >= s.source_size || b_bar[i] < 0 || b_bar[i] >= s.target_size)
                throw InvalidParameter("pointwise_basic: tuple entry out of range");
        }
        bool match = true;
        for (std::size_t i = 0; i < a_bar.size() && match; ++i)
            match = s(a_bar[i]) == b_bar[i];
        if (match)
            out.push_back(s);
    }
    return out;
}

PartialInjection::PartialInjection(int window, std::map<int, int> pairs)
    : size(window), assignments(std::move(pairs))
{
    std::set<int> values;
    for (const auto & [x, y] : assignments) {
        if (x < 0 || x >= size || y < 0 || y >= size)
            throw InvalidParameter("partial injection: assignment out of window");
        if (!values.insert(y).second)
            throw InvalidParameter("partial injection: value " + std::to_string(y) + " repeated");
    }
}

std::optional<int> PartialInjection::apply(int x) const
{
    auto it = assignments.find(x);
    if (it == assignments.end())
        return std::nullopt;
    return it->second;
}

bool PartialInjection::value_taken(int y) const
{
    return std::any_of(assignments.begin(), assignments.end(),
                       [y](const auto & kv) { return kv.second == y; });
}

bool PartialInjection::insert(int x, int y)
{
    if (x < 0 || x >= size || y < 0 || y >= size)
        throw InvalidParameter("partial injection: assignment out of window");
    auto it = assignments.find(x);
    if (it != assignments.end())
        return it->second == y;
    if (value_taken(y))
        return false;
    assignments.emplace(x, y);
    return true;
}

bool PartialInjection::merge(const PartialInjection & other)
{
    if (other.size != size)
        throw DimensionMismatch("partial injection: merging different windows");
    for (const auto & [x, y] : other.assignments)
        if (!insert(x, y))
            return false;
    return true;
}

FiniteMap PartialInjection::extend_to_total() const
{
    std::vector<char> used(static_cast<std::size_t>(size), 0);
    for (const auto & [x, y] : assignments)
        used[static_cast<std::size_t>(y)] = 1;

    std::vector<int> img(static_cast<std::size_t>(size));
    int fresh = 0;
    for (int x = 0; x < size; ++x) {
        if (auto y = apply(x)) {
            img[static_cast<std::size_t>(x)] = *y;
            continue;
        }
        while (used[static_cast<std::size_t>(fresh)])
            ++fresh;
        used[static_cast<std::size_t>(fresh)] = 1;
        img[static_cast<std::size_t>(x)] = fresh;
    }
    return FiniteMap(size, size, std::move(img));
}

}
