#include "endolab/wreath.hpp"
#include "endolab/errors.hpp"
#include "endolab/search.hpp"

#include <algorithm>
#include <string>

namespace endolab {

int part_sign(const FiniteMap & s, int m)
{
    Structure kmm = complete_bipartite(m);
    if (s.source_size != 2 * m || s.target_size != 2 * m ||
        !check_morphism(kmm, kmm, s, MorphismKind::Hom))
        throw NotAnEndomorphism("part_sign: not an endomorphism of K(" + std::to_string(m) + "," +
                                std::to_string(m) + ")");

    int sign = s(0) < m ? +1 : -1;
    for (int v = 0; v < 2 * m; ++v) {
        int part = v < m ? +1 : -1;
        int image_part = s(v) < m ? +1 : -1;
        if (image_part != part * sign)
            throw InconsistentParts("part_sign: map does not act uniformly on the parts");
    }
    return sign;
}

FiniteMap part_collapse(int m, int sign)
{
    if (m < 1 || (sign != +1 && sign != -1))
        throw InvalidParameter("part_collapse: bad parameters");
    std::vector<int> img(static_cast<std::size_t>(2 * m));
    for (int v = 0; v < 2 * m; ++v) {
        int part = v < m ? +1 : -1;
        img[static_cast<std::size_t>(v)] =
            part * sign == +1 ? base_vertex_plus(m) : base_vertex_minus(m);
    }
    return FiniteMap(2 * m, 2 * m, std::move(img));
}

void validate_wreath(const WreathElement & w)
{
    if (w.n < 1 || w.m < 1)
        throw InvalidParameter("wreath element: parameters must be positive");
    if (w.tau.source_size != w.n || w.tau.target_size != w.n || !w.tau.is_injective())
        throw InvalidParameter("wreath element: tau must be an injective self-map of the copies");
    if (static_cast<int>(w.components.size()) != w.n)
        throw InvalidParameter("wreath element: one component per copy required");

    Structure kmm = complete_bipartite(w.m);
    for (const auto & s : w.components)
        if (s.source_size != 2 * w.m || s.target_size != 2 * w.m ||
            !check_morphism(kmm, kmm, s, MorphismKind::Hom))
            throw NotAnEndomorphism("wreath element: component is not an endomorphism of the fiber");
}

FiniteMap wreath_to_map(const WreathElement & w)
{
    validate_wreath(w);
    int fiber = 2 * w.m;
    std::vector<int> img(static_cast<std::size_t>(w.n) * fiber);
    for (int i = 0; i < w.n; ++i)
        for (int x = 0; x < fiber; ++x)
            img[static_cast<std::size_t>(i * fiber + x)] =
                w.tau(i) * fiber + w.components[static_cast<std::size_t>(i)](x);
    return FiniteMap(w.n * fiber, w.n * fiber, std::move(img));
}

WreathElement map_to_wreath(const FiniteMap & f, int n, int m)
{
    if (n < 1 || m < 1)
        throw InvalidParameter("map_to_wreath: parameters must be positive");
    Structure g = bipartite_copies(n, m);
    if (f.source_size != g.domain_size || f.target_size != g.domain_size ||
        !check_morphism(g, g, f, MorphismKind::Hom))
        throw NotAnEndomorphism("map_to_wreath: not an endomorphism of " + g.name);

    int fiber = 2 * m;
    WreathElement w;
    w.n = n;
    w.m = m;
    std::vector<int> tau_img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int target_copy = f(i * fiber) / fiber;
        std::vector<int> component(static_cast<std::size_t>(fiber));
        for (int x = 0; x < fiber; ++x) {
            int image = f(i * fiber + x);
            if (image / fiber != target_copy)
                throw CopySplit("map_to_wreath: copy " + std::to_string(i) +
                                " is mapped into two copies");
            component[static_cast<std::size_t>(x)] = image % fiber;
        }
        tau_img[static_cast<std::size_t>(i)] = target_copy;
        w.components.emplace_back(fiber, fiber, std::move(component));
    }
    w.tau = FiniteMap(n, n, std::move(tau_img));
    validate_wreath(w);
    return w;
}

std::vector<WreathElement> all_wreath_elements(int n, int m, bool automorphisms_only,
                                               std::size_t guard)
{
    if (n < 1 || m < 1)
        throw InvalidParameter("all_wreath_elements: parameters must be positive");

    Structure kmm = complete_bipartite(m);
    std::vector<FiniteMap> fiber_maps = enumerate_morphisms(
        kmm, kmm, automorphisms_only ? MorphismKind::Aut : MorphismKind::Hom);

    // n! * |fiber_maps|^n, saturating
    std::size_t total = 1;
    for (int i = 2; i <= n; ++i)
        total = total > guard ? total : total * static_cast<std::size_t>(i);
    for (int i = 0; i < n; ++i)
        total = total > guard ? total : total * fiber_maps.size();
    if (total > guard)
        throw CapExceeded("all_wreath_elements: size-guard exceeded");

    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        perm[static_cast<std::size_t>(i)] = i;

    std::vector<WreathElement> out;
    do {
        std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
        for (;;) {
            WreathElement w;
            w.n = n;
            w.m = m;
            w.tau = FiniteMap(n, n, perm);
            for (int i = 0; i < n; ++i)
                w.components.push_back(fiber_maps[pick[static_cast<std::size_t>(i)]]);
            out.push_back(std::move(w));

            std::size_t pos = 0;
            while (pos < pick.size() && ++pick[pos] == fiber_maps.size()) {
                pick[pos] = 0;
                ++pos;
            }
            if (pos == pick.size())
                break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool check_wreath_characterization(int n, int m, std::size_t guard)
{
    std::vector<WreathElement> elements = all_wreath_elements(n, m, false, guard);

    std::vector<FiniteMap> from_wreath;
    from_wreath.reserve(elements.size());
    for (const auto & w : elements)
        from_wreath.push_back(wreath_to_map(w));
    std::sort(from_wreath.begin(), from_wreath.end());
    from_wreath.erase(std::unique(from_wreath.begin(), from_wreath.end()), from_wreath.end());

    Structure g = bipartite_copies(n, m);
    std::vector<FiniteMap> from_search = enumerate_morphisms(g, g, MorphismKind::Hom);

    return from_wreath == from_search;
}

}
