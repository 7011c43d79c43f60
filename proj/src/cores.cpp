#include "endolab/cores.hpp"
#include "endolab/errors.hpp"
#include "endolab/search.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>

namespace endolab {

namespace {

struct MinImageStats {
    int min_size = 0;
    std::vector<int> least_set; // lexicographically least image set of minimal size
    FiniteMap witness;
};

MinImageStats min_image_over_end(const Structure & a)
{
    MinImageStats stats;
    stats.min_size = a.domain_size + 1;
    for_each_morphism(a, a, MorphismKind::Hom, [&](const FiniteMap & f) {
        std::vector<int> img = f.image_set();
        int sz = static_cast<int>(img.size());
        if (sz < stats.min_size || (sz == stats.min_size && img < stats.least_set)) {
            stats.min_size = sz;
            stats.least_set = std::move(img);
            stats.witness = f;
        }
        return true;
    });
    return stats;
}

}

bool is_core(const Structure & a)
{
    bool all_autos = true;
    for_each_morphism(a, a, MorphismKind::Hom, [&](const FiniteMap & f) {
        if (!check_morphism(a, a, f, MorphismKind::Aut)) {
            all_autos = false;
            return false;
        }
        return true;
    });
    return all_autos;
}

CoreResult compute_core(const Structure & a)
{
    if (a.domain_size == 0)
        throw InvalidParameter("compute_core: empty domain");

    // greedy shrink: restrict along any endomorphism with a smaller image
    std::vector<int> current(static_cast<std::size_t>(a.domain_size));
    for (int v = 0; v < a.domain_size; ++v)
        current[static_cast<std::size_t>(v)] = v;

    for (;;) {
        Structure sub = induced_substructure(a, current);
        std::optional<FiniteMap> shrinker;
        for_each_morphism(sub, sub, MorphismKind::Hom, [&](const FiniteMap & f) {
            if (static_cast<int>(f.image_set().size()) < sub.domain_size) {
                shrinker = f;
                return false;
            }
            return true;
        });
        if (!shrinker)
            break;
        std::vector<int> next;
        for (int local : shrinker->image_set())
            next.push_back(current[static_cast<std::size_t>(local)]);
        current = std::move(next);
    }

    // certify minimality over the whole endomorphism monoid and tie-break by
    // the lexicographically least minimal image set
    MinImageStats stats = min_image_over_end(a);
    if (stats.min_size != static_cast<int>(current.size()))
        throw std::logic_error("compute_core: greedy retract disagrees with exhaustive minimum");

    CoreResult result{induced_substructure(a, stats.least_set), stats.least_set, stats.witness};
    if (!is_core(result.core))
        throw std::logic_error("compute_core: minimal retract is not a core");
    return result;
}

bool hom_equivalent(const Structure & a, const Structure & b)
{
    return find_morphism(a, b, MorphismKind::Hom).has_value() &&
           find_morphism(b, a, MorphismKind::Hom).has_value();
}

ImageBound check_image_bound(const Structure & a)
{
    MinImageStats stats = min_image_over_end(a);
    CoreResult core = compute_core(a);
    return ImageBound{stats.min_size, core.core.domain_size,
                      stats.min_size >= core.core.domain_size, stats.witness};
}

std::vector<int> mobile_core_uncovered(const Structure & a)
{
    CoreResult core = compute_core(a);
    int core_size = core.core.domain_size;

    std::set<std::vector<int>> core_images;
    for_each_morphism(a, a, MorphismKind::Hom, [&](const FiniteMap & f) {
        std::vector<int> img = f.image_set();
        if (static_cast<int>(img.size()) == core_size)
            core_images.insert(std::move(img));
        return true;
    });

    std::vector<char> covered(static_cast<std::size_t>(a.domain_size), 0);
    for (const auto & img : core_images) {
        if (!is_isomorphic(induced_substructure(a, img), core.core))
            continue;
        for (int v : img)
            covered[static_cast<std::size_t>(v)] = 1;
    }

    std::vector<int> uncovered;
    for (int v = 0; v < a.domain_size; ++v)
        if (!covered[static_cast<std::size_t>(v)])
            uncovered.push_back(v);
    return uncovered;
}

bool mobile_core_check(const Structure & a)
{
    return mobile_core_uncovered(a).empty();
}

std::vector<int> relative_orbit(const Structure & structure, int a, const std::vector<int> & y)
{
    if (a < 0 || a >= structure.domain_size)
        throw InvalidParameter("relative_orbit: vertex out of range");
    for (int v : y) {
        if (v < 0 || v >= structure.domain_size)
            throw InvalidParameter("relative_orbit: stabilised vertex out of range");
        if (v == a)
            throw InvalidParameter("relative_orbit: vertex lies in the stabilised set");
    }

    std::set<int> orbit;
    for_each_morphism(structure, structure, MorphismKind::Aut, [&](const FiniteMap & alpha) {
        bool stabilises = std::all_of(y.begin(), y.end(), [&](int v) { return alpha(v) == v; });
        if (stabilises)
            orbit.insert(alpha(a));
        return true;
    });
    return {orbit.begin(), orbit.end()};
}

bool is_transitive(const Structure & a)
{
    if (a.domain_size == 0)
        throw InvalidParameter("is_transitive: empty domain");
    return static_cast<int>(relative_orbit(a, 0, {}).size()) == a.domain_size;
}

namespace {

// all tuples over `domain` of the given arity agree (membership-wise) with
// their images: the defining property of a partial isomorphism
bool partial_iso(const Structure & a, const std::vector<int> & domain, const std::vector<int> & image)
{
    for (const auto & rel : a.relations) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(rel.arity), 0);
        for (;;) {
            std::vector<int> src(static_cast<std::size_t>(rel.arity));
            std::vector<int> dst(static_cast<std::size_t>(rel.arity));
            for (std::size_t i = 0; i < idx.size(); ++i) {
                src[i] = domain[idx[i]];
                dst[i] = image[idx[i]];
            }
            if (rel.contains(src) != rel.contains(dst))
                return false;
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == domain.size()) {
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size())
                break;
        }
    }
    return true;
}

bool extendable(const std::vector<FiniteMap> & autos, const std::vector<int> & domain,
                const std::vector<int> & image)
{
    return std::any_of(autos.begin(), autos.end(), [&](const FiniteMap & alpha) {
        for (std::size_t i = 0; i < domain.size(); ++i)
            if (alpha(domain[i]) != image[i])
                return false;
        return true;
    });
}

using PartialIso = std::pair<std::vector<int>, std::vector<int>>;

std::optional<PartialIso> nonextendable_iso(const Structure & a,
                                            const std::vector<FiniteMap> & autos, int d)
{
    std::vector<int> domain(static_cast<std::size_t>(d));
    std::vector<int> image(static_cast<std::size_t>(d));
    std::optional<PartialIso> found;

    // ascending domain tuples, arbitrary injective images
    std::function<bool(int, int)> pick_domain = [&](int slot, int from) -> bool {
        if (slot == d) {
            std::function<bool(int, std::set<int> &)> pick_image = [&](int islot,
                                                                       std::set<int> & used) -> bool {
                if (islot == d) {
                    if (partial_iso(a, domain, image) && !extendable(autos, domain, image)) {
                        found = PartialIso{domain, image};
                        return false;
                    }
                    return true;
                }
                for (int v = 0; v < a.domain_size; ++v) {
                    if (used.count(v))
                        continue;
                    image[static_cast<std::size_t>(islot)] = v;
                    used.insert(v);
                    bool ok = pick_image(islot + 1, used);
                    used.erase(v);
                    if (!ok)
                        return false;
                }
                return true;
            };
            std::set<int> used;
            return pick_image(0, used);
        }
        for (int v = from; v < a.domain_size; ++v) {
            domain[static_cast<std::size_t>(slot)] = v;
            if (!pick_domain(slot + 1, v + 1))
                return false;
        }
        return true;
    };
    pick_domain(0, 0);
    return found;
}

}

std::optional<std::pair<std::vector<int>, std::vector<int>>>
homogeneity_counterexample(const Structure & a, int size_cap)
{
    if (size_cap < 1)
        throw InvalidParameter("check_homogeneity: size cap must be positive");

    std::vector<FiniteMap> autos = enumerate_morphisms(a, a, MorphismKind::Aut);
    int max_d = std::min(size_cap, a.domain_size);
    for (int d = 1; d <= max_d; ++d)
        if (auto bad = nonextendable_iso(a, autos, d))
            return bad;
    return std::nullopt;
}

bool check_homogeneity(const Structure & a, int size_cap)
{
    return !homogeneity_counterexample(a, size_cap).has_value();
}

}
