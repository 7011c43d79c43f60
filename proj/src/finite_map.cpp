#include "endolab/finite_map.hpp"
#include "endolab/errors.hpp"

#include <algorithm>
#include <string>

namespace endolab {

FiniteMap::FiniteMap(int source, int target, std::vector<int> img)
    : source_size(source), target_size(target), image(std::move(img))
{
    if (source_size < 0 || target_size < 0)
        throw InvalidParameter("FiniteMap: negative size");
    if (static_cast<int>(image.size()) != source_size)
        throw InvalidParameter("FiniteMap: image length " + std::to_string(image.size()) +
                               " does not match source size " + std::to_string(source_size));
    for (int v : image)
        if (v < 0 || v >= target_size)
            throw InvalidParameter("FiniteMap: image entry " + std::to_string(v) + " out of range");
}

FiniteMap FiniteMap::identity(int n)
{
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        img[static_cast<std::size_t>(i)] = i;
    return FiniteMap(n, n, std::move(img));
}

FiniteMap FiniteMap::constant(int n, int value)
{
    return FiniteMap(n, n, std::vector<int>(static_cast<std::size_t>(n), value));
}

bool FiniteMap::is_injective() const
{
    std::vector<char> seen(static_cast<std::size_t>(target_size), 0);
    for (int v : image) {
        if (seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

bool FiniteMap::is_surjective() const
{
    std::vector<char> seen(static_cast<std::size_t>(target_size), 0);
    for (int v : image)
        seen[static_cast<std::size_t>(v)] = 1;
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::vector<int> FiniteMap::image_set() const
{
    std::vector<int> vals = image;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

FiniteMap compose(const FiniteMap & f, const FiniteMap & g)
{
    if (g.target_size != f.source_size)
        throw DimensionMismatch("compose: inner target size " + std::to_string(g.target_size) +
                                " differs from outer source size " + std::to_string(f.source_size));
    std::vector<int> img(static_cast<std::size_t>(g.source_size));
    for (int a = 0; a < g.source_size; ++a)
        img[static_cast<std::size_t>(a)] = f(g(a));
    return FiniteMap(g.source_size, f.target_size, std::move(img));
}

}
