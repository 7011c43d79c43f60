#pragma once

#include <compare>
#include <vector>

namespace endolab {

// A total function [0,source_size) -> [0,target_size), stored as its image
// vector. Equality and ordering are pointwise / lexicographic on the image.
struct FiniteMap {
    int source_size = 0;
    int target_size = 0;
    std::vector<int> image;

    FiniteMap() = default;
    FiniteMap(int source, int target, std::vector<int> img);

    static FiniteMap identity(int n);
    static FiniteMap constant(int n, int value);

    int operator()(int a) const { return image[static_cast<std::size_t>(a)]; }

    bool is_injective() const;
    bool is_surjective() const;
    bool is_permutation() const { return source_size == target_size && is_injective(); }

    // sorted list of values attained
    std::vector<int> image_set() const;

    friend bool operator==(const FiniteMap &, const FiniteMap &) = default;
    friend auto operator<=>(const FiniteMap & a, const FiniteMap & b)
    {
        return a.image <=> b.image;
    }
};

// (f o g)(a) = f(g(a)); compositions are written right to left.
FiniteMap compose(const FiniteMap & f, const FiniteMap & g);

}
