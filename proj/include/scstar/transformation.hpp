#pragma once

#include <vector>

namespace scstar {

// A total self-map of {0..n-1}. These are the letters of monster alphabets.
struct Transformation {
    int n = 0;
    std::vector<int> images;

    int operator()(int q) const { return images[q]; }
    bool operator==(const Transformation&) const = default;
};

Transformation identity_map(int n);

// Apply `first`, then `then`: result(q) = then(first(q)).
Transformation compose(const Transformation& first, const Transformation& then);

// n^n; capacity_error when it does not fit a 64-bit signed integer.
long long transformation_count(int n);

// Lexicographic indexing by image tuple: index k has base-n digits of k as
// images, most significant digit = image of 0. This is the canonical letter
// indexing for monster alphabets.
Transformation nth_transformation(int n, long long index);
long long transformation_index(const Transformation& t);
std::vector<Transformation> all_transformations(int n);

} // namespace scstar
