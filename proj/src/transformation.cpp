#include "scstar/transformation.hpp"

#include "scstar/errors.hpp"

namespace scstar {

Transformation identity_map(int n) {
    Transformation t;
    t.n = n;
    t.images.resize(n);
    for (int q = 0; q < n; ++q) t.images[q] = q;
    return t;
}

Transformation compose(const Transformation& first, const Transformation& then) {
    if (first.n != then.n)
        throw argument_error("compose: domain sizes differ");
    Transformation r;
    r.n = first.n;
    r.images.resize(r.n);
    for (int q = 0; q < r.n; ++q) r.images[q] = then.images[first.images[q]];
    return r;
}

long long transformation_count(int n) {
    if (n < 1) throw argument_error("transformation_count: n must be positive");
    long long c = 1;
    for (int i = 0; i < n; ++i) {
        if (c > (long long)4e18 / n)
            throw capacity_error("transformation_count: n^n exceeds 64-bit range");
        c *= n;
    }
    return c;
}

Transformation nth_transformation(int n, long long index) {
    Transformation t;
    t.n = n;
    t.images.resize(n);
    for (int q = n - 1; q >= 0; --q) {
        t.images[q] = (int)(index % n);
        index /= n;
    }
    return t;
}

long long transformation_index(const Transformation& t) {
    long long idx = 0;
    for (int q = 0; q < t.n; ++q) idx = idx * t.n + t.images[q];
    return idx;
}

std::vector<Transformation> all_transformations(int n) {
    long long count = transformation_count(n);
    if (count > 100'000'000)
        throw capacity_error("all_transformations: alphabet too large to materialize");
    std::vector<Transformation> out;
    out.reserve((size_t)count);
    for (long long k = 0; k < count; ++k) out.push_back(nth_transformation(n, k));
    return out;
}

} // namespace scstar
