#include "scstar/monster.hpp"

#include "scstar/errors.hpp"

namespace scstar {

Dfa one_monster(int n, uint64_t finals_mask) {
    if (n < 1 || n > 64) throw argument_error("one_monster: n out of range");
    if (finals_mask >> n) throw argument_error("one_monster: final set out of range");
    long long letters = transformation_count(n);
    Dfa d;
    d.letter_count = letters;
    d.state_count = n;
    d.initial = 0;
    d.finals.resize(n);
    for (int q = 0; q < n; ++q) d.finals[q] = (finals_mask >> q) & 1 ? 1 : 0;
    // image of q = base-n digit q of the letter, most significant = image of 0
    std::vector<long long> pow(n);
    pow[n - 1] = 1;
    for (int q = n - 2; q >= 0; --q) pow[q] = pow[q + 1] * n;
    d.step = [n, pow](int q, long long a) { return (int)(a / pow[q] % n); };
    return d;
}

long long monster_letter_count(const std::vector<int>& sizes) {
    long long total = 1;
    for (int n : sizes) {
        long long c = transformation_count(n);
        if (total > (long long)4e18 / c)
            throw capacity_error("monster alphabet exceeds 64-bit range");
        total *= c;
    }
    return total;
}

std::vector<Transformation> monster_letter_decode(const std::vector<int>& sizes,
                                                  long long letter) {
    std::vector<Transformation> parts(sizes.size());
    for (int j = (int)sizes.size() - 1; j >= 0; --j) {
        long long c = transformation_count(sizes[j]);
        parts[j] = nth_transformation(sizes[j], letter % c);
        letter /= c;
    }
    return parts;
}

long long monster_letter_encode(const std::vector<int>& sizes,
                                const std::vector<Transformation>& parts) {
    if (sizes.size() != parts.size())
        throw argument_error("monster_letter_encode: arity mismatch");
    long long letter = 0;
    for (size_t j = 0; j < sizes.size(); ++j) {
        if (parts[j].n != sizes[j])
            throw argument_error("monster_letter_encode: part size mismatch");
        letter = letter * transformation_count(sizes[j]) + transformation_index(parts[j]);
    }
    return letter;
}

std::vector<Dfa> k_monster(const MonsterSpec& spec) {
    if (spec.sizes.size() != spec.final_sets.size())
        throw argument_error("k_monster: sizes and final sets differ in length");
    long long letters = monster_letter_count(spec.sizes);
    std::vector<Dfa> out;
    const size_t k = spec.sizes.size();
    // Radix of everything strictly after component j.
    std::vector<long long> suffix(k, 1);
    for (size_t j = k; j-- > 1;)
        suffix[j - 1] = suffix[j] * transformation_count(spec.sizes[j]);

    for (size_t j = 0; j < k; ++j) {
        int n = spec.sizes[j];
        uint64_t fm = spec.final_sets[j];
        if (fm >> n) throw argument_error("k_monster: final set out of range");
        Dfa d;
        d.letter_count = letters;
        d.state_count = n;
        d.initial = 0;
        d.finals.resize(n);
        for (int q = 0; q < n; ++q) d.finals[q] = (fm >> q) & 1 ? 1 : 0;
        long long div = suffix[j];
        long long mod = transformation_count(n);
        std::vector<long long> pow(n);
        pow[n - 1] = 1;
        for (int q = n - 2; q >= 0; --q) pow[q] = pow[q + 1] * n;
        d.step = [div, mod, n, pow](int q, long long a) {
            long long part = a / div % mod;
            return (int)(part / pow[q] % n);
        };
        out.push_back(std::move(d));
    }
    return out;
}

} // namespace scstar
