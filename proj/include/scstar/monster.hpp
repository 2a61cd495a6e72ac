#pragma once

#include <cstdint>
#include <vector>

#include "scstar/dfa.hpp"
#include "scstar/transformation.hpp"

namespace scstar {

// Monster automata: states [[n]], alphabet all n^n self-maps of [[n]]
// (indexed per all_transformations), each letter acting as itself,
// initial state 0.
Dfa one_monster(int n, uint64_t finals_mask);

struct MonsterSpec {
    std::vector<int> sizes;
    std::vector<uint64_t> final_sets; // bitmask per component
};

// The k components share a mixed-radix letter indexing over
// (n_1^{n_1}, ..., n_k^{n_k}), most significant first; component j only
// reads part j of a letter.
std::vector<Dfa> k_monster(const MonsterSpec& spec);

// Letter codec for the shared alphabet.
long long monster_letter_count(const std::vector<int>& sizes);
std::vector<Transformation> monster_letter_decode(const std::vector<int>& sizes,
                                                  long long letter);
long long monster_letter_encode(const std::vector<int>& sizes,
                                const std::vector<Transformation>& parts);

} // namespace scstar
