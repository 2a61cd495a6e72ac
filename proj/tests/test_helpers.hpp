#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "scstar/dfa.hpp"

namespace scstar::testing {

// Deterministic random complete DFA with exactly `letters` letters.
inline Dfa random_dfa_fixed(std::mt19937_64& rng, int max_states, int letters) {
    std::uniform_int_distribution<int> sdist(1, max_states);
    int states = sdist(rng);
    std::uniform_int_distribution<int> qdist(0, states - 1);
    std::vector<int> table((size_t)states * (size_t)letters);
    for (auto& v : table) v = qdist(rng);
    std::vector<char> finals((size_t)states);
    for (auto& f : finals) f = (char)(rng() & 1);
    return table_dfa(letters, qdist(rng), std::move(finals), std::move(table));
}

// Same, with a random alphabet size between 1 and max_letters.
inline Dfa random_dfa(std::mt19937_64& rng, int max_states, int max_letters) {
    std::uniform_int_distribution<int> ldist(1, max_letters);
    return random_dfa_fixed(rng, max_states, ldist(rng));
}

// All words over [[letters]] of length <= bound, shortest first.
inline std::vector<Word> words_up_to(long long letters, int bound) {
    std::vector<Word> out{{}};
    size_t begin = 0;
    for (int len = 1; len <= bound; ++len) {
        size_t end = out.size();
        for (size_t k = begin; k < end; ++k)
            for (long long a = 0; a < letters; ++a) {
                Word w = out[k];
                w.push_back(a);
                out.push_back(std::move(w));
            }
        begin = end;
    }
    return out;
}

// Membership of w in L(a)* by dynamic programming over block splits.
inline bool star_splits(const Dfa& a, const Word& w) {
    size_t len = w.size();
    std::vector<char> reach(len + 1, 0);
    reach[0] = 1;
    for (size_t i = 0; i < len; ++i) {
        if (!reach[i]) continue;
        int q = a.initial;
        for (size_t j = i; j < len; ++j) {
            q = a.step(q, w[j]);
            if (a.is_final(q)) reach[j + 1] = 1;
        }
    }
    return reach[len] != 0;
}

} // namespace scstar::testing
