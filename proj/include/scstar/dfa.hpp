#pragma once

#include <functional>
#include <vector>

namespace scstar {

// Complete deterministic automaton. Transitions are a function rather than a
// table so that monster-sized alphabets never have to be materialized; small
// automata wrap a flat table via table_dfa.
struct Dfa {
    long long letter_count = 0;
    int state_count = 0;
    int initial = 0;
    std::vector<char> finals; // one flag per state
    std::function<int(int state, long long letter)> step;

    bool is_final(int q) const { return finals[(size_t)q] != 0; }
};

using Word = std::vector<long long>;

// flat_table[state * letter_count + letter] = successor.
Dfa table_dfa(long long letter_count, int initial, std::vector<char> finals,
              std::vector<int> flat_table);

struct AccessibleResult {
    Dfa dfa;                      // table-backed, states renumbered in BFS order
    std::vector<int> old_to_new;  // -1 for unreachable states
};

AccessibleResult accessible(const Dfa& d);

// Coarsest partition separating finals from non-finals and closed under all
// letters (Moore refinement). Returns a block id per state; blocks are
// numbered by first appearance in state order.
std::vector<int> nerode_partition(const Dfa& d);

// Accessible part quotiented by the Nerode partition, with canonical state
// numbering by BFS from the initial state (letters in increasing order), so
// equal languages give structurally identical automata.
Dfa minimize(const Dfa& d);

bool equivalent(const Dfa& a, const Dfa& b);

bool accepts(const Dfa& d, const Word& w);

// step'(q, a) = step(q, morphism[a]); recognizes the preimage of the language
// under the letter-to-letter morphism.
Dfa preimage_dfa(const Dfa& target, const std::vector<long long>& morphism);

} // namespace scstar
