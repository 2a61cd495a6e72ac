#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scstar/boolop.hpp"
#include "scstar/dfa.hpp"

namespace scstar {

// Subset construction for the Kleene star: states are all subsets of Q,
// initial is the empty set, finals are the sets meeting F plus the empty set.
// The empty set maps through the image of the initial state; whenever an
// image meets F the initial state is re-added.
Dfa star_modifier(const Dfa& a);

// Product automaton with finals (F1 x Q2) op (Q1 x F2);
// state (q1,q2) is encoded q1*|Q2|+q2.
Dfa bool_modifier(const BoolOp& op, const Dfa& a, const Dfa& b);

struct SubsetAutomaton {
    Dfa dfa;
    // For the accessible construction, subset bitmask per state index
    // (pair (q1,q2) at bit q1*|Q2|+q2); empty for the full construction,
    // where the state index is the bitmask itself.
    std::vector<uint64_t> subsets;
};

// Star of the Boolean combination, built directly on subsets of Q1 x Q2.
// With accessible_only, states are discovered by BFS from the empty set and
// max_states bounds the exploration.
SubsetAutomaton stbool_direct(const BoolOp& op, const Dfa& a, const Dfa& b,
                              bool accessible_only, long long max_states = 1'000'000);

struct UniformCheck {
    bool ok = true;
    int failing_trial = -1;
    std::string detail;
};

// Empirical 1-uniformity test: sample input automata over a random alphabet,
// a random letter-to-letter morphism, and compare building-then-preimaging
// with preimaging-then-building on all words up to word_bound.
UniformCheck check_one_uniform(
    const std::function<Dfa(const std::vector<Dfa>&)>& build, int arity,
    int trials, int word_bound, uint64_t seed);

} // namespace scstar
