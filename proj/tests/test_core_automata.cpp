#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "scstar/dfa.hpp"
#include "scstar/errors.hpp"
#include "scstar/monster.hpp"
#include "scstar/transformation.hpp"
#include "test_helpers.hpp"

using namespace scstar;
using namespace scstar::testing;

namespace {

bool isomorphic(const Dfa& a, const Dfa& b) {
    // Both sides come out of minimize, whose canonical BFS numbering makes
    // isomorphism a structural equality check.
    if (a.letter_count != b.letter_count || a.state_count != b.state_count ||
        a.initial != b.initial || a.finals != b.finals)
        return false;
    for (int q = 0; q < a.state_count; ++q)
        for (long long l = 0; l < a.letter_count; ++l)
            if (a.step(q, l) != b.step(q, l)) return false;
    return true;
}

} // namespace

TEST_CASE("transformation composition applies the left factor first") {
    Transformation f{3, {1, 2, 0}};
    Transformation g{3, {0, 0, 2}};
    Transformation h = compose(f, g);
    for (int q = 0; q < 3; ++q) CHECK(h(q) == g(f(q)));
}

TEST_CASE("transformation indexing is lexicographic and round-trips") {
    CHECK(transformation_count(2) == 4);
    CHECK(transformation_count(3) == 27);
    CHECK(nth_transformation(2, 0).images == std::vector<int>{0, 0});
    CHECK(nth_transformation(2, 1).images == std::vector<int>{0, 1});
    CHECK(nth_transformation(2, 2).images == std::vector<int>{1, 0});
    for (int n = 1; n <= 3; ++n)
        for (long long k = 0; k < transformation_count(n); ++k)
            CHECK(transformation_index(nth_transformation(n, k)) == k);
    CHECK((int)all_transformations(3).size() == 27);
    CHECK_THROWS_AS(transformation_count(40), capacity_error);
}

TEST_CASE("word action over a word equals the composed single letter") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + (int)(rng() % 3);
        Transformation acc = identity_map(n);
        Dfa mon = one_monster(n, 1);
        std::vector<int> direct(n);
        for (int q = 0; q < n; ++q) direct[q] = q;
        for (int step = 0; step < 4; ++step) {
            long long letter = (long long)(rng() % (uint64_t)transformation_count(n));
            acc = compose(acc, nth_transformation(n, letter));
            for (int q = 0; q < n; ++q) direct[q] = mon.step(direct[q], letter);
        }
        for (int q = 0; q < n; ++q) CHECK(direct[q] == acc(q));
    }
}

TEST_CASE("minimize is idempotent on random automata") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Dfa a = random_dfa(rng, 6, 4);
        Dfa m1 = minimize(a);
        Dfa m2 = minimize(m1);
        CHECK(isomorphic(m1, m2));
    }
}

TEST_CASE("minimize shrinks and preserves the language") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        Dfa a = random_dfa(rng, 5, 3);
        Dfa m = minimize(a);
        CHECK(m.state_count <= a.state_count);
        for (const Word& w : words_up_to(a.letter_count, 6))
            CHECK(accepts(a, w) == accepts(m, w));
    }
}

TEST_CASE("equivalent matches bounded-word agreement on random pairs") {
    std::mt19937_64 rng(17);
    int disagreements = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Dfa a = random_dfa_fixed(rng, 4, 2);
        Dfa b = random_dfa_fixed(rng, 4, 2);
        bool eq = equivalent(a, b);
        bool words_agree = true;
        for (const Word& w : words_up_to(2, 7))
            if (accepts(a, w) != accepts(b, w)) {
                words_agree = false;
                break;
            }
        // Distinguishing words for <=4-state automata fit well within bound 7.
        CHECK(eq == words_agree);
        if (!eq) ++disagreements;
    }
    CHECK(disagreements > 0); // the sample is not degenerate
}

TEST_CASE("nerode blocks are the fibers of minimization") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        Dfa a = random_dfa(rng, 5, 3);
        auto acc = accessible(a);
        std::vector<int> block = nerode_partition(acc.dfa);
        // Two accessible states share a block iff their right languages agree
        // on all short words (enough at these sizes).
        auto words = words_up_to(a.letter_count, 6);
        for (int q1 = 0; q1 < acc.dfa.state_count; ++q1)
            for (int q2 = q1 + 1; q2 < acc.dfa.state_count; ++q2) {
                bool same_lang = true;
                for (const Word& w : words) {
                    int r1 = q1, r2 = q2;
                    for (long long l : w) {
                        r1 = acc.dfa.step(r1, l);
                        r2 = acc.dfa.step(r2, l);
                    }
                    if (acc.dfa.is_final(r1) != acc.dfa.is_final(r2)) {
                        same_lang = false;
                        break;
                    }
                }
                CHECK((block[(size_t)q1] == block[(size_t)q2]) == same_lang);
            }
    }
}

TEST_CASE("preimage never increases state complexity") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 80; ++trial) {
        Dfa a = random_dfa(rng, 5, 3);
        std::vector<long long> morphism(3);
        for (auto& v : morphism) v = (long long)(rng() % (uint64_t)a.letter_count);
        Dfa pre = preimage_dfa(a, morphism);
        CHECK(minimize(pre).state_count <= minimize(a).state_count);
        for (const Word& w : words_up_to(3, 5)) {
            Word mapped;
            for (long long l : w) mapped.push_back(morphism[(size_t)l]);
            CHECK(accepts(pre, w) == accepts(a, mapped));
        }
    }
}

TEST_CASE("restriction-renaming recovers any automaton from a monster") {
    std::mt19937_64 rng(29);
    int trials = 0;
    while (trials < 120) {
        Dfa a = random_dfa(rng, 4, 3);
        ++trials;
        int n = a.state_count;
        uint64_t fmask = 0;
        for (int q = 0; q < n; ++q)
            if (a.is_final(q)) fmask |= uint64_t{1} << q;
        Dfa mon = one_monster(n, fmask);
        // Shift so the monster's initial state 0 matches a's initial.
        std::vector<long long> morphism((size_t)a.letter_count);
        for (long long l = 0; l < a.letter_count; ++l) {
            Transformation t{n, std::vector<int>(n)};
            for (int q = 0; q < n; ++q) t.images[(size_t)q] = a.step(q, l);
            morphism[(size_t)l] = transformation_index(t);
        }
        Dfa renamed = preimage_dfa(mon, morphism);
        renamed.initial = a.initial;
        CHECK(equivalent(renamed, a));
    }
    CHECK(trials >= 100);
}

TEST_CASE("accessible prunes and renumbers by BFS") {
    // Two reachable states, one sink never reached.
    Dfa a = table_dfa(1, 0, {0, 1, 1}, {1, 0, 2});
    auto acc = accessible(a);
    CHECK(acc.dfa.state_count == 2);
    CHECK(acc.old_to_new[2] == -1);
    CHECK(acc.dfa.initial == 0);
}
