#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "scstar/boolop.hpp"
#include "scstar/dfa.hpp"
#include "scstar/errors.hpp"
#include "scstar/modifiers.hpp"
#include "scstar/monster.hpp"
#include "test_helpers.hpp"

using namespace scstar;
using namespace scstar::testing;

TEST_CASE("one_monster basics") {
    Dfa triv = one_monster(1, 1);
    CHECK(triv.state_count == 1);
    CHECK(triv.letter_count == 1);
    CHECK(accepts(triv, {0, 0, 0}));

    Dfa m2 = one_monster(2, 0b10);
    CHECK(m2.letter_count == 4);
    CHECK(m2.state_count == 2);
    CHECK(m2.initial == 0);
    // Letter 3 = transformation (0->1, 1->1).
    CHECK(m2.step(0, 3) == 1);

    Dfa m3 = one_monster(3, 0b100);
    CHECK(m3.letter_count == 27);
    CHECK(m3.state_count == 3);
}

TEST_CASE("one_monster is minimal for proper nonempty finals") {
    for (int n = 2; n <= 4; ++n) {
        uint64_t full = (uint64_t{1} << n) - 1;
        for (uint64_t f = 1; f < full; ++f)
            CHECK(minimize(one_monster(n, f)).state_count == n);
    }
}

TEST_CASE("monster letter codec round-trips") {
    std::vector<int> sizes{2, 3};
    long long count = monster_letter_count(sizes);
    CHECK(count == 4 * 27);
    for (long long l = 0; l < count; ++l) {
        auto parts = monster_letter_decode(sizes, l);
        REQUIRE(parts.size() == 2);
        CHECK(parts[0].n == 2);
        CHECK(parts[1].n == 3);
        CHECK(monster_letter_encode(sizes, parts) == l);
    }
}

TEST_CASE("k_monster components act on their own letter part") {
    MonsterSpec spec{{2, 2}, {0b10, 0b01}};
    auto monsters = k_monster(spec);
    REQUIRE(monsters.size() == 2);
    CHECK(monsters[0].letter_count == 16);
    CHECK(monsters[1].letter_count == 16);
    CHECK(monsters[0].state_count == 2);
    for (long long l = 0; l < 16; ++l) {
        auto parts = monster_letter_decode(spec.sizes, l);
        for (int q = 0; q < 2; ++q) {
            CHECK(monsters[0].step(q, l) == parts[0](q));
            CHECK(monsters[1].step(q, l) == parts[1](q));
        }
    }
}

TEST_CASE("star of the empty and of the full language") {
    Dfa nothing = table_dfa(2, 0, {0}, {0, 0});
    Dfa star_nothing = star_modifier(nothing);
    CHECK(accepts(star_nothing, {}));
    for (const Word& w : words_up_to(2, 4))
        if (!w.empty()) CHECK(!accepts(star_nothing, w));

    Dfa everything = table_dfa(2, 0, {1}, {0, 0});
    Dfa star_everything = star_modifier(everything);
    for (const Word& w : words_up_to(2, 4)) CHECK(accepts(star_everything, w));
}

TEST_CASE("star_modifier agrees with the splitting oracle") {
    std::mt19937_64 rng(101);
    int trials = 0;
    while (trials < 250) {
        Dfa a = random_dfa(rng, 4, 3);
        ++trials;
        Dfa st = star_modifier(a);
        for (const Word& w : words_up_to(a.letter_count, 6))
            CHECK(accepts(st, w) == star_splits(a, w));
    }
    CHECK(trials >= 200);
}

TEST_CASE("bool_modifier computes the pointwise boolean combination") {
    std::mt19937_64 rng(103);
    const BoolOp ops[] = {op_and, op_or, op_xor,
                          BoolOp{{true, true, true, false}},   // nand
                          BoolOp{{false, false, true, false}}, // andnot
                          BoolOp{{true, true, false, false}}}; // ignores b
    for (int trial = 0; trial < 40; ++trial) {
        Dfa a = random_dfa_fixed(rng, 3, 2);
        Dfa b = random_dfa_fixed(rng, 3, 2);
        for (const BoolOp& op : ops) {
            Dfa prod = bool_modifier(op, a, b);
            CHECK(prod.state_count == a.state_count * b.state_count);
            for (const Word& w : words_up_to(2, 5))
                CHECK(accepts(prod, w) == op.apply(accepts(a, w), accepts(b, w)));
        }
    }
}

TEST_CASE("bool_modifier rejects letter mismatch") {
    Dfa a = table_dfa(2, 0, {1}, {0, 0});
    Dfa b = table_dfa(3, 0, {1}, {0, 0, 0});
    CHECK_THROWS_AS(bool_modifier(op_and, a, b), argument_error);
}

TEST_CASE("stbool_direct equals star after bool, both constructions") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 40; ++trial) {
        Dfa a = random_dfa_fixed(rng, 3, 2);
        Dfa b = random_dfa_fixed(rng, 3, 2);
        Dfa composed = star_modifier(bool_modifier(op_xor, a, b));
        SubsetAutomaton full = stbool_direct(op_xor, a, b, false);
        SubsetAutomaton accessible_only = stbool_direct(op_xor, a, b, true);
        CHECK(equivalent(full.dfa, composed));
        CHECK(equivalent(accessible_only.dfa, composed));
        CHECK(minimize(accessible_only.dfa).state_count ==
              minimize(full.dfa).state_count);
    }
}

TEST_CASE("stbool on 2-monsters reproduces the published 2x2 values") {
    MonsterSpec and_spec{{2, 2}, {0b10, 0b10}};
    auto ms = k_monster(and_spec);
    CHECK(minimize(stbool_direct(op_and, ms[0], ms[1], true).dfa).state_count == 12);

    MonsterSpec xor_spec{{2, 2}, {0b10, 0b01}};
    auto xs = k_monster(xor_spec);
    CHECK(minimize(stbool_direct(op_xor, xs[0], xs[1], true).dfa).state_count == 8);
    CHECK(minimize(stbool_direct(op_or, xs[0], xs[1], true).dfa).state_count == 5);
}

TEST_CASE("star and bool modifiers pass the 1-uniformity sampler") {
    auto star_build = [](const std::vector<Dfa>& in) { return star_modifier(in[0]); };
    UniformCheck star_check = check_one_uniform(star_build, 1, 60, 6, 424242);
    CHECK(star_check.ok);

    auto xor_build = [](const std::vector<Dfa>& in) {
        return bool_modifier(op_xor, in[0], in[1]);
    };
    UniformCheck bool_check = check_one_uniform(xor_build, 2, 60, 6, 434343);
    CHECK(bool_check.ok);
}

TEST_CASE("the uniformity sampler catches a non-uniform construction") {
    // Output depends on the letter alphabet size, which no 1-uniform
    // operation may inspect.
    auto fake = [](const std::vector<Dfa>& in) {
        Dfa d = in[0];
        if (d.letter_count % 2 == 0) {
            for (auto& f : d.finals) f = !f;
        }
        return d;
    };
    UniformCheck check = check_one_uniform(fake, 1, 80, 4, 454545);
    CHECK(!check.ok);
    CHECK(check.failing_trial >= 0);
}
