#include <doctest.h>

#include <electguard/oracle.hpp>

#include "reference.hpp"

using namespace electguard;

namespace {
VoterGroup votes(std::initializer_list<std::pair<std::int64_t, std::vector<int>>> bundles)
{
    VoterGroup g;
    for (const auto & [count, order] : bundles)
        g.add(LinearOrder(order), count);
    return g;
}

std::uint32_t to_mask(const GroupSet & s)
{
    std::uint32_t m = 0;
    for (int g : s)
        m |= 1U << g;
    return m;
}
}

TEST_CASE("k_a = 0 never admits an attack")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const auto e = reference::random_election(rng, 3, 4, 3);
        for (const auto & rule : {parse_rule("plurality", 3), parse_rule("condorcet", 3)}) {
            CHECK_FALSE(attack_oracle(e, rule, {}, 0));
            CHECK_FALSE(brute_attack_oracle(e, rule, {}, 0));
        }
    }
}

TEST_CASE("monotone unanimous groups cannot be attacked")
{
    const auto g = votes({{1, {0, 1}}});
    const Election e({"a", "b"}, {g, g, g});
    CHECK_FALSE(scoring_attack_oracle(e, preset_vector("plurality", 2), {}, 2));
    CHECK_FALSE(condorcet_attack_oracle(e, {}, 2));
}

TEST_CASE("brute oracle finds the single flipping deletion")
{
    const Election e({"a", "b"}, {votes({{1, {0, 1}}}), votes({{2, {1, 0}}})});
    const auto rule = parse_rule("plurality", 2);
    const auto w = brute_attack_oracle(e, rule, {}, 1);
    REQUIRE(w);
    CHECK(w->deleted == GroupSet{1});
    CHECK(winners(e, rule, w->deleted) == OutcomeSet{0});
    CHECK(scoring_attack_oracle(e, rule.vector(), {}, 1)->deleted == GroupSet{1});
    CHECK_FALSE(brute_attack_oracle(e, rule, GroupSet{1}, 1));
}

TEST_CASE("groups that score everyone equally never change the outcome")
{
    const auto g = votes({{1, {0, 1, 2}}, {1, {1, 2, 0}}, {1, {2, 0, 1}}});
    const Election e({"a", "b", "c"}, {g, g, g, g});
    CHECK_FALSE(brute_attack_oracle(e, parse_rule("borda", 3), {}, 3));
    CHECK_FALSE(attack_oracle(e, parse_rule("borda", 3), {}, 3));
}

TEST_CASE("tied winners split by one group")
{
    const Election e({"a", "b", "c"}, {votes({{1, {0, 1, 2}}}), votes({{1, {1, 0, 2}}})});
    const auto w = attack_oracle(e, parse_rule("plurality", 3), {}, 1);
    REQUIRE(w);
    CHECK(w->deleted.size() == 1);
}

TEST_CASE("Condorcet creation search finds a winner in a cycle")
{
    const Election e({"a", "b", "c"}, {votes({{1, {0, 1, 2}}}), votes({{1, {1, 2, 0}}}), votes({{1, {2, 0, 1}}})});
    AttackOracle oracle(e, VotingRule::condorcet());
    // Two votes of a 3-cycle never yield a winner; a single vote always does.
    CHECK_FALSE(oracle.find_attack({}, 1));
    const auto w = oracle.find_attack({}, 2);
    REQUIRE(w);
    CHECK(oracle.stats().creation_searches == 2);
    CHECK(w->deleted.size() == 2);
    CHECK(winners(e, VotingRule::condorcet(), w->deleted).size() == 1);
    OracleOptions tiny;
    tiny.search_cap = 1;
    AttackOracle capped(e, VotingRule::condorcet(), tiny);
    CHECK_THROWS_AS(capped.find_attack({}, 2), ResourceLimitExceeded);
}

TEST_CASE("brute oracle refuses enumerations above the cap")
{
    std::vector<VoterGroup> groups(20, votes({{1, {0, 1}}}));
    const Election e({"a", "b"}, groups);
    CHECK_THROWS_AS(brute_attack_oracle(e, parse_rule("plurality", 2), {}, 10, 1000), ResourceLimitExceeded);
}

TEST_CASE("oracles agree with exhaustive search on random elections")
{
    std::mt19937_64 rng(2024);
    int attacks = 0;
    for (int round = 0; round < 300; ++round) {
        const int m = 2 + static_cast<int>(rng() % 3);
        const int n = 1 + static_cast<int>(rng() % 6);
        const auto e = reference::random_election(rng, m, n, 5);
        const int k_a = static_cast<int>(rng() % 4);
        std::vector<int> def;
        for (int g = 0; g < n; ++g)
            if (rng() % 4 == 0)
                def.push_back(g);
        const GroupSet defended(def);
        for (const auto & rule : {parse_rule("plurality", m), parse_rule("veto", m), parse_rule("borda", m), parse_rule("condorcet", m)}) {
            const auto fast = attack_oracle(e, rule, defended, k_a);
            const bool truth = reference::attack_exists(e, reference::entries_of(rule), to_mask(defended), k_a);
            CHECK(fast.has_value() == truth);
            CHECK(brute_attack_oracle(e, rule, defended, k_a).has_value() == truth);
            if (fast) {
                ++attacks;
                CHECK(witness_is_valid(e, rule, defended, k_a, *fast));
                // Budget monotonicity and anti-monotonicity in defense.
                CHECK(attack_oracle(e, rule, defended, k_a + 1));
            }
            else
                CHECK_FALSE(attack_oracle(e, rule, defended.unite(GroupSet{0}), k_a));
        }
    }
    CHECK(attacks > 100);
}
