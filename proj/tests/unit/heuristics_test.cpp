#include <doctest.h>

#include <electguard/gen.hpp>
#include <electguard/heuristics.hpp>

#include "reference.hpp"

using namespace electguard;

namespace {
Election small_profile(std::uint64_t seed)
{
    GenConfig c;
    c.m = 3;
    c.n = 60;
    c.g = 6;
    c.seed = seed;
    return generate_profile(c);
}
}

TEST_CASE("greedy1 with k_a = 0 or k_d = n lands in category 1")
{
    const auto e = small_profile(1);
    const auto rule = parse_rule("plurality", 3);
    const auto none = greedy1(e, rule, {0, 2});
    CHECK(none.category == GreedyCategory::defends);
    CHECK(none.strategy.size() == 2);
    const auto all = greedy1(e, rule, {6, 6});
    CHECK(all.category == GreedyCategory::defends);
    CHECK(all.strategy == GroupSet::range(6));
}

TEST_CASE("greedy1 protects the groups most favourable to the winner")
{
    // a wins; groups 1 and 3 carry a's lead over both rivals.
    std::vector<VoterGroup> groups(4);
    groups[0].add(LinearOrder({1, 0, 2}));
    groups[1].add(LinearOrder({0, 1, 2}), 3);
    groups[2].add(LinearOrder({2, 1, 0}));
    groups[3].add(LinearOrder({0, 2, 1}), 2);
    const Election e({"a", "b", "c"}, groups);
    const GroupTally tally(e, parse_rule("plurality", 3));
    CHECK(greedy1_strategy(tally, 2) == GroupSet{1, 3});
    CHECK(greedy1_strategy(tally, 0).empty());
}

TEST_CASE("greedy1 is deterministic and its categories are sound")
{
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto e = small_profile(seed);
        for (const char * name : {"plurality", "veto", "borda", "condorcet"}) {
            const auto rule = parse_rule(name, 3);
            const InstanceParams p{3, 2};
            const auto first = greedy1(e, rule, p);
            const auto again = greedy1(e, rule, p);
            CHECK(first.strategy == again.strategy);
            CHECK(first.category == again.category);
            CHECK(first.strategy.size() == 2);
            const bool exists = reference::defense_exists(e, reference::entries_of(rule), p.k_a, p.k_d);
            switch (first.category) {
            case GreedyCategory::defends:
                CHECK_FALSE(attack_oracle(e, rule, first.strategy, p.k_a));
                break;
            case GreedyCategory::no_defense_exists:
                CHECK_FALSE(exists);
                break;
            case GreedyCategory::defense_exists:
                CHECK(exists);
                REQUIRE(first.optimal_defense);
                CHECK_FALSE(attack_oracle(e, rule, *first.optimal_defense, p.k_a));
                break;
            }
        }
    }
}

TEST_CASE("greedy2 fractions: all subsets defend, none defend, reproducible")
{
    const auto e = small_profile(3);
    const auto rule = parse_rule("borda", 3);
    CHECK(greedy2(e, rule, {0, 2}, 50, 1) == doctest::Approx(1.0));
    CHECK(greedy2(e, rule, {6, 6}, 50, 1) == doctest::Approx(1.0));

    // Deleting any single group of an exact tie breaks it, so no 1-subset defends against k_a = 2.
    std::vector<VoterGroup> groups(4);
    for (int g = 0; g < 4; ++g)
        groups[static_cast<std::size_t>(g)].add(LinearOrder(g % 2 ? std::vector<int>{0, 1} : std::vector<int>{1, 0}));
    const Election tie({"a", "b"}, groups);
    CHECK(greedy2(tie, parse_rule("plurality", 2), {2, 1}, 40, 5) == doctest::Approx(0.0));

    const double x = greedy2(e, rule, {4, 2}, 64, 99);
    CHECK(x >= 0.0);
    CHECK(x <= 1.0);
    CHECK(x == greedy2(e, rule, {4, 2}, 64, 99));
}
