#include <electguard/heuristics.hpp>

#include <electguard/gen.hpp>

#include <algorithm>

namespace electguard {

namespace {
    std::int64_t pair_margin(const GroupTally & tally, int g, CandidateIndex a, CandidateIndex b)
    {
        return tally.is_condorcet() ? tally.margin(g, a, b) : tally.score(g, a) - tally.score(g, b);
    }
}

GroupSet greedy1_strategy(const GroupTally & tally, int k_d)
{
    const int n = tally.group_count();
    const int m = tally.candidate_count();
    const int take = std::clamp(k_d, 0, n);
    if (take == n)
        return GroupSet::range(n);
    if (take == 0)
        return {};

    const CandidateIndex a = tally.original_outcome().front();
    std::vector<int> frequency(static_cast<std::size_t>(n), 0);
    std::vector<std::int64_t> summed(static_cast<std::size_t>(n), 0);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (CandidateIndex b = 0; b < m; ++b) {
        if (b == a)
            continue;
        for (int g = 0; g < n; ++g)
            order[static_cast<std::size_t>(g)] = g;
        std::stable_sort(order.begin(), order.end(),
            [&](int x, int y) { return pair_margin(tally, x, a, b) > pair_margin(tally, y, a, b); });
        for (int i = 0; i < take; ++i) {
            const int g = order[static_cast<std::size_t>(i)];
            ++frequency[static_cast<std::size_t>(g)];
            summed[static_cast<std::size_t>(g)] += pair_margin(tally, g, a, b);
        }
    }

    for (int g = 0; g < n; ++g)
        order[static_cast<std::size_t>(g)] = g;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        const auto ux = static_cast<std::size_t>(x);
        const auto uy = static_cast<std::size_t>(y);
        if (frequency[ux] != frequency[uy])
            return frequency[ux] > frequency[uy];
        return summed[ux] > summed[uy];
    });
    return GroupSet(std::vector<int>(order.begin(), order.begin() + take));
}

GreedyOutcome greedy1(const Election & election, const VotingRule & rule, const InstanceParams & params,
    const SolverOptions & options)
{
    params.validate(election.group_count());
    AttackOracle oracle(election, rule, options.oracle);
    GreedyOutcome out;
    out.focal = oracle.tally().original_outcome().front();
    out.strategy = greedy1_strategy(oracle.tally(), params.k_d);
    if (!oracle.find_attack(out.strategy, params.k_a))
        return out;

    const auto exact = solve_defense_brute(election, rule, params, options);
    if (exact.yes) {
        out.category = GreedyCategory::defense_exists;
        out.optimal_defense = exact.certificate;
    }
    else
        out.category = GreedyCategory::no_defense_exists;
    return out;
}

double greedy2(const Election & election, const VotingRule & rule, const InstanceParams & params, int trials,
    std::uint64_t seed, const OracleOptions & options)
{
    const int n = election.group_count();
    params.validate(n);
    if (trials < 1)
        throw InvalidArgument("greedy2 needs at least one trial");
    AttackOracle oracle(election, rule, options);
    Rng rng(seed);
    int successes = 0;
    for (int t = 0; t < trials; ++t)
        if (!oracle.find_attack(GroupSet(rng.sample(n, params.k_d)), params.k_a))
            ++successes;
    return static_cast<double>(successes) / trials;
}

} // namespace electguard
