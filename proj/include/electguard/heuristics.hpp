#pragma once

#include <electguard/solvers.hpp>

#include <cstdint>
#include <optional>

namespace electguard {

enum class GreedyCategory : int
{
    defends = 1,
    no_defense_exists = 2,
    defense_exists = 3,
};

struct GreedyOutcome
{
    GreedyCategory category = GreedyCategory::defends;
    GroupSet strategy;
    /// Reference winner a the groups were ranked for.
    CandidateIndex focal = 0;
    /// A successful protection found by exhaustive search (category 3 only).
    std::optional<GroupSet> optimal_defense;
};

/// The k_d groups protected by greedy 1: for every rival b of the
/// lexicographically least winner a, the top k_d groups by per-group margin
/// of a over b (score difference, or D_G(a,b) under Condorcet); then the
/// k_d groups occurring in most of those lists, ties by larger summed
/// margin, then smaller index.
GroupSet greedy1_strategy(const GroupTally & tally, int k_d);

/// Greedy 1 plus classification: category 1 if its strategy defends,
/// otherwise brute-force search decides between categories 2 and 3.
GreedyOutcome greedy1(const Election & election, const VotingRule & rule, const InstanceParams & params,
    const SolverOptions & options = {});

/// Fraction of `trials` uniform k_d-subsets (seeded) that defend.
double greedy2(const Election & election, const VotingRule & rule, const InstanceParams & params, int trials,
    std::uint64_t seed, const OracleOptions & options = {});

} // namespace electguard
