#pragma once

#include <electguard/rules.hpp>

#include <cstdint>
#include <optional>

namespace electguard {

/// A set of undefended groups whose deletion changes the winner set.
struct AttackWitness
{
    GroupSet deleted;
    /// Candidate whose relative standing flips (the promoted challenger, the
    /// candidate that stops being beaten, or the newly created Condorcet winner).
    std::optional<CandidateIndex> challenger;

    friend bool operator==(const AttackWitness &, const AttackWitness &) = default;
};

struct OracleOptions
{
    /// Node cap for the exhaustive Condorcet "create a winner" search and
    /// subset cap for the brute-force oracle.
    std::uint64_t search_cap = default_enumeration_cap;
};

struct OracleStats
{
    std::uint64_t calls = 0;
    /// Calls that fell back to the exhaustive Condorcet creation search.
    std::uint64_t creation_searches = 0;
    std::uint64_t search_nodes = 0;
};

/// Polynomial attack oracle for one election and rule, with per-group tallies
/// precomputed once. Scoring rules use pairwise greedy swings; Condorcet uses
/// the same greedy when a Condorcet winner exists and bounded DFS otherwise.
class AttackOracle
{
public:
    AttackOracle(const Election & election, const VotingRule & rule, OracleOptions options = {});

    /// Some deletion of at most k_a groups outside `defended` that changes the
    /// outcome, or nullopt if none exists. Returned witnesses are re-verified.
    std::optional<AttackWitness> find_attack(const GroupSet & defended, int k_a);

    const GroupTally & tally() const { return tally_; }
    const OracleStats & stats() const { return stats_; }
    int group_count() const { return tally_.group_count(); }

private:
    std::optional<AttackWitness> scoring_attack(const std::vector<int> & open, int k_a) const;
    std::optional<AttackWitness> condorcet_attack(const std::vector<int> & open, int k_a);
    std::optional<AttackWitness> create_condorcet_winner(const std::vector<int> & open, int k_a);

    GroupTally tally_;
    OracleOptions options_;
    OracleStats stats_;
};

std::optional<AttackWitness> scoring_attack_oracle(const Election & election, const ScoreVector & vector,
    const GroupSet & defended, int k_a);
std::optional<AttackWitness> condorcet_attack_oracle(const Election & election, const GroupSet & defended, int k_a,
    OracleOptions options = {});
std::optional<AttackWitness> attack_oracle(const Election & election, const VotingRule & rule, const GroupSet & defended,
    int k_a, OracleOptions options = {});

/// Reference oracle: tries every deletion of 1..k_a undefended groups, by size
/// then lexicographically, evaluating each from the raw votes. Throws
/// ResourceLimitExceeded if the number of subsets exceeds `cap`.
std::optional<AttackWitness> brute_attack_oracle(const Election & election, const VotingRule & rule,
    const GroupSet & defended, int k_a, std::uint64_t cap = default_enumeration_cap);

/// True iff applying the witness to the election changes the outcome and it
/// respects the defended set and budget.
bool witness_is_valid(const Election & election, const VotingRule & rule, const GroupSet & defended, int k_a,
    const AttackWitness & witness);

} // namespace electguard
