#pragma once

#include <electguard/oracle.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace electguard {

struct SolveStats
{
    /// Search-tree nodes (FPT), candidate sets tried (brute, attack) or count vectors (symmetric).
    std::uint64_t nodes = 0;
    std::uint64_t oracle_calls = 0;
    std::uint64_t creation_searches = 0;
    double wall_ms = 0.0;
};

struct SolveResult
{
    bool yes = false;
    /// Protected groups for defense problems, attacked groups for attack problems.
    std::optional<GroupSet> certificate;
    SolveStats stats;
};

struct SolverOptions
{
    std::uint64_t enumeration_cap = default_enumeration_cap;
    OracleOptions oracle;
};

/// Branch-and-protect: query the oracle, and on a witness S branch over
/// protecting each member of S. At most sum_{i<=k_d} k_a^i nodes.
SolveResult solve_defense_fpt(const Election & election, const VotingRule & rule, const InstanceParams & params,
    const SolverOptions & options = {});

/// Every protected set of size 0..k_d in lexicographic order.
SolveResult solve_defense_brute(const Election & election, const VotingRule & rule, const InstanceParams & params,
    const SolverOptions & options = {});

/// Partition of group indices into classes of identical groups (equal
/// multisets of votes), ordered by smallest member.
std::vector<std::vector<int>> identical_group_classes(const Election & election);

/// Exact defense over protection counts per class of identical groups.
/// Protecting which members of a class is irrelevant, and only maximal
/// protections (min(k_d, n) groups) need to be tried.
SolveResult solve_defense_symmetric(const Election & election, const VotingRule & rule, const InstanceParams & params,
    const SolverOptions & options = {});

/// True iff for every I' subset of `attacked` with |I'| <= k_d, deleting
/// attacked \ I' changes the outcome.
bool verify_attack_set(const GroupTally & tally, const GroupSet & attacked, int k_d);
bool verify_attack_set(const Election & election, const VotingRule & rule, const GroupSet & attacked, int k_d);

/// Attack sets of size 1..k_a, ascending size then lexicographic; the first
/// that survives every defense is the certificate.
SolveResult solve_attack_exact(const Election & election, const VotingRule & rule, const InstanceParams & params,
    const SolverOptions & options = {});

} // namespace electguard
