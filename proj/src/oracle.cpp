#include <electguard/oracle.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace electguard {

namespace {
    struct Swing
    {
        std::int64_t amount;
        int group;
    };

    /// Groups with positive swing, largest first, ties by index.
    std::vector<Swing> positive_swings_sorted(const std::vector<int> & open, const std::function<std::int64_t(int)> & swing)
    {
        std::vector<Swing> out;
        for (int g : open) {
            const std::int64_t s = swing(g);
            if (s > 0)
                out.push_back({s, g});
        }
        std::sort(out.begin(), out.end(), [](const Swing & a, const Swing & b) {
            return a.amount != b.amount ? a.amount > b.amount : a.group < b.group;
        });
        return out;
    }

    /// Shortest greedy prefix of at most k_a swings whose sum reaches `gap`.
    std::optional<GroupSet> greedy_prefix(const std::vector<Swing> & swings, int k_a, std::int64_t gap)
    {
        std::int64_t acc = 0;
        std::vector<int> taken;
        if (acc >= gap)
            return GroupSet{};
        for (const auto & s : swings) {
            if (static_cast<int>(taken.size()) >= k_a)
                break;
            acc += s.amount;
            taken.push_back(s.group);
            if (acc >= gap)
                return GroupSet(std::move(taken));
        }
        return std::nullopt;
    }

    std::vector<int> open_groups(int n, const GroupSet & defended)
    {
        const auto mask = defended.mask(n);
        std::vector<int> open;
        for (int g = 0; g < n; ++g)
            if (!mask[static_cast<std::size_t>(g)])
                open.push_back(g);
        return open;
    }
}

AttackOracle::AttackOracle(const Election & election, const VotingRule & rule, OracleOptions options) :
    tally_(election, rule),
    options_(options)
{
}

std::optional<AttackWitness> AttackOracle::find_attack(const GroupSet & defended, int k_a)
{
    ++stats_.calls;
    if (k_a <= 0)
        return std::nullopt;
    const auto open = open_groups(tally_.group_count(), defended);
    if (open.empty())
        return std::nullopt;

    auto witness = tally_.is_condorcet() ? condorcet_attack(open, k_a) : scoring_attack(open, k_a);
    if (witness) {
        if (witness->deleted.empty() || static_cast<int>(witness->deleted.size()) > k_a || witness->deleted.intersects(defended)
            || tally_.outcome_without(witness->deleted) == tally_.original_outcome())
            throw std::logic_error("attack oracle produced an invalid witness " + witness->deleted.to_string());
    }
    return witness;
}

std::optional<AttackWitness> AttackOracle::scoring_attack(const std::vector<int> & open, int k_a) const
{
    const auto & winners = tally_.original_outcome();
    const int m = tally_.candidate_count();

    // Promote challenger c to at least the score of a: each deleted group
    // shifts s(a) - s(c) down by s_G(a) - s_G(c).
    auto try_pair = [&](CandidateIndex a, CandidateIndex c) -> std::optional<AttackWitness> {
        const auto swings = positive_swings_sorted(open, [&](int g) { return tally_.score(g, a) - tally_.score(g, c); });
        const std::int64_t gap = tally_.total_score(a) - tally_.total_score(c);
        if (auto picked = greedy_prefix(swings, k_a, gap))
            return AttackWitness{std::move(*picked), c};
        return std::nullopt;
    };

    if (winners.size() == 1) {
        const CandidateIndex w = winners.front();
        for (CandidateIndex c = 0; c < m; ++c)
            if (c != w)
                if (auto found = try_pair(w, c))
                    return found;
        return std::nullopt;
    }

    // Tied winners: any single group that separates two of them breaks the tie.
    for (int g : open) {
        const std::int64_t first = tally_.score(g, winners.front());
        for (std::size_t i = 1; i < winners.size(); ++i)
            if (tally_.score(g, winners[i]) != first) {
                const CandidateIndex loser = tally_.score(g, winners[i]) > first ? winners.front() : winners[i];
                return AttackWitness{GroupSet{g}, loser};
            }
    }

    // Every open group scores the tied winners equally, so they stay tied and
    // one representative suffices.
    std::vector<char> in_winners(static_cast<std::size_t>(m), 0);
    for (CandidateIndex w : winners)
        in_winners[static_cast<std::size_t>(w)] = 1;
    for (CandidateIndex c = 0; c < m; ++c)
        if (!in_winners[static_cast<std::size_t>(c)])
            if (auto found = try_pair(winners.front(), c))
                return found;
    return std::nullopt;
}

std::optional<AttackWitness> AttackOracle::condorcet_attack(const std::vector<int> & open, int k_a)
{
    const auto & outcome = tally_.original_outcome();
    const int m = tally_.candidate_count();
    if (m < 2)
        return std::nullopt;

    if (outcome.size() == 1) {
        const CandidateIndex c = outcome.front();
        for (CandidateIndex d = 0; d < m; ++d) {
            if (d == c)
                continue;
            const auto swings = positive_swings_sorted(open, [&](int g) { return tally_.margin(g, c, d); });
            if (auto picked = greedy_prefix(swings, k_a, tally_.total_margins()(c, d)))
                return AttackWitness{std::move(*picked), d};
        }
        return std::nullopt;
    }
    return create_condorcet_winner(open, k_a);
}

std::optional<AttackWitness> AttackOracle::create_condorcet_winner(const std::vector<int> & open, int k_a)
{
    ++stats_.creation_searches;
    const int m = tally_.candidate_count();
    const std::size_t u = open.size();
    const int max_size = std::min<int>(k_a, static_cast<int>(u));

    for (int budget = 1; budget <= max_size; ++budget) {
        for (CandidateIndex x = 0; x < m; ++x) {
            // need[y] = D'(x, y) over the surviving profile; success when all > 0.
            std::vector<CandidateIndex> rivals;
            for (CandidateIndex y = 0; y < m; ++y)
                if (y != x)
                    rivals.push_back(y);
            std::vector<std::int64_t> cur(rivals.size());
            for (std::size_t r = 0; r < rivals.size(); ++r)
                cur[r] = tally_.total_margins()(x, rivals[r]);
            // gain[i][r]: increase of D'(x, rivals[r]) when open[i] is deleted.
            std::vector<std::vector<std::int64_t>> gain(u, std::vector<std::int64_t>(rivals.size()));
            for (std::size_t i = 0; i < u; ++i)
                for (std::size_t r = 0; r < rivals.size(); ++r)
                    gain[i][r] = -tally_.margin(open[i], x, rivals[r]);

            std::vector<int> chosen;
            std::vector<std::int64_t> scratch;
            std::function<bool(std::size_t, int)> dfs = [&](std::size_t pos, int remaining) -> bool {
                if (++stats_.search_nodes > options_.search_cap)
                    throw ResourceLimitExceeded("Condorcet creation search exceeded " + std::to_string(options_.search_cap) + " nodes");
                bool done = !chosen.empty();
                for (std::size_t r = 0; r < rivals.size() && done; ++r)
                    done = cur[r] > 0;
                if (done)
                    return true;
                if (remaining == 0 || pos == u)
                    return false;
                // Optimistic bound: each deficient rival gets the best `remaining` gains left.
                for (std::size_t r = 0; r < rivals.size(); ++r) {
                    if (cur[r] > 0)
                        continue;
                    scratch.clear();
                    for (std::size_t i = pos; i < u; ++i)
                        if (gain[i][r] > 0)
                            scratch.push_back(gain[i][r]);
                    const std::size_t take = std::min<std::size_t>(scratch.size(), static_cast<std::size_t>(remaining));
                    std::partial_sort(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(take), scratch.end(),
                        std::greater<>());
                    std::int64_t best = 0;
                    for (std::size_t i = 0; i < take; ++i)
                        best += scratch[i];
                    if (cur[r] + best <= 0)
                        return false;
                }
                for (std::size_t r = 0; r < rivals.size(); ++r)
                    cur[r] += gain[pos][r];
                chosen.push_back(open[pos]);
                if (dfs(pos + 1, remaining - 1))
                    return true;
                chosen.pop_back();
                for (std::size_t r = 0; r < rivals.size(); ++r)
                    cur[r] -= gain[pos][r];
                return dfs(pos + 1, remaining);
            };
            if (dfs(0, budget))
                return AttackWitness{GroupSet(chosen), x};
        }
    }
    return std::nullopt;
}

std::optional<AttackWitness> scoring_attack_oracle(const Election & election, const ScoreVector & vector,
    const GroupSet & defended, int k_a)
{
    AttackOracle oracle(election, VotingRule::scoring(vector));
    return oracle.find_attack(defended, k_a);
}

std::optional<AttackWitness> condorcet_attack_oracle(const Election & election, const GroupSet & defended, int k_a,
    OracleOptions options)
{
    AttackOracle oracle(election, VotingRule::condorcet(), options);
    return oracle.find_attack(defended, k_a);
}

std::optional<AttackWitness> attack_oracle(const Election & election, const VotingRule & rule, const GroupSet & defended,
    int k_a, OracleOptions options)
{
    AttackOracle oracle(election, rule, options);
    return oracle.find_attack(defended, k_a);
}

std::optional<AttackWitness> brute_attack_oracle(const Election & election, const VotingRule & rule,
    const GroupSet & defended, int k_a, std::uint64_t cap)
{
    if (k_a <= 0)
        return std::nullopt;
    const auto open = open_groups(election.group_count(), defended);
    const int budget = std::min<int>(k_a, static_cast<int>(open.size()));
    const std::uint64_t subsets = count_subsets_up_to(static_cast<int>(open.size()), budget) - 1;
    if (subsets > cap)
        throw ResourceLimitExceeded("brute-force attack oracle needs " + std::to_string(subsets) + " subsets, cap is "
            + std::to_string(cap));

    const OutcomeSet original = winners(election, rule);
    std::optional<AttackWitness> found;
    for (int size = 1; size <= budget && !found; ++size) {
        for_each_combination(open, static_cast<std::size_t>(size), [&](const std::vector<int> & subset) {
            GroupSet deleted(subset);
            if (winners(election, rule, deleted) != original) {
                found = AttackWitness{std::move(deleted), std::nullopt};
                return true;
            }
            return false;
        });
    }
    return found;
}

bool witness_is_valid(const Election & election, const VotingRule & rule, const GroupSet & defended, int k_a,
    const AttackWitness & witness)
{
    if (static_cast<int>(witness.deleted.size()) > k_a || witness.deleted.intersects(defended))
        return false;
    for (int g : witness.deleted)
        if (g < 0 || g >= election.group_count())
            return false;
    return winners(election, rule, witness.deleted) != winners(election, rule);
}

} // namespace electguard
