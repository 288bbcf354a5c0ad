#include <electguard/solvers.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

namespace electguard {

namespace {
    class Stopwatch
    {
    public:
        Stopwatch() : start_(std::chrono::steady_clock::now()) {}
        double elapsed_ms() const
        {
            return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        }

    private:
        std::chrono::steady_clock::time_point start_;
    };

    void check_cap(std::uint64_t needed, std::uint64_t cap, const char * what)
    {
        if (needed > cap)
            throw ResourceLimitExceeded(std::string(what) + " needs " + std::to_string(needed) + " candidate sets, cap is "
                + std::to_string(cap));
    }

    struct BundleListLess
    {
        bool operator()(const std::vector<VoteBundle> & a, const std::vector<VoteBundle> & b) const
        {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const VoteBundle & x, const VoteBundle & y) {
                return x.order != y.order ? x.order < y.order : x.count < y.count;
            });
        }
    };

    void absorb(SolveStats & stats, const AttackOracle & oracle)
    {
        stats.oracle_calls = oracle.stats().calls;
        stats.creation_searches = oracle.stats().creation_searches;
    }
}

SolveResult solve_defense_fpt(const Election & election, const VotingRule & rule, const InstanceParams & params,
    const SolverOptions & options)
{
    params.validate(election.group_count());
    Stopwatch clock;
    AttackOracle oracle(election, rule, options.oracle);
    SolveResult result;

    std::function<std::optional<GroupSet>(GroupSet &, int)> search = [&](GroupSet & protect, int budget) -> std::optional<GroupSet> {
        ++result.stats.nodes;
        const auto witness = oracle.find_attack(protect, params.k_a);
        if (!witness)
            return protect;
        if (budget == 0)
            return std::nullopt;
        for (int g : witness->deleted) {
            protect.insert(g);
            if (auto found = search(protect, budget - 1))
                return found;
            protect.erase(g);
        }
        return std::nullopt;
    };

    GroupSet protect;
    result.certificate = search(protect, params.k_d);
    result.yes = result.certificate.has_value();
    absorb(result.stats, oracle);
    result.stats.wall_ms = clock.elapsed_ms();
    return result;
}

SolveResult solve_defense_brute(const Election & election, const VotingRule & rule, const InstanceParams & params,
    const SolverOptions & options)
{
    const int n = election.group_count();
    params.validate(n);
    check_cap(count_subsets_up_to(n, params.k_d), options.enumeration_cap, "brute-force defense");
    Stopwatch clock;
    AttackOracle oracle(election, rule, options.oracle);
    SolveResult result;

    const auto pool = GroupSet::range(n).items();
    for (int size = 0; size <= params.k_d && !result.yes; ++size) {
        for_each_combination(pool, static_cast<std::size_t>(size), [&](const std::vector<int> & chosen) {
            ++result.stats.nodes;
            GroupSet protect(chosen);
            if (!oracle.find_attack(protect, params.k_a)) {
                result.yes = true;
                result.certificate = std::move(protect);
                return true;
            }
            return false;
        });
    }
    absorb(result.stats, oracle);
    result.stats.wall_ms = clock.elapsed_ms();
    return result;
}

std::vector<std::vector<int>> identical_group_classes(const Election & election)
{
    std::map<std::vector<VoteBundle>, std::size_t, BundleListLess> index;
    std::vector<std::vector<int>> classes;
    for (int g = 0; g < election.group_count(); ++g) {
        auto key = election.group(g).canonical_bundles();
        auto [it, fresh] = index.emplace(std::move(key), classes.size());
        if (fresh)
            classes.emplace_back();
        classes[it->second].push_back(g);
    }
    return classes;
}

SolveResult solve_defense_symmetric(const Election & election, const VotingRule & rule, const InstanceParams & params,
    const SolverOptions & options)
{
    const int n = election.group_count();
    params.validate(n);
    Stopwatch clock;
    AttackOracle oracle(election, rule, options.oracle);
    const auto classes = identical_group_classes(election);
    const int target = std::min(params.k_d, n);
    SolveResult result;

    // suffix[i]: groups available in classes i.. ; lets the recursion place exactly `target`.
    std::vector<int> suffix(classes.size() + 1, 0);
    for (std::size_t i = classes.size(); i-- > 0;)
        suffix[i] = suffix[i + 1] + static_cast<int>(classes[i].size());

    std::vector<int> counts(classes.size(), 0);
    std::function<bool(std::size_t, int)> place = [&](std::size_t i, int left) -> bool {
        if (i == classes.size()) {
            if (++result.stats.nodes > options.enumeration_cap)
                throw ResourceLimitExceeded("symmetric defense exceeded " + std::to_string(options.enumeration_cap) + " count vectors");
            GroupSet protect;
            for (std::size_t c = 0; c < classes.size(); ++c)
                for (int j = 0; j < counts[c]; ++j)
                    protect.insert(classes[c][static_cast<std::size_t>(j)]);
            if (!oracle.find_attack(protect, params.k_a)) {
                result.certificate = std::move(protect);
                return true;
            }
            return false;
        }
        const int size = static_cast<int>(classes[i].size());
        const int low = std::max(0, left - suffix[i + 1]);
        for (int take = std::min(size, left); take >= low; --take) {
            counts[i] = take;
            if (place(i + 1, left - take))
                return true;
        }
        counts[i] = 0;
        return false;
    };

    result.yes = place(0, target);
    absorb(result.stats, oracle);
    result.stats.wall_ms = clock.elapsed_ms();
    return result;
}

bool verify_attack_set(const GroupTally & tally, const GroupSet & attacked, int k_d)
{
    if (attacked.empty() || static_cast<int>(attacked.size()) <= k_d)
        return false;
    const auto & original = tally.original_outcome();
    const auto & pool = attacked.items();
    for (int size = 0; size <= k_d; ++size) {
        const bool restored = for_each_combination(pool, static_cast<std::size_t>(size), [&](const std::vector<int> & defended) {
            return tally.outcome_without(attacked.minus(GroupSet(defended))) == original;
        });
        if (restored)
            return false;
    }
    return true;
}

bool verify_attack_set(const Election & election, const VotingRule & rule, const GroupSet & attacked, int k_d)
{
    return verify_attack_set(GroupTally(election, rule), attacked, k_d);
}

SolveResult solve_attack_exact(const Election & election, const VotingRule & rule, const InstanceParams & params,
    const SolverOptions & options)
{
    const int n = election.group_count();
    params.validate(n);
    Stopwatch clock;
    SolveResult result;
    // The defender can always restore the whole attack.
    if (params.k_d >= params.k_a) {
        result.stats.wall_ms = clock.elapsed_ms();
        return result;
    }
    const std::uint64_t attacks = count_subsets_up_to(n, params.k_a);
    const std::uint64_t defenses = count_subsets_up_to(params.k_a, params.k_d);
    const std::uint64_t work = attacks > UINT64_MAX / defenses ? UINT64_MAX : attacks * defenses;
    check_cap(work, options.enumeration_cap, "exact attack search");

    const GroupTally tally(election, rule);
    const auto & original = tally.original_outcome();
    const auto pool = GroupSet::range(n).items();
    for (int size = params.k_d + 1; size <= params.k_a && !result.yes; ++size) {
        for_each_combination(pool, static_cast<std::size_t>(size), [&](const std::vector<int> & chosen) {
            ++result.stats.nodes;
            GroupSet attacked(chosen);
            if (tally.outcome_without(attacked) == original)
                return false;
            if (verify_attack_set(tally, attacked, params.k_d)) {
                result.yes = true;
                result.certificate = std::move(attacked);
                return true;
            }
            return false;
        });
    }
    result.stats.wall_ms = clock.elapsed_ms();
    return result;
}

} // namespace electguard
