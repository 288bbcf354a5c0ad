// Independent reference implementations used as test oracles. Nothing here
// calls the library's tallying, oracle or solver code: votes are expanded
// one by one and every decision is made by exhaustive enumeration.
#pragma once

#include <electguard/core.hpp>
#include <electguard/rules.hpp>

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace reference {

using electguard::Election;
using electguard::Rational;

/// Winner set computed from the raw votes of the surviving groups.
/// `scores` empty means the Condorcet rule.
inline std::vector<int> winners(const Election & e, const std::vector<Rational> & scores, std::uint32_t deleted_mask)
{
    const int m = e.candidate_count();
    std::vector<std::vector<int>> votes;
    for (int g = 0; g < e.group_count(); ++g) {
        if (deleted_mask >> g & 1U)
            continue;
        for (const auto & b : e.group(g).bundles())
            for (std::int64_t c = 0; c < b.count; ++c)
                votes.push_back(b.order.ranking());
    }
    std::vector<int> out;
    if (scores.empty()) {
        for (int x = 0; x < m; ++x) {
            bool all = true;
            for (int y = 0; y < m && all; ++y) {
                if (x == y)
                    continue;
                int prefer_x = 0, prefer_y = 0;
                for (const auto & v : votes) {
                    for (int c : v) {
                        if (c == x) {
                            ++prefer_x;
                            break;
                        }
                        if (c == y) {
                            ++prefer_y;
                            break;
                        }
                    }
                }
                all = prefer_x > prefer_y;
            }
            if (all)
                return {x};
        }
        for (int x = 0; x < m; ++x)
            out.push_back(x);
        return out;
    }
    std::vector<Rational> s(static_cast<std::size_t>(m), Rational(0));
    for (const auto & v : votes)
        for (int p = 0; p < m; ++p)
            s[static_cast<std::size_t>(v[static_cast<std::size_t>(p)])] += scores[static_cast<std::size_t>(p)];
    Rational best = s[0];
    for (const auto & x : s)
        best = std::max(best, x);
    for (int c = 0; c < m; ++c)
        if (s[static_cast<std::size_t>(c)] == best)
            out.push_back(c);
    return out;
}

inline std::vector<Rational> entries_of(const electguard::VotingRule & rule)
{
    return rule.is_condorcet() ? std::vector<Rational>{} : rule.vector().entries();
}

inline int popcount(std::uint32_t x)
{
    return __builtin_popcount(x);
}

/// Some deletion of 1..k_a groups outside `defended_mask` changes the outcome.
inline bool attack_exists(const Election & e, const std::vector<Rational> & scores, std::uint32_t defended_mask, int k_a)
{
    const int n = e.group_count();
    const auto original = winners(e, scores, 0);
    for (std::uint32_t s = 1; s < (1U << n); ++s)
        if (!(s & defended_mask) && popcount(s) <= k_a && winners(e, scores, s) != original)
            return true;
    return false;
}

/// Optimal Defense by enumerating every protection and every attack.
inline bool defense_exists(const Election & e, const std::vector<Rational> & scores, int k_a, int k_d)
{
    const int n = e.group_count();
    for (std::uint32_t d = 0; d < (1U << n); ++d)
        if (popcount(d) <= k_d && !attack_exists(e, scores, d, k_a))
            return true;
    return false;
}

/// Optimal Attack by enumerating every attack and every defense inside it.
inline bool attack_wins(const Election & e, const std::vector<Rational> & scores, int k_a, int k_d)
{
    const int n = e.group_count();
    const auto original = winners(e, scores, 0);
    for (std::uint32_t a = 1; a < (1U << n); ++a) {
        if (popcount(a) > k_a)
            continue;
        bool beaten = true;
        for (std::uint32_t d = a;; d = (d - 1) & a) {
            if (popcount(d) <= k_d && winners(e, scores, a & ~d) == original) {
                beaten = false;
                break;
            }
            if (d == 0)
                break;
        }
        if (beaten)
            return true;
    }
    return false;
}

inline bool ksum(const std::vector<std::int64_t> & w, int k, std::int64_t target)
{
    const int n = static_cast<int>(w.size());
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        if (popcount(s) != k)
            continue;
        std::int64_t sum = 0;
        for (int i = 0; i < n; ++i)
            if (s >> i & 1U)
                sum += w[static_cast<std::size_t>(i)];
        if (sum == target)
            return true;
    }
    return false;
}

/// Sets as bitmasks over a universe of size u.
inline bool hitting_set(int u, const std::vector<std::uint32_t> & sets, int k)
{
    for (std::uint32_t h = 0; h < (1U << u); ++h) {
        if (popcount(h) > k)
            continue;
        bool ok = true;
        for (auto s : sets)
            ok = ok && (s & h);
        if (ok)
            return true;
    }
    return false;
}

inline bool set_cover(int u, const std::vector<std::uint32_t> & sets, int k)
{
    const int t = static_cast<int>(sets.size());
    const std::uint32_t full = (1U << u) - 1;
    for (std::uint32_t pick = 0; pick < (1U << t); ++pick) {
        if (popcount(pick) > k)
            continue;
        std::uint32_t covered = 0;
        for (int j = 0; j < t; ++j)
            if (pick >> j & 1U)
                covered |= sets[static_cast<std::size_t>(j)];
        if (covered == full)
            return true;
    }
    return false;
}

inline bool clique(int nv, const std::vector<std::pair<int, int>> & edges, int k)
{
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(nv), 0);
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)] |= 1U << v;
        adj[static_cast<std::size_t>(v)] |= 1U << u;
    }
    for (std::uint32_t s = 0; s < (1U << nv); ++s) {
        if (popcount(s) != k)
            continue;
        bool ok = true;
        for (int v = 0; v < nv && ok; ++v)
            if (s >> v & 1U)
                ok = ((adj[static_cast<std::size_t>(v)] | (1U << v)) & s) == s;
        if (ok)
            return true;
    }
    return false;
}

/// Score of every candidate over a vote list, by direct summation.
inline std::vector<Rational> tally(const std::vector<std::vector<int>> & votes, const std::vector<Rational> & scores)
{
    std::vector<Rational> s(scores.size(), Rational(0));
    for (const auto & v : votes)
        for (std::size_t p = 0; p < v.size(); ++p)
            s[static_cast<std::size_t>(v[p])] += scores[p];
    return s;
}

inline std::vector<std::vector<int>> expand(const electguard::VoterGroup & g)
{
    std::vector<std::vector<int>> votes;
    for (const auto & b : g.bundles())
        for (std::int64_t c = 0; c < b.count; ++c)
            votes.push_back(b.order.ranking());
    return votes;
}

/// Pairwise margin N(x,y) - N(y,x) by direct counting.
inline std::int64_t margin(const std::vector<std::vector<int>> & votes, int x, int y)
{
    std::int64_t d = 0;
    for (const auto & v : votes) {
        for (int c : v) {
            if (c == x) {
                ++d;
                break;
            }
            if (c == y) {
                --d;
                break;
            }
        }
    }
    return d;
}

/// Random election with m candidates, n groups of 0..max_voters voters each.
inline Election random_election(std::mt19937_64 & rng, int m, int n, int max_voters)
{
    std::vector<electguard::VoterGroup> groups;
    for (int g = 0; g < n; ++g) {
        electguard::VoterGroup group;
        const int voters = static_cast<int>(rng() % static_cast<std::uint64_t>(max_voters + 1));
        for (int v = 0; v < voters; ++v) {
            std::vector<int> r(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i)
                r[static_cast<std::size_t>(i)] = i;
            for (int i = m - 1; i > 0; --i)
                std::swap(r[static_cast<std::size_t>(i)], r[rng() % static_cast<std::uint64_t>(i + 1)]);
            group.add(electguard::LinearOrder(std::move(r)));
        }
        groups.push_back(std::move(group));
    }
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i)
        names.push_back(std::string(1, static_cast<char>('a' + i)));
    return Election(std::move(names), std::move(groups));
}

} // namespace reference
