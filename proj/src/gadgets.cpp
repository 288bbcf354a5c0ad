#include <electguard/gadgets.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace electguard {

VoterGroup swap_pair_profile(int m, CandidateIndex x, CandidateIndex y, const ScoreVector & vector)
{
    if (m < 2)
        throw InvalidArgument("swap-pair profile needs m >= 2");
    if (vector.size() != m)
        throw InvalidArgument("swap-pair profile: vector length " + std::to_string(vector.size()) + " != m = " + std::to_string(m));
    if (!vector.is_normalized())
        throw InvalidArgument("swap-pair profile requires a normalized score vector, got " + vector.to_string());
    if (x == y || x < 0 || y < 0 || x >= m || y >= m)
        throw InvalidArgument("swap-pair profile needs distinct candidates in 0.." + std::to_string(m - 1));

    std::vector<CandidateIndex> base{x, y};
    for (CandidateIndex c = 0; c < m; ++c)
        if (c != x && c != y)
            base.push_back(c);

    const int j = vector.last_drop();
    VoterGroup group;
    for (int r = 0; r < m; ++r) {
        std::vector<CandidateIndex> ranking(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            ranking[static_cast<std::size_t>((i + r) % m)] = base[static_cast<std::size_t>(i)];
        // Rotation r = j puts x at j and y at j + 1.
        if (r == j)
            std::swap(ranking[static_cast<std::size_t>(j)], ranking[static_cast<std::size_t>(j + 1)]);
        group.add(LinearOrder(std::move(ranking)));
    }
    return group;
}

void MarginTarget::set(CandidateIndex a, CandidateIndex b, std::int64_t v)
{
    if (a == b)
        throw InvalidArgument("margin target diagonal is fixed at 0");
    values_.at(a, b) = v;
    values_.at(b, a) = -v;
}

bool MarginTarget::all_even() const
{
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (values_(a, b) % 2 != 0)
                return false;
    return true;
}

bool MarginTarget::all_odd() const
{
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (values_(a, b) % 2 == 0)
                return false;
    return size() >= 2;
}

VoterGroup mcgarvey(int m, const MarginTarget & target)
{
    if (target.size() != m)
        throw InvalidArgument("margin target is " + std::to_string(target.size()) + "x" + std::to_string(target.size())
            + ", expected " + std::to_string(m));
    VoterGroup group;
    MarginMatrix residual = target.matrix();
    if (!target.all_even()) {
        if (!target.all_odd())
            throw InvalidArgument("margin target mixes odd and even entries; no profile realizes it");
        const auto base = LinearOrder::identity(m);
        group.add(base);
        residual -= group_margins(group, m);
    }

    for (CandidateIndex a = 0; a < m; ++a) {
        for (CandidateIndex b = 0; b < m; ++b) {
            const std::int64_t f = residual(a, b);
            if (a == b || f <= 0)
                continue;
            std::vector<CandidateIndex> rest;
            for (CandidateIndex c = 0; c < m; ++c)
                if (c != a && c != b)
                    rest.push_back(c);
            std::vector<CandidateIndex> forward{a, b};
            forward.insert(forward.end(), rest.begin(), rest.end());
            std::vector<CandidateIndex> backward(rest.rbegin(), rest.rend());
            backward.push_back(a);
            backward.push_back(b);
            group.add(LinearOrder(std::move(forward)), f / 2);
            group.add(LinearOrder(std::move(backward)), f / 2);
        }
    }
    return group;
}

std::string_view to_string(ProblemKind p)
{
    return p == ProblemKind::defense ? "defense" : "attack";
}

std::string_view to_string(Expected e)
{
    switch (e) {
    case Expected::yes:
        return "yes";
    case Expected::no:
        return "no";
    default:
        return "unknown";
    }
}

bool ksum_has_solution(const KsumSource & source)
{
    const auto n = static_cast<int>(source.weights.size());
    if (source.k < 0 || source.k > n)
        return false;
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    return for_each_combination(pool, static_cast<std::size_t>(source.k), [&](const std::vector<int> & pick) {
        std::int64_t sum = 0;
        for (int i : pick)
            sum += source.weights[static_cast<std::size_t>(i)];
        return sum == source.target;
    });
}

bool has_hitting_set(const SetSystemSource & source)
{
    std::vector<int> pool(static_cast<std::size_t>(source.universe));
    std::iota(pool.begin(), pool.end(), 0);
    const int top = std::min(source.k, source.universe);
    for (int size = 0; size <= top; ++size) {
        const bool found = for_each_combination(pool, static_cast<std::size_t>(size), [&](const std::vector<int> & pick) {
            return std::all_of(source.sets.begin(), source.sets.end(), [&](const std::vector<int> & s) {
                return std::any_of(s.begin(), s.end(), [&](int z) { return std::binary_search(pick.begin(), pick.end(), z); });
            });
        });
        if (found)
            return true;
    }
    return false;
}

bool has_set_cover(const SetSystemSource & source)
{
    const int t = static_cast<int>(source.sets.size());
    std::vector<int> pool(static_cast<std::size_t>(t));
    std::iota(pool.begin(), pool.end(), 0);
    const int top = std::min(source.k, t);
    for (int size = 0; size <= top; ++size) {
        const bool found = for_each_combination(pool, static_cast<std::size_t>(size), [&](const std::vector<int> & pick) {
            std::set<int> covered;
            for (int j : pick)
                covered.insert(source.sets[static_cast<std::size_t>(j)].begin(), source.sets[static_cast<std::size_t>(j)].end());
            return static_cast<int>(covered.size()) == source.universe;
        });
        if (found)
            return true;
    }
    return false;
}

bool has_clique(const GraphSource & source)
{
    std::set<std::pair<int, int>> adjacent;
    for (auto [u, v] : source.edges)
        adjacent.insert({std::min(u, v), std::max(u, v)});
    std::vector<int> pool(static_cast<std::size_t>(source.vertices));
    std::iota(pool.begin(), pool.end(), 0);
    return for_each_combination(pool, static_cast<std::size_t>(source.k), [&](const std::vector<int> & pick) {
        for (std::size_t i = 0; i < pick.size(); ++i)
            for (std::size_t j = i + 1; j < pick.size(); ++j)
                if (!adjacent.count({pick[i], pick[j]}))
                    return false;
        return true;
    });
}

namespace {
    template <typename Decide>
    Expected expect_if(bool computable, Decide && decide)
    {
        if (!computable)
            return Expected::unknown;
        return decide() ? Expected::yes : Expected::no;
    }

    std::vector<std::string> named(const std::string & prefix, int count, std::vector<std::string> tail)
    {
        std::vector<std::string> names;
        for (int i = 1; i <= count; ++i)
            names.push_back(prefix + std::to_string(i));
        names.insert(names.end(), tail.begin(), tail.end());
        return names;
    }

    VoterGroup labelled(VoterGroup g, std::string label)
    {
        g.set_label(std::move(label));
        return g;
    }

    /// Rule resolved for m candidates plus the normalized vector the swap-pair
    /// profiles are built from (scoring only).
    struct ResolvedRule
    {
        VotingRule rule;
        std::optional<ScoreVector> normalized;
    };

    ResolvedRule resolve(std::string_view spec, int m)
    {
        VotingRule rule = parse_rule(spec, m);
        if (rule.is_condorcet())
            return {rule, std::nullopt};
        if (m < 2)
            throw InvalidArgument("scoring gadget needs at least 2 candidates");
        return {rule, normalize_score_vector(rule.vector())};
    }

    void validate_set_system(const SetSystemSource & s)
    {
        if (s.universe < 1)
            throw InvalidArgument("universe must be nonempty");
        if (s.k < 0)
            throw InvalidArgument("k must be non-negative");
        for (std::size_t j = 0; j < s.sets.size(); ++j) {
            std::set<int> seen;
            for (int z : s.sets[j]) {
                if (z < 0 || z >= s.universe)
                    throw InvalidArgument("set " + std::to_string(j) + " has element " + std::to_string(z) + " outside 0.."
                        + std::to_string(s.universe - 1));
                if (!seen.insert(z).second)
                    throw InvalidArgument("set " + std::to_string(j) + " repeats element " + std::to_string(z));
            }
        }
    }

    SetSystemSource sorted_sets(SetSystemSource s)
    {
        for (auto & set : s.sets)
            std::sort(set.begin(), set.end());
        return s;
    }

    bool contains(const std::vector<int> & sorted, int z)
    {
        return std::binary_search(sorted.begin(), sorted.end(), z);
    }
}

GadgetInstance gadget_ksum(const KsumSource & source, std::string_view rule_spec)
{
    const auto n0 = static_cast<int>(source.weights.size());
    if (n0 < 1)
        throw InvalidArgument("k-SUM needs at least one weight");
    if (source.k < 1 || source.k > n0)
        throw InvalidArgument("k-SUM needs 1 <= k <= |W|, got k = " + std::to_string(source.k));
    std::int64_t total = 0;
    for (auto w : source.weights) {
        if (w < 1)
            throw InvalidArgument("k-SUM weights must be positive");
        total += w;
    }
    if (source.target < 1)
        throw InvalidArgument("k-SUM target must be positive");
    if (source.target >= total)
        throw InvalidArgument("k-SUM target M = " + std::to_string(source.target) + " is not below the weight sum "
            + std::to_string(total) + ": trivial No instance");

    const ResolvedRule resolved = resolve(rule_spec, 3);
    const bool condorcet = resolved.rule.is_condorcet();
    const CandidateIndex a = 0, b = 1, c = 2;

    std::vector<std::int64_t> w = source.weights;
    std::int64_t target = source.target;
    std::int64_t scale = 1;
    // Scoring: every weight, the pad and M' stay divisible by 8.
    if (!condorcet) {
        const bool divisible = target % 8 == 0 && std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x % 8 == 0; });
        if (!divisible) {
            scale = 8;
            for (auto & x : w)
                x *= 8;
            target *= 8;
        }
    }
    const std::int64_t pad = condorcet ? target + 1 : target + 8;
    int padded = 0;
    while (2 * source.k >= static_cast<int>(w.size())) {
        w.push_back(pad);
        ++padded;
    }
    const auto n = static_cast<int>(w.size());
    const std::int64_t sum = std::accumulate(w.begin(), w.end(), std::int64_t{0});
    const std::int64_t k = source.k;

    std::vector<VoterGroup> groups;
    std::int64_t m_prime;
    if (condorcet) {
        m_prime = sum + 1;
        for (int i = 0; i < n; ++i) {
            MarginTarget f(3);
            f.set(a, b, 2 * w[static_cast<std::size_t>(i)]);
            f.set(a, c, 2 * (m_prime - w[static_cast<std::size_t>(i)]));
            groups.push_back(labelled(mcgarvey(3, f), "G" + std::to_string(i + 1)));
        }
        MarginTarget f(3);
        f.set(b, a, 2 * target - 1);
        f.set(c, a, 2 * (k * m_prime - target) - 1);
        f.set(b, c, 1);
        groups.push_back(labelled(mcgarvey(3, f), "Ghat"));
    }
    else {
        m_prime = (sum / 8 + 1) * 8;
        const auto & v = *resolved.normalized;
        const auto p_ac = swap_pair_profile(3, a, c, v);
        const auto p_bc = swap_pair_profile(3, b, c, v);
        for (int i = 0; i < n; ++i) {
            VoterGroup g;
            g.add(p_ac, w[static_cast<std::size_t>(i)]);
            g.add(p_bc, m_prime - w[static_cast<std::size_t>(i)]);
            groups.push_back(labelled(std::move(g), "G" + std::to_string(i + 1)));
        }
        VoterGroup hat;
        hat.add(swap_pair_profile(3, c, a, v), (k * m_prime + target) / 2 - 3);
        hat.add(swap_pair_profile(3, c, b, v), (k * m_prime - target) / 2 - 1);
        hat.add(swap_pair_profile(3, a, b, v), (k * m_prime - target) / 2 - 1);
        groups.push_back(labelled(std::move(hat), "Ghat"));
    }

    GadgetInstance out{
        Election({"a", "b", "c"}, std::move(groups)),
        InstanceParams{n + 1, source.k},
        ProblemKind::defense,
        resolved.rule,
        Provenance{"ksum", source, {{"scale", scale}, {"padded", padded}, {"pad_weight", pad}, {"M_prime", m_prime}}},
        expect_if(n0 <= expected_answer_limit, [&] { return ksum_has_solution(source); }),
    };
    return out;
}

GadgetInstance gadget_hitting_set(const SetSystemSource & raw, std::string_view rule_spec)
{
    validate_set_system(raw);
    const auto source = sorted_sets(raw);
    if (source.sets.empty())
        throw InvalidArgument("hitting set instance needs at least one set");
    for (std::size_t j = 0; j < source.sets.size(); ++j)
        if (source.sets[j].empty())
            throw InvalidArgument("hitting set instance has empty set " + std::to_string(j));

    const int n = source.universe;
    const int t = static_cast<int>(source.sets.size());
    const bool condorcet = rule_spec == "condorcet";
    const int m = condorcet ? t + 1 : t + 2;
    const ResolvedRule resolved = resolve(rule_spec, m);
    const CandidateIndex y = t, d = t + 1;

    std::vector<VoterGroup> groups;
    if (condorcet) {
        for (int i = 0; i < n; ++i) {
            MarginTarget f(m);
            for (int j = 0; j < t; ++j)
                if (contains(source.sets[static_cast<std::size_t>(j)], i))
                    f.set(y, j, 2);
            groups.push_back(labelled(mcgarvey(m, f), "G" + std::to_string(i + 1)));
        }
    }
    else {
        const auto & v = *resolved.normalized;
        const std::int64_t big = 2LL * t * n;
        for (int i = 0; i < n; ++i) {
            VoterGroup g;
            for (int j = 0; j < t; ++j)
                if (contains(source.sets[static_cast<std::size_t>(j)], i))
                    g.add(swap_pair_profile(m, j, d, v), 2);
            groups.push_back(labelled(std::move(g), "G" + std::to_string(i + 1)));
        }
        VoterGroup hat;
        for (int j = 0; j < t; ++j)
            hat.add(swap_pair_profile(m, d, j, v), big);
        hat.add(swap_pair_profile(m, d, y, v), big - 1);
        groups.push_back(labelled(std::move(hat), "Ghat"));
    }

    auto names = named("x", t, condorcet ? std::vector<std::string>{"y"} : std::vector<std::string>{"y", "d"});
    const int k_d = condorcet ? source.k : source.k + 1;
    const int group_count = static_cast<int>(groups.size());
    GadgetInstance out{
        Election(std::move(names), std::move(groups)),
        InstanceParams{n, std::min(k_d, group_count)},
        ProblemKind::defense,
        resolved.rule,
        Provenance{"hittingset", source, {}},
        expect_if(n <= expected_answer_limit, [&] { return has_hitting_set(source); }),
    };
    return out;
}

GadgetInstance gadget_set_cover(const SetSystemSource & raw, std::string_view rule_spec)
{
    validate_set_system(raw);
    if (raw.k <= 3)
        throw InvalidArgument("set cover gadget requires k > 3, got k = " + std::to_string(raw.k));
    auto source = sorted_sets(raw);
    const int n = source.universe;
    const int k = source.k;

    std::vector<int> f(static_cast<std::size_t>(n), 0);
    for (const auto & s : source.sets)
        for (int z : s)
            ++f[static_cast<std::size_t>(z)];
    const int max_f = *std::max_element(f.begin(), f.end());
    // Pad until t - f_i - k > 3k for every element.
    std::vector<std::vector<int>> sets = source.sets;
    int padded = 0;
    while (static_cast<int>(sets.size()) - max_f - k <= 3 * k) {
        sets.emplace_back();
        ++padded;
    }
    const int t = static_cast<int>(sets.size());

    const bool condorcet = rule_spec == "condorcet";
    const int m = condorcet ? n + 1 : n + 2;
    const ResolvedRule resolved = resolve(rule_spec, m);
    const CandidateIndex y = n, d = n + 1;

    std::vector<VoterGroup> groups;
    if (condorcet) {
        for (int j = 0; j < t; ++j) {
            MarginTarget target(m);
            for (int i = 0; i < n; ++i)
                if (!contains(sets[static_cast<std::size_t>(j)], i))
                    target.set(y, i, 2);
            groups.push_back(labelled(mcgarvey(m, target), "G" + std::to_string(j + 1)));
        }
        MarginTarget target(m);
        for (int i = 0; i < n; ++i)
            target.set(i, y, 2 * (t - f[static_cast<std::size_t>(i)] - k));
        groups.push_back(labelled(mcgarvey(m, target), "H"));
    }
    else {
        const auto & v = *resolved.normalized;
        // Keeps d strictly last in every G_j: it gains at most 2n there.
        const std::int64_t sink = n + 1;
        const std::int64_t big = 2LL * t * n;
        for (int j = 0; j < t; ++j) {
            VoterGroup g;
            for (CandidateIndex x = 0; x < m; ++x)
                if (x != d)
                    g.add(swap_pair_profile(m, d, x, v), sink);
            for (int i = 0; i < n; ++i)
                if (!contains(sets[static_cast<std::size_t>(j)], i))
                    g.add(swap_pair_profile(m, i, d, v), 2);
            groups.push_back(labelled(std::move(g), "G" + std::to_string(j + 1)));
        }
        VoterGroup h;
        for (int i = 0; i < n; ++i)
            h.add(swap_pair_profile(m, d, i, v), big + 2LL * (t - f[static_cast<std::size_t>(i)] - k) + 1);
        h.add(swap_pair_profile(m, d, y, v), big);
        groups.push_back(labelled(std::move(h), "H"));
    }

    auto names = named("x", n, condorcet ? std::vector<std::string>{"y"} : std::vector<std::string>{"y", "d"});
    const int original_t = static_cast<int>(source.sets.size());
    GadgetInstance out{
        Election(std::move(names), std::move(groups)),
        InstanceParams{k, t - k},
        ProblemKind::defense,
        resolved.rule,
        Provenance{"setcover", source, {{"padded_empty_sets", padded}, {"t", t}}},
        expect_if(original_t <= expected_answer_limit, [&] { return has_set_cover(source); }),
    };
    return out;
}

GadgetInstance gadget_clique(const GraphSource & raw, std::string_view rule_spec)
{
    if (raw.k < 3)
        throw InvalidArgument("clique gadget requires k >= 3, got k = " + std::to_string(raw.k));
    if (raw.vertices < 1)
        throw InvalidArgument("graph needs at least one vertex");
    GraphSource source = raw;
    std::set<std::pair<int, int>> seen;
    for (auto & [u, v] : source.edges) {
        if (u < 0 || v < 0 || u >= source.vertices || v >= source.vertices)
            throw InvalidArgument("edge endpoint outside 0.." + std::to_string(source.vertices - 1));
        if (u == v)
            throw InvalidArgument("self-loop on vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw InvalidArgument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }

    const int nv = source.vertices;
    const int ne = static_cast<int>(source.edges.size());
    const bool condorcet = rule_spec == "condorcet";
    const int m = condorcet ? ne + 1 : ne + 2;
    const ResolvedRule resolved = resolve(rule_spec, m);
    const CandidateIndex y = ne, d = ne + 1;
    auto incident = [&](int i, int j) {
        const auto & e = source.edges[static_cast<std::size_t>(j)];
        return e.first == i || e.second == i;
    };

    std::vector<VoterGroup> groups;
    if (condorcet) {
        for (int i = 0; i < nv; ++i) {
            MarginTarget f(m);
            for (int j = 0; j < ne; ++j)
                if (incident(i, j))
                    f.set(y, j, 4);
            groups.push_back(labelled(mcgarvey(m, f), "G" + std::to_string(i + 1)));
        }
        MarginTarget f(m);
        for (int j = 0; j < ne; ++j)
            f.set(j, y, 2);
        groups.push_back(labelled(mcgarvey(m, f), "H"));
    }
    else {
        const auto & v = *resolved.normalized;
        const std::int64_t big = 10LL * std::max(ne, 1);
        for (int i = 0; i < nv; ++i) {
            VoterGroup g;
            for (CandidateIndex x = 0; x < m; ++x)
                if (x != d)
                    g.add(swap_pair_profile(m, d, x, v), big);
            for (int j = 0; j < ne; ++j)
                if (incident(i, j))
                    g.add(swap_pair_profile(m, j, d, v), 2);
            groups.push_back(labelled(std::move(g), "G" + std::to_string(i + 1)));
        }
        VoterGroup h;
        for (int j = 0; j < ne; ++j)
            h.add(swap_pair_profile(m, d, j, v), 1);
        groups.push_back(labelled(std::move(h), "H"));
    }

    auto names = named("x", ne, condorcet ? std::vector<std::string>{"y"} : std::vector<std::string>{"y", "d"});
    const int group_count = static_cast<int>(groups.size());
    GadgetInstance out{
        Election(std::move(names), std::move(groups)),
        InstanceParams{std::min(source.k, group_count), std::min(source.k - 2, group_count)},
        ProblemKind::attack,
        resolved.rule,
        Provenance{"clique", source, {}},
        expect_if(nv <= expected_answer_limit, [&] { return has_clique(source); }),
    };
    return out;
}

} // namespace electguard
