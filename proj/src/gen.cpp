#include <electguard/gen.hpp>

#include <limits>

namespace electguard {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index)
{
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0)
        throw InvalidArgument("Rng::below needs a positive bound");
    constexpr auto top = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = top - (top % bound + 1) % bound;
    std::uint64_t x;
    do
        x = engine_();
    while (x > limit);
    return x % bound;
}

std::vector<int> Rng::sample(int n, int k)
{
    if (k < 0 || k > n)
        throw InvalidArgument("cannot sample " + std::to_string(k) + " of " + std::to_string(n));
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pool[static_cast<std::size_t>(i)] = i;
    // Partial Fisher-Yates: the first k slots become the sample.
    for (int i = 0; i < k; ++i) {
        const auto j = static_cast<std::size_t>(i) + static_cast<std::size_t>(below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
}

std::vector<CandidateIndex> Rng::permutation(std::vector<CandidateIndex> items)
{
    shuffle(items);
    return items;
}

void GenConfig::validate() const
{
    if (m < 2)
        throw InvalidArgument("need at least 2 candidates, got " + std::to_string(m));
    if (n < 1 || g < 1)
        throw InvalidArgument("voter and class counts must be positive");
    if (n % g != 0)
        throw InvalidArgument("class count " + std::to_string(g) + " does not divide voter count " + std::to_string(n));
    if (model == ProfileModel::two_frontrunner) {
        if (a == b)
            throw InvalidArgument("two-frontrunner model needs distinct front-runners");
        if (a < 0 || a >= m || b < 0 || b >= m)
            throw InvalidArgument("front-runner index outside 0.." + std::to_string(m - 1));
    }
}

std::vector<std::string> default_candidate_names(int m)
{
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        names.push_back(m <= 26 ? std::string(1, static_cast<char>('a' + i)) : "c" + std::to_string(i));
    return names;
}

namespace {
    Election assemble(const GenConfig & config, const std::vector<LinearOrder> & votes)
    {
        const int per_class = config.n / config.g;
        std::vector<VoterGroup> groups(static_cast<std::size_t>(config.g));
        for (int v = 0; v < config.n; ++v)
            groups[static_cast<std::size_t>(v / per_class)].add(votes[static_cast<std::size_t>(v)]);
        for (int c = 0; c < config.g; ++c)
            groups[static_cast<std::size_t>(c)].set_label("class" + std::to_string(c));
        return Election(default_candidate_names(config.m), std::move(groups));
    }

    std::vector<CandidateIndex> all_candidates(int m)
    {
        return LinearOrder::identity(m).ranking();
    }

    LinearOrder topped_by(Rng & rng, CandidateIndex top, int m)
    {
        std::vector<CandidateIndex> rest;
        for (CandidateIndex c = 0; c < m; ++c)
            if (c != top)
                rest.push_back(c);
        rng.shuffle(rest);
        rest.insert(rest.begin(), top);
        return LinearOrder(std::move(rest));
    }
}

Election gen_impartial(const GenConfig & config)
{
    config.validate();
    if (config.model != ProfileModel::uniform)
        throw InvalidArgument("gen_impartial requires the uniform model");
    Rng rng(config.seed);
    std::vector<LinearOrder> votes;
    votes.reserve(static_cast<std::size_t>(config.n));
    for (int v = 0; v < config.n; ++v)
        votes.emplace_back(rng.permutation(all_candidates(config.m)));
    return assemble(config, votes);
}

Election gen_two_frontrunner(const GenConfig & config)
{
    config.validate();
    if (config.model != ProfileModel::two_frontrunner)
        throw InvalidArgument("gen_two_frontrunner requires the two-frontrunner model");
    Rng rng(config.seed);
    const int leaders = 2 * config.n / 5;
    std::vector<LinearOrder> votes;
    votes.reserve(static_cast<std::size_t>(config.n));
    for (int v = 0; v < leaders; ++v)
        votes.push_back(topped_by(rng, config.a, config.m));
    for (int v = 0; v < leaders; ++v)
        votes.push_back(topped_by(rng, config.b, config.m));
    for (int v = 2 * leaders; v < config.n; ++v)
        votes.emplace_back(rng.permutation(all_candidates(config.m)));
    rng.shuffle(votes);
    return assemble(config, votes);
}

Election generate_profile(const GenConfig & config)
{
    return config.model == ProfileModel::uniform ? gen_impartial(config) : gen_two_frontrunner(config);
}

} // namespace electguard
