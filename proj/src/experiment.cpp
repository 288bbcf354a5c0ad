#include <electguard/experiment.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

namespace electguard {

void ExperimentConfig::validate() const
{
    profile.validate();
    if (rules.empty())
        throw InvalidArgument("experiment needs at least one rule");
    if (profiles < 1)
        throw InvalidArgument("experiment needs at least one profile");
    if (kd_min < 0 || kd_max < kd_min || kd_max > profile.g)
        throw InvalidArgument("k_d range " + std::to_string(kd_min) + ".." + std::to_string(kd_max) + " must lie in 0.."
            + std::to_string(profile.g));
    if (greedy2_trials < 1)
        throw InvalidArgument("greedy2 needs at least one trial");
    for (const auto & r : rules)
        parse_rule(r, profile.m);
}

std::string model_label(const GenConfig & config)
{
    if (config.model == ProfileModel::uniform)
        return "uniform";
    const auto names = default_candidate_names(config.m);
    return "two-top:" + names[static_cast<std::size_t>(config.a)] + "," + names[static_cast<std::size_t>(config.b)];
}

namespace {
    double ms_since(std::chrono::steady_clock::time_point t0)
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }

    std::vector<ExperimentRow> run_profile(const ExperimentConfig & config, const std::vector<VotingRule> & rules, int p)
    {
        GenConfig gc = config.profile;
        gc.seed = derive_seed(config.seed, static_cast<std::uint64_t>(p));
        const Election election = generate_profile(gc);
        const std::string model = model_label(gc);

        std::vector<ExperimentRow> rows;
        for (std::size_t r = 0; r < rules.size(); ++r) {
            for (int k_d = config.kd_min; k_d <= config.kd_max; ++k_d) {
                ExperimentRow row;
                row.model = model;
                row.rule = config.rules[r];
                row.k_d = k_d;
                row.k_a = gc.g - k_d;
                row.profile = p;
                row.seed = gc.seed;
                const InstanceParams params{row.k_a, row.k_d};

                auto t0 = std::chrono::steady_clock::now();
                const auto outcome = greedy1(election, rules[r], params);
                row.greedy1_ms = ms_since(t0);
                row.category = outcome.category;
                if (outcome.category == GreedyCategory::defense_exists) {
                    t0 = std::chrono::steady_clock::now();
                    const auto g2_seed = derive_seed(gc.seed, (static_cast<std::uint64_t>(r) << 32) | static_cast<std::uint64_t>(k_d));
                    row.greedy2_fraction = greedy2(election, rules[r], params, config.greedy2_trials, g2_seed);
                    row.greedy2_ms = ms_since(t0);
                }
                rows.push_back(std::move(row));
            }
        }
        return rows;
    }

    std::string fraction(double x)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", x);
        return buf;
    }

    std::string millis(double x)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", x);
        return buf;
    }

    /// RFC 4180 quoting for fields that need it.
    std::string field(const std::string & s)
    {
        if (s.find_first_of(",\"\n\r") == std::string::npos)
            return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"')
                q += '"';
            q += c;
        }
        return q + "\"";
    }
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig & config)
{
    config.validate();
    std::vector<VotingRule> rules;
    for (const auto & r : config.rules)
        rules.push_back(parse_rule(r, config.profile.m));

    std::vector<std::vector<ExperimentRow>> per_profile(static_cast<std::size_t>(config.profiles));
    unsigned workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(config.profiles));

    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (int p = next++; p < config.profiles; p = next++) {
            try {
                per_profile[static_cast<std::size_t>(p)] = run_profile(config, rules, p);
            }
            catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = config.profiles;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w)
            pool.emplace_back(work);
        work();
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<ExperimentRow> rows;
    for (auto & chunk : per_profile)
        for (auto & row : chunk)
            rows.push_back(std::move(row));
    return rows;
}

void write_rows_csv(std::ostream & out, const std::vector<ExperimentRow> & rows, bool timing)
{
    out << "schema_version,model,rule,k_d,k_a,profile,seed,category,greedy2_fraction";
    if (timing)
        out << ",greedy1_ms,greedy2_ms";
    out << '\n';
    for (const auto & r : rows) {
        out << csv_schema_version << ',' << field(r.model) << ',' << field(r.rule) << ',' << r.k_d << ',' << r.k_a << ','
            << r.profile << ',' << r.seed << ',' << static_cast<int>(r.category) << ','
            << (r.greedy2_fraction ? fraction(*r.greedy2_fraction) : std::string());
        if (timing)
            out << ',' << millis(r.greedy1_ms) << ',' << millis(r.greedy2_ms);
        out << '\n';
    }
}

void write_summary_csv(std::ostream & out, const std::vector<ExperimentRow> & rows)
{
    struct Tally
    {
        std::string model;
        int k_a = 0;
        int counts[3] = {0, 0, 0};
        double greedy2_sum = 0.0;
        int greedy2_n = 0;
    };
    // Rules keep first-appearance order.
    std::vector<std::string> rule_order;
    std::map<std::pair<std::string, int>, Tally> tallies;
    for (const auto & r : rows) {
        if (std::find(rule_order.begin(), rule_order.end(), r.rule) == rule_order.end())
            rule_order.push_back(r.rule);
        auto & t = tallies[{r.rule, r.k_d}];
        t.model = r.model;
        t.k_a = r.k_a;
        ++t.counts[static_cast<int>(r.category) - 1];
        if (r.greedy2_fraction) {
            t.greedy2_sum += *r.greedy2_fraction;
            ++t.greedy2_n;
        }
    }

    out << "schema_version,model,rule,k_d,k_a,profiles,category1,category2,category3,optimal_fraction,greedy2_mean\n";
    for (const auto & rule : rule_order) {
        for (const auto & [key, t] : tallies) {
            if (key.first != rule)
                continue;
            const int total = t.counts[0] + t.counts[1] + t.counts[2];
            out << csv_schema_version << ',' << field(t.model) << ',' << field(rule) << ',' << key.second << ',' << t.k_a << ','
                << total << ',' << t.counts[0] << ',' << t.counts[1] << ',' << t.counts[2] << ','
                << fraction(static_cast<double>(t.counts[0] + t.counts[1]) / total) << ','
                << (t.greedy2_n ? fraction(t.greedy2_sum / t.greedy2_n) : std::string()) << '\n';
        }
    }
}

} // namespace electguard
