#include <doctest.h>

#include <electguard/experiment.hpp>

#include <array>
#include <map>
#include <sstream>

using namespace electguard;

namespace {
ExperimentConfig small_config()
{
    ExperimentConfig c;
    c.profile.m = 3;
    c.profile.n = 60;
    c.profile.g = 6;
    c.profiles = 4;
    c.kd_min = 1;
    c.kd_max = 4;
    c.greedy2_trials = 20;
    c.seed = 11;
    c.threads = 2;
    return c;
}

std::vector<std::string> lines(const std::string & text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}
}

TEST_CASE("rows are complete, ordered and independent of thread count")
{
    auto c = small_config();
    const auto rows = run_experiment(c);
    REQUIRE(rows.size() == 4u * 3u * 4u);
    std::size_t i = 0;
    for (int p = 0; p < 4; ++p)
        for (const auto & rule : c.rules)
            for (int kd = 1; kd <= 4; ++kd) {
                const auto & r = rows[i++];
                CHECK(r.profile == p);
                CHECK(r.rule == rule);
                CHECK(r.k_d == kd);
                CHECK(r.k_a == 6 - kd);
                CHECK(r.model == "uniform");
                CHECK(r.greedy2_fraction.has_value() == (r.category == GreedyCategory::defense_exists));
            }
    c.threads = 1;
    std::ostringstream one, many;
    write_rows_csv(one, run_experiment(c), false);
    write_rows_csv(many, rows, false);
    CHECK(one.str() == many.str());
}

TEST_CASE("summary counts equal the per-row tallies")
{
    const auto rows = run_experiment(small_config());
    std::map<std::pair<std::string, int>, std::array<int, 3>> counts;
    for (const auto & r : rows)
        ++counts[{r.rule, r.k_d}][static_cast<std::size_t>(static_cast<int>(r.category) - 1)];
    std::ostringstream out;
    write_summary_csv(out, rows);
    const auto l = lines(out.str());
    REQUIRE(l.size() == 1 + counts.size());
    CHECK(l[0] == "schema_version,model,rule,k_d,k_a,profiles,category1,category2,category3,optimal_fraction,greedy2_mean");
    for (std::size_t i = 1; i < l.size(); ++i) {
        std::vector<std::string> f;
        std::istringstream in(l[i]);
        for (std::string cell; std::getline(in, cell, ',');)
            f.push_back(cell);
        REQUIRE(f.size() >= 10);
        CHECK(f[0] == "1");
        const auto & c = counts.at({f[2], std::stoi(f[3])});
        CHECK(std::stoi(f[5]) == 4);
        CHECK(std::stoi(f[6]) == c[0]);
        CHECK(std::stoi(f[7]) == c[1]);
        CHECK(std::stoi(f[8]) == c[2]);
        CHECK(std::stod(f[9]) == doctest::Approx((c[0] + c[1]) / 4.0).epsilon(1e-6));
    }
}

TEST_CASE("timing columns appear only on request")
{
    auto c = small_config();
    c.profiles = 1;
    c.timing = true;
    const auto rows = run_experiment(c);
    std::ostringstream plain, timed;
    write_rows_csv(plain, rows, false);
    write_rows_csv(timed, rows, true);
    CHECK(lines(plain.str())[0].find("_ms") == std::string::npos);
    CHECK(lines(timed.str())[0].find("greedy1_ms") != std::string::npos);
}

TEST_CASE("config validation")
{
    auto c = small_config();
    c.kd_max = 7;
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    c = small_config();
    c.kd_min = 3;
    c.kd_max = 2;
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    c = small_config();
    c.rules = {"copeland"};
    CHECK_THROWS_AS(run_experiment(c), InvalidArgument);
    c = small_config();
    c.profile.model = ProfileModel::two_frontrunner;
    c.profile.b = 2;
    CHECK(model_label(c.profile) == "two-top:a,c");
}
