#include <doctest.h>

#include <electguard/gen.hpp>

#include <cmath>
#include <map>

using namespace electguard;

TEST_CASE("rng primitives")
{
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i)
        CHECK(a.below(17) == b.below(17));
    CHECK_THROWS(a.below(0));
    const auto s = a.sample(10, 4);
    CHECK(s.size() == 4);
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
    CHECK(a.sample(5, 5) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK(derive_seed(7, 3) == derive_seed(7, 3));
}

TEST_CASE("impartial culture classes and determinism")
{
    GenConfig c;
    c.m = 3;
    c.n = 12;
    c.g = 12;
    c.seed = 5;
    const auto e = gen_impartial(c);
    CHECK(e.group_count() == 12);
    for (const auto & g : e.groups())
        CHECK(g.voter_count() == 1);
    CHECK(gen_impartial(c) == e);
    c.seed = 6;
    CHECK_FALSE(gen_impartial(c) == e);
    c.n = 13;
    CHECK_THROWS_AS(gen_impartial(c), InvalidArgument);
}

TEST_CASE("impartial culture is uniform over orders")
{
    GenConfig c;
    c.m = 3;
    c.n = 60000;
    c.g = 10;
    c.seed = 123;
    const auto e = gen_impartial(c);
    std::map<std::vector<int>, double> counts;
    for (const auto & g : e.groups()) {
        CHECK(g.voter_count() == 6000);
        for (const auto & b : g.bundles())
            counts[b.order.ranking()] += static_cast<double>(b.count);
    }
    REQUIRE(counts.size() == 6);
    const double expected = 10000.0;
    double chi2 = 0;
    for (const auto & [order, n] : counts)
        chi2 += (n - expected) * (n - expected) / expected;
    // 5 degrees of freedom; 20.52 is the 0.999 quantile.
    CHECK(chi2 < 20.52);

    c.m = 2;
    c.n = 20000;
    double first = 0;
    const auto binary = gen_impartial(c);
    for (const auto & g : binary.groups())
        for (const auto & b : g.bundles())
            if (b.order.at(0) == 0)
                first += static_cast<double>(b.count);
    const double z = (first - 10000.0) / std::sqrt(20000.0 * 0.25);
    CHECK(std::abs(z) < 3.3);
}

TEST_CASE("two-frontrunner split and first-place frequency")
{
    GenConfig c;
    c.m = 4;
    c.n = 10;
    c.g = 1;
    c.model = ProfileModel::two_frontrunner;
    c.a = 0;
    c.b = 2;
    c.seed = 9;
    const auto e = gen_two_frontrunner(c);
    int a_top = 0, b_top = 0;
    for (const auto & b : e.group(0).bundles()) {
        if (b.order.at(0) == 0)
            a_top += static_cast<int>(b.count);
        if (b.order.at(0) == 2)
            b_top += static_cast<int>(b.count);
    }
    CHECK(a_top >= 4);
    CHECK(b_top >= 4);
    CHECK(a_top + b_top <= 10);
    CHECK(generate_profile(c) == e);

    c.n = 50000;
    c.g = 10;
    double first = 0;
    const auto large = gen_two_frontrunner(c);
    for (const auto & g : large.groups())
        for (const auto & b : g.bundles())
            if (b.order.at(0) == 0)
                first += static_cast<double>(b.count);
    // 20000 fixed plus Binomial(10000, 1/4).
    const double z = (first - 22500.0) / std::sqrt(10000.0 * 0.25 * 0.75);
    CHECK(std::abs(z) < 4.0);

    c.b = 0;
    CHECK_THROWS_AS(gen_two_frontrunner(c), InvalidArgument);
}

TEST_CASE("default candidate names")
{
    CHECK(default_candidate_names(3) == std::vector<std::string>{"a", "b", "c"});
    CHECK(default_candidate_names(27)[26] == "c26");
}
