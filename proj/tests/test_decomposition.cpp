#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "kdecomp/decomposition.hpp"
#include "kdecomp/error.hpp"
#include "kdecomp/generate.hpp"
#include "kdecomp/io.hpp"
#include "kdecomp/json_reports.hpp"

using namespace kdecomp;

TEST_CASE("project removes exactly the dropped columns") {
    auto d = TupleDataset::from_doubles({{1, 2, 3}, {4, 5, 6}});
    auto p = project(d, ProjectionSpec::drop(2));
    CHECK(p == TupleDataset::from_doubles({{1, 3}, {4, 6}}));

    auto both = project(d, ProjectionSpec({1, 3}));
    CHECK(both == TupleDataset::from_doubles({{2}, {5}}));
}

TEST_CASE("projection errors") {
    auto d = TupleDataset::from_doubles({{1, 2, 3}});
    CHECK_THROWS_AS(project(d, ProjectionSpec({1, 2, 3})), ArgumentError);  // drops everything
    CHECK_THROWS_AS(project(d, ProjectionSpec::drop(4)), BoundsError);
    CHECK_THROWS_AS(ProjectionSpec({2, 2}), ArgumentError);  // duplicate
    CHECK_THROWS_AS(ProjectionSpec({0}), ArgumentError);     // 1-based
}

TEST_CASE("composed single drops equal one multi-column drop") {
    // needs n >= 3: dropping two of two columns is forbidden outright
    std::mt19937_64 rng(17);
    for (std::size_t n = 3; n <= 5; ++n) {
        auto d = random_hypercube(n, 30, rng());
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 1; j <= n; ++j) {
                if (i == j) continue;
                // j's index after i has been removed
                std::size_t j_after = j > i ? j - 1 : j;
                auto stepwise = project(project(d, ProjectionSpec::drop(i)),
                                        ProjectionSpec::drop(j_after));
                auto direct = project(d, ProjectionSpec({i, j}));
                CHECK(stepwise == direct);
            }
        }
    }
}

TEST_CASE("projection preserves row order") {
    auto d = TupleDataset::from_doubles({{9, 1}, {3, 2}, {7, 3}});
    auto p = project(d, ProjectionSpec::drop(1));
    CHECK(p == TupleDataset::from_doubles({{1}, {2}, {3}}));
}

TEST_CASE("canonical family enumerates single drops in order") {
    auto family = canonical_family(3);
    REQUIRE(family.size() == 3);
    CHECK(family[0] == ProjectionSpec::drop(1));
    CHECK(family[1] == ProjectionSpec::drop(2));
    CHECK(family[2] == ProjectionSpec::drop(3));

    CHECK(canonical_family(2).size() == 2);
    CHECK_THROWS_AS(canonical_family(1), ArgumentError);
}

TEST_CASE("verify_decomposition assembles the report consistently") {
    auto d = random_hypercube(4, 300, 3);
    DecompositionConfig config;
    auto report = verify_decomposition(d, config);

    CHECK(report.n == 4);
    CHECK(report.m == 300);
    CHECK(report.backend_id == "zlib");
    REQUIRE(report.per_projection.size() == 4);

    double sum = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& entry = report.per_projection[i];
        CHECK(entry.spec == ProjectionSpec::drop(i + 1));
        CHECK(entry.coefficient == 1.0);
        CHECK(entry.estimate == estimate(project(d, entry.spec)));
        sum += static_cast<double>(entry.estimate.k_hat);
    }
    CHECK(report.weighted_sum == doctest::Approx(sum));
    CHECK(report.lhs == doctest::Approx(3.0 * static_cast<double>(report.k_full.k_hat)));
    CHECK(report.ratio ==
          doctest::Approx(sum / static_cast<double>(report.k_full.k_hat)));
    CHECK(report.slack_used == doctest::Approx(8.0 * std::log2(300.0) + 64.0));
    CHECK_FALSE(report.upper_ok.has_value());  // no program bound supplied
}

TEST_CASE("n=2 reduces to plain subadditivity") {
    auto d = random_hypercube(2, 150, 11);
    auto report = verify_decomposition(d, {});
    CHECK(report.lhs == doctest::Approx(static_cast<double>(report.k_full.k_hat)));
    bool direct = static_cast<double>(report.per_projection[0].estimate.k_hat) +
                          static_cast<double>(report.per_projection[1].estimate.k_hat) +
                          report.slack_used >=
                  static_cast<double>(report.k_full.k_hat);
    CHECK(report.lower_ok == direct);
}

TEST_CASE("configuration errors") {
    auto d = random_hypercube(3, 50, 1);
    DecompositionConfig config;

    config.coefficients = {1.0, 2.0};  // wrong count
    CHECK_THROWS_AS(verify_decomposition(d, config), ArgumentError);

    config.coefficients = {1.0, 0.0, 1.0};  // zero coefficient
    CHECK_THROWS_AS(verify_decomposition(d, config), ArgumentError);

    auto single = random_hypercube(1, 50, 1);
    CHECK_THROWS_AS(verify_decomposition(single, {}), ArgumentError);
}

TEST_CASE("upper bound is checked only when a program bound exists") {
    auto d = random_hypercube(3, 200, 8);
    DecompositionConfig config;
    config.program_bound = 1 << 20;  // generous M
    auto report = verify_decomposition(d, config);
    REQUIRE(report.upper_ok.has_value());
    CHECK(*report.upper_ok);
}

TEST_CASE("weighted coefficients scale the sum") {
    auto d = random_hypercube(2, 100, 13);
    DecompositionConfig config;
    config.coefficients = {2.0, 3.0};
    auto report = verify_decomposition(d, config);
    double expected = 2.0 * static_cast<double>(report.per_projection[0].estimate.k_hat) +
                      3.0 * static_cast<double>(report.per_projection[1].estimate.k_hat);
    CHECK(report.weighted_sum == doctest::Approx(expected));
}

TEST_CASE("lower bound holds on random hypercubes with default slack") {
    // 50 seeded trials at n=3 and n=10; the n=100 scale runs in the
    // acceptance suite.
    for (std::size_t n : {std::size_t{3}, std::size_t{10}}) {
        int ok = 0;
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            auto d = random_hypercube(n, 3000, seed);
            auto report = verify_decomposition(d, {});
            if (report.lower_ok) ++ok;
            double lo = 0.9 * static_cast<double>(n - 1);
            double hi = 1.1 * static_cast<double>(n);
            CHECK(report.ratio >= lo);
            CHECK(report.ratio <= hi);
        }
        CHECK(ok == 50);
    }
}

TEST_CASE("convergence probe reports both normalizations") {
    auto make = [](std::size_t n) { return random_hypercube(n, 200, 77); };

    SUBCASE("empty schedule") {
        CHECK(convergence_probe(make, {}, {}).empty());
    }
    SUBCASE("single n=2 point") {
        auto samples = convergence_probe(make, {2}, {});
        REQUIRE(samples.size() == 1);
        CHECK(samples[0].n == 2);
        // with n=2 the two normalizations divide by 1 and by 2
        auto report = verify_decomposition(make(2), {});
        double k = static_cast<double>(report.k_full.k_hat);
        CHECK(samples[0].residual_over_n_minus_1 ==
              doctest::Approx(std::abs(k - report.weighted_sum)));
        CHECK(samples[0].residual_over_n ==
              doctest::Approx(std::abs(k - report.weighted_sum / 2.0)));
    }
    SUBCASE("increasing schedule emits one sample per n") {
        auto samples = convergence_probe(make, {3, 5, 8}, {});
        REQUIRE(samples.size() == 3);
        CHECK(samples[0].n == 3);
        CHECK(samples[2].n == 8);
        for (const auto& s : samples) {
            CHECK(s.residual_over_n_minus_1 >= 0);
            CHECK(s.residual_over_n >= 0);
        }
    }
    SUBCASE("schedule validation") {
        CHECK_THROWS_AS(convergence_probe(make, {1, 3}, {}), ArgumentError);
        CHECK_THROWS_AS(convergence_probe(make, {3, 3}, {}), ArgumentError);
        CHECK_THROWS_AS(convergence_probe(make, {5, 3}, {}), ArgumentError);
    }
}

TEST_CASE("report serializes with a stable key order") {
    auto report = verify_decomposition(random_hypercube(2, 60, 5), {});
    auto j = to_json(report);
    std::vector<std::string> keys;
    for (const auto& [key, _] : j.items()) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"n", "m", "k_full", "per_projection", "weighted_sum",
                                           "lhs", "ratio", "lower_ok", "upper_ok", "slack_used",
                                           "backend_id"});
    CHECK(j["upper_ok"].is_null());
    CHECK(to_json(report).dump() == to_json(report).dump());
}

TEST_CASE("per-projection csv export") {
    auto report = verify_decomposition(random_hypercube(3, 60, 5), {});
    std::ostringstream out;
    write_projection_csv(out, report);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "dropped_col,coefficient,k_hat,raw_len");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 3);
}
