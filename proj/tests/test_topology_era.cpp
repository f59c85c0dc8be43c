#include <doctest.h>

#include <cmath>
#include <map>

#include "fixtures.hpp"
#include "isnad/era_locality.hpp"
#include "isnad/errors.hpp"
#include "isnad/topology.hpp"
#include "oracles.hpp"

using namespace isnad;
using oracle::make_graph;

TEST_CASE("degree distribution of the six narrator path") {
    const auto g = fixture::snapshot("revelation.jsonl").graph;
    CHECK(degree_distribution(g, Direction::Total).buckets == std::map<std::int64_t, std::int64_t>{{1, 2}, {2, 4}});
    CHECK(degree_distribution(g, Direction::In).buckets == std::map<std::int64_t, std::int64_t>{{0, 1}, {1, 5}});
}

TEST_CASE("degree distribution of a star") {
    const auto g = make_graph(6, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}});
    CHECK(degree_distribution(g, Direction::Out).buckets == std::map<std::int64_t, std::int64_t>{{0, 5}, {5, 1}});
    CHECK(degree_distribution(NarratorGraph{}, Direction::Out).buckets.empty());
}

TEST_CASE("histogram buckets partition the nodes") {
    Rng rng(4);
    const auto g = oracle::random_digraph(rng, 40, 0.1, 2);
    for (const auto d : {Direction::In, Direction::Out, Direction::Total}) {
        std::int64_t sum = 0;
        for (const auto& [k, n] : degree_distribution(g, d).buckets) sum += n;
        CHECK(sum == 40);
    }
}

TEST_CASE("shifted approximation closed form") {
    const std::vector<std::int64_t> ones(50, 1);
    const auto fit = fit_power_law(ones, 1, PowerLawMethod::ShiftedApprox);
    CHECK(fit.alpha == doctest::Approx(1.0 + 1.0 / std::log(2.0)).epsilon(1e-12));
    CHECK(fit.n_tail == 50);
    CHECK_THROWS_AS(fit_power_law(ones, 1, PowerLawMethod::ExactDiscrete), DomainError);
}

TEST_CASE("power law preconditions") {
    const std::vector<std::int64_t> one{3};
    CHECK_THROWS_AS(fit_power_law(one, 1), DomainError);
    const std::vector<std::int64_t> some{1, 2, 3};
    CHECK_THROWS_AS(fit_power_law(some, 0), DomainError);
    CHECK_THROWS_AS(fit_power_law(some, 3), DomainError);
}

TEST_CASE("exact discrete fit solves the likelihood equation") {
    // at the maximum, -zeta'(a)/zeta(a) equals the mean log sample
    const std::vector<std::int64_t> xs{1, 1, 1, 2, 2, 3, 5, 8, 1, 1, 4};
    const auto fit = fit_power_law(xs, 1);
    double mean_log = 0.0;
    for (const auto x : xs) mean_log += std::log(static_cast<double>(x));
    mean_log /= static_cast<double>(xs.size());
    double z = 0.0, dz = 0.0;
    for (int k = 1; k < 2000000; ++k) {
        const double t = std::pow(k, -fit.alpha);
        z += t;
        dz += t * std::log(k);
    }
    CHECK(dz / z == doctest::Approx(mean_log).epsilon(1e-4));
}

TEST_CASE("power law round trip") {
    Rng rng(2024);
    std::vector<std::int64_t> xs(10000);
    for (auto& x : xs) x = oracle::zipf_draw(rng, 2.5);
    CHECK(std::abs(fit_power_law(xs, 1).alpha - 2.5) < 0.1);
    // xmin above 1 uses only the tail
    const auto tail = fit_power_law(xs, 3);
    CHECK(std::abs(tail.alpha - 2.5) < 0.2);
}

TEST_CASE("clustering") {
    CHECK(global_clustering(make_graph(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}})) == 1.0);
    CHECK(global_clustering(make_graph(3, {{0, 1, 1}, {1, 2, 1}})) == 0.0);
    const auto pendant = make_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {2, 3, 1}});
    CHECK(global_clustering(pendant) == doctest::Approx((1.0 + 1.0 + 1.0 / 3.0 + 0.0) / 4.0));
    Rng rng(6);
    for (int i = 0; i < 10; ++i) {
        const auto g = oracle::random_digraph(rng, 20, 0.15, 1);
        const double c = global_clustering(g);
        CHECK(c >= 0.0);
        CHECK(c <= 1.0);
        CHECK(c == doctest::Approx(oracle::matrix_clustering(g)).epsilon(1e-12));
    }
}

TEST_CASE("average path length") {
    CHECK(avg_path_length(make_graph(3, {{0, 1, 1}, {1, 2, 1}})) == doctest::Approx(4.0 / 3.0));
    CHECK(avg_path_length(make_graph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}})) == 1.0);
    CHECK_THROWS_AS(avg_path_length(make_graph(2, {})), DomainError);
    Rng rng(15);
    for (int i = 0; i < 10; ++i) {
        const auto g = oracle::random_digraph(rng, 15, 0.08, 1);
        const double l = avg_path_length(g);
        CHECK(l == oracle::floyd_avg_path_length(g));
        CHECK(l >= 1.0);
    }
}

TEST_CASE("largest component") {
    const auto g = make_graph(5, {{0, 1, 1}, {3, 2, 1}, {4, 3, 1}});
    CHECK(largest_component(g) == std::vector<NodeIndex>{2, 3, 4});
    CHECK(largest_component(make_graph(4, {{0, 1, 1}, {2, 3, 1}})) == std::vector<NodeIndex>{0, 1});
}

TEST_CASE("era city grouping") {
    const auto t = fixture::table_from("id,name,generation,city\na,A,0,Makkah\nb,B,0, makkah \nc,C,8,Kufa\n");
    const auto table = era_city_table(t, 1);
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0].city == "Makkah");
    CHECK(table.rows[0].counts == std::array<std::int64_t, 4>{2, 0, 0, 0});
    CHECK(table.rows[1].city == "Kufa");
    CHECK(table.rows[1].counts == std::array<std::int64_t, 4>{0, 0, 1, 0});
    CHECK(per_era_counts(t) == std::map<int, std::int64_t>{{1, 2}, {3, 1}});
    CHECK(era_city_table(NarratorTable{}, 5).rows.empty());
    CHECK(per_era_counts(fixture::table_from("id,name,generation,city\nz,Z,12,\n")) ==
          std::map<int, std::int64_t>{{4, 1}});
}

TEST_CASE("other and unknown rows") {
    const auto t = fixture::table_from(
        "id,name,generation,city\na,A,0,Makkah\nb,B,1,Makkah\nc,C,8,Kufa\nd,D,9,\ne,E,,Basra\n");
    const auto table = era_city_table(t, 2);
    REQUIRE(table.rows.size() == 3);
    CHECK(table.rows[0].city == "Makkah");
    CHECK(table.rows[1].city == kOtherCityRow);
    CHECK(table.rows[2].city == kUnknownCityRow);
    CHECK(table.unknown_generation == 1);
}

TEST_CASE("era table sums match per-era counts") {
    Rng rng(77);
    const std::vector<std::string> cities{"Madinah", "madinah", "Kufa", "Basra ", "", "Makkah", "Sham"};
    for (int trial = 0; trial < 30; ++trial) {
        NarratorTable t;
        const auto n = rng.below(60);
        for (std::uint64_t i = 0; i < n; ++i) {
            std::optional<int> gen;
            if (rng.below(10) != 0) gen = static_cast<int>(rng.below(13));
            t.insert({"x" + std::to_string(i), "", gen, cities[rng.below(cities.size())]});
        }
        for (const std::int64_t threshold : {0, 3, 10}) {
            const auto table = era_city_table(t, threshold);
            const auto sums = table.column_sums();
            const auto per = per_era_counts(t);
            std::int64_t cells = 0;
            for (int era = 1; era <= 4; ++era) {
                const auto it = per.find(era);
                CHECK(sums[era - 1] == (it == per.end() ? 0 : it->second));
                cells += sums[era - 1];
            }
            CHECK(cells + table.unknown_generation == static_cast<std::int64_t>(t.size()));
        }
    }
}
