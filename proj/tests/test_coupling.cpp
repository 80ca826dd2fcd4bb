#include <doctest.h>

#include "burnside/analysis.hpp"
#include "burnside/coupling.hpp"
#include "burnside/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

using namespace burnside;

TEST_CASE("induced_permutation") {
    // 3-cycle 1 -> 2 -> 3 -> 1
    Permutation sigma{{1, 2, 3}, {2, 3, 1}};
    SUBCASE("full domain") {
        auto ind = induced_permutation(sigma, {1, 2, 3});
        CHECK(ind.image == sigma.image);
    }
    SUBCASE("singleton maps to identity") {
        auto ind = induced_permutation(sigma, {2});
        CHECK(ind.image == std::vector<int>{2});
    }
    SUBCASE("deleting 2 forces the transposition (1 3)") {
        auto ind = induced_permutation(sigma, {1, 3});
        CHECK(ind.domain == std::vector<int>{1, 3});
        CHECK(ind.image == std::vector<int>{3, 1});
    }
    CHECK_THROWS_AS(induced_permutation(sigma, {4}), std::invalid_argument);
}

TEST_CASE("induced permutation of a uniform shuffle is uniform") {
    RngStream rng(17);
    const long draws = 60000;
    std::map<std::vector<int>, long> counts;
    for (long i = 0; i < draws; ++i) {
        auto sigma = uniform_permutation({1, 2, 3, 4, 5}, rng);
        counts[induced_permutation(sigma, {1, 3, 5}).image] += 1;
    }
    CHECK(counts.size() == 6);
    for (const auto& [image, count] : counts) {
        double expected = draws / 6.0;
        CHECK(std::abs(count - expected) < 5.0 * std::sqrt(expected));
    }
}

TEST_CASE("maximal_coupling_uniform degenerate cases") {
    RngStream rng(2);
    for (int i = 0; i < 50; ++i) {
        auto [a, b] = maximal_coupling_uniform({4, 7, 9}, {4, 7, 9}, rng);
        CHECK(a == b);
    }
    for (int i = 0; i < 50; ++i) {
        auto [a, b] = maximal_coupling_uniform({1, 2}, {3, 4}, rng);
        CHECK(a != b);
    }
    CHECK_THROWS_AS(maximal_coupling_uniform({}, {1}, rng), std::invalid_argument);
}

TEST_CASE("maximal_coupling_uniform equality probability |A cap B|/max(|A|,|B|)") {
    RngStream rng(23);
    const long draws = 100000;
    struct Shape {
        std::vector<int> A, B;
    };
    std::vector<Shape> shapes{
        {{1, 2}, {1}},             // the lemma's worked example: P(equal) = 1/2
        {{1, 2, 3}, {2, 3, 4}},    // P = 2/3
        {{1, 2, 3, 4}, {3, 4}},    // P = 2/4
        {{5}, {5, 6, 7}},          // smaller set on the left
        {{1, 2, 3}, {1, 4, 5}},    // equal sizes, partial overlap: P = 1/3
    };
    for (const auto& shape : shapes) {
        std::set<int> inter;
        for (int v : shape.A)
            if (std::count(shape.B.begin(), shape.B.end(), v)) inter.insert(v);
        const double p =
            static_cast<double>(inter.size()) / std::max(shape.A.size(), shape.B.size());
        long equal = 0;
        std::map<int, long> left_counts, right_counts;
        for (long i = 0; i < draws; ++i) {
            auto [a, b] = maximal_coupling_uniform(shape.A, shape.B, rng);
            equal += a == b;
            ++left_counts[a];
            ++right_counts[b];
        }
        const double sigma = std::sqrt(std::max(p * (1 - p), 1e-9) / draws);
        CHECK(std::abs(equal / static_cast<double>(draws) - p) < 4 * sigma + 1e-9);
        // marginals uniform on A and B
        for (int v : shape.A) {
            double expected = draws / static_cast<double>(shape.A.size());
            CHECK(std::abs(left_counts[v] - expected) < 5.0 * std::sqrt(expected));
        }
        for (int v : shape.B) {
            double expected = draws / static_cast<double>(shape.B.size());
            CHECK(std::abs(right_counts[v] - expected) < 5.0 * std::sqrt(expected));
        }
    }
}

TEST_CASE("coupled_step keeps coalesced pairs together") {
    RngStream rng(9);
    Tuple u{{1, 2, 1}, 4};
    CoupledPair pair{u, u};
    for (int t = 0; t < 50; ++t) {
        pair = coupled_step(pair, rng);
        CHECK(pair.coalesced());
    }
}

TEST_CASE("coupled pairs never separate once coalesced") {
    RngStream rng(10);
    for (int trial = 0; trial < 300; ++trial) {
        CoupledPair pair{Tuple{{1, 1, 1}, 3}, Tuple{{1, 2, 3}, 3}};
        bool met = false;
        for (int t = 0; t < 30; ++t) {
            pair = coupled_step(pair, rng);
            if (met) CHECK(pair.coalesced());
            met = met || pair.coalesced();
        }
    }
}

TEST_CASE("left marginal of coupled_step has the exact one-step lumped law") {
    const int n = 3, k = 3;
    RngStream rng(33);
    const long draws = 100000;
    std::map<std::vector<int>, long> counts;
    for (long i = 0; i < draws; ++i) {
        CoupledPair pair{Tuple{{1, 1, 1}, k}, Tuple{{1, 2, 3}, k}};
        pair = coupled_step(pair, rng);
        ++counts[from_tuple(pair.left).rgs];
    }
    // row 1 of the 5x5 lumped matrix: (5/9, 1/9, 1/9, 1/9, 1/9)
    MomentTable table(n, k);
    double stat = 0.0;
    for (const auto& y : enumerate_partitions(n)) {
        double p = lumped_transition(table, 1, block_count(y)).convert_to<double>();
        double expected = p * draws;
        double diff = counts[y.rgs] - expected;
        stat += diff * diff / expected;
    }
    CHECK(stat < 18.47);  // chi-square 0.999 quantile, df = 4
}

TEST_CASE("right marginal of coupled_step has the exact one-step lumped law") {
    const int n = 3, k = 4;
    RngStream rng(34);
    const long draws = 100000;
    std::map<std::vector<int>, long> counts;
    for (long i = 0; i < draws; ++i) {
        CoupledPair pair{Tuple{{1, 1, 1}, k}, Tuple{{2, 3, 4}, k}};
        pair = coupled_step(pair, rng);
        ++counts[from_tuple(pair.right).rgs];
    }
    MomentTable table(n, k);
    double stat = 0.0;
    for (const auto& y : enumerate_partitions(n)) {
        double p = lumped_transition(table, 3, block_count(y)).convert_to<double>();
        double expected = p * draws;
        double diff = counts[y.rgs] - expected;
        stat += diff * diff / expected;
    }
    CHECK(stat < 18.47);
}

TEST_CASE("disjoint supports: per-coordinate match probability >= 1/(2k)") {
    // Case 2 of the coupling construction: u=(1,1), v=(2,2) with k=4
    RngStream rng(35);
    const long draws = 100000;
    long matches = 0;
    for (long i = 0; i < draws; ++i) {
        CoupledPair pair{Tuple{{1, 1}, 4}, Tuple{{2, 2}, 4}};
        pair = coupled_step(pair, rng);
        matches += pair.left.coords[0] == pair.right.coords[0];
    }
    const double floor = 1.0 / 8.0;
    const double sigma = std::sqrt(floor * (1 - floor) / draws);
    CHECK(matches / static_cast<double>(draws) >= floor - 3 * sigma);
}

TEST_CASE("coalescence_experiment") {
    RngStream rng(40);
    auto curve = coalescence_experiment(3, 3, 25, 20000, rng);
    CHECK(curve.survival[0] == 1.0);  // distinct starts
    for (size_t i = 1; i < curve.survival.size(); ++i)
        CHECK(curve.survival[i] <= curve.survival[i - 1]);
    SUBCASE("survival upper-bounds the exact lumped TV curve") {
        auto tv = distance_curve(3, 3, 25);
        for (size_t i = 0; i < curve.survival.size(); ++i) {
            // compare expected counts with Poisson-scale slack so the check
            // stays meaningful when d(t) drops below 1/trials
            double d_count = tv.d_values[i].convert_to<double>() * curve.trials;
            double s_count = curve.survival[i] * curve.trials;
            CHECK(s_count + 3.0 * std::sqrt(d_count) + 3.0 >= d_count);
        }
    }
}

TEST_CASE("coalescence CSV includes the analytic bound column") {
    RngStream rng(41);
    auto curve = coalescence_experiment(2, 2, 3, 100, rng);
    auto csv = coalescence_csv(curve);
    CHECK(csv.find("t,survival,bound") != std::string::npos);
}
