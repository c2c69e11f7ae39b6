#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "polar/channel.hpp"

using namespace polar;

namespace {

CompoundBsc random_compound(std::mt19937_64& rng, int max_comps) {
    std::uniform_int_distribution<int> cd(1, max_comps);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const int omega = cd(rng);
    std::vector<BscComponent> comps(omega);
    double total = 0.0;
    for (auto& c : comps) {
        c.beta = unif(rng) + 0.05;
        c.epsilon = unif(rng);
        total += c.beta;
    }
    for (auto& c : comps) c.beta /= total;
    return CompoundBsc::from_components(std::move(comps));
}

} // namespace

TEST_CASE("bsc soft values") {
    const double l = bsc_soft(+1, 0.5);
    CHECK(soft_g(l) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(soft_h(l) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(l == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK(soft_q(l) == doctest::Approx(0.75).epsilon(1e-12));

    CHECK(bsc_soft(-1, 0.0) == 0.0);
    CHECK(bsc_soft(-1, 1.0) == -std::numeric_limits<double>::infinity());
    CHECK(bsc_soft(+1, 1.0) == std::numeric_limits<double>::infinity());
    CHECK(soft_g(bsc_soft(-1, 1.0)) == -1.0);
    CHECK(soft_q(bsc_soft(-1, 1.0)) == 0.0);

    CHECK_THROWS_AS(bsc_soft(0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(bsc_soft(+1, 1.5), std::invalid_argument);
}

TEST_CASE("bsc observe") {
    Codeword zeros;
    zeros.bits.assign(100000, 0);

    // eps = 1 never flips
    auto clean = bsc_observe(zeros, 1.0, 5);
    CHECK(std::count(clean.begin(), clean.end(), -1) == 0);

    // deterministic for a fixed seed
    CHECK(bsc_observe(zeros, 0.5, 9) == bsc_observe(zeros, 0.5, 9));

    // flip fraction 0.25 within the 3-sigma binomial band at 1e5 positions
    auto noisy = bsc_observe(zeros, 0.5, 9);
    const double flips = static_cast<double>(std::count(noisy.begin(), noisy.end(), -1));
    CHECK(std::abs(flips / 1e5 - 0.25) < 0.005);
}

TEST_CASE("compound channel canonical form") {
    CompoundBsc w = CompoundBsc::from_components(
        {{0.25, 0.8}, {0.5, 0.2}, {0.25, 0.8 + 1e-14}});
    CHECK(w.size() == 2);
    CHECK(w.components()[0].epsilon == 0.2);
    CHECK(w.components()[1].beta == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(CompoundBsc::from_components({{0.5, 0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(CompoundBsc::from_components({{1.0, 1.5}}), std::invalid_argument);
    CHECK_THROWS_AS(CompoundBsc::from_components({}), std::invalid_argument);
}

TEST_CASE("moments of reference channels") {
    ChannelMoments m1 = moments(CompoundBsc::bsc(0.5));
    CHECK(m1.d == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(m1.a == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(m1.b == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(m1.z == doctest::Approx(0.8660254037844386).epsilon(1e-12));
    CHECK(m1.v == doctest::Approx(0.4330127018922193).epsilon(1e-12));

    ChannelMoments m2 = moments(CompoundBsc::bsc(1.0));
    CHECK(m2.d == 1.0);
    CHECK(m2.a == 1.0);
    CHECK(m2.b == 0.0);
    CHECK(m2.z == 0.0);
    CHECK(m2.v == 0.0);

    ChannelMoments m3 = moments(CompoundBsc::from_components({{0.5, 0.2}, {0.5, 0.8}}));
    CHECK(m3.a == doctest::Approx(0.34).epsilon(1e-12));
    CHECK(m3.b == doctest::Approx(0.66).epsilon(1e-12));
}

TEST_CASE("degrade and upgrade transforms") {
    CompoundBsc d = degrade(CompoundBsc::bsc(0.5));
    CHECK(d.size() == 1);
    CHECK(d.components()[0].epsilon == doctest::Approx(0.25).epsilon(1e-15));

    CompoundBsc mix = degrade(CompoundBsc::from_components({{0.5, 0.0}, {0.5, 1.0}}));
    REQUIRE(mix.size() == 2);
    CHECK(mix.components()[0].epsilon == 0.0);
    CHECK(mix.components()[0].beta == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(mix.components()[1].epsilon == 1.0);
    CHECK(mix.components()[1].beta == doctest::Approx(0.25).epsilon(1e-12));

    CHECK(degrade(CompoundBsc::bsc(1.0)).components()[0].epsilon == 1.0);

    CompoundBsc u = upgrade(CompoundBsc::bsc(0.5));
    CHECK(u.size() == 1);
    CHECK(u.components()[0].epsilon == doctest::Approx(std::sqrt(0.4375)).epsilon(1e-12));
    CHECK(upgrade(CompoundBsc::bsc(1.0)).components()[0].epsilon == 1.0);
    CHECK(upgrade(CompoundBsc::bsc(0.0)).components()[0].epsilon == 0.0);
}

TEST_CASE("moment step and trajectories") {
    CHECK(moment_step(0.75, 0) == 0.5625);
    CHECK(moment_step(0.75, 1) == 0.9375);
    CHECK(moment_step(1.0, 0) == 1.0);
    CHECK(moment_step(1.0, 1) == 1.0);
    CHECK(moment_step(0.0, 0) == 0.0);
    CHECK(moment_step(0.0, 1) == 0.0);
    CHECK_THROWS_AS(moment_step(1.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(moment_step(0.5, 2), std::invalid_argument);

    auto t01 = moments_along_path(0.75, Path::from_string("01"));
    CHECK(t01 == std::vector<double>{0.75, 0.5625, 0.80859375});
    auto t10 = moments_along_path(0.75, Path::from_string("10"));
    CHECK(t10 == std::vector<double>{0.75, 0.9375, 0.87890625});
    CHECK(moments_along_path(0.3, Path{}) == std::vector<double>{0.3});
}

TEST_CASE("b moment table matches trajectories and counts steps") {
    uint64_t steps = 0;
    auto tab = b_moment_table(4, 0.6, &steps);
    CHECK(steps == 30); // 2^5 - 2
    for (uint64_t idx = 0; idx < 16; ++idx) {
        const Path p = Path::from_index(idx, 4);
        CHECK(tab[idx] == moments_along_path(0.6, p).back());
    }
}

TEST_CASE("bhattacharyya sandwiches") {
    auto b1 = bhattacharyya_bounds(moments(CompoundBsc::bsc(0.5)));
    CHECK(b1.lower_b == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(b1.upper_b == doctest::Approx(0.8660254037844386).epsilon(1e-12));
    CHECK(b1.z == doctest::Approx(b1.upper_b).epsilon(1e-12)); // Z = sqrt(B) for a pure BSC
    CHECK(b1.ok());

    auto b0 = bhattacharyya_bounds(moments(CompoundBsc::bsc(0.0)));
    CHECK(b0.z == 1.0);
    CHECK(b0.lower_b == 1.0);
    CHECK(b0.upper_b == 1.0);
    CHECK(b0.ok());

    auto bm = bhattacharyya_bounds(moments(CompoundBsc::from_components({{0.5, 0.2}, {0.5, 0.8}})));
    CHECK(bm.z == doctest::Approx(0.7898979485566356).epsilon(1e-9));
    CHECK(bm.lower_b == doctest::Approx(0.66).epsilon(1e-12));
    CHECK(bm.ok());
}

TEST_CASE("scalar recursion matches ensemble enumeration from any BSC") {
    // walk the full transform tree to depth 8 and compare both routes
    for (double eps : {0.1, 0.5, 0.9, 0.98}) {
        struct Node {
            CompoundBsc w;
            double b;
            int depth;
        };
        std::vector<Node> stack{{CompoundBsc::bsc(eps), 1.0 - eps * eps, 0}};
        while (!stack.empty()) {
            Node node = std::move(stack.back());
            stack.pop_back();
            const ChannelMoments mom = moments(node.w);
            CHECK(std::abs(mom.b - node.b) < 1e-10);
            CHECK(std::abs(mom.a - (1.0 - node.b)) < 1e-10);
            if (node.depth == 8) continue;
            stack.push_back({upgrade(node.w), moment_step(node.b, 0), node.depth + 1});
            stack.push_back({degrade(node.w), moment_step(node.b, 1), node.depth + 1});
        }
    }
}

TEST_CASE("degrade squares A and upgrade squares B on random compounds") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 200; ++rep) {
        CompoundBsc w = random_compound(rng, 5);
        const ChannelMoments base = moments(w);

        const ChannelMoments deg = moments(degrade(w));
        CHECK(deg.a == doctest::Approx(base.a * base.a).epsilon(1e-12));
        const ChannelMoments upg = moments(upgrade(w));
        CHECK(upg.b == doctest::Approx(base.b * base.b).epsilon(1e-12));
    }
}

TEST_CASE("weight conservation and sandwiches over random transform trees") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 30; ++rep) {
        CompoundBsc w = random_compound(rng, 4);
        for (int depth = 0; depth < 3; ++depth) {
            double total = 0.0;
            for (const auto& c : w.components()) total += c.beta;
            CHECK(std::abs(total - 1.0) < 1e-12);
            CHECK(bhattacharyya_bounds(moments(w)).ok());
            w = (rng() & 1) ? degrade(w) : upgrade(w);
        }
    }
}

TEST_CASE("one-step growth of A is at most a doubling") {
    for (int i = 0; i <= 1000; ++i) {
        const double a = static_cast<double>(i) / 1000.0;
        const double lhs = 1.0 - (1.0 - a) * (1.0 - a);
        CHECK(lhs == doctest::Approx(2.0 * a - a * a).epsilon(1e-15));
        CHECK(lhs <= 2.0 * a + 1e-15);
    }
}

TEST_CASE("component cap enforcement") {
    std::vector<BscComponent> comps(1001);
    for (int i = 0; i < 1001; ++i)
        comps[static_cast<size_t>(i)] = {1.0 / 1001.0, static_cast<double>(i) / 2000.0};
    CompoundBsc w = CompoundBsc::from_components(std::move(comps));
    CHECK_THROWS_AS(degrade(w), std::runtime_error);
}
