#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "relwell/lightcone.hpp"

using namespace relwell;

TEST_CASE("to_lightcone: direct values") {
    // z = 0 forces x = 1, y = ct
    const auto a = to_lightcone({0.0, 5.0});
    CHECK(a.x == 1.0);
    CHECK(a.y == 5.0);
    // (z=3, ct=5) -> (x=2, y=4)
    const auto b = to_lightcone({3.0, 5.0});
    CHECK(b.x == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(b.y == doctest::Approx(4.0).epsilon(1e-14));
    // rapidity identity: z = ct tanh(eta) -> x = e^eta
    const double eta = 0.5, t = 3.7;
    const auto c = to_lightcone({t * std::tanh(eta), t});
    CHECK(c.x == doctest::Approx(std::exp(eta)).epsilon(1e-14));
}

TEST_CASE("from_lightcone: inverse values and round trip") {
    const auto p = from_lightcone({1.0, 5.0});
    CHECK(p.z == 0.0);
    CHECK(p.t == doctest::Approx(5.0));
    const auto q = from_lightcone({2.0, 4.0});
    CHECK(q.z == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(q.t == doctest::Approx(5.0).epsilon(1e-14));

    std::mt19937 rng(321);
    std::uniform_real_distribution<double> td(0.1, 100.0), frac(-0.999, 0.999);
    for (int i = 0; i < 1000; ++i) {
        const double t = td(rng);
        const double z = frac(rng) * t;
        const auto lc = to_lightcone({z, t});
        const auto back = from_lightcone(lc);
        CHECK(std::abs(back.z - z) <= 1e-13 * std::max(1.0, std::abs(z)));
        CHECK(std::abs(back.t - t) <= 1e-13 * t);
    }
}

TEST_CASE("wall invariance: z = vt maps to a fixed x for all t") {
    PhysicalParams p;
    p.v = 0.37;
    const double xw = wall_image(p);
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> td(1e-3, 1e3);
    for (int i = 0; i < 50; ++i) {
        const double t = td(rng);
        const auto lc = to_lightcone({p.v * t, t});
        CHECK(std::abs(lc.x - xw) <= 1e-13 * xw);
    }
    // fixed wall z = 0 maps to x = 1 exactly
    for (int i = 0; i < 20; ++i) {
        CHECK(to_lightcone({0.0, td(rng)}).x == 1.0);
    }
}

TEST_CASE("wall_image values") {
    PhysicalParams p;
    p.v = 0.0;
    CHECK(wall_image(p) == 1.0);  // degenerate geometry, rejected by quantizers
    p.v = 0.6;
    CHECK(wall_image(p) == doctest::Approx(2.0).epsilon(1e-14));
    p.v = std::tanh(pi);
    CHECK(wall_image(p) == doctest::Approx(std::exp(pi)).epsilon(1e-13));
    p.v = 1.0;
    CHECK_THROWS_AS(wall_image(p), DomainError);
    p.v = -1.5;
    CHECK_THROWS_AS(wall_image(p), DomainError);
}

TEST_CASE("domain rejection near and outside the cone") {
    CHECK_THROWS_AS(to_lightcone({1.0, 1.0}), DomainError);      // on the cone
    CHECK_THROWS_AS(to_lightcone({2.0, 1.0}), DomainError);      // outside
    CHECK_THROWS_AS(to_lightcone({0.0, -1.0}), DomainError);     // past cone
    CHECK_THROWS_AS(to_lightcone({1.0 - 1e-14, 1.0}), DomainError);  // edge band
    CHECK_THROWS_AS(from_lightcone({-1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(from_lightcone({1.0, 0.0}), DomainError);
}

TEST_CASE("jacobian agrees with finite differences") {
    const SpacetimePoint pt{0.8, 2.5};
    const auto jac = lightcone_jacobian(pt);
    const double h = 1e-6;
    auto fd = [&](auto&& get, bool along_z) {
        const SpacetimePoint pp{pt.z + (along_z ? h : 0.0), pt.t + (along_z ? 0.0 : h)};
        const SpacetimePoint pm{pt.z - (along_z ? h : 0.0), pt.t - (along_z ? 0.0 : h)};
        return (get(to_lightcone(pp)) - get(to_lightcone(pm))) / (2.0 * h);
    };
    CHECK(jac.dx_dz == doctest::Approx(fd([](auto q) { return q.x; }, true)).epsilon(1e-8));
    CHECK(jac.dx_dt == doctest::Approx(fd([](auto q) { return q.x; }, false)).epsilon(1e-8));
    CHECK(jac.dy_dz == doctest::Approx(fd([](auto q) { return q.y; }, true)).epsilon(1e-8));
    CHECK(jac.dy_dt == doctest::Approx(fd([](auto q) { return q.y; }, false)).epsilon(1e-8));
}
