#include <cmath>
#include <stdexcept>
#include <random>

#include "doctest.h"
#include "fourwis/reeds_shepp.hpp"
#include "oracles/rs_oracle.hpp"

using namespace fourwis;

namespace {

RobotParams table_params() { return RobotParams{}; }

PoseDelta random_delta(std::mt19937& rng) {
    std::uniform_real_distribution<double> pos(-4.0, 4.0), ang(0.0, 2.0 * M_PI);
    return {pos(rng), pos(rng), ang(rng)};
}

PoseDelta invert(const PoseDelta& d) {
    const double c = std::cos(d.theta), s = std::sin(d.theta);
    return {-(c * d.x + s * d.y), s * d.x - c * d.y, wrap_to_2pi(-d.theta)};
}

Pose endpoint_of(const PoseDelta& d, double kappa) {
    const RSPath p = rs_shortest(d, kappa);
    return rs_endpoint(p, {0.0, 0.0, 0.0});
}

}  // namespace

TEST_CASE("identity and collinear deltas") {
    const RSPath zero = rs_shortest({0.0, 0.0, 0.0}, 1.0);
    CHECK(zero.empty());
    CHECK(zero.total_length == 0.0);

    const RSPath fwd = rs_shortest({2.5, 0.0, 0.0}, 1.0);
    REQUIRE(fwd.segments.size() == 1);
    CHECK(fwd.segments[0].steer == Steer::Straight);
    CHECK(fwd.segments[0].gear == 1);
    CHECK(fwd.total_length == doctest::Approx(2.5).epsilon(1e-12));

    const RSPath back = rs_shortest({-1.5, 0.0, 0.0}, 1.0);
    REQUIRE(back.segments.size() == 1);
    CHECK(back.segments[0].gear == -1);
    CHECK(back.total_length == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("endpoint fidelity, symmetry, scaling and lower bound") {
    std::mt19937 rng(42);
    for (int i = 0; i < 300; ++i) {
        const PoseDelta d = random_delta(rng);
        const double kappa = 1.0;
        const RSPath p = rs_shortest(d, kappa);
        REQUIRE_FALSE(p.segments.empty());
        CHECK(p.segments.size() <= 5);
        for (const RSSegment& seg : p.segments) {
            CHECK(seg.extent >= 0.0);
            if (seg.steer != Steer::Straight) CHECK(seg.extent <= M_PI + 1e-9);
        }

        const Pose end = rs_endpoint(p, {0.0, 0.0, 0.0});
        CHECK(std::abs(end.x - d.x) < 1e-9);
        CHECK(std::abs(end.y - d.y) < 1e-9);
        CHECK(std::abs(angle_diff(end.theta, d.theta)) < 1e-9);

        // symmetric metric
        const RSPath rev = rs_shortest(invert(d), kappa);
        CHECK(std::abs(rev.total_length - p.total_length) < 1e-9);

        // exact scaling law
        const double s = 2.75;
        const RSPath scaled = rs_shortest({d.x * s, d.y * s, d.theta}, kappa / s);
        CHECK(std::abs(scaled.total_length - s * p.total_length) < 1e-9 * s);

        // never shorter than the straight-line distance
        CHECK(p.total_length >= std::hypot(d.x, d.y) - 1e-12);
    }
}

TEST_CASE("small heading-only deltas match the enumeration oracle") {
    for (double theta : {0.08, 0.25, -0.15, 0.6}) {
        const RSPath p = rs_shortest({0.0, 0.0, wrap_to_2pi(theta)}, 1.0);
        const double oracle = rs_oracle::min_length(0.0, 0.0, theta);
        CHECK(p.total_length <= oracle + 1e-3);
        CHECK(p.total_length == doctest::Approx(oracle).epsilon(1e-6));
    }
}

TEST_CASE("deterministic resolution of the same delta") {
    const PoseDelta d{1.3, -0.8, 2.1};
    const RSPath a = rs_shortest(d, 1.7);
    const RSPath b = rs_shortest(d, 1.7);
    CHECK(a.word == b.word);
    REQUIRE(a.segments.size() == b.segments.size());
    for (std::size_t i = 0; i < a.segments.size(); ++i) {
        CHECK(a.segments[i].steer == b.segments[i].steer);
        CHECK(a.segments[i].gear == b.segments[i].gear);
        CHECK(a.segments[i].extent == b.segments[i].extent);
    }
}

TEST_CASE("mode-specific connections") {
    const RobotParams p = table_params();

    SUBCASE("parallel mode: aligned 3-4-5 translation") {
        const Pose start{1.0, 1.0, 0.7};
        const Pose goal{4.0, 5.0, 0.7};
        const auto path = mode_rs(start, goal, MotionMode::Parallel, p, 0.1);
        REQUIRE(path.has_value());
        CHECK(path->total_length == doctest::Approx(5.0).epsilon(1e-12));
        for (const Pose& s : sample_path(*path, start, 0.1))
            CHECK(s.theta == doctest::Approx(0.7).epsilon(1e-12));
        const Pose end = rs_endpoint(*path, start);
        CHECK(end.x == doctest::Approx(goal.x).epsilon(1e-12));
        CHECK(end.y == doctest::Approx(goal.y).epsilon(1e-12));
    }
    SUBCASE("parallel mode gated by heading misalignment") {
        CHECK_FALSE(mode_rs({0, 0, 0.0}, {1, 1, 0.2}, MotionMode::Parallel, p, 0.1));
        CHECK(mode_rs({0, 0, 0.0}, {1, 1, 0.05}, MotionMode::Parallel, p, 0.1));
    }
    SUBCASE("lateral mode reduces a pure lateral offset to a straight solve") {
        const double d = 2.0;
        const Pose start{0.0, 0.0, 0.0};
        const Pose goal{0.0, d, 0.0};  // directly to the robot's left
        const auto path = mode_rs(start, goal, MotionMode::Lateral, p, 0.1);
        REQUIRE(path.has_value());
        CHECK(path->total_length == doctest::Approx(d).epsilon(1e-12));
        REQUIRE(path->segments.size() == 1);
        CHECK(path->segments[0].steer == Steer::Straight);
        // samples keep the body heading convention
        for (const Pose& s : sample_path(*path, start, 0.25)) {
            CHECK(std::abs(angle_diff(s.theta, 0.0)) < 1e-12);
            CHECK(std::abs(s.x) < 1e-9);
        }
        const Pose end = rs_endpoint(*path, start);
        CHECK(end.y == doctest::Approx(d).epsilon(1e-12));
    }
    SUBCASE("lateral mode endpoint fidelity on random pose pairs") {
        std::mt19937 rng(5);
        std::uniform_real_distribution<double> pos(-3.0, 3.0), ang(0.0, 2 * M_PI);
        for (int i = 0; i < 100; ++i) {
            const Pose start{pos(rng), pos(rng), ang(rng)};
            const Pose goal{pos(rng), pos(rng), ang(rng)};
            const auto path = mode_rs(start, goal, MotionMode::Lateral, p, 0.1);
            REQUIRE(path.has_value());
            const Pose end = rs_endpoint(*path, start);
            CHECK(std::abs(end.x - goal.x) < 1e-9);
            CHECK(std::abs(end.y - goal.y) < 1e-9);
            CHECK(std::abs(angle_diff(end.theta, goal.theta)) < 1e-9);
        }
    }
    SUBCASE("ackermann mode respects its curvature") {
        const auto path = mode_rs({0, 0, 0}, {0.2, 0.9, 2.0}, MotionMode::Ackermann, p, 0.1);
        REQUIRE(path.has_value());
        CHECK(path->curvature ==
              doctest::Approx(max_curvature(p, MotionMode::Ackermann)).epsilon(1e-12));
    }
}

TEST_CASE("path sampling") {
    SUBCASE("zero-length path samples to the start pose") {
        RSPath empty;
        const auto s = sample_path(empty, {1, 2, 0.5}, 0.1);
        REQUIRE(s.size() == 1);
        CHECK(s[0].x == 1.0);
    }
    SUBCASE("straight path sampling count and collinearity") {
        const RSPath p = rs_shortest({1.0, 0.0, 0.0}, 1.0);
        const auto s = sample_path(p, {0, 0, 0}, 0.25);
        REQUIRE(s.size() == 5);
        for (const Pose& q : s) CHECK(std::abs(q.y) < 1e-12);
        CHECK(s.back().x == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("heading-only delta ends on the analytic endpoint") {
        for (double th : {0.4, 2.0, 5.9}) {
            const RSPath p = rs_shortest({0.0, 0.0, th}, 1.0);
            const auto s = sample_path(p, {0, 0, 0}, 0.05);
            const Pose end = s.back();
            CHECK(std::abs(end.x) < 1e-6);
            CHECK(std::abs(end.y) < 1e-6);
            CHECK(std::abs(angle_diff(end.theta, th)) < 1e-6);
            // spacing respected
            for (std::size_t i = 1; i < s.size(); ++i)
                CHECK(std::hypot(s[i].x - s[i - 1].x, s[i].y - s[i - 1].y) <= 0.051);
        }
    }
}
