#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "fourwis/path_io.hpp"
#include "fourwis/scenario.hpp"

using namespace fourwis;

namespace {

const char* kScenarioText =
    "# comment\n"
    "label: demo\n"
    "map: ../maps/maze.txt\n"
    "start: 2.0 1.2 0.0 1\n"
    "goal: 13.7 3.4 0.0\n"
    "modes: 1 2 3\n"
    "t_switch: 1.5\n"
    "c_reverse: 3\n"
    "n_theta: 64\n";

}  // namespace

TEST_CASE("scenario parsing") {
    SUBCASE("full file with overrides") {
        const Scenario s = parse_scenario(kScenarioText, "/base/dir");
        CHECK(s.label == "demo");
        CHECK(s.map_path == "/base/maps/maze.txt");  // normalized
        CHECK(s.start.x == 2.0);
        CHECK(s.start.mode == MotionMode::Ackermann);
        CHECK(s.goal.x == 13.7);
        CHECK(s.params.t_switch == 1.5);
        CHECK(s.config.c_reverse == 3.0);
        CHECK(s.config.n_theta == 64);
        // untouched defaults
        CHECK(s.params.wheelbase == 0.68);
        CHECK(s.config.c_steer == 1.0);
        CHECK(s.config.modes.size() == 3);
    }
    SUBCASE("errors carry line numbers and reasons") {
        auto fails_with = [](const std::string& text, const std::string& needle) {
            try {
                parse_scenario(text, ".");
            } catch (const std::runtime_error& ex) {
                return std::string(ex.what()).find(needle) != std::string::npos;
            }
            return false;
        };
        CHECK(fails_with("map: m.txt\nstart: 0 0 0 1\n", "missing 'goal'"));
        CHECK(fails_with("map: m.txt\ngoal: 1 1 0\nstart: 0 0 0 7\n", "mode"));
        CHECK(fails_with("map: m.txt\ngoal: 1 1 0\nstart: 0 0 0 1\nwat: 3\n", "unknown key"));
        CHECK(fails_with("junk\n", "line 1"));
        CHECK(fails_with("map: m.txt\ngoal: 1 1 0\nstart: 0 0 0 2\nmodes: 1 3\n",
                         "start mode"));
    }
}

TEST_CASE("path file round trip") {
    PlanResult r;
    r.waypoints = {
        {0.0, 0.0, 0.0, MotionMode::Ackermann, 1, 0.0},
        {0.1234567, 0.0, 0.0, MotionMode::Ackermann, 1, 0.1234567},
        {0.1234567, 0.0, 0.0, MotionMode::Lateral, 1, 0.1234567},
        {0.1234567, 0.5, 0.0, MotionMode::Lateral, 1, 0.6234567},
    };
    r.tail_start_length = 0.1234567;
    const RobotParams p;
    const PlanConfig cfg;
    const PathFile pf = make_path_file(r, "demo", p, cfg);

    SUBCASE("records are quantized to six decimals") {
        CHECK(pf.records[1].x == doctest::Approx(0.123457).epsilon(1e-12));
        CHECK(pf.switches == 1);
    }
    SUBCASE("text round trip preserves everything") {
        const std::string text = path_file_to_text(pf);
        const PathFile back = parse_path_file(text);
        CHECK(back.label == "demo");
        CHECK(back.cost == doctest::Approx(pf.cost).epsilon(1e-15));
        CHECK(back.length == doctest::Approx(pf.length).epsilon(1e-15));
        CHECK(back.switches == pf.switches);
        CHECK(back.tail_start == doctest::Approx(pf.tail_start).epsilon(1e-15));
        REQUIRE(back.records.size() == pf.records.size());
        for (std::size_t i = 0; i < pf.records.size(); ++i) {
            CHECK(back.records[i].x == pf.records[i].x);
            CHECK(back.records[i].y == pf.records[i].y);
            CHECK(back.records[i].theta == pf.records[i].theta);
            CHECK(back.records[i].mode == pf.records[i].mode);
            CHECK(back.records[i].gear == pf.records[i].gear);
            CHECK(back.records[i].cum_length == pf.records[i].cum_length);
        }
        // serialization is deterministic
        CHECK(path_file_to_text(parse_path_file(text)) == text);
    }
    SUBCASE("header totals replay exactly over the parsed records") {
        const PathFile back = parse_path_file(path_file_to_text(pf));
        const PathMetrics m = path_metrics(back.records, p, cfg, back.tail_start);
        CHECK(m.cost == doctest::Approx(back.cost).epsilon(1e-15));
        CHECK(m.length == doctest::Approx(back.length).epsilon(1e-15));
    }
    SUBCASE("malformed records are rejected") {
        CHECK_THROWS_AS(parse_path_file("# cost: 1\n1 2 3 9 1 0\n"), std::runtime_error);
        CHECK_THROWS_AS(parse_path_file("# cost: 1\n1 2 3 1 0 0\n"), std::runtime_error);
        CHECK_THROWS_AS(parse_path_file("# cost: 1\n"), std::runtime_error);
    }
}
