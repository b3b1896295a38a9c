#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "patern/world.hpp"

using namespace patern;

namespace {

double max_pixel(const PatchObservation& p) {
    float mx = 0.0f;
    for (float v : p.pixels) mx = std::max(mx, v);
    return mx;
}

}  // namespace

TEST_CASE("noise-free patch equals base color under identity lighting") {
    auto t = fixtures::make_terrain(0, "flat", 0.3, 0.5, 0.7, 0.0, 4.0, 2, 5.0, 0.1, 0.01);
    auto world = fixtures::uniform_world(t);
    auto patch = generate_patch(world, {4.0, 4.0, 0.0}, 99);
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < kPatchSize * kPatchSize; ++i)
            REQUIRE(patch.pixels[c * kPatchSize * kPatchSize + i] ==
                    Catch::Approx(t.base_color[c]).margin(1e-12));
}

TEST_CASE("explicit identity lighting is bit-identical to default") {
    auto world = fixtures::uniform_world(fixtures::rocks());
    auto a = generate_patch(world, {3.2, 4.7, 0.3}, 5);
    world.lighting.brightness_scale = 1.0;
    world.lighting.color_shift[0] = 0.0;
    auto b = generate_patch(world, {3.2, 4.7, 0.3}, 5);
    REQUIRE(a.pixels == b.pixels);
}

TEST_CASE("brightness scaling matches a pixelwise oracle") {
    auto t = fixtures::make_terrain(0, "white", 1.0, 1.0, 1.0, 0.2, 5.0, 3, 5.0, 0.1, 0.0);
    auto world = fixtures::uniform_world(t);
    const RobotState s{4.0, 4.0, 0.0};
    auto day = generate_patch(world, s, 7);
    REQUIRE(max_pixel(day) == Catch::Approx(1.0).margin(1e-9));

    world.lighting.brightness_scale = 0.3;
    auto dim = generate_patch(world, s, 7);
    // Oracle: scale the identity-lit patch pixelwise and clamp.
    for (std::size_t i = 0; i < day.pixels.size(); ++i) {
        const float expect = std::min(1.0f, std::max(0.0f, day.pixels[i] * 0.3f));
        REQUIRE(dim.pixels[i] == Catch::Approx(expect).margin(1e-6));
    }
    REQUIRE(max_pixel(dim) == Catch::Approx(0.3).margin(1e-6));
}

TEST_CASE("patch generation is deterministic per seed and in range") {
    auto world = fixtures::uniform_world(fixtures::grass());
    auto a = generate_patch(world, {2.5, 2.5, 0.0}, 11);
    auto b = generate_patch(world, {2.5, 2.5, 0.0}, 11);
    auto c = generate_patch(world, {2.5, 2.5, 0.0}, 12);
    REQUIRE(a.pixels == b.pixels);
    REQUIRE(a.pixels != c.pixels);
    for (float v : a.pixels) {
        REQUIRE(v >= 0.0f);
        REQUIRE(v <= 1.0f);
    }
}

TEST_CASE("out-of-bounds states are rejected") {
    auto world = fixtures::uniform_world(fixtures::concrete());
    REQUIRE_THROWS_AS(generate_patch(world, {-0.1, 2.0, 0.0}, 1), BoundsError);
    REQUIRE_THROWS_AS(generate_proprio(world, {2.0, 9.1, 0.0}, 1), BoundsError);
    REQUIRE_THROWS_AS(terrain_at(world, {8.0, 1.0, 0.0}), BoundsError);
}

TEST_CASE("silent terrain produces all-zero proprio channels") {
    auto t = fixtures::make_terrain(0, "silent", 0.5, 0.5, 0.5, 0.1, 4.0, 2, 5.0, 0.0, 0.0);
    auto world = fixtures::uniform_world(t);
    auto win = generate_proprio(world, {4.0, 4.0, 0.0}, 3);
    for (float v : win.channels) REQUIRE(v == 0.0f);
    REQUIRE(win.sample_count == 400);
    REQUIRE(win.channel_count == 6);
}

TEST_CASE("lighting has no effect on proprio windows") {
    auto world = fixtures::uniform_world(fixtures::rocks());
    auto day = generate_proprio(world, {3.0, 3.0, 0.1}, 21);
    world.lighting.brightness_scale = 0.2;
    world.lighting.color_shift[2] = 0.05;
    world.lighting.shadow = ShadowField{1.0, 0.0, 4.0, 0.4};
    auto night = generate_proprio(world, {3.0, 3.0, 0.1}, 21);
    REQUIRE(day.channels == night.channels);
}

TEST_CASE("proprio spectral peak lands at the dominant frequency") {
    // 5 Hz pure sine at 200 Hz sampling: the naive DFT oracle must peak at
    // bin k = 5 Hz * T / fs = 10.
    auto t = fixtures::make_terrain(0, "tone", 0.5, 0.5, 0.5, 0.0, 4.0, 1, 5.0, 1.0, 0.0);
    auto world = fixtures::uniform_world(t);
    auto win = generate_proprio(world, {4.0, 4.0, 0.0}, 17);

    std::vector<double> ch0(static_cast<std::size_t>(win.sample_count));
    for (int i = 0; i < win.sample_count; ++i) ch0[static_cast<std::size_t>(i)] = win.at(0, i);
    auto Y = oracles::naive_dft(ch0);
    std::size_t peak = 0;
    double best = -1.0;
    for (std::size_t k = 1; k <= ch0.size() / 2; ++k) {
        if (std::norm(Y[k]) > best) {
            best = std::norm(Y[k]);
            peak = k;
        }
    }
    REQUIRE(peak == 10);
}

TEST_CASE("terrain lookup uses the floor convention") {
    auto world = fixtures::split_world(fixtures::concrete(), fixtures::grass());
    SECTION("cell centers") {
        REQUIRE(terrain_at(world, {0.5, 0.5, 0.0}) == 0);
        REQUIRE(terrain_at(world, {7.5, 7.5, 0.0}) == 1);
    }
    SECTION("boundary states fall into the cell starting at the boundary") {
        // x = 4.0 is the shared edge of cells 3 and 4; floor picks cell 4.
        REQUIRE(terrain_at(world, {4.0, 1.0, 0.0}) == 1);
        REQUIRE(terrain_at(world, {3.999999, 1.0, 0.0}) == 0);
    }
    SECTION("uniform world returns its only id everywhere") {
        auto uni = fixtures::uniform_world(fixtures::rocks());
        REQUIRE(terrain_at(uni, {0.01, 7.9, 0.0}) == 2);
        REQUIRE(terrain_at(uni, {6.3, 2.2, 0.0}) == 2);
    }
}

TEST_CASE("unicycle step matches closed forms") {
    SECTION("straight line") {
        auto s = step({0, 0, 0}, {1.0, 0.0}, 0.1);
        REQUIRE(s.x == Catch::Approx(0.1).margin(1e-15));
        REQUIRE(s.y == Catch::Approx(0.0).margin(1e-15));
        REQUIRE(s.theta == Catch::Approx(0.0).margin(1e-15));
    }
    SECTION("zero action is the identity") {
        RobotState s0{2.0, 3.0, 0.7};
        auto s = step(s0, {0.0, 0.0}, 0.5);
        REQUIRE(s.x == s0.x);
        REQUIRE(s.y == s0.y);
        REQUIRE(s.theta == Catch::Approx(s0.theta).margin(1e-15));
    }
    SECTION("half-circle arc") {
        // v=1, omega=1, dt=pi: (sin pi, 1 - cos pi, pi) = (0, 2, pi).
        ActuationLimits wide{2.0, 2.0};
        auto s = step({0, 0, 0}, {1.0, 1.0}, kPi, wide);
        REQUIRE(s.x == Catch::Approx(0.0).margin(1e-12));
        REQUIRE(s.y == Catch::Approx(2.0).margin(1e-12));
        REQUIRE(s.theta == Catch::Approx(kPi).margin(1e-12));
    }
    SECTION("limits are enforced") {
        REQUIRE_THROWS_AS(step({0, 0, 0}, {2.0, 0.0}, 0.1), ValidationError);
        REQUIRE_THROWS_AS(step({0, 0, 0}, {1.0, 2.0}, 0.1), ValidationError);
        REQUIRE_THROWS_AS(step({0, 0, 0}, {1.0, 0.0}, 0.0), ValidationError);
    }
}

TEST_CASE("step composition is exact") {
    patern::Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        RobotState s{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-3, 3)};
        Action a{rng.uniform(-1.5, 1.5), rng.uniform(-1.4, 1.4)};
        const double dt = rng.uniform(0.05, 0.5);
        auto one = step(step(s, a, dt), a, dt);
        auto two = step(s, a, 2 * dt);
        REQUIRE(one.x == Catch::Approx(two.x).margin(1e-12));
        REQUIRE(one.y == Catch::Approx(two.y).margin(1e-12));
        REQUIRE(std::abs(wrap_angle(one.theta - two.theta)) < 1e-12);
    }
}

TEST_CASE("theta stays in (-pi, pi]") {
    REQUIRE(wrap_angle(kPi) == Catch::Approx(kPi));
    REQUIRE(wrap_angle(-kPi) == Catch::Approx(kPi));
    REQUIRE(wrap_angle(3 * kPi) == Catch::Approx(kPi));
    REQUIRE(wrap_angle(0.0) == Catch::Approx(0.0).margin(1e-15));
    auto s = step({0, 0, 3.0}, {0.0, 1.0}, 0.5);
    REQUIRE(s.theta <= kPi);
    REQUIRE(s.theta > -kPi);
}

TEST_CASE("execute annotates terrain and attaches paired observations") {
    auto world = fixtures::split_world(fixtures::concrete(), fixtures::grass());

    SECTION("single state with observation pair") {
        Trajectory plan;
        plan.states = {world.start};
        auto out = execute(world, plan, true, 42);
        REQUIRE(out.trajectory.size() == 1);
        REQUIRE(out.patches.size() == 1);
        REQUIRE(out.windows.size() == 1);
        REQUIRE(out.patches[0].terrain_id_truth == out.windows[0].terrain_id_truth);
        REQUIRE(out.patches[0].source_state.x == world.start.x);
    }

    SECTION("observe off gives zero observations") {
        Trajectory plan;
        for (int i = 0; i < 5; ++i) plan.states.push_back({1.0 + i, 2.0, 0.0});
        auto out = execute(world, plan, false, 42);
        REQUIRE(out.trajectory.size() == 5);
        REQUIRE(out.patches.empty());
        REQUIRE(out.windows.empty());
    }

    SECTION("annotations flip exactly at the midline crossing") {
        Trajectory plan;
        for (int i = 0; i < 16; ++i) plan.states.push_back({0.25 + 0.5 * i, 4.0, 0.0});
        auto out = execute(world, plan, false, 1);
        for (std::size_t i = 0; i < plan.states.size(); ++i)
            REQUIRE(out.trajectory.terrain_ids[i] == terrain_at(world, plan.states[i]));
        REQUIRE(out.trajectory.terrain_ids.front() == 0);
        REQUIRE(out.trajectory.terrain_ids.back() == 1);
    }

    SECTION("out-of-bounds plan state raises") {
        Trajectory plan;
        plan.states = {{20.0, 1.0, 0.0}};
        REQUIRE_THROWS_AS(execute(world, plan, false, 1), BoundsError);
        Trajectory empty;
        REQUIRE_THROWS_AS(execute(world, empty, false, 1), ValidationError);
    }
}

TEST_CASE("shadow field darkens only one half-plane") {
    auto t = fixtures::make_terrain(0, "flat", 0.8, 0.8, 0.8, 0.0, 4.0, 1, 5.0, 0.1, 0.0);
    auto world = fixtures::uniform_world(t);
    world.lighting.shadow = ShadowField{1.0, 0.0, 4.0, 0.5};  // x <= 4 shaded
    auto shaded = generate_patch(world, {4.0, 4.0, 0.0}, 3);
    // Patch spans x in [3.5, 4.5]: left half shaded, right half not.
    const int hw = kPatchSize / 2;
    for (int row = 0; row < kPatchSize; ++row) {
        REQUIRE(shaded.pixels[row * kPatchSize + 2] == Catch::Approx(0.4).margin(1e-6));
        REQUIRE(shaded.pixels[row * kPatchSize + hw + 2] == Catch::Approx(0.8).margin(1e-6));
    }
}

TEST_CASE("world validation catches malformed maps") {
    auto world = fixtures::uniform_world(fixtures::concrete());
    REQUIRE_NOTHROW(validate_world(world));

    SECTION("duplicate terrain name") {
        world.terrains.push_back(fixtures::make_terrain(5, "concrete", 0.1, 0.1, 0.1, 0, 1, 1, 5, 0, 0));
        REQUIRE_THROWS_AS(validate_world(world), ConfigError);
    }
    SECTION("undeclared grid id") {
        world.grid[3] = 9;
        REQUIRE_THROWS_AS(validate_world(world), ConfigError);
    }
    SECTION("dominant frequency above Nyquist") {
        world.terrains[0].proprio[0].dominant_frequency = 150.0;
        REQUIRE_THROWS_AS(validate_world(world), ConfigError);
    }
    SECTION("start out of bounds") {
        world.start.x = -2.0;
        REQUIRE_THROWS_AS(validate_world(world), ConfigError);
    }
}
