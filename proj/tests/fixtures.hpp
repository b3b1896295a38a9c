#pragma once

// Shared world/terrain builders for the unit suites.

#include <string>
#include <vector>

#include "patern/world.hpp"

namespace fixtures {

inline patern::TerrainClass make_terrain(int id, const std::string& name, double r, double g,
                                         double b, double noise_amp, double noise_freq,
                                         int octaves, double dom_freq, double vib_amp,
                                         double noise_floor) {
    patern::TerrainClass t;
    t.id = id;
    t.name = name;
    t.base_color[0] = r;
    t.base_color[1] = g;
    t.base_color[2] = b;
    t.texture.amplitude = noise_amp;
    t.texture.spatial_frequency = noise_freq;
    t.texture.octaves = octaves;
    t.proprio.assign(6, {dom_freq, vib_amp, noise_floor});
    t.friction_slip = 0.1;
    return t;
}

inline patern::TerrainClass concrete() {
    return make_terrain(0, "concrete", 0.62, 0.62, 0.60, 0.06, 3.0, 2, 5.0, 0.25, 0.02);
}
inline patern::TerrainClass grass() {
    return make_terrain(1, "grass", 0.20, 0.55, 0.18, 0.22, 9.0, 3, 22.0, 0.9, 0.08);
}
inline patern::TerrainClass rocks() {
    return make_terrain(2, "rocks", 0.48, 0.38, 0.30, 0.30, 14.0, 4, 47.0, 2.2, 0.15);
}

inline patern::WorldMap uniform_world(const patern::TerrainClass& t, int w = 8, int h = 8) {
    patern::WorldMap world;
    world.terrains = {t};
    world.width = w;
    world.height = h;
    world.cell_size = 1.0;
    world.grid.assign(static_cast<std::size_t>(w) * h, t.id);
    world.start = {1.5, 1.5, 0.0};
    world.goal = {w - 1.5, h - 1.5, 0.0};
    return world;
}

// Left half terrain a, right half terrain b.
inline patern::WorldMap split_world(const patern::TerrainClass& a, const patern::TerrainClass& b,
                                    int w = 8, int h = 8) {
    patern::WorldMap world;
    world.terrains = {a, b};
    world.width = w;
    world.height = h;
    world.cell_size = 1.0;
    world.grid.resize(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            world.grid[static_cast<std::size_t>(y) * w + x] = (x < w / 2) ? a.id : b.id;
    world.start = {1.5, 1.5, 0.0};
    world.goal = {w - 1.5, h - 1.5, 0.0};
    return world;
}

}  // namespace fixtures
