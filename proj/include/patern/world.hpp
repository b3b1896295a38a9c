#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "patern/errors.hpp"
#include "patern/geometry.hpp"
#include "patern/rng.hpp"
#include "patern/trajectory.hpp"

namespace patern {

inline constexpr int kPatchSize = 64;  // pixels per side, 3 channels

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

struct TextureNoise {
    double amplitude = 0.0;          // in [0,1], added to all color channels
    double spatial_frequency = 4.0;  // lattice cycles per patch
    int octaves = 1;
};

struct ProprioChannelSignature {
    double dominant_frequency = 0.0;  // Hz, must stay below Nyquist
    double vibration_amplitude = 0.0;
    double noise_floor = 0.0;
};

struct TerrainClass {
    int id = 0;
    std::string name;
    double base_color[3] = {0.5, 0.5, 0.5};
    TextureNoise texture;
    std::vector<ProprioChannelSignature> proprio;  // one per channel
    double friction_slip = 0.0;                    // in [0,1]
};

// Half-plane shadow mask: pixels with nx*x + ny*y <= offset are scaled by
// factor. This is enough to stage the shadowed-terrain scenarios.
struct ShadowField {
    double nx = 1.0;
    double ny = 0.0;
    double offset = 0.0;
    double factor = 0.5;  // in [0,1]
};

struct LightingCondition {
    double brightness_scale = 1.0;
    double color_shift[3] = {0.0, 0.0, 0.0};
    std::optional<ShadowField> shadow;

    bool is_identity() const {
        return brightness_scale == 1.0 && color_shift[0] == 0.0 &&
               color_shift[1] == 0.0 && color_shift[2] == 0.0 && !shadow;
    }
};

struct ProprioSpec {
    int channels = 6;
    double sample_rate = 200.0;  // Hz
    double duration = 2.0;       // seconds
    int samples() const { return static_cast<int>(sample_rate * duration); }
    double nyquist() const { return 0.5 * sample_rate; }
};

struct WorldMap {
    std::vector<TerrainClass> terrains;
    std::vector<int> grid;  // row-major terrain ids, grid[y * width + x]
    int width = 0;          // cells
    int height = 0;
    double cell_size = 1.0;  // meters
    RobotState start;
    RobotState goal;  // only x, y are used
    LightingCondition lighting;

    const TerrainClass& terrain_by_id(int id) const {
        for (const auto& t : terrains)
            if (t.id == id) return t;
        throw ValidationError("unknown terrain id " + std::to_string(id));
    }

    bool in_bounds(double x, double y) const {
        return x >= 0.0 && y >= 0.0 && x < width * cell_size && y < height * cell_size;
    }

    double width_m() const { return width * cell_size; }
    double height_m() const { return height * cell_size; }
};

struct PatchObservation {
    // CHW layout: pixels[c * 64 * 64 + row * 64 + col], values in [0,1].
    std::vector<float> pixels;
    RobotState source_state;
    int terrain_id_truth = -1;  // simulator ground truth, off-limits to learners
};

struct ProprioWindow {
    // Row-major C x T samples.
    std::vector<float> channels;
    int channel_count = 0;
    int sample_count = 0;
    double sample_rate = 0.0;
    RobotState source_state;
    int terrain_id_truth = -1;

    float at(int c, int t) const { return channels[static_cast<std::size_t>(c) * sample_count + t]; }
};

struct ExecutedTrajectory {
    Trajectory trajectory;
    std::vector<PatchObservation> patches;
    std::vector<ProprioWindow> windows;
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

inline void validate_world(const WorldMap& w, const ProprioSpec& pspec = {}) {
    if (w.width <= 0 || w.height <= 0 || w.cell_size <= 0.0)
        throw ConfigError("world: non-positive dimensions");
    if (w.grid.size() != static_cast<std::size_t>(w.width) * w.height)
        throw ConfigError("world: grid size does not match width*height");
    if (w.terrains.empty()) throw ConfigError("world: no terrain classes");

    std::unordered_map<int, bool> ids;
    std::unordered_map<std::string, bool> names;
    for (const auto& t : w.terrains) {
        if (ids.count(t.id)) throw ConfigError("world: duplicate terrain id");
        if (names.count(t.name)) throw ConfigError("world: duplicate terrain name");
        ids[t.id] = true;
        names[t.name] = true;
        if (!(t.texture.amplitude >= 0.0) || !std::isfinite(t.texture.amplitude) ||
            !std::isfinite(t.texture.spatial_frequency) || t.texture.octaves < 1)
            throw ConfigError("world: invalid texture parameters for " + t.name);
        if (t.proprio.empty()) throw ConfigError("world: missing proprio signature for " + t.name);
        for (const auto& ch : t.proprio) {
            if (!std::isfinite(ch.dominant_frequency) || !std::isfinite(ch.vibration_amplitude) ||
                !std::isfinite(ch.noise_floor) || ch.vibration_amplitude < 0.0 || ch.noise_floor < 0.0)
                throw ConfigError("world: non-finite proprio signature for " + t.name);
            if (ch.dominant_frequency >= pspec.nyquist())
                throw ConfigError("world: dominant frequency at or above Nyquist for " + t.name);
        }
        if (t.friction_slip < 0.0 || t.friction_slip > 1.0)
            throw ConfigError("world: friction_slip outside [0,1] for " + t.name);
    }
    for (int id : w.grid)
        if (!ids.count(id)) throw ConfigError("world: grid references undeclared terrain id");
    if (!w.in_bounds(w.start.x, w.start.y)) throw ConfigError("world: start out of bounds");
    if (!w.in_bounds(w.goal.x, w.goal.y)) throw ConfigError("world: goal out of bounds");
}

// ---------------------------------------------------------------------------
// Terrain lookup
// ---------------------------------------------------------------------------

// Floor convention on both axes decides cell-boundary ties.
inline int terrain_at(const WorldMap& w, const RobotState& s) {
    if (!w.in_bounds(s.x, s.y)) throw BoundsError("terrain_at: state out of bounds");
    const int ix = static_cast<int>(std::floor(s.x / w.cell_size));
    const int iy = static_cast<int>(std::floor(s.y / w.cell_size));
    return w.grid[static_cast<std::size_t>(iy) * w.width + ix];
}

// ---------------------------------------------------------------------------
// Value noise (world-anchored lattice, keyed by seed + terrain + octave)
// ---------------------------------------------------------------------------

namespace detail {

inline double lattice_value(std::uint64_t key, std::int64_t ix, std::int64_t iy) {
    std::uint64_t h = hash_combine(key, static_cast<std::uint64_t>(ix) * 0x8da6b343ull,
                                   static_cast<std::uint64_t>(iy) * 0xd8163841ull);
    // Map to [-1, 1].
    return static_cast<double>(h >> 11u) * 0x1.0p-52 - 1.0;
}

inline double fade(double t) { return t * t * (3.0 - 2.0 * t); }

inline double value_noise(std::uint64_t key, double u, double v) {
    const double fu = std::floor(u);
    const double fv = std::floor(v);
    const std::int64_t ix = static_cast<std::int64_t>(fu);
    const std::int64_t iy = static_cast<std::int64_t>(fv);
    const double tx = fade(u - fu);
    const double ty = fade(v - fv);
    const double v00 = lattice_value(key, ix, iy);
    const double v10 = lattice_value(key, ix + 1, iy);
    const double v01 = lattice_value(key, ix, iy + 1);
    const double v11 = lattice_value(key, ix + 1, iy + 1);
    const double a = v00 + (v10 - v00) * tx;
    const double b = v01 + (v11 - v01) * tx;
    return a + (b - a) * ty;
}

// Octave sum normalized back into [-1, 1].
inline double fractal_noise(std::uint64_t key, double u, double v, int octaves) {
    double sum = 0.0, amp = 1.0, norm = 0.0, freq = 1.0;
    for (int o = 0; o < octaves; ++o) {
        sum += amp * value_noise(hash_combine(key, static_cast<std::uint64_t>(o)), u * freq, v * freq);
        norm += amp;
        amp *= 0.5;
        freq *= 2.0;
    }
    return sum / norm;
}

inline float clamp01(double v) {
    if (v < 0.0) return 0.0f;
    if (v > 1.0) return 1.0f;
    return static_cast<float>(v);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Observation generators
// ---------------------------------------------------------------------------

// Renders the 64x64 RGB patch under the robot footprint (one cell wide,
// axis-aligned). Per-pixel terrain lookup, so patches straddling a cell
// boundary show both surfaces. Lighting is applied after the texture is
// clamped to [0,1]; the identity condition leaves the texture bit-identical.
inline PatchObservation generate_patch(const WorldMap& w, const RobotState& s,
                                       std::uint64_t rng_seed) {
    if (!w.in_bounds(s.x, s.y)) throw BoundsError("generate_patch: state out of bounds");

    PatchObservation obs;
    obs.source_state = s;
    obs.terrain_id_truth = terrain_at(w, s);
    obs.pixels.assign(static_cast<std::size_t>(3) * kPatchSize * kPatchSize, 0.0f);

    const double footprint = w.cell_size;
    const double px_step = footprint / kPatchSize;
    const double x0 = s.x - 0.5 * footprint + 0.5 * px_step;
    const double y0 = s.y - 0.5 * footprint + 0.5 * px_step;
    const double max_x = std::nextafter(w.width_m(), 0.0);
    const double max_y = std::nextafter(w.height_m(), 0.0);

    for (int row = 0; row < kPatchSize; ++row) {
        const double py = std::clamp(y0 + row * px_step, 0.0, max_y);
        for (int col = 0; col < kPatchSize; ++col) {
            const double px = std::clamp(x0 + col * px_step, 0.0, max_x);
            const int tid = w.grid[static_cast<std::size_t>(static_cast<int>(std::floor(py / w.cell_size))) * w.width +
                                   static_cast<int>(std::floor(px / w.cell_size))];
            const TerrainClass& terrain = w.terrain_by_id(tid);

            double n = 0.0;
            if (terrain.texture.amplitude > 0.0) {
                const std::uint64_t key = hash_combine(rng_seed, 0x7e55a1ull, static_cast<std::uint64_t>(tid));
                const double u = px / w.cell_size * terrain.texture.spatial_frequency;
                const double v = py / w.cell_size * terrain.texture.spatial_frequency;
                n = terrain.texture.amplitude * detail::fractal_noise(key, u, v, terrain.texture.octaves);
            }

            double shade = 1.0;
            if (w.lighting.shadow) {
                const auto& sh = *w.lighting.shadow;
                if (sh.nx * px + sh.ny * py <= sh.offset) shade = sh.factor;
            }
            for (int c = 0; c < 3; ++c) {
                const double texture = std::clamp(terrain.base_color[c] + n, 0.0, 1.0);
                const double lit = texture * w.lighting.brightness_scale * shade + w.lighting.color_shift[c];
                obs.pixels[(static_cast<std::size_t>(c) * kPatchSize + row) * kPatchSize + col] =
                    detail::clamp01(lit);
            }
        }
    }
    return obs;
}

// Synthesizes the 2 s multichannel proprioceptive window for the terrain at
// s. Lighting has no effect here by construction.
inline ProprioWindow generate_proprio(const WorldMap& w, const RobotState& s,
                                      std::uint64_t rng_seed, const ProprioSpec& spec = {}) {
    if (!w.in_bounds(s.x, s.y)) throw BoundsError("generate_proprio: state out of bounds");

    const int tid = terrain_at(w, s);
    const TerrainClass& terrain = w.terrain_by_id(tid);

    ProprioWindow win;
    win.source_state = s;
    win.terrain_id_truth = tid;
    win.channel_count = spec.channels;
    win.sample_count = spec.samples();
    win.sample_rate = spec.sample_rate;
    win.channels.assign(static_cast<std::size_t>(spec.channels) * win.sample_count, 0.0f);

    Rng rng(hash_combine(rng_seed, 0x9a0c31ull,
                         static_cast<std::uint64_t>(tid),
                         std::bit_cast<std::uint64_t>(s.x),
                         std::bit_cast<std::uint64_t>(s.y)));

    for (int c = 0; c < spec.channels; ++c) {
        // Broadcast the last declared signature if the terrain lists fewer
        // channels than the spec (single-entry shorthand in world files).
        const auto& sig = terrain.proprio[std::min<std::size_t>(c, terrain.proprio.size() - 1)];
        const double phase = rng.uniform(0.0, 2.0 * kPi);
        for (int t = 0; t < win.sample_count; ++t) {
            const double time = t / spec.sample_rate;
            double v = sig.vibration_amplitude * std::sin(2.0 * kPi * sig.dominant_frequency * time + phase);
            if (sig.noise_floor > 0.0) v += rng.normal(0.0, sig.noise_floor);
            win.channels[static_cast<std::size_t>(c) * win.sample_count + t] = static_cast<float>(v);
        }
    }
    return win;
}

// ---------------------------------------------------------------------------
// Trajectory execution
// ---------------------------------------------------------------------------

// Replays a planned state sequence, annotating ground-truth terrain per state
// and, when per_state_observe is set, attaching a paired patch/proprio
// observation at every state. The pairs are what adaptation later consumes.
inline ExecutedTrajectory execute(const WorldMap& w, const Trajectory& plan,
                                  bool per_state_observe, std::uint64_t rng_seed,
                                  const ProprioSpec& spec = {}) {
    if (plan.empty()) throw ValidationError("execute: empty plan");
    ExecutedTrajectory out;
    out.trajectory = plan;
    out.trajectory.terrain_ids.resize(plan.size());
    for (std::size_t i = 0; i < plan.size(); ++i) {
        const RobotState& s = plan.states[i];
        if (!w.in_bounds(s.x, s.y)) throw BoundsError("execute: state out of bounds");
        out.trajectory.terrain_ids[i] = terrain_at(w, s);
        if (per_state_observe) {
            const std::uint64_t obs_seed = hash_combine(rng_seed, static_cast<std::uint64_t>(i));
            out.patches.push_back(generate_patch(w, s, obs_seed));
            out.windows.push_back(generate_proprio(w, s, obs_seed, spec));
        }
    }
    return out;
}

}  // namespace patern
