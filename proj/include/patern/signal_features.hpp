#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "patern/errors.hpp"
#include "patern/world.hpp"

namespace patern {

// Fixed-length, phase-invariant summary of one proprioceptive window.
// Layout is channel-major: for each channel, [mean, std, min, max,
// band_0 .. band_{B-1}], so the total length is C * (4 + B).
//
// PSD convention (the one the Parseval check is stated against): one-sided
// periodogram of the mean-removed signal, P_k = |Y_k|^2 / T for k = 0 and
// k = T/2, and 2*|Y_k|^2 / T otherwise, so that sum_k P_k equals
// T * population_variance. Bands are B equal-width frequency intervals
// covering [0, Nyquist], aggregated by summing bin powers.
using FeatureVector = std::vector<double>;

struct FeatureConfig {
    int bands = 10;
};

namespace detail {

// Goertzel recurrence for the squared DFT magnitude at bin k. Deliberately a
// different computation route than the textbook sum used by the test oracle.
inline double goertzel_power(const std::vector<double>& x, std::size_t k) {
    const std::size_t n = x.size();
    const double w = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    const double coeff = 2.0 * std::cos(w);
    double s0 = 0.0, s1 = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s0 = x[i] + coeff * s1 - s2;
        s2 = s1;
        s1 = s0;
    }
    // |Y_k|^2 = s1^2 + s2^2 - coeff*s1*s2
    return s1 * s1 + s2 * s2 - coeff * s1 * s2;
}

}  // namespace detail

inline int feature_length(int channels, int bands) { return channels * (4 + bands); }

inline FeatureVector featurize(const ProprioWindow& win, const FeatureConfig& cfg = {}) {
    const int T = win.sample_count;
    const int C = win.channel_count;
    const int B = cfg.bands;
    if (B < 1) throw ConfigError("featurize: bands must be >= 1");
    if (T < 2 * B) throw ConfigError("featurize: window too short for band count");

    FeatureVector out;
    out.reserve(static_cast<std::size_t>(feature_length(C, B)));

    std::vector<double> x(static_cast<std::size_t>(T));
    const std::size_t half = static_cast<std::size_t>(T) / 2;  // T is even (2 s windows)

    for (int c = 0; c < C; ++c) {
        double sum = 0.0, mn = win.at(c, 0), mx = win.at(c, 0);
        for (int t = 0; t < T; ++t) {
            const double v = win.at(c, t);
            if (!std::isfinite(v)) throw ValidationError("featurize: non-finite sample");
            sum += v;
            mn = std::min(mn, v);
            mx = std::max(mx, v);
        }
        const double mean = sum / T;
        double var = 0.0;
        for (int t = 0; t < T; ++t) {
            const double d = win.at(c, t) - mean;
            var += d * d;
            x[static_cast<std::size_t>(t)] = d;
        }
        var /= T;  // population variance: deterministic for fixed T

        out.push_back(mean);
        out.push_back(std::sqrt(var));
        out.push_back(mn);
        out.push_back(mx);

        // Band index for bin k at frequency k * fs / T within [0, Nyquist]:
        // floor(2kB / T), clamped into the last band at k = T/2.
        const std::size_t base = out.size();
        out.insert(out.end(), static_cast<std::size_t>(B), 0.0);
        for (std::size_t k = 0; k <= half; ++k) {
            double p = detail::goertzel_power(x, k) / T;
            if (k != 0 && k != half) p *= 2.0;
            int band = static_cast<int>(2 * k * static_cast<std::size_t>(B) / static_cast<std::size_t>(T));
            if (band >= B) band = B - 1;
            out[base + static_cast<std::size_t>(band)] += p;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Z-score normalization with persisted training moments
// ---------------------------------------------------------------------------

struct FeatureNormalizer {
    std::vector<double> mean;
    std::vector<double> stddev;  // population std; zero marks a passthrough dim

    bool fitted() const { return !mean.empty(); }

    void fit(const std::vector<FeatureVector>& batch) {
        if (batch.empty()) throw ValidationError("normalize: empty batch without saved stats");
        const std::size_t dim = batch.front().size();
        mean.assign(dim, 0.0);
        stddev.assign(dim, 0.0);
        for (const auto& f : batch) {
            if (f.size() != dim) throw ValidationError("normalize: ragged batch");
            for (std::size_t d = 0; d < dim; ++d) mean[d] += f[d];
        }
        for (double& m : mean) m /= static_cast<double>(batch.size());
        for (const auto& f : batch)
            for (std::size_t d = 0; d < dim; ++d) {
                const double diff = f[d] - mean[d];
                stddev[d] += diff * diff;
            }
        for (double& s : stddev) s = std::sqrt(s / static_cast<double>(batch.size()));
    }

    // Zero-variance dimensions pass the centered value through unscaled.
    FeatureVector apply(const FeatureVector& f) const {
        if (f.size() != mean.size()) throw ValidationError("normalize: dimension mismatch with saved stats");
        FeatureVector out(f.size());
        for (std::size_t d = 0; d < f.size(); ++d) {
            const double centered = f[d] - mean[d];
            out[d] = stddev[d] > 0.0 ? centered / stddev[d] : centered;
        }
        return out;
    }
};

}  // namespace patern
