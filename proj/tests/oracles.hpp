#pragma once

// Test-only reference implementations. These stay deliberately naive and
// independent of the library's computation paths.

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <vector>

namespace oracles {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Textbook O(T^2) DFT: Y_k = sum_t x_t e^{-i 2 pi k t / T}.
inline std::vector<std::complex<double>> naive_dft(const std::vector<double>& x) {
    const std::size_t T = x.size();
    std::vector<std::complex<double>> out(T);
    for (std::size_t k = 0; k < T; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t t = 0; t < T; ++t) {
            const double ang = -2.0 * kPi * static_cast<double>(k) * static_cast<double>(t) /
                               static_cast<double>(T);
            acc += x[t] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out[k] = acc;
    }
    return out;
}

// One-sided periodogram bands matching the documented convention:
// P_k = |Y_k|^2 / T (doubled for interior bins), B equal-width bands over
// [0, Nyquist], computed from the mean-removed signal.
inline std::vector<double> naive_psd_bands(const std::vector<double>& signal, int bands) {
    const std::size_t T = signal.size();
    double mean = 0.0;
    for (double v : signal) mean += v;
    mean /= static_cast<double>(T);
    std::vector<double> x(T);
    for (std::size_t t = 0; t < T; ++t) x[t] = signal[t] - mean;

    const auto Y = naive_dft(x);
    const std::size_t half = T / 2;
    std::vector<double> out(static_cast<std::size_t>(bands), 0.0);
    for (std::size_t k = 0; k <= half; ++k) {
        double p = std::norm(Y[k]) / static_cast<double>(T);
        if (k != 0 && k != half) p *= 2.0;
        std::size_t band = 2 * k * static_cast<std::size_t>(bands) / T;
        if (band >= static_cast<std::size_t>(bands)) band = static_cast<std::size_t>(bands) - 1;
        out[band] += p;
    }
    return out;
}

// Central finite differences of a scalar function at x, step h.
inline std::vector<double> finite_difference(const std::function<double(const std::vector<double>&)>& f,
                                             std::vector<double> x, double h = 1e-3) {
    std::vector<double> grad(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double orig = x[i];
        x[i] = orig + h;
        const double fp = f(x);
        x[i] = orig - h;
        const double fm = f(x);
        x[i] = orig;
        grad[i] = (fp - fm) / (2.0 * h);
    }
    return grad;
}

// Brute-force symmetric Hausdorff distance over (x, y) point sets.
struct Pt {
    double x, y;
};

inline double brute_hausdorff(const std::vector<Pt>& a, const std::vector<Pt>& b) {
    auto directed = [](const std::vector<Pt>& from, const std::vector<Pt>& to) {
        double worst = 0.0;
        for (const Pt& p : from) {
            double best = std::numeric_limits<double>::infinity();
            for (const Pt& q : to) {
                const double d = std::sqrt((p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y));
                if (d < best) best = d;
            }
            if (best > worst) worst = best;
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

}  // namespace oracles
