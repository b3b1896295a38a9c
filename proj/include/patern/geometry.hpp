#pragma once

#include <cmath>

#include "patern/errors.hpp"

namespace patern {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Wraps an angle into (-pi, pi].
inline double wrap_angle(double theta) {
    double w = std::fmod(theta + kPi, 2.0 * kPi);
    if (w <= 0.0) w += 2.0 * kPi;
    return w - kPi;
}

// SE(2) pose. theta is kept in (-pi, pi] after every update.
struct RobotState {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;
};

struct Action {
    double v = 0.0;      // m/s
    double omega = 0.0;  // rad/s
};

struct ActuationLimits {
    double v_max = 1.6;      // m/s
    double omega_max = 1.5;  // rad/s
};

// Exact unicycle integration over dt. Straight-line update when |omega| is
// below 1e-9, closed-form arc otherwise.
inline RobotState step(const RobotState& s, const Action& a, double dt,
                       const ActuationLimits& limits = {}) {
    if (!(dt > 0.0)) throw ValidationError("step: dt must be > 0");
    if (std::abs(a.v) > limits.v_max + 1e-12)
        throw ValidationError("step: |v| exceeds v_max");
    if (std::abs(a.omega) > limits.omega_max + 1e-12)
        throw ValidationError("step: |omega| exceeds omega_max");

    RobotState out;
    if (std::abs(a.omega) < 1e-9) {
        out.x = s.x + a.v * std::cos(s.theta) * dt;
        out.y = s.y + a.v * std::sin(s.theta) * dt;
        out.theta = wrap_angle(s.theta + a.omega * dt);
    } else {
        const double r = a.v / a.omega;
        const double th1 = s.theta + a.omega * dt;
        out.x = s.x + r * (std::sin(th1) - std::sin(s.theta));
        out.y = s.y - r * (std::cos(th1) - std::cos(s.theta));
        out.theta = wrap_angle(th1);
    }
    return out;
}

inline double distance(const RobotState& a, const RobotState& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace patern
