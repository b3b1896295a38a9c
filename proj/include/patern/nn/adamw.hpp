#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "patern/errors.hpp"
#include "patern/nn/network.hpp"
#include "patern/nn/tensor.hpp"

namespace patern::nn {

struct AdamWConfig {
    double lr = 3e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    double weight_decay = 1e-2;
};

// AdamW with decoupled weight decay and bias correction.
template <typename T>
class AdamW {
public:
    AdamW() = default;
    explicit AdamW(AdamWConfig cfg) : cfg_(cfg) {}

    const AdamWConfig& config() const { return cfg_; }
    std::int64_t step_count() const { return step_; }

    void step(std::vector<Tensor<T>*> params, const GradientSet<T>& grads) {
        if (params.size() != grads.size()) throw ValidationError("adamw: grads do not match params");
        if (m_.empty()) {
            for (const Tensor<T>* p : params) {
                m_.push_back(zeros_like(*p));
                v_.push_back(zeros_like(*p));
            }
        }
        if (m_.size() != params.size()) throw ValidationError("adamw: state does not match params");

        ++step_;
        const double bc1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(step_));
        const double bc2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(step_));
        for (std::size_t pi = 0; pi < params.size(); ++pi) {
            Tensor<T>& p = *params[pi];
            const Tensor<T>& g = grads[pi];
            if (!p.same_shape(g)) throw ValidationError("adamw: gradient shape mismatch");
            Tensor<T>& m = m_[pi];
            Tensor<T>& v = v_[pi];
            for (std::size_t i = 0; i < p.numel(); ++i) {
                const double gi = static_cast<double>(g[i]);
                const double mi = cfg_.beta1 * m[i] + (1.0 - cfg_.beta1) * gi;
                const double vi = cfg_.beta2 * v[i] + (1.0 - cfg_.beta2) * gi * gi;
                m[i] = static_cast<T>(mi);
                v[i] = static_cast<T>(vi);
                const double mhat = mi / bc1;
                const double vhat = vi / bc2;
                const double update = mhat / (std::sqrt(vhat) + cfg_.eps) + cfg_.weight_decay * p[i];
                p[i] = static_cast<T>(p[i] - cfg_.lr * update);
            }
        }
    }

private:
    AdamWConfig cfg_;
    std::vector<Tensor<T>> m_, v_;
    std::int64_t step_ = 0;
};

}  // namespace patern::nn
