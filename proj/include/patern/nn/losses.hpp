#pragma once

#include <cmath>

#include "patern/errors.hpp"
#include "patern/nn/tensor.hpp"

namespace patern::nn {

// Forward identity whose consumers are treated as constants during the
// reverse pass: any value derived from the returned tensor must never be
// backpropagated through (the training loops uphold this by evaluating the
// producer without a tape).
template <typename T>
Tensor<T> stop_gradient(const Tensor<T>& t) {
    return t;
}

// ---------------------------------------------------------------------------
// Triplet loss: max(0, ||a-p|| - ||a-n|| + margin), Euclidean distances.
// ---------------------------------------------------------------------------

template <typename T>
T triplet_loss(const Tensor<T>& a, const Tensor<T>& p, const Tensor<T>& n, T margin) {
    if (!a.same_shape(p) || !a.same_shape(n))
        throw ValidationError("triplet_loss: dimension mismatch");
    double dp = 0.0, dn = 0.0;
    for (std::size_t i = 0; i < a.numel(); ++i) {
        const double ep = static_cast<double>(a[i]) - p[i];
        const double en = static_cast<double>(a[i]) - n[i];
        dp += ep * ep;
        dn += en * en;
    }
    const double hinge = std::sqrt(dp) - std::sqrt(dn) + static_cast<double>(margin);
    return hinge > 0.0 ? static_cast<T>(hinge) : T(0);
}

template <typename T>
struct TripletBatchResult {
    T mean_loss = T(0);
    double accuracy = 0.0;  // fraction of triplets with ||a-p|| < ||a-n||
    Tensor<T> da, dp, dn;   // gradients of the mean loss
};

// Batched triplet loss over [B, D] embedding blocks. Subgradient conventions:
// 0 at the hinge boundary and 0 where a distance is exactly zero.
template <typename T>
TripletBatchResult<T> triplet_loss_batch(const Tensor<T>& a, const Tensor<T>& p,
                                         const Tensor<T>& n, T margin) {
    if (!a.same_shape(p) || !a.same_shape(n) || a.shape.size() != 2)
        throw ValidationError("triplet_loss_batch: expected matching [B,D] tensors");
    const std::size_t B = a.shape[0], D = a.shape[1];
    TripletBatchResult<T> r;
    r.da = zeros_like(a);
    r.dp = zeros_like(p);
    r.dn = zeros_like(n);

    double total = 0.0;
    std::size_t correct = 0;
    const T inv_b = T(1) / static_cast<T>(B);
    for (std::size_t bi = 0; bi < B; ++bi) {
        const T* av = a.ptr() + bi * D;
        const T* pv = p.ptr() + bi * D;
        const T* nv = n.ptr() + bi * D;
        double dp2 = 0.0, dn2 = 0.0;
        for (std::size_t d = 0; d < D; ++d) {
            const double ep = static_cast<double>(av[d]) - pv[d];
            const double en = static_cast<double>(av[d]) - nv[d];
            dp2 += ep * ep;
            dn2 += en * en;
        }
        const double dist_p = std::sqrt(dp2), dist_n = std::sqrt(dn2);
        if (dist_p < dist_n) ++correct;
        const double hinge = dist_p - dist_n + static_cast<double>(margin);
        if (hinge <= 0.0) continue;
        total += hinge;

        T* dav = r.da.ptr() + bi * D;
        T* dpv = r.dp.ptr() + bi * D;
        T* dnv = r.dn.ptr() + bi * D;
        if (dist_p > 0.0) {
            const T s = inv_b / static_cast<T>(dist_p);
            for (std::size_t d = 0; d < D; ++d) {
                const T e = av[d] - pv[d];
                dav[d] += s * e;
                dpv[d] -= s * e;
            }
        }
        if (dist_n > 0.0) {
            const T s = inv_b / static_cast<T>(dist_n);
            for (std::size_t d = 0; d < D; ++d) {
                const T e = av[d] - nv[d];
                dav[d] -= s * e;
                dnv[d] += s * e;
            }
        }
    }
    r.mean_loss = static_cast<T>(total / static_cast<double>(B));
    r.accuracy = static_cast<double>(correct) / static_cast<double>(B);
    return r;
}

// ---------------------------------------------------------------------------
// Margin ranking loss: max(0, margin - (u_preferred - u_less)).
// Higher utility means more preferred.
// ---------------------------------------------------------------------------

template <typename T>
T ranking_loss(T u_preferred, T u_less, T margin) {
    const T hinge = margin - (u_preferred - u_less);
    return hinge > T(0) ? hinge : T(0);
}

template <typename T>
struct RankingBatchResult {
    T mean_loss = T(0);
    Tensor<T> du_pref, du_less;
};

template <typename T>
RankingBatchResult<T> ranking_loss_batch(const Tensor<T>& u_pref, const Tensor<T>& u_less, T margin) {
    if (!u_pref.same_shape(u_less)) throw ValidationError("ranking_loss_batch: shape mismatch");
    const std::size_t B = u_pref.numel();
    RankingBatchResult<T> r;
    r.du_pref = zeros_like(u_pref);
    r.du_less = zeros_like(u_less);
    double total = 0.0;
    const T inv_b = T(1) / static_cast<T>(B);
    for (std::size_t i = 0; i < B; ++i) {
        const T hinge = margin - (u_pref[i] - u_less[i]);
        if (hinge > T(0)) {
            total += static_cast<double>(hinge);
            r.du_pref[i] = -inv_b;
            r.du_less[i] = inv_b;
        }
    }
    r.mean_loss = static_cast<T>(total / static_cast<double>(B));
    return r;
}

// ---------------------------------------------------------------------------
// MSE against stop-gradiented targets: (1/N) sum (sg(target) - pred)^2.
// Only the prediction side receives a gradient.
// ---------------------------------------------------------------------------

template <typename T>
struct MseResult {
    T loss = T(0);
    Tensor<T> dpred;
};

template <typename T>
MseResult<T> mse_sg_loss(const Tensor<T>& target_sg, const Tensor<T>& pred) {
    if (!target_sg.same_shape(pred)) throw ValidationError("mse_sg_loss: shape mismatch");
    const std::size_t N = pred.numel();
    MseResult<T> r;
    r.dpred = zeros_like(pred);
    double total = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const double e = static_cast<double>(target_sg[i]) - pred[i];
        total += e * e;
        r.dpred[i] = static_cast<T>(-2.0 * e / static_cast<double>(N));
    }
    r.loss = static_cast<T>(total / static_cast<double>(N));
    return r;
}

}  // namespace patern::nn
