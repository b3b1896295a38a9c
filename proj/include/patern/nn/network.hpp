#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "patern/errors.hpp"
#include "patern/nn/gemm.hpp"
#include "patern/nn/tensor.hpp"
#include "patern/parallel.hpp"
#include "patern/rng.hpp"

namespace patern::nn {

// ---------------------------------------------------------------------------
// Architecture description
// ---------------------------------------------------------------------------

enum class LayerKind : std::uint8_t {
    Dense = 1,
    Conv2D = 2,
    ReLU = 3,
    Softplus = 4,
    MaxPool2 = 5,
    Flatten = 6,
    L2Normalize = 7,
};

struct LayerSpec {
    LayerKind kind = LayerKind::ReLU;
    std::uint32_t in = 0;      // dense in / conv in-channels
    std::uint32_t out = 0;     // dense out / conv out-channels
    std::uint32_t kernel = 0;  // conv only
    std::uint32_t stride = 1;
    std::uint32_t pad = 0;

    static LayerSpec dense(std::uint32_t in, std::uint32_t out) {
        return {LayerKind::Dense, in, out, 0, 1, 0};
    }
    static LayerSpec conv2d(std::uint32_t in_ch, std::uint32_t out_ch, std::uint32_t k,
                            std::uint32_t stride, std::uint32_t pad) {
        return {LayerKind::Conv2D, in_ch, out_ch, k, stride, pad};
    }
    static LayerSpec relu() { return {LayerKind::ReLU, 0, 0, 0, 1, 0}; }
    static LayerSpec softplus() { return {LayerKind::Softplus, 0, 0, 0, 1, 0}; }
    static LayerSpec maxpool2() { return {LayerKind::MaxPool2, 0, 0, 2, 2, 0}; }
    static LayerSpec flatten() { return {LayerKind::Flatten, 0, 0, 0, 1, 0}; }
    static LayerSpec l2_normalize() { return {LayerKind::L2Normalize, 0, 0, 0, 1, 0}; }
};

template <typename T>
struct Layer {
    LayerSpec spec;
    Tensor<T> w;  // dense: [in, out]; conv: [out_ch, in_ch*k*k]
    Tensor<T> b;
    std::vector<std::size_t> in_shape;   // per-sample, e.g. {3,64,64} or {84}
    std::vector<std::size_t> out_shape;
};

// Saved per-layer context from a recorded forward pass.
template <typename T>
struct LayerCtx {
    Tensor<T> input;
    Tensor<T> output;                  // only layers whose backward needs it
    std::vector<std::uint32_t> argmax;  // maxpool
    std::vector<T> norms;               // l2-normalize
};

template <typename T>
struct Tape {
    std::vector<LayerCtx<T>> ctx;
};

template <typename T>
using GradientSet = std::vector<Tensor<T>>;  // aligned with Network::parameters()

namespace detail {

// dW accumulation is grouped into a fixed number of batch partitions so the
// partial-sum reduction order never depends on the thread count.
inline constexpr std::size_t kGradGroups = 4;

template <typename T>
void im2col(const T* x, std::size_t C, std::size_t H, std::size_t W, std::size_t K,
            std::size_t stride, std::size_t pad, std::size_t OH, std::size_t OW, T* col) {
    for (std::size_t c = 0; c < C; ++c) {
        for (std::size_t ky = 0; ky < K; ++ky) {
            for (std::size_t kx = 0; kx < K; ++kx) {
                T* row = col + ((c * K + ky) * K + kx) * OH * OW;
                for (std::size_t oy = 0; oy < OH; ++oy) {
                    const std::ptrdiff_t iy =
                        static_cast<std::ptrdiff_t>(oy * stride + ky) - static_cast<std::ptrdiff_t>(pad);
                    T* dst = row + oy * OW;
                    if (iy < 0 || iy >= static_cast<std::ptrdiff_t>(H)) {
                        for (std::size_t ox = 0; ox < OW; ++ox) dst[ox] = T(0);
                        continue;
                    }
                    const T* src = x + (c * H + static_cast<std::size_t>(iy)) * W;
                    for (std::size_t ox = 0; ox < OW; ++ox) {
                        const std::ptrdiff_t ix =
                            static_cast<std::ptrdiff_t>(ox * stride + kx) - static_cast<std::ptrdiff_t>(pad);
                        dst[ox] = (ix < 0 || ix >= static_cast<std::ptrdiff_t>(W))
                                      ? T(0)
                                      : src[static_cast<std::size_t>(ix)];
                    }
                }
            }
        }
    }
}

template <typename T>
void col2im(const T* col, std::size_t C, std::size_t H, std::size_t W, std::size_t K,
            std::size_t stride, std::size_t pad, std::size_t OH, std::size_t OW, T* x) {
    for (std::size_t c = 0; c < C; ++c) {
        for (std::size_t ky = 0; ky < K; ++ky) {
            for (std::size_t kx = 0; kx < K; ++kx) {
                const T* row = col + ((c * K + ky) * K + kx) * OH * OW;
                for (std::size_t oy = 0; oy < OH; ++oy) {
                    const std::ptrdiff_t iy =
                        static_cast<std::ptrdiff_t>(oy * stride + ky) - static_cast<std::ptrdiff_t>(pad);
                    if (iy < 0 || iy >= static_cast<std::ptrdiff_t>(H)) continue;
                    T* dst = x + (c * H + static_cast<std::size_t>(iy)) * W;
                    const T* src = row + oy * OW;
                    for (std::size_t ox = 0; ox < OW; ++ox) {
                        const std::ptrdiff_t ix =
                            static_cast<std::ptrdiff_t>(ox * stride + kx) - static_cast<std::ptrdiff_t>(pad);
                        if (ix >= 0 && ix < static_cast<std::ptrdiff_t>(W))
                            dst[static_cast<std::size_t>(ix)] += src[ox];
                    }
                }
            }
        }
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Sequential network with a fixed-topology tape
// ---------------------------------------------------------------------------

template <typename T>
class Network {
public:
    Network() = default;

    Network(std::vector<std::size_t> input_shape, std::vector<LayerSpec> specs)
        : input_shape_(std::move(input_shape)) {
        std::vector<std::size_t> shape = input_shape_;
        for (const LayerSpec& spec : specs) {
            Layer<T> layer;
            layer.spec = spec;
            layer.in_shape = shape;
            switch (spec.kind) {
                case LayerKind::Dense: {
                    if (shape.size() != 1 || shape[0] != spec.in)
                        throw ValidationError("network: dense input shape mismatch");
                    layer.w = Tensor<T>({spec.in, spec.out});
                    layer.b = Tensor<T>({spec.out});
                    shape = {spec.out};
                    break;
                }
                case LayerKind::Conv2D: {
                    if (shape.size() != 3 || shape[0] != spec.in)
                        throw ValidationError("network: conv input shape mismatch");
                    const std::size_t H = shape[1], W = shape[2];
                    if (H + 2 * spec.pad < spec.kernel || W + 2 * spec.pad < spec.kernel)
                        throw ValidationError("network: conv kernel larger than padded input");
                    const std::size_t OH = (H + 2 * spec.pad - spec.kernel) / spec.stride + 1;
                    const std::size_t OW = (W + 2 * spec.pad - spec.kernel) / spec.stride + 1;
                    layer.w = Tensor<T>({spec.out, static_cast<std::size_t>(spec.in) * spec.kernel * spec.kernel});
                    layer.b = Tensor<T>({spec.out});
                    shape = {spec.out, OH, OW};
                    break;
                }
                case LayerKind::MaxPool2: {
                    if (shape.size() != 3) throw ValidationError("network: maxpool needs CHW input");
                    shape = {shape[0], shape[1] / 2, shape[2] / 2};
                    break;
                }
                case LayerKind::Flatten: {
                    std::size_t n = 1;
                    for (std::size_t d : shape) n *= d;
                    shape = {n};
                    break;
                }
                case LayerKind::ReLU:
                case LayerKind::Softplus:
                case LayerKind::L2Normalize:
                    break;
            }
            layer.out_shape = shape;
            layers_.push_back(std::move(layer));
        }
        output_shape_ = shape;
    }

    const std::vector<std::size_t>& input_shape() const { return input_shape_; }
    const std::vector<std::size_t>& output_shape() const { return output_shape_; }
    const std::vector<Layer<T>>& layers() const { return layers_; }
    std::vector<Layer<T>>& layers() { return layers_; }

    std::size_t parameter_count() const {
        std::size_t n = 0;
        for (const auto& l : layers_) n += l.w.numel() + l.b.numel();
        return n;
    }

    std::vector<Tensor<T>*> parameters() {
        std::vector<Tensor<T>*> out;
        for (auto& l : layers_) {
            if (l.w.numel()) out.push_back(&l.w);
            if (l.b.numel()) out.push_back(&l.b);
        }
        return out;
    }

    std::vector<const Tensor<T>*> parameters() const {
        std::vector<const Tensor<T>*> out;
        for (const auto& l : layers_) {
            if (l.w.numel()) out.push_back(&l.w);
            if (l.b.numel()) out.push_back(&l.b);
        }
        return out;
    }

    // Kaiming-uniform fan-in init for weights, zero biases. Deterministic in
    // the seed: layers in order, weights row-major.
    void init_params(std::uint64_t seed) {
        Rng rng(hash_combine(seed, 0x1e11ull));
        for (auto& l : layers_) {
            if (!l.w.numel()) continue;
            const std::size_t fan_in = (l.spec.kind == LayerKind::Dense)
                                           ? l.spec.in
                                           : static_cast<std::size_t>(l.spec.in) * l.spec.kernel * l.spec.kernel;
            const double bound = std::sqrt(6.0 / static_cast<double>(fan_in));
            for (auto& v : l.w.data) v = static_cast<T>(rng.uniform(-bound, bound));
            l.b.fill(T(0));
        }
    }

    GradientSet<T> make_gradients() const {
        GradientSet<T> g;
        for (const auto& l : layers_) {
            if (l.w.numel()) g.push_back(zeros_like(l.w));
            if (l.b.numel()) g.push_back(zeros_like(l.b));
        }
        return g;
    }

    // Forward pass over a batch [B, ...input_shape]. Records per-layer
    // context into tape when given.
    Tensor<T> forward(const Tensor<T>& x, Tape<T>* tape = nullptr) const {
        check_input_shape(x);
        if (tape) tape->ctx.assign(layers_.size(), LayerCtx<T>{});
        Tensor<T> cur = x;
        for (std::size_t li = 0; li < layers_.size(); ++li) {
            LayerCtx<T>* ctx = tape ? &tape->ctx[li] : nullptr;
            cur = apply_layer(layers_[li], cur, ctx);
            PATERN_ASSERT_FINITE(cur);
        }
        return cur;
    }

    // Reverse pass. upstream is dLoss/dOutput, shaped like the forward
    // output. Parameter gradients are accumulated into grads; pass dx to
    // also receive dLoss/dInput.
    void backward(const Tape<T>& tape, const Tensor<T>& upstream, GradientSet<T>& grads,
                  Tensor<T>* dx_out = nullptr) const {
        if (tape.ctx.size() != layers_.size())
            throw ValidationError("network backward: tape does not match network");
        Tensor<T> dy = upstream;
        std::size_t grad_idx = grads.size();
        for (std::size_t li = layers_.size(); li-- > 0;) {
            const Layer<T>& l = layers_[li];
            Tensor<T>* dw = nullptr;
            Tensor<T>* db = nullptr;
            if (l.w.numel()) {
                grad_idx -= 2;
                dw = &grads[grad_idx];
                db = &grads[grad_idx + 1];
            }
            const bool need_dx = (li > 0) || (dx_out != nullptr);
            Tensor<T> dx;
            backward_layer(l, tape.ctx[li], dy, dw, db, need_dx ? &dx : nullptr);
            dy = std::move(dx);
        }
        if (dx_out) *dx_out = std::move(dy);
    }

private:
    std::vector<std::size_t> input_shape_;
    std::vector<std::size_t> output_shape_;
    std::vector<Layer<T>> layers_;

    void check_input_shape(const Tensor<T>& x) const {
        bool ok = x.shape.size() == input_shape_.size() + 1;
        if (ok)
            for (std::size_t i = 0; i < input_shape_.size(); ++i)
                ok = ok && x.shape[i + 1] == input_shape_[i];
        if (!ok) throw ValidationError("network: input shape mismatch");
    }

    static std::size_t batch_of(const Tensor<T>& x) { return x.shape.empty() ? 0 : x.shape[0]; }

    Tensor<T> apply_layer(const Layer<T>& l, const Tensor<T>& x, LayerCtx<T>* ctx) const {
        const std::size_t B = batch_of(x);
        std::vector<std::size_t> out_shape = l.out_shape;
        out_shape.insert(out_shape.begin(), B);
        Tensor<T> y(out_shape);

        switch (l.spec.kind) {
            case LayerKind::Dense: {
                const std::size_t in = l.spec.in, out = l.spec.out;
                for (std::size_t bi = 0; bi < B; ++bi) {
                    T* yr = y.ptr() + bi * out;
                    for (std::size_t o = 0; o < out; ++o) yr[o] = l.b[o];
                }
                gemm_accumulate(B, out, in, x.ptr(), l.w.ptr(), y.ptr());
                if (ctx) ctx->input = x;
                break;
            }
            case LayerKind::Conv2D: {
                const std::size_t C = l.in_shape[0], H = l.in_shape[1], W = l.in_shape[2];
                const std::size_t OC = l.out_shape[0], OH = l.out_shape[1], OW = l.out_shape[2];
                const std::size_t K = l.spec.kernel, CKK = C * K * K, OHW = OH * OW;
                const std::size_t in_stride = C * H * W, out_stride = OC * OHW;
                parallel_for(B, [&](std::size_t bi) {
                    std::vector<T> col(CKK * OHW);
                    detail::im2col(x.ptr() + bi * in_stride, C, H, W, K, l.spec.stride, l.spec.pad,
                                   OH, OW, col.data());
                    T* yb = y.ptr() + bi * out_stride;
                    for (std::size_t oc = 0; oc < OC; ++oc)
                        for (std::size_t i = 0; i < OHW; ++i) yb[oc * OHW + i] = l.b[oc];
                    gemm_accumulate(OC, OHW, CKK, l.w.ptr(), col.data(), yb);
                });
                if (ctx) ctx->input = x;
                break;
            }
            case LayerKind::ReLU: {
                for (std::size_t i = 0; i < x.numel(); ++i) y[i] = x[i] > T(0) ? x[i] : T(0);
                if (ctx) ctx->input = x;
                break;
            }
            case LayerKind::Softplus: {
                for (std::size_t i = 0; i < x.numel(); ++i) y[i] = softplus_value(x[i]);
                if (ctx) ctx->input = x;
                break;
            }
            case LayerKind::MaxPool2: {
                const std::size_t C = l.in_shape[0], H = l.in_shape[1], W = l.in_shape[2];
                const std::size_t OH = l.out_shape[1], OW = l.out_shape[2];
                if (ctx) ctx->argmax.assign(B * C * OH * OW, 0);
                for (std::size_t bi = 0; bi < B; ++bi) {
                    const T* xb = x.ptr() + bi * C * H * W;
                    T* yb = y.ptr() + bi * C * OH * OW;
                    for (std::size_t c = 0; c < C; ++c)
                        for (std::size_t oy = 0; oy < OH; ++oy)
                            for (std::size_t ox = 0; ox < OW; ++ox) {
                                std::size_t best = (c * H + oy * 2) * W + ox * 2;
                                T bv = xb[best];
                                for (std::size_t dy2 = 0; dy2 < 2; ++dy2)
                                    for (std::size_t dx2 = 0; dx2 < 2; ++dx2) {
                                        const std::size_t idx = (c * H + oy * 2 + dy2) * W + ox * 2 + dx2;
                                        if (xb[idx] > bv) {
                                            bv = xb[idx];
                                            best = idx;
                                        }
                                    }
                                yb[(c * OH + oy) * OW + ox] = bv;
                                if (ctx)
                                    ctx->argmax[bi * C * OH * OW + (c * OH + oy) * OW + ox] =
                                        static_cast<std::uint32_t>(best);
                            }
                }
                break;
            }
            case LayerKind::Flatten: {
                y.data = x.data;
                break;
            }
            case LayerKind::L2Normalize: {
                const std::size_t D = l.out_shape[0];
                if (ctx) ctx->norms.assign(B, T(0));
                for (std::size_t bi = 0; bi < B; ++bi) {
                    const T* xr = x.ptr() + bi * D;
                    T* yr = y.ptr() + bi * D;
                    double nrm = 0.0;
                    for (std::size_t d = 0; d < D; ++d) nrm += static_cast<double>(xr[d]) * xr[d];
                    const T norm = static_cast<T>(std::sqrt(nrm));
                    if (norm > T(0))
                        for (std::size_t d = 0; d < D; ++d) yr[d] = xr[d] / norm;
                    if (ctx) ctx->norms[bi] = norm;
                }
                if (ctx) ctx->output = y;
                break;
            }
        }
        return y;
    }

    static T softplus_value(T x) {
        if (x > T(30)) return x;
        if (x < T(-30)) return std::exp(x);
        return std::log1p(std::exp(x));
    }

    void backward_layer(const Layer<T>& l, const LayerCtx<T>& ctx, const Tensor<T>& dy,
                        Tensor<T>* dw, Tensor<T>* db, Tensor<T>* dx) const {
        const std::size_t B = batch_of(dy);
        if (dx) {
            std::vector<std::size_t> in_shape = l.in_shape;
            in_shape.insert(in_shape.begin(), B);
            *dx = Tensor<T>(in_shape);
        }

        switch (l.spec.kind) {
            case LayerKind::Dense: {
                const std::size_t in = l.spec.in, out = l.spec.out;
                const Tensor<T>& x = ctx.input;
                for (std::size_t bi = 0; bi < B; ++bi) {
                    const T* xr = x.ptr() + bi * in;
                    const T* dyr = dy.ptr() + bi * out;
                    for (std::size_t i = 0; i < in; ++i) {
                        const T a = xr[i];
                        T* dwr = dw->ptr() + i * out;
                        for (std::size_t o = 0; o < out; ++o) dwr[o] += a * dyr[o];
                    }
                    for (std::size_t o = 0; o < out; ++o) (*db)[o] += dyr[o];
                }
                if (dx) {
                    for (std::size_t bi = 0; bi < B; ++bi) {
                        const T* dyr = dy.ptr() + bi * out;
                        T* dxr = dx->ptr() + bi * in;
                        for (std::size_t i = 0; i < in; ++i) {
                            const T* wr = l.w.ptr() + i * out;
                            T acc = T(0);
                            for (std::size_t o = 0; o < out; ++o) acc += dyr[o] * wr[o];
                            dxr[i] = acc;
                        }
                    }
                }
                break;
            }
            case LayerKind::Conv2D: {
                conv_backward(l, ctx, dy, dw, db, dx);
                break;
            }
            case LayerKind::ReLU: {
                if (dx)
                    for (std::size_t i = 0; i < dy.numel(); ++i)
                        (*dx)[i] = ctx.input[i] > T(0) ? dy[i] : T(0);
                break;
            }
            case LayerKind::Softplus: {
                if (dx)
                    for (std::size_t i = 0; i < dy.numel(); ++i) {
                        const T x = ctx.input[i];
                        const T sig = T(1) / (T(1) + std::exp(-x));
                        (*dx)[i] = dy[i] * sig;
                    }
                break;
            }
            case LayerKind::MaxPool2: {
                if (dx) {
                    const std::size_t C = l.in_shape[0], H = l.in_shape[1], W = l.in_shape[2];
                    const std::size_t OHW = l.out_shape[1] * l.out_shape[2];
                    for (std::size_t bi = 0; bi < B; ++bi)
                        for (std::size_t i = 0; i < C * OHW; ++i)
                            (*dx)[bi * C * H * W + ctx.argmax[bi * C * OHW + i]] += dy[bi * C * OHW + i];
                }
                break;
            }
            case LayerKind::Flatten: {
                if (dx) dx->data = dy.data;
                break;
            }
            case LayerKind::L2Normalize: {
                if (dx) {
                    const std::size_t D = l.out_shape[0];
                    for (std::size_t bi = 0; bi < B; ++bi) {
                        const T norm = ctx.norms[bi];
                        T* dxr = dx->ptr() + bi * D;
                        if (norm <= T(0)) continue;  // y := 0 there, gradient defined as 0
                        const T* yr = ctx.output.ptr() + bi * D;
                        const T* dyr = dy.ptr() + bi * D;
                        T dot = T(0);
                        for (std::size_t d = 0; d < D; ++d) dot += yr[d] * dyr[d];
                        for (std::size_t d = 0; d < D; ++d) dxr[d] = (dyr[d] - yr[d] * dot) / norm;
                    }
                }
                break;
            }
        }
    }

    void conv_backward(const Layer<T>& l, const LayerCtx<T>& ctx, const Tensor<T>& dy,
                       Tensor<T>* dw, Tensor<T>* db, Tensor<T>* dx) const {
        const std::size_t B = batch_of(dy);
        const std::size_t C = l.in_shape[0], H = l.in_shape[1], W = l.in_shape[2];
        const std::size_t OC = l.out_shape[0], OH = l.out_shape[1], OW = l.out_shape[2];
        const std::size_t K = l.spec.kernel, CKK = C * K * K, OHW = OH * OW;
        const std::size_t in_stride = C * H * W, out_stride = OC * OHW;
        const Tensor<T>& x = ctx.input;

        // dW and db: fixed-group batch partials reduced in group order, so the
        // accumulation order is independent of the thread count.
        const std::size_t groups = std::min<std::size_t>(detail::kGradGroups, B);
        std::vector<Tensor<T>> dw_part(groups, zeros_like(*dw));
        std::vector<Tensor<T>> db_part(groups, zeros_like(*db));
        const std::size_t per_group = (B + groups - 1) / groups;
        parallel_for(groups, [&](std::size_t g) {
            std::vector<T> col(CKK * OHW), colT(CKK * OHW);
            Tensor<T>& dwg = dw_part[g];
            Tensor<T>& dbg = db_part[g];
            const std::size_t lo = g * per_group, hi = std::min(B, lo + per_group);
            for (std::size_t bi = lo; bi < hi; ++bi) {
                detail::im2col(x.ptr() + bi * in_stride, C, H, W, K, l.spec.stride, l.spec.pad, OH,
                               OW, col.data());
                transpose(CKK, OHW, col.data(), colT.data());
                const T* dyb = dy.ptr() + bi * out_stride;
                // dW[oc,:] += sum_i dy[oc,i] * colT[i,:]
                gemm_accumulate(OC, CKK, OHW, dyb, colT.data(), dwg.ptr());
                for (std::size_t oc = 0; oc < OC; ++oc) {
                    T acc = T(0);
                    const T* row = dyb + oc * OHW;
                    for (std::size_t i = 0; i < OHW; ++i) acc += row[i];
                    dbg[oc] += acc;
                }
            }
        });
        for (std::size_t g = 0; g < groups; ++g) {
            for (std::size_t i = 0; i < dw->numel(); ++i) (*dw)[i] += dw_part[g][i];
            for (std::size_t i = 0; i < db->numel(); ++i) (*db)[i] += db_part[g][i];
        }

        if (dx) {
            parallel_for(B, [&](std::size_t bi) {
                std::vector<T> dcol(CKK * OHW, T(0));
                const T* dyb = dy.ptr() + bi * out_stride;
                // dcol[ckk,:] += sum_oc W[oc,ckk] * dy[oc,:]
                for (std::size_t oc = 0; oc < OC; ++oc) {
                    const T* wrow = l.w.ptr() + oc * CKK;
                    const T* dyrow = dyb + oc * OHW;
                    for (std::size_t ckk = 0; ckk < CKK; ++ckk) {
                        const T a = wrow[ckk];
                        T* drow = dcol.data() + ckk * OHW;
                        for (std::size_t i = 0; i < OHW; ++i) drow[i] += a * dyrow[i];
                    }
                }
                detail::col2im(dcol.data(), C, H, W, K, l.spec.stride, l.spec.pad, OH, OW,
                               dx->ptr() + bi * in_stride);
            });
        }
    }
};

// Snapshot helpers for warm starts and best-validation restore.
template <typename T>
std::vector<Tensor<T>> snapshot_parameters(const Network<T>& net) {
    std::vector<Tensor<T>> out;
    for (const Tensor<T>* p : net.parameters()) out.push_back(*p);
    return out;
}

template <typename T>
void restore_parameters(Network<T>& net, const std::vector<Tensor<T>>& snap) {
    auto params = net.parameters();
    if (params.size() != snap.size()) throw ValidationError("restore: parameter list mismatch");
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (!params[i]->same_shape(snap[i])) throw ValidationError("restore: parameter shape mismatch");
        *params[i] = snap[i];
    }
}

}  // namespace patern::nn
