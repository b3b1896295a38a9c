#pragma once

#include "patern/nn/network.hpp"
#include "patern/world.hpp"

namespace patern {

inline constexpr int kEmbeddingDim = 8;

// Visual encoder: three 5x5 stride-2 convolutions with ReLU, flatten, dense
// to the 8-d embedding. Channel widths 16/48/128 put the parameter count at
// 239,736, inside the ~250k budget.
template <typename T>
nn::Network<T> make_visual_encoder(bool l2_normalize = false) {
    using nn::LayerSpec;
    std::vector<LayerSpec> specs = {
        LayerSpec::conv2d(3, 16, 5, 2, 2),   LayerSpec::relu(),
        LayerSpec::conv2d(16, 48, 5, 2, 2),  LayerSpec::relu(),
        LayerSpec::conv2d(48, 128, 5, 2, 2), LayerSpec::relu(),
        LayerSpec::flatten(),
        LayerSpec::dense(128 * 8 * 8, kEmbeddingDim),
    };
    if (l2_normalize) specs.push_back(LayerSpec::l2_normalize());
    return nn::Network<T>({3, kPatchSize, kPatchSize}, specs);
}

// Proprioceptive encoder: 3-layer MLP, ~4k parameters at the default
// 84-dimensional feature input.
template <typename T>
nn::Network<T> make_proprio_encoder(std::size_t feature_dim, bool l2_normalize = false) {
    using nn::LayerSpec;
    std::vector<LayerSpec> specs = {
        LayerSpec::dense(static_cast<std::uint32_t>(feature_dim), 32),
        LayerSpec::relu(),
        LayerSpec::dense(32, 32),
        LayerSpec::relu(),
        LayerSpec::dense(32, kEmbeddingDim),
    };
    if (l2_normalize) specs.push_back(LayerSpec::l2_normalize());
    return nn::Network<T>({feature_dim}, specs);
}

// Utility head: two-layer MLP with a softplus output, so utilities are
// strictly non-negative.
template <typename T>
nn::Network<T> make_utility_head() {
    using nn::LayerSpec;
    return nn::Network<T>({kEmbeddingDim}, {
                                               LayerSpec::dense(kEmbeddingDim, 16),
                                               LayerSpec::relu(),
                                               LayerSpec::dense(16, 1),
                                               LayerSpec::softplus(),
                                           });
}

}  // namespace patern
