#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "patern/errors.hpp"

namespace patern::nn {

// Dense row-major tensor. T is float in production (checkpoints store raw
// f32) and double in the finite-difference test instantiations.
template <typename T>
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<T> data;

    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> s) : shape(std::move(s)) {
        data.assign(numel_of(shape), T(0));
    }
    Tensor(std::initializer_list<std::size_t> s) : Tensor(std::vector<std::size_t>(s)) {}

    static std::size_t numel_of(const std::vector<std::size_t>& s) {
        std::size_t n = 1;
        for (std::size_t d : s) n *= d;
        return s.empty() ? 0 : n;
    }

    std::size_t numel() const { return data.size(); }

    T* ptr() { return data.data(); }
    const T* ptr() const { return data.data(); }

    T& operator[](std::size_t i) { return data[i]; }
    const T& operator[](std::size_t i) const { return data[i]; }

    void fill(T v) { std::fill(data.begin(), data.end(), v); }

    void reshape(std::vector<std::size_t> s) {
        if (numel_of(s) != data.size()) throw ValidationError("tensor reshape: element count mismatch");
        shape = std::move(s);
    }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    bool all_finite() const {
        for (const T& v : data)
            if (!std::isfinite(static_cast<double>(v))) return false;
        return true;
    }
};

template <typename T>
Tensor<T> zeros_like(const Tensor<T>& t) {
    Tensor<T> out;
    out.shape = t.shape;
    out.data.assign(t.data.size(), T(0));
    return out;
}

#ifndef NDEBUG
#define PATERN_ASSERT_FINITE(t)                                             \
    do {                                                                    \
        if (!(t).all_finite()) throw patern::ValidationError("non-finite tensor"); \
    } while (0)
#else
#define PATERN_ASSERT_FINITE(t) (void)0
#endif

}  // namespace patern::nn
