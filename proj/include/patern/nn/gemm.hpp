#pragma once

#include <cstddef>

namespace patern::nn {

// C[M,N] += A[M,K] * B[K,N], all row-major. The j-innermost loop keeps both
// B rows and C rows contiguous so the compiler vectorizes it; the fixed k
// order keeps results bitwise reproducible for any thread partition above.
template <typename T>
void gemm_accumulate(std::size_t M, std::size_t N, std::size_t K,
                     const T* A, const T* B, T* C) {
    for (std::size_t i = 0; i < M; ++i) {
        const T* a = A + i * K;
        T* c = C + i * N;
        for (std::size_t k = 0; k < K; ++k) {
            const T av = a[k];
            const T* b = B + k * N;
            for (std::size_t j = 0; j < N; ++j) c[j] += av * b[j];
        }
    }
}

template <typename T>
void transpose(std::size_t rows, std::size_t cols, const T* in, T* out) {
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) out[c * rows + r] = in[r * cols + c];
}

}  // namespace patern::nn
