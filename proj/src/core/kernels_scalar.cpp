#include "wharf/core/kernels.hpp"

namespace wharf::kernels {

namespace {

void axpy_scalar(std::size_t n, cplx a, const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scal_to_scalar(std::size_t n, cplx a, const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i];
}

cplx dotc_scalar(std::size_t n, const cplx* x, const cplx* y) {
    cplx s = 0;
    for (std::size_t i = 0; i < n; ++i) s += std::conj(x[i]) * y[i];
    return s;
}

// ikj order: the inner loop is a contiguous axpy over a row of B.
void gemm_acc_scalar(std::size_t m, std::size_t k, std::size_t n,
                     const cplx* A, const cplx* B, cplx* C) {
    for (std::size_t i = 0; i < m; ++i) {
        cplx* Ci = C + i * n;
        const cplx* Ai = A + i * k;
        for (std::size_t p = 0; p < k; ++p) {
            const cplx a = Ai[p];
            if (a == cplx(0.0, 0.0)) continue;
            axpy_scalar(n, a, B + p * n, Ci);
        }
    }
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{axpy_scalar, scal_to_scalar, dotc_scalar, gemm_acc_scalar};
    return ops;
}

}  // namespace wharf::kernels
