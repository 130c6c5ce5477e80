#pragma once

#include <complex>
#include <cstddef>

// Data-parallel complex kernels. Scalar reference implementations plus an AVX2
// lane selected once at startup; both lanes are equivalence-tested against each
// other in tests/test_kernels.cpp.

namespace wharf::kernels {

using cplx = std::complex<double>;

struct Ops {
    // y[i] += a * x[i]
    void (*axpy)(std::size_t n, cplx a, const cplx* x, cplx* y);
    // y[i] = a * x[i]
    void (*scal_to)(std::size_t n, cplx a, const cplx* x, cplx* y);
    // sum_i conj(x[i]) * y[i]
    cplx (*dotc)(std::size_t n, const cplx* x, const cplx* y);
    // C(m x n) += A(m x k) B(k x n), all row-major with leading dims = widths
    void (*gemm_acc)(std::size_t m, std::size_t k, std::size_t n,
                     const cplx* A, const cplx* B, cplx* C);
};

const Ops& ops();                 // runtime-dispatched lane
const Ops& scalar_ops();          // reference lane, always available
const Ops* avx2_ops_if_supported();  // null when the CPU lacks AVX2/FMA

const char* active_lane_name();

}  // namespace wharf::kernels
