// AVX2/FMA lane. Compiled with -mavx2 -mfma; selected at runtime only when the
// CPU reports both features.

#include "wharf/core/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace wharf::kernels {

namespace {

// y[i] += a * x[i] over interleaved re/im doubles, 2 complex per vector
void axpy_avx2(std::size_t n, cplx a, const cplx* x, cplx* y) {
    const double ar = a.real(), ai = a.imag();
    const __m256d var = _mm256_set1_pd(ar);
    const __m256d vai = _mm256_set1_pd(ai);
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    std::size_t i = 0;
    const std::size_t nv = (n / 2) * 2;
    for (; i < nv; i += 2) {
        __m256d v = _mm256_loadu_pd(xp + 2 * i);
        __m256d vs = _mm256_permute_pd(v, 0x5);          // swap re/im in each pair
        __m256d t2 = _mm256_mul_pd(vai, vs);
        __m256d prod = _mm256_fmaddsub_pd(var, v, t2);   // even: ar*re-ai*im, odd: ar*im+ai*re
        __m256d acc = _mm256_add_pd(_mm256_loadu_pd(yp + 2 * i), prod);
        _mm256_storeu_pd(yp + 2 * i, acc);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void scal_to_avx2(std::size_t n, cplx a, const cplx* x, cplx* y) {
    const __m256d var = _mm256_set1_pd(a.real());
    const __m256d vai = _mm256_set1_pd(a.imag());
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    std::size_t i = 0;
    const std::size_t nv = (n / 2) * 2;
    for (; i < nv; i += 2) {
        __m256d v = _mm256_loadu_pd(xp + 2 * i);
        __m256d vs = _mm256_permute_pd(v, 0x5);
        __m256d t2 = _mm256_mul_pd(vai, vs);
        _mm256_storeu_pd(yp + 2 * i, _mm256_fmaddsub_pd(var, v, t2));
    }
    for (; i < n; ++i) y[i] = a * x[i];
}

cplx dotc_avx2(std::size_t n, const cplx* x, const cplx* y) {
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    __m256d acc_d = _mm256_setzero_pd();   // lanes: xr*yr, xi*yi (real part summands)
    __m256d acc_c = _mm256_setzero_pd();   // lanes: xr*yi, xi*yr (imag part summands)
    std::size_t i = 0;
    const std::size_t nv = (n / 2) * 2;
    for (; i < nv; i += 2) {
        __m256d vx = _mm256_loadu_pd(xp + 2 * i);
        __m256d vy = _mm256_loadu_pd(yp + 2 * i);
        acc_d = _mm256_fmadd_pd(vx, vy, acc_d);
        acc_c = _mm256_fmadd_pd(vx, _mm256_permute_pd(vy, 0x5), acc_c);
    }
    double d[4], c[4];
    _mm256_storeu_pd(d, acc_d);
    _mm256_storeu_pd(c, acc_c);
    double re = d[0] + d[1] + d[2] + d[3];
    double im = (c[0] - c[1]) + (c[2] - c[3]);
    cplx s(re, im);
    for (; i < n; ++i) s += std::conj(x[i]) * y[i];
    return s;
}

void gemm_acc_avx2(std::size_t m, std::size_t k, std::size_t n,
                   const cplx* A, const cplx* B, cplx* C) {
    const bool big = m * n * k >= (std::size_t)1 << 18;
#pragma omp parallel for schedule(static) if (big)
    for (long long ii = 0; ii < (long long)m; ++ii) {
        const std::size_t i = (std::size_t)ii;
        cplx* Ci = C + i * n;
        const cplx* Ai = A + i * k;
        for (std::size_t p = 0; p < k; ++p) {
            const cplx a = Ai[p];
            if (a == cplx(0.0, 0.0)) continue;
            axpy_avx2(n, a, B + p * n, Ci);
        }
    }
}

}  // namespace

const Ops* avx2_ops_if_supported() {
    static const Ops ops{axpy_avx2, scal_to_avx2, dotc_avx2, gemm_acc_avx2};
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &ops;
    return nullptr;
}

}  // namespace wharf::kernels

#else

namespace wharf::kernels {
const Ops* avx2_ops_if_supported() { return nullptr; }
}  // namespace wharf::kernels

#endif
