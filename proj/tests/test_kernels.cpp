#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wharf/core/kernels.hpp"

using namespace wharf;
using kernels::cplx;

namespace {

std::vector<cplx> random_vec(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1, 1);
    std::vector<cplx> v(n);
    for (auto& x : v) x = cplx(d(rng), d(rng));
    return v;
}

double vdiff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
    return r;
}

}  // namespace

// The SIMD lane must agree with the scalar reference on every kernel.
TEST_CASE("lane equivalence") {
    const auto* simd = kernels::avx2_ops_if_supported();
    if (!simd) {
        MESSAGE("AVX2 lane unavailable on this host; scalar lane only");
        return;
    }
    const auto& ref = kernels::scalar_ops();
    std::mt19937_64 rng(123);
    for (std::size_t n : {1u, 2u, 3u, 7u, 64u, 257u, 1024u}) {
        auto x = random_vec(n, rng);
        auto y1 = random_vec(n, rng);
        auto y2 = y1;
        const cplx a(0.7, -0.3);
        ref.axpy(n, a, x.data(), y1.data());
        simd->axpy(n, a, x.data(), y2.data());
        CHECK(vdiff(y1, y2) < 1e-13);

        std::vector<cplx> z1(n), z2(n);
        ref.scal_to(n, a, x.data(), z1.data());
        simd->scal_to(n, a, x.data(), z2.data());
        CHECK(vdiff(z1, z2) < 1e-13);

        const cplx d1 = ref.dotc(n, x.data(), y1.data());
        const cplx d2 = simd->dotc(n, x.data(), y1.data());
        CHECK(std::abs(d1 - d2) < 1e-11 * (1.0 + std::abs(d1)));
    }
    for (auto [m, k, n] : std::vector<std::array<std::size_t, 3>>{
             {1, 1, 1}, {3, 4, 5}, {16, 16, 16}, {33, 17, 29}, {64, 64, 64}}) {
        auto A = random_vec(m * k, rng);
        auto B = random_vec(k * n, rng);
        auto C1 = random_vec(m * n, rng);
        auto C2 = C1;
        ref.gemm_acc(m, k, n, A.data(), B.data(), C1.data());
        simd->gemm_acc(m, k, n, A.data(), B.data(), C2.data());
        CHECK(vdiff(C1, C2) < 1e-11);
    }
}

TEST_CASE("gemm against hand computation") {
    const auto& ops = kernels::ops();
    // (2x3)(3x2)
    std::vector<cplx> A = {cplx(1, 1), cplx(0, 2), cplx(3, 0),
                           cplx(1, 0), cplx(0, 0), cplx(0, -1)};
    std::vector<cplx> B = {cplx(1, 0), cplx(2, 0), cplx(0, 1),
                           cplx(1, 1), cplx(0, 0), cplx(1, 0)};
    std::vector<cplx> C(4, cplx(0, 0));
    ops.gemm_acc(2, 3, 2, A.data(), B.data(), C.data());
    CHECK(std::abs(C[0] - (cplx(1, 1) + cplx(0, 2) * cplx(0, 1))) < 1e-14);
    CHECK(std::abs(C[1] - (cplx(1, 1) * 2.0 + cplx(0, 2) * cplx(1, 1) + cplx(3, 0))) < 1e-14);
    CHECK(std::abs(C[2] - cplx(1, 0)) < 1e-14);
    CHECK(std::abs(C[3] - (cplx(2, 0) + cplx(0, -1))) < 1e-14);
    MESSAGE("active lane: ", kernels::active_lane_name());
}
