#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "wharf/algebra/presets.hpp"
#include "wharf/mpdo/mpdo.hpp"

using namespace wharf;

namespace {

CMatrix sigma_z_chain(std::size_t N) {
    CMatrix sz(2, 2);
    sz(0, 0) = 1;
    sz(1, 1) = -1;
    CMatrix m = sz;
    for (std::size_t s = 1; s < N; ++s) m = kron(m, sz);
    return m;
}

}  // namespace

TEST_CASE("z2 rho_N closed form") {
    WhaSpec s = build_z2();
    auto d = distinguished_elements(s);
    for (std::size_t N : {1u, 3u, 8u}) {
        auto st = build_rho(s, d, d.Omega, N, "omega");
        std::size_t dim = 1;
        for (std::size_t k = 0; k < N; ++k) dim *= 2;
        CMatrix target = CMatrix::identity(dim) + sigma_z_chain(N);
        target *= cplx(1.0 / (double)dim, 0);
        CHECK(max_abs_diff(st.rho, target) < 1e-12);
        CHECK(std::abs(st.rho.trace() - cplx(1, 0)) < 1e-10);
    }
}

TEST_CASE("single site state") {
    WhaSpec s = build_lee_yang();
    auto d = distinguished_elements(s);
    auto st = build_rho(s, d, d.Omega, 1);
    CMatrix expect = s.phi(s.mul(d.c_omega, d.Omega));
    expect *= cplx(1.0 / std::real(dot(d.omega, d.Omega)), 0);
    CHECK(max_abs_diff(st.rho, expect) < 1e-12);
    CHECK(std::abs(st.rho.trace() - cplx(1, 0)) < 1e-10);
}

TEST_CASE("state invariants and budget") {
    WhaSpec s = build_lee_yang();
    auto d = distinguished_elements(s);
    auto st = build_rho(s, d, s.unit, 2);
    CHECK(st.rho.rows == 25);
    CHECK(is_psd(st.rho, 1e-10));
    CHECK(std::abs(st.rho.trace() - cplx(1, 0)) < 1e-10);
    // translation invariance of rho_N(Omega) under cyclic shift
    auto so = build_rho(s, d, d.Omega, 3);
    const std::size_t dim = 5;
    CMatrix shifted(so.rho.rows, so.rho.cols);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            for (std::size_t c = 0; c < dim; ++c)
                for (std::size_t a2 = 0; a2 < dim; ++a2)
                    for (std::size_t b2 = 0; b2 < dim; ++b2)
                        for (std::size_t c2 = 0; c2 < dim; ++c2)
                            shifted((c * dim + a) * dim + b, (c2 * dim + a2) * dim + b2) =
                                so.rho((a * dim + b) * dim + c, (a2 * dim + b2) * dim + c2);
    CHECK(max_abs_diff(shifted, so.rho) < 1e-10);
    // budget: lee-yang N=5 passes the guard, N=6 refuses
    CHECK_NOTHROW(delta_power(s, d.Omega, 4));
    CHECK_THROWS_AS(build_rho(s, d, s.unit, 6), std::runtime_error);
    // negative x refused
    AlgebraElement neg = s.unit;
    for (auto& v : neg) v = -v;
    CHECK_THROWS_AS(build_rho(s, d, neg, 2), std::invalid_argument);
}

TEST_CASE("mpo tensor closure") {
    for (auto build : {build_z2, build_kac_paljutkin, build_lee_yang}) {
        WhaSpec s = build();
        auto d = distinguished_elements(s);
        auto bare = export_mpo_tensor(s, d, false);
        CHECK(bare.bond_dim == s.n);
        const std::size_t maxN = s.rep_dim > 5 ? 3 : 4;
        for (std::size_t N = 1; N <= maxN; ++N) {
            AlgebraElement x = random_positive_element(s, 100 + N);
            CMatrix got = mpo_closure(s, bare, x, N);
            // direct Delta^{N-1} computation
            Vec tens = delta_power(s, x, N - 1);
            std::size_t dim = 1;
            for (std::size_t q = 0; q < N; ++q) dim *= s.rep_dim;
            CMatrix want(dim, dim);
            std::vector<std::size_t> idx(N, 0);
            const std::size_t count = tens.size() / 1;
            for (std::size_t flat = 0; flat < count; ++flat) {
                if (tens[flat] == cplx(0, 0)) continue;
                std::size_t f = flat;
                for (std::size_t q = N; q-- > 0;) {
                    idx[q] = f % s.n;
                    f /= s.n;
                }
                CMatrix m = s.rep[idx[0]];
                for (std::size_t q = 1; q < N; ++q) m = kron(m, s.rep[idx[q]]);
                m *= tens[flat];
                want += m;
            }
            CHECK(max_abs_diff(got, want) < 1e-9);
        }
        // N=1 closure of the weighted tensor gives phi(c x)
        auto weighted = export_mpo_tensor(s, d, true);
        AlgebraElement x = random_positive_element(s, 7);
        CHECK(max_abs_diff(mpo_closure(s, weighted, x, 1), s.phi(s.mul(d.c_omega, x))) < 1e-10);
    }
}

TEST_CASE("z2 bare tensor matches the example table") {
    WhaSpec s = build_z2();
    auto d = distinguished_elements(s);
    auto t = export_mpo_tensor(s, d, false);
    // nonzeros: (1,1;1,1) = (1,1;2,2) = (2,2;1,1) = 1, (2,2;2,2) = -1 (1-based)
    CHECK(t.block(0, 0)(0, 0) == cplx(1, 0));
    CHECK(t.block(0, 0)(1, 1) == cplx(1, 0));
    CHECK(t.block(1, 1)(0, 0) == cplx(1, 0));
    CHECK(t.block(1, 1)(1, 1) == cplx(-1, 0));
    CHECK(max_abs(t.block(0, 1)) == 0.0);
    CHECK(max_abs(t.block(1, 0)) == 0.0);
}

TEST_CASE("marginal consistency") {
    {
        WhaSpec s = build_z2();
        auto d = distinguished_elements(s);
        CHECK(marginal_check(s, d, d.Omega, 3) < 1e-12);
        // closed form: tracing one site of 2^{-3}(1 + sz sz sz) kills the sz term
        auto st = build_rho(s, d, d.Omega, 3);
        CMatrix tr_last = partial_trace(st.rho, {2, 2, 2}, {0, 1});
        CMatrix expect = CMatrix::identity(4);
        expect *= cplx(0.25, 0);
        CHECK(max_abs_diff(tr_last, expect) < 1e-12);
        // total trace preserved N=2 -> 1
        auto st2 = build_rho(s, d, d.Omega, 2);
        CHECK(std::abs(partial_trace(st2.rho, {2, 2}, {0}).trace() - cplx(1, 0)) < 1e-12);
    }
    {
        WhaSpec s = build_lee_yang();
        auto d = distinguished_elements(s);
        CHECK(marginal_check(s, d, s.unit, 3) < 1e-9);
        CHECK(marginal_check(s, d, d.Omega, 3) < 1e-9);
    }
}

TEST_CASE("omega idempotence in coordinates") {
    for (auto build : {build_z2, build_lee_yang}) {
        WhaSpec s = build();
        auto d = distinguished_elements(s);
        double e = 0;
        for (std::size_t i = 0; i < s.n; ++i) {
            CMatrix dm = s.delta(s.basis_el(i));
            cplx v = 0;
            for (std::size_t a = 0; a < s.n; ++a)
                for (std::size_t b = 0; b < s.n; ++b) v += d.omega[a] * d.omega[b] * dm(a, b);
            e = std::max(e, std::abs(v - d.omega[i]));
        }
        CHECK(e < 1e-10);
    }
}
