#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wharf/algebra/presets.hpp"
#include "wharf/engine/engine.hpp"

using namespace wharf;

namespace {

const double kGolden = 0.5 * (1.0 + std::sqrt(5.0));

WhaSpec direct_sum_z2_z2() {
    // CZ2 (+) CZ2: a proper weak Hopf algebra that is not connected
    WhaSpec z = build_z2();
    WhaSpec s;
    s.n = 4;
    s.basis = {"e0", "g0", "e1", "g1"};
    s.mult.assign(64, cplx(0, 0));
    s.coprod.assign(64, cplx(0, 0));
    for (std::size_t blk = 0; blk < 2; ++blk)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t k = 0; k < 2; ++k) {
                    s.mult[((blk * 2 + i) * 4 + (blk * 2 + j)) * 4 + (blk * 2 + k)] =
                        z.mult_at(i, j, k);
                    s.coprod[((blk * 2 + i) * 4 + (blk * 2 + j)) * 4 + (blk * 2 + k)] =
                        z.coprod_at(i, j, k);
                }
    s.unit = {1, 0, 1, 0};
    s.counit = {1, 1, 1, 1};
    s.star = CMatrix::identity(4);
    s.antipode = CMatrix::identity(4);
    for (std::size_t i = 0; i < 4; ++i) {
        CMatrix m(4, 4);
        const CMatrix& src = z.rep[i % 2];
        const std::size_t off = (i / 2) * 2;
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) m(off + r, off + c) = src(r, c);
        s.rep.push_back(m);
    }
    s.rep_dim = 4;
    s.validate_shape();
    return s;
}

}  // namespace

TEST_CASE("sector data per preset") {
    {
        auto sd = sectors(build_z2());
        CHECK(sd.r == 2);
        CHECK(sd.irrep_dims == std::vector<std::size_t>{1, 1});
        CHECK(std::abs(sd.fp_dims[0] - 1.0) < 1e-10);
        CHECK(std::abs(sd.D2 - 2.0) < 1e-10);
        CHECK(sd.connected);
        CHECK(sd.coconnected);
    }
    {
        auto sd = sectors(build_s3());
        CHECK(sd.r == 3);
        CHECK(sd.irrep_dims == std::vector<std::size_t>{1, 1, 2});
        CHECK(std::abs(sd.D2 - 6.0) < 1e-10);
    }
    {
        auto sd = sectors(build_kac_paljutkin());
        CHECK(sd.r == 5);
        CHECK(sd.irrep_dims == std::vector<std::size_t>{1, 1, 1, 1, 2});
        CHECK(std::abs(sd.D2 - 8.0) < 1e-10);
    }
    {
        auto sd = sectors(build_lee_yang());
        CHECK(sd.r == 2);
        CHECK(sd.irrep_dims == std::vector<std::size_t>{2, 3});
        CHECK(std::abs(sd.fp_dims[1] - kGolden) < 1e-10);
        CHECK(std::abs(sd.D2 - 0.5 * (5.0 + std::sqrt(5.0))) < 1e-10);
        CHECK(sd.connected);
        CHECK(sd.coconnected);
        // fusion: tau x tau = 1 + tau (Fibonacci)
        const std::size_t tau = 1;
        CHECK(sd.fusion[tau][tau][0] == 1);
        CHECK(sd.fusion[tau][tau][tau] == 1);
    }
}

TEST_CASE("haar integrals") {
    {
        WhaSpec s = build_z2();
        auto h = haar_integral(s);
        CHECK(std::abs(h[0] - cplx(0.5, 0)) < 1e-12);
        CHECK(std::abs(h[1] - cplx(0.5, 0)) < 1e-12);
        CHECK(max_abs_diff_vec(s.antipode_of(h), h) < 1e-12);
    }
    {
        WhaSpec s = build_function_z2();
        auto h = haar_integral(s);
        CHECK(std::abs(h[0] - cplx(1, 0)) < 1e-12);   // delta_e
        CHECK(std::abs(h[1]) < 1e-12);
    }
    {
        WhaSpec s = build_lee_yang();
        auto h = haar_integral(s);
        CHECK(max_abs_diff_vec(s.mul(h, h), h) < 1e-10);
        CHECK(max_abs_diff_vec(s.antipode_of(h), h) < 1e-10);
        CHECK(is_psd(s.phi(h), 1e-10));
    }
}

TEST_CASE("dualize") {
    WhaSpec z2 = build_z2();
    WhaSpec d = dualize(z2);
    WhaSpec fz2 = build_function_z2();
    CHECK(max_abs_diff_vec(d.mult, fz2.mult) < 1e-12);
    CHECK(max_abs_diff_vec(d.coprod, fz2.coprod) < 1e-12);
    CHECK(max_abs_diff_vec(d.unit, fz2.unit) < 1e-12);   // 1_{A*} = eps
    CHECK(validate_axioms(d).is_weak_hopf);
    // double dual returns the original structure constants
    for (auto build : {build_z2, build_kac_paljutkin, build_lee_yang}) {
        WhaSpec s = build();
        WhaSpec dd = dualize(dualize(s));
        CHECK(max_abs_diff_vec(dd.mult, s.mult) < 1e-10);
        CHECK(max_abs_diff_vec(dd.coprod, s.coprod) < 1e-10);
        CHECK(max_abs_diff(dd.antipode, s.antipode) < 1e-10);
        CHECK(max_abs_diff(dd.star, s.star) < 1e-10);
        CHECK(max_abs_diff_vec(dd.unit, s.unit) < 1e-10);
        CHECK(max_abs_diff_vec(dd.counit, s.counit) < 1e-10);
    }
}

TEST_CASE("distinguished elements golden values") {
    {
        WhaSpec s = build_z2();
        auto d = distinguished_elements(s);
        CHECK(std::abs(d.Omega[0] - cplx(0.5, 0)) < 1e-10);
        CHECK(std::abs(d.Omega[1] - cplx(0.5, 0)) < 1e-10);
        CHECK(std::abs(d.omega[0] - cplx(1, 0)) < 1e-10);
        CHECK(std::abs(d.omega[1]) < 1e-10);
        CHECK(std::abs(d.c_omega[0] - cplx(0.5, 0)) < 1e-10);
        CHECK(std::abs(d.c_omega[1]) < 1e-10);
        // xi = D^2 1 = 2*1, T = S = id
        CHECK(std::abs(d.xi[0] - cplx(2, 0)) < 1e-10);
        CHECK(max_abs_diff(d.T, CMatrix::identity(2)) < 1e-10);
        CHECK(d.T_expdef_residual < 1e-10);
        // phi(xi)^{-1} = I/2
        CHECK(max_abs_diff(psd_inverse(s.phi(d.xi)), 0.5 * CMatrix::identity(2)) < 1e-10);
    }
    {
        WhaSpec s = build_lee_yang();
        auto d = distinguished_elements(s);
        // phi(c_omega) = 2(5+sqrt5)^{-1} I_2 (+) 5^{-1/2} I_3
        CMatrix pc = s.phi(d.c_omega);
        const double b1 = 2.0 / (5.0 + std::sqrt(5.0));
        const double b2 = 1.0 / std::sqrt(5.0);
        CMatrix gold(5, 5);
        for (int k = 0; k < 2; ++k) gold(k, k) = b1;
        for (int k = 2; k < 5; ++k) gold(k, k) = b2;
        CHECK(max_abs_diff(pc, gold) < 1e-10);
        CHECK(d.T_expdef_residual < 1e-10);
        CHECK(std::abs(d.eps1 - 2.0) < 1e-12);
        // Omega is a cocentral positive idempotent
        CHECK(max_abs_diff_vec(s.mul(d.Omega, d.Omega), d.Omega) < 1e-10);
        CMatrix dOm = s.delta(d.Omega);
        double coc = 0;
        for (std::size_t a = 0; a < s.n; ++a)
            for (std::size_t b = 0; b < s.n; ++b)
                coc = std::max(coc, std::abs(dOm(a, b) - dOm(b, a)));
        CHECK(coc < 1e-10);
        CHECK(is_psd(s.phi(d.Omega), 1e-10));
        // dual trivial sector has FP dimension 1
        CHECK(std::abs(d.dual_fp_dims[d.dual_sector_data.trivial_sector] - 1.0) < 1e-8);
    }
    {
        WhaSpec s = build_kac_paljutkin();
        auto d = distinguished_elements(s);
        CHECK(max_abs_diff_vec(d.Omega, d.haar) < 1e-10);   // Omega = h on Hopf
        double ts = 0;
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                ts = std::max(ts, std::abs(d.T(i, j) - s.antipode(i, j)));
        CHECK(ts < 1e-10);                                   // T = S on Hopf
    }
}

TEST_CASE("hopf specialization report") {
    for (auto build : {build_z2, build_kac_paljutkin}) {
        WhaSpec s = build();
        auto d = distinguished_elements(s);
        auto rep = hopf_specialization_report(s, d);
        for (const auto& [k, v] : rep) {
            INFO(k);
            CHECK(v < 1e-10);
        }
    }
    WhaSpec ly = build_lee_yang();
    auto dly = distinguished_elements(ly);
    CHECK_THROWS_AS(hopf_specialization_report(ly, dly), std::runtime_error);
}

TEST_CASE("radon-nikodym") {
    WhaSpec s = build_z2();
    auto d = distinguished_elements(s);
    // mu with mu(Omega_(1)) Omega_(2) = e
    auto [mu, mup] = radon_nikodym(s, s.basis_el(0), d.Omega);
    CMatrix dOm = s.delta(d.Omega);
    Vec rec(2, cplx(0, 0));
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) rec[b] += mu[a] * dOm(a, b);
    CHECK(max_abs_diff_vec(rec, s.basis_el(0)) < 1e-10);
    // identity reproduction: x = against
    auto [m2, m2p] = radon_nikodym(s, d.Omega, d.Omega);
    Vec rec2(2, cplx(0, 0));
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) rec2[b] += m2[a] * dOm(a, b);
    CHECK(max_abs_diff_vec(rec2, d.Omega) < 1e-10);
    // mu_x(1) = D^2 omega(x) on Hopf presets
    for (std::size_t i = 0; i < 2; ++i) {
        auto [mx, mxp] = radon_nikodym(s, s.basis_el(i), d.Omega);
        CHECK(std::abs(dot(mx, s.unit) - d.D2 * d.omega[i]) < 1e-10);
    }
    // degenerate `against`
    CHECK_THROWS_AS(radon_nikodym(s, s.basis_el(0), s.basis_el(1)), std::runtime_error);
}

TEST_CASE("non-connected spec is refused") {
    WhaSpec s = direct_sum_z2_z2();
    auto rep = validate_axioms(s);
    CHECK(rep.is_weak_hopf);
    CHECK(!rep.is_hopf);
    auto sd = sectors(s);
    CHECK(!sd.connected);
    CHECK_THROWS_AS(distinguished_elements(s), std::runtime_error);
}

#include "wharf/engine/identities.hpp"

TEST_CASE("identity suite across presets") {
    for (auto build : {build_z2, build_function_z2, build_s3, build_kac_paljutkin, build_lee_yang}) {
        WhaSpec s = build();
        auto d = distinguished_elements(s);
        auto res = identity_suite(s, d);
        for (const auto& [k, v] : res) {
            INFO(k, " = ", v);
            CHECK(v < 1e-9);
        }
        CHECK(omega_uniqueness_violations(s, d) == 0);
    }
}
