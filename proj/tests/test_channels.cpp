#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wharf/algebra/presets.hpp"
#include "wharf/channels/channels.hpp"
#include "wharf/mpdo/mpdo.hpp"

using namespace wharf;

namespace {

CMatrix maximally_mixed(std::size_t d) {
    CMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0 / (double)d;
    return m;
}

void check_cptp(const Channel& ch, double tol = 1e-9) {
    auto r = ch.cptp_residuals();
    INFO(ch.label, " min_eig=", r.choi_min_eig, " tp=", r.tp_residual);
    CHECK(r.choi_min_eig > -tol);
    CHECK(r.tp_residual < tol);
    CHECK(r.herm_residual < tol);
}

}  // namespace

TEST_CASE("choi from action basics") {
    // identity channel: rank-one maximally entangled Choi
    auto id = choi_from_action([](const CMatrix& x) { return x; }, 2, 2, "id");
    auto eig = hermitian_eig(id.choi);
    CHECK(std::abs(eig.eigenvalues.back() - 2.0) < 1e-12);
    CHECK(std::abs(eig.eigenvalues[2]) < 1e-12);
    check_cptp(id);
    // full depolarizing on a qubit: Choi = I_4 / 2
    auto dep = choi_from_action(
        [](const CMatrix& x) {
            CMatrix out(2, 2);
            out(0, 0) = out(1, 1) = 0.5 * x.trace();
            return out;
        },
        2, 2, "dep");
    CHECK(max_abs_diff(dep.choi, 0.5 * CMatrix::identity(4)) < 1e-12);
    // nonlinear map is rejected
    CHECK_THROWS_AS(choi_from_action(
                        [](const CMatrix& x) {
                            CMatrix out = x;
                            out(0, 0) += std::abs(x(0, 0));
                            return out;
                        },
                        2, 2),
                    std::invalid_argument);
}

TEST_CASE("kraus reproduce the action") {
    WhaSpec s = build_z2();
    auto d = distinguished_elements(s);
    auto r2 = build_rho(s, d, d.Omega, 2);
    auto ch = choi_from_action(
        [&](const CMatrix& x) {
            CMatrix out = r2.rho;
            out *= x.trace();
            return out;
        },
        2, 4, "replace");
    check_cptp(ch);
    auto ks = kraus_from_choi(ch);
    // rank of Choi = rank of rho_2
    auto re = hermitian_eig(r2.rho, false);
    std::size_t rk = 0;
    for (double w : re.eigenvalues)
        if (w > 1e-10) ++rk;
    CHECK(ks.size() == 2 * rk);
    CMatrix x(2, 2);
    x(0, 0) = cplx(0.3, 0);
    x(1, 0) = cplx(0.1, -0.2);
    x(1, 1) = cplx(0.7, 0);
    CMatrix rec(4, 4);
    for (const auto& k : ks) rec += matmul(matmul(k, x), k.adjoint());
    CMatrix expect = r2.rho;
    expect *= x.trace();
    CHECK(max_abs_diff(rec, expect) < 1e-9);
}

TEST_CASE("coarse and fine graining fixed points") {
    for (auto build : {build_z2, build_function_z2, build_s3, build_kac_paljutkin, build_lee_yang}) {
        WhaSpec s = build();
        auto d = distinguished_elements(s);
        const std::size_t dim = s.rep_dim;
        CMatrix tc = transfer_coarse(s, d);
        CMatrix tf = transfer_fine(s, d);
        Channel cg = coarse_grain(s, d);
        Channel fg = fine_grain(s, d);
        check_cptp(cg);
        check_cptp(fg);
        std::vector<AlgebraElement> xs = {d.Omega, s.unit, random_positive_element(s, 11)};
        for (const auto& x : xs) {
            auto r1 = build_rho(s, d, x, 1);
            auto r2 = build_rho(s, d, x, 2);
            CHECK(trace_distance(apply_transfer(tc, r1.rho), r2.rho) < 1e-9);
            CHECK(trace_distance(apply_transfer(tf, r2.rho), r1.rho) < 1e-9);
        }
        // S o T fixes rho_1(Omega)
        auto r1 = build_rho(s, d, d.Omega, 1);
        CHECK(trace_distance(apply_transfer(tf, apply_transfer(tc, r1.rho)), r1.rho) < 1e-9);
        // X supported on Pperp maps to tr(X) rho_0
        CMatrix d1 = s.delta(s.unit);
        CMatrix P(dim * dim, dim * dim);
        for (std::size_t a = 0; a < s.n; ++a)
            for (std::size_t b = 0; b < s.n; ++b)
                if (d1(a, b) != cplx(0, 0)) {
                    CMatrix k = kron(s.rep[a], s.rep[b]);
                    k *= d1(a, b);
                    P += k;
                }
        CMatrix Pp = CMatrix::identity(dim * dim) - P;
        if (max_abs(Pp) < 1e-12) {
            CHECK(validate_axioms(s).is_hopf);   // Hopf: Delta(1) = 1 (x) 1, Pperp = 0
        } else {
            CMatrix X = matmul(Pp, matmul(maximally_mixed(dim * dim), Pp));
            CMatrix out = apply_transfer(tf, X);
            CMatrix expect = maximally_mixed(dim);
            expect *= X.trace();
            CHECK(max_abs_diff(out, expect) < 1e-9);
        }
    }
}

TEST_CASE("hopf gluing") {
    for (auto build : {build_z2, build_s3}) {
        WhaSpec s = build();
        auto d = distinguished_elements(s);
        const std::size_t dim = s.rep_dim;
        for (auto xsel : {0, 1}) {
            AlgebraElement x = xsel == 0 ? d.Omega : random_positive_element(s, 23);
            Channel g = glue_hopf(s, d, x);
            check_cptp(g);
            CMatrix tg = matmul(transfer_coarse(s, d), transfer_glue_inner_hopf(s, d, x));
            auto r1 = build_rho(s, d, d.Omega, 1);
            auto r2 = build_rho(s, d, d.Omega, 2);
            // M = N = 1
            CHECK(trace_distance(apply_transfer(tg, kron(r1.rho, r1.rho)),
                                 build_rho(s, d, x, 2).rho) < 1e-9);
            // M = N = 2 via window embedding
            CMatrix st = kron(r2.rho, r2.rho);
            CMatrix glued = apply_window(transfer_glue_inner_hopf(s, d, x), st, 4, dim, 1, 2, 1);
            glued = apply_window(transfer_coarse(s, d), glued, 3, dim, 1, 1, 2);
            CHECK(trace_distance(glued, build_rho(s, d, x, 4).rho) < 1e-9);
        }
    }
    // z2 glue Choi matches the explicit map of the depth-two example
    {
        WhaSpec s = build_z2();
        auto d = distinguished_elements(s);
        Channel g = glue_hopf(s, d, d.Omega);
        CMatrix sz(2, 2);
        sz(0, 0) = 1;
        sz(1, 1) = -1;
        CMatrix zz = kron(sz, sz);
        auto ref = choi_from_action(
            [&](const CMatrix& x) {
                CMatrix out = CMatrix::identity(4);
                out *= 0.25 * x.trace();
                CMatrix t = zz;
                t *= 0.25 * matmul(zz, x).trace();
                out += t;
                return out;
            },
            4, 4, "ref");
        CHECK(max_abs_diff(g.choi, ref.choi) < 1e-12);
    }
    // weak specs are refused
    {
        WhaSpec ly = build_lee_yang();
        auto d = distinguished_elements(ly);
        CHECK_THROWS_AS(glue_hopf(ly, d, d.Omega), std::runtime_error);
    }
}

TEST_CASE("trivial-sector gluing") {
    WhaSpec s = build_lee_yang();
    auto d = distinguished_elements(s);
    const std::size_t dim = s.rep_dim;
    Channel g = glue_trivial(s, d);
    check_cptp(g);
    CMatrix tg = matmul(transfer_coarse(s, d), transfer_glue_inner_trivial(s, d));
    auto r1 = build_rho(s, d, s.unit, 1);
    auto r2 = build_rho(s, d, s.unit, 2);
    CHECK(trace_distance(apply_transfer(tg, kron(r1.rho, r1.rho)), build_rho(s, d, s.unit, 2).rho) <
          1e-9);
    CMatrix st = kron(r2.rho, r2.rho);
    CMatrix glued = apply_window(transfer_glue_inner_trivial(s, d), st, 4, dim, 1, 2, 1);
    glued = apply_window(transfer_coarse(s, d), glued, 3, dim, 1, 1, 2);
    CHECK(trace_distance(glued, build_rho(s, d, s.unit, 4).rho) < 1e-9);
    // on Hopf specs G_1 coincides with G_x at x = 1
    WhaSpec z2 = build_z2();
    auto dz = distinguished_elements(z2);
    Channel g1 = glue_trivial(z2, dz);
    Channel gx = glue_hopf(z2, dz, z2.unit);
    CHECK(max_abs_diff(g1.choi, gx.choi) < 1e-9);
}

TEST_CASE("hopf mid-slice identity") {
    for (auto build : {build_z2, build_kac_paljutkin}) {
        WhaSpec s = build();
        auto d = distinguished_elements(s);
        double e = 0;
        for (std::size_t i = 0; i < s.n; ++i) {
            Vec d3 = sweedler3(s, s.basis_el(i));
            CMatrix lhs(s.n, s.n);
            for (std::size_t a = 0; a < s.n; ++a)
                for (std::size_t b = 0; b < s.n; ++b)
                    for (std::size_t c = 0; c < s.n; ++c)
                        if (d3[(a * s.n + b) * s.n + c] != cplx(0, 0))
                            lhs(a, c) += d3[(a * s.n + b) * s.n + c] * d.omega[b];
            CMatrix rhs(s.n, s.n);
            for (std::size_t a = 0; a < s.n; ++a)
                for (std::size_t c = 0; c < s.n; ++c)
                    rhs(a, c) = d.omega[i] * s.unit[a] * s.unit[c];
            e = std::max(e, max_abs_diff(lhs, rhs));
        }
        CHECK(e < 1e-10);
    }
}

TEST_CASE("no-gluing witness") {
    {
        WhaSpec s = build_z2();
        auto d = distinguished_elements(s);
        auto w = no_gluing_witness(s, d);
        CHECK(w.distance < 1e-10);
        CHECK(w.product_deviation < 1e-10);
    }
    {
        WhaSpec s = build_kac_paljutkin();
        auto d = distinguished_elements(s);
        auto w = no_gluing_witness(s, d);
        CHECK(w.distance < 1e-10);
    }
    {
        WhaSpec s = build_lee_yang();
        auto d = distinguished_elements(s);
        auto w = no_gluing_witness(s, d);
        // value recorded by the pre-build oracle: 0.400000000000
        CHECK(w.distance > 1e-3);
        CHECK(std::abs(w.distance - 0.4) < 1e-9);
        CHECK(w.product_deviation > 1e-3);
    }
}
