#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wharf/algebra/presets.hpp"
#include "wharf/engine/engine.hpp"

using namespace wharf;

TEST_CASE("hopf presets pass") {
    for (auto build : {build_z2, build_function_z2, build_s3, build_kac_paljutkin}) {
        WhaSpec s = build();
        auto rep = validate_axioms(s);
        CHECK(rep.worst_weak < 1e-12);
        CHECK(rep.is_weak_hopf);
        CHECK(rep.is_hopf);
    }
}

TEST_CASE("lee-yang is weak but not hopf") {
    WhaSpec s = build_lee_yang();
    auto rep = validate_axioms(s);
    CHECK(rep.worst_weak < 1e-10);
    CHECK(rep.is_weak_hopf);
    CHECK(!rep.is_hopf);
    CHECK(rep.residuals.at("hopf_unit") > 0.1);
}

TEST_CASE("mutated antipode is caught") {
    WhaSpec s = build_kac_paljutkin();
    s.antipode = CMatrix::identity(8);
    auto rep = validate_axioms(s);
    CHECK(rep.residuals.at("antipode") > 0.1);
    CHECK(!rep.is_weak_hopf);
}

TEST_CASE("delta power") {
    WhaSpec s = build_z2();
    // Delta^0(x) = x
    AlgebraElement g = s.basis_el(1);
    auto d0 = delta_power(s, g, 0);
    CHECK(d0.size() == 2);
    CHECK(d0[1] == cplx(1, 0));
    // Delta(g) = g (x) g
    auto d1 = delta_power(s, g, 1);
    CHECK(d1.size() == 4);
    CHECK(d1[1 * 2 + 1] == cplx(1, 0));
    CHECK(std::abs(d1[0]) + std::abs(d1[1]) + std::abs(d1[2]) == 0.0);
    CHECK_THROWS(delta_power(s, g, 40, 1000));
    // bracketing independence on lee-yang: (Delta x id) Delta == delta_power(., 2)
    WhaSpec ly = build_lee_yang();
    for (std::size_t i : {0u, 6u, 9u}) {
        auto d2 = delta_power(ly, ly.basis_el(i), 2);
        // other bracketing: expand the second leg of Delta
        CMatrix d = ly.delta(ly.basis_el(i));
        Vec other(13 * 13 * 13, cplx(0, 0));
        for (std::size_t a = 0; a < 13; ++a)
            for (std::size_t b = 0; b < 13; ++b) {
                if (d(a, b) == cplx(0, 0)) continue;
                CMatrix db = ly.delta(ly.basis_el(b));
                for (std::size_t p = 0; p < 13; ++p)
                    for (std::size_t q = 0; q < 13; ++q)
                        if (db(p, q) != cplx(0, 0))
                            other[(a * 13 + p) * 13 + q] += d(a, b) * db(p, q);
            }
        double e = 0;
        for (std::size_t k = 0; k < other.size(); ++k) e = std::max(e, std::abs(d2[k] - other[k]));
        CHECK(e < 1e-12);
    }
}

TEST_CASE("counital subalgebras") {
    WhaSpec z2 = build_z2();
    auto [al, ar] = counital_subalgebras(z2);
    CHECK(al.size() == 1);
    CHECK(ar.size() == 1);
    WhaSpec ly = build_lee_yang();
    auto [all, arl] = counital_subalgebras(ly);
    CHECK(all.size() == 2);
    CHECK(arl.size() == 2);
    // closure under multiplication and star, and A^L/A^R commute elementwise
    for (const auto& a : all)
        for (const auto& b : all) {
            auto p = ly.mul(a, b);
            // p must lie in span(all): residual of least squares
            CMatrix m(13, all.size()), rhs(13, 1);
            for (std::size_t c = 0; c < all.size(); ++c)
                for (std::size_t i = 0; i < 13; ++i) m(i, c) = all[c][i];
            for (std::size_t i = 0; i < 13; ++i) rhs(i, 0) = p[i];
            CHECK(solve_linear(m, rhs).residual < 1e-10);
        }
    for (const auto& a : all)
        for (const auto& b : arl)
            CHECK(max_abs_diff_vec(ly.mul(a, b), ly.mul(b, a)) < 1e-12);
}

TEST_CASE("unit lies in the counital subalgebras") {
    WhaSpec ly = build_lee_yang();
    auto [al, ar] = counital_subalgebras(ly);
    for (const auto* basis : {&al, &ar}) {
        CMatrix m(13, basis->size()), rhs(13, 1);
        for (std::size_t c = 0; c < basis->size(); ++c)
            for (std::size_t i = 0; i < 13; ++i) m(i, c) = (*basis)[c][i];
        for (std::size_t i = 0; i < 13; ++i) rhs(i, 0) = ly.unit[i];
        CHECK(solve_linear(m, rhs).residual < 1e-10);
    }
}
