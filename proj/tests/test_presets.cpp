#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wharf/algebra/presets.hpp"

using namespace wharf;

TEST_CASE("z2 group algebra") {
    WhaSpec s = build_z2();
    CHECK(s.n == 2);
    CHECK(s.rep_dim == 2);
    // phi(g) = sigma_z
    CHECK(s.rep[1](0, 0) == cplx(1, 0));
    CHECK(s.rep[1](1, 1) == cplx(-1, 0));
    // Delta(g) = g (x) g
    CHECK(s.coprod_at(1, 1, 1) == cplx(1, 0));
    CHECK(s.coprod_at(1, 0, 1) == cplx(0, 0));
}

TEST_CASE("trivial group") {
    WhaSpec s = build_group_algebra({{0}}, {CMatrix::identity(1)});
    CHECK(s.n == 1);
    CHECK(s.mult_at(0, 0, 0) == cplx(1, 0));
}

TEST_CASE("non-group tables rejected") {
    // 0 not identity
    CHECK_THROWS(build_group_algebra({{1, 0}, {0, 1}},
                                     {CMatrix::identity(1), CMatrix::identity(1)}));
    // not associative (and no inverses): Latin-square-less junk
    std::vector<std::vector<std::size_t>> bad = {{0, 1, 2}, {1, 0, 0}, {2, 0, 1}};
    CHECK_THROWS(build_group_algebra(bad, {CMatrix::identity(1), CMatrix::identity(1),
                                           CMatrix::identity(1)}));
}

TEST_CASE("function algebra of Z2") {
    WhaSpec s = build_function_z2();
    CHECK(s.n == 2);
    // Delta(delta_e) = delta_e (x) delta_e + delta_g (x) delta_g
    CHECK(s.coprod_at(0, 0, 0) == cplx(1, 0));
    CHECK(s.coprod_at(0, 1, 1) == cplx(1, 0));
    CHECK(s.coprod_at(0, 0, 1) == cplx(0, 0));
    // diagonal rep
    CHECK(s.rep[0](0, 0) == cplx(1, 0));
    CHECK(s.rep[0](1, 1) == cplx(0, 0));
}

TEST_CASE("kac-paljutkin relations") {
    WhaSpec s = build_kac_paljutkin();
    CHECK(s.n == 8);
    const std::size_t x = 1, y = 2, z = 4, yz = 6;
    // z x = y z  (normal form "yz")
    auto prod = s.mul(s.basis_el(z), s.basis_el(x));
    CHECK(std::abs(prod[yz] - cplx(1, 0)) < 1e-14);
    for (std::size_t k = 0; k < 8; ++k)
        if (k != yz) CHECK(std::abs(prod[k]) < 1e-14);
    // z^2 = (1 + x + y - xy)/2
    auto z2 = s.mul(s.basis_el(z), s.basis_el(z));
    CHECK(std::abs(z2[0] - cplx(0.5, 0)) < 1e-14);
    CHECK(std::abs(z2[3] - cplx(-0.5, 0)) < 1e-14);
    // eps of every basis word is 1
    for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(s.counit[i] - cplx(1, 0)) < 1e-14);
}

TEST_CASE("lee-yang structure") {
    WhaSpec s = build_lee_yang();
    CHECK(s.n == 13);
    CHECK(s.rep_dim == 5);
    const double z = lee_yang_zeta();
    CHECK(std::abs(z * z * z * z + z * z - 1.0) < 1e-15);
    // Delta(e1_11) = e1_11 (x) e1_11 + e2_11 (x) e2_22
    CHECK(s.coprod_at(0, 0, 0) == cplx(1, 0));
    CHECK(s.coprod_at(0, 4, 8) == cplx(1, 0));
    // eps(1) = 2
    CHECK(std::abs(dot(s.counit, s.unit) - cplx(2, 0)) < 1e-14);
    // weak: Delta(1) != 1 (x) 1
    CMatrix d1 = s.delta(s.unit);
    CMatrix outer(s.n, s.n);
    for (std::size_t a = 0; a < s.n; ++a)
        for (std::size_t b = 0; b < s.n; ++b) outer(a, b) = s.unit[a] * s.unit[b];
    CHECK(max_abs_diff(d1, outer) > 0.1);
}
