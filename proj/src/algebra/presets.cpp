#include "wharf/algebra/presets.hpp"

#include <array>
#include <cmath>

namespace wharf {

namespace {

void check_group(const std::vector<std::vector<std::size_t>>& t) {
    const std::size_t n = t.size();
    auto fail = [](const std::string& m) { throw std::invalid_argument("not a group table: " + m); };
    for (const auto& row : t)
        if (row.size() != n) fail("ragged table");
    for (std::size_t i = 0; i < n; ++i)
        if (t[0][i] != i || t[i][0] != i) fail("index 0 is not the identity");
    for (std::size_t i = 0; i < n; ++i) {
        bool inv = false;
        for (std::size_t j = 0; j < n; ++j) inv |= (t[i][j] == 0);
        if (!inv) fail("missing inverse");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (t[t[i][j]][k] != t[i][t[j][k]]) fail("associativity fails");
}

std::vector<std::size_t> inverses(const std::vector<std::vector<std::size_t>>& t) {
    std::vector<std::size_t> inv(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j)
            if (t[i][j] == 0) inv[i] = j;
    return inv;
}

}  // namespace

WhaSpec build_group_algebra(const std::vector<std::vector<std::size_t>>& table,
                            const std::vector<CMatrix>& reps,
                            std::vector<std::string> labels) {
    check_group(table);
    const std::size_t n = table.size();
    if (reps.size() != n) throw std::invalid_argument("rep count != group order");
    WhaSpec s;
    s.n = n;
    if (labels.empty())
        for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    s.basis = std::move(labels);
    s.mult.assign(n * n * n, cplx(0, 0));
    s.coprod.assign(n * n * n, cplx(0, 0));
    s.unit.assign(n, cplx(0, 0));
    s.unit[0] = 1.0;
    s.counit.assign(n, cplx(1, 0));
    s.star = CMatrix(n, n);
    s.antipode = CMatrix(n, n);
    const auto inv = inverses(table);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) s.mult[(i * n + j) * n + table[i][j]] = 1.0;
        s.coprod[(i * n + i) * n + i] = 1.0;
        s.star(inv[i], i) = 1.0;
        s.antipode(inv[i], i) = 1.0;
    }
    s.rep = reps;
    s.rep_dim = reps[0].rows;
    s.validate_shape();
    return s;
}

WhaSpec build_function_algebra(const std::vector<std::vector<std::size_t>>& table,
                               std::vector<std::string> labels) {
    check_group(table);
    const std::size_t n = table.size();
    WhaSpec s;
    s.n = n;
    if (labels.empty())
        for (std::size_t i = 0; i < n; ++i) labels.push_back("d" + std::to_string(i));
    s.basis = std::move(labels);
    s.mult.assign(n * n * n, cplx(0, 0));
    s.coprod.assign(n * n * n, cplx(0, 0));
    s.unit.assign(n, cplx(1, 0));
    s.counit.assign(n, cplx(0, 0));
    s.counit[0] = 1.0;
    s.star = CMatrix::identity(n);
    s.antipode = CMatrix(n, n);
    const auto inv = inverses(table);
    for (std::size_t i = 0; i < n; ++i) {
        s.mult[(i * n + i) * n + i] = 1.0;
        s.antipode(inv[i], i) = 1.0;
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t h = 0; h < n; ++h)
                if (table[g][h] == i) s.coprod[(i * n + g) * n + h] = 1.0;
    }
    for (std::size_t i = 0; i < n; ++i) {
        CMatrix m(n, n);
        m(i, i) = 1.0;
        s.rep.push_back(m);
    }
    s.rep_dim = n;
    s.validate_shape();
    return s;
}

std::vector<std::vector<std::size_t>> z2_table() { return {{0, 1}, {1, 0}}; }

std::vector<std::vector<std::size_t>> s3_table() {
    // permutations of {0,1,2}; identity first, then lexicographic
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const std::array<int, 3>& p) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return i;
        throw std::logic_error("perm lookup");
    };
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            std::array<int, 3> c{};
            for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
            t[i][j] = index_of(c);
        }
    return t;
}

std::vector<CMatrix> regular_rep_of_table(const std::vector<std::vector<std::size_t>>& table) {
    const std::size_t n = table.size();
    std::vector<CMatrix> reps;
    for (std::size_t i = 0; i < n; ++i) {
        CMatrix m(n, n);
        for (std::size_t j = 0; j < n; ++j) m(table[i][j], j) = 1.0;
        reps.push_back(std::move(m));
    }
    return reps;
}

WhaSpec build_z2() {
    CMatrix id2 = CMatrix::identity(2);
    CMatrix sz(2, 2);
    sz(0, 0) = 1.0;
    sz(1, 1) = -1.0;
    return build_group_algebra(z2_table(), {id2, sz}, {"e", "g"});
}

WhaSpec build_function_z2() { return build_function_algebra(z2_table(), {"de", "dg"}); }

WhaSpec build_s3() { return build_group_algebra(s3_table(), regular_rep_of_table(s3_table())); }

WhaSpec build_kac_paljutkin() {
    // word basis x^a y^b z^c, index a + 2b + 4c
    const std::size_t n = 8;
    auto wid = [](int a, int b, int c) { return std::size_t(a + 2 * b + 4 * c); };
    auto mul_words = [&](std::array<int, 3> w1, std::array<int, 3> w2) {
        Vec out(n, cplx(0, 0));
        auto [a1, b1, c1] = w1;
        auto [a2, b2, c2] = w2;
        if (c1 == 1) std::swap(a2, b2);        // z x^a y^b = x^b y^a z
        const int a = (a1 + a2) % 2, b = (b1 + b2) % 2, c = c1 + c2;
        if (c <= 1) {
            out[wid(a, b, c)] = 1.0;
        } else {                               // z^2 = (1 + x + y - xy)/2
            out[wid(a, b, 0)] += 0.5;
            out[wid((a + 1) % 2, b, 0)] += 0.5;
            out[wid(a, (b + 1) % 2, 0)] += 0.5;
            out[wid((a + 1) % 2, (b + 1) % 2, 0)] -= 0.5;
        }
        return out;
    };
    std::vector<std::array<int, 3>> words;
    for (std::size_t i = 0; i < n; ++i)
        words.push_back({int(i % 2), int((i / 2) % 2), int(i / 4)});
    WhaSpec s;
    s.n = n;
    s.basis = {"1", "x", "y", "xy", "z", "xz", "yz", "xyz"};
    s.mult.assign(n * n * n, cplx(0, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec p = mul_words(words[i], words[j]);
            for (std::size_t k = 0; k < n; ++k) s.mult[(i * n + j) * n + k] = p[k];
        }
    s.unit.assign(n, cplx(0, 0));
    s.unit[0] = 1.0;
    s.counit.assign(n, cplx(1, 0));
    auto mulv = [&](const Vec& x, const Vec& y) {
        Vec out(n, cplx(0, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const cplx c = x[i] * y[j];
                if (c == cplx(0, 0)) continue;
                for (std::size_t k = 0; k < n; ++k) out[k] += c * s.mult[(i * n + j) * n + k];
            }
        return out;
    };
    // coproduct: generators, extended multiplicatively in A (x) A
    auto tens_mul = [&](const CMatrix& A, const CMatrix& B) {
        CMatrix out(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (A(a, b) == cplx(0, 0)) continue;
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t d = 0; d < n; ++d) {
                        const cplx v = A(a, b) * B(c, d);
                        if (v == cplx(0, 0)) continue;
                        for (std::size_t e = 0; e < n; ++e) {
                            if (s.mult[(a * n + c) * n + e] == cplx(0, 0)) continue;
                            for (std::size_t f = 0; f < n; ++f)
                                out(e, f) += v * s.mult[(a * n + c) * n + e] *
                                             s.mult[(b * n + d) * n + f];
                        }
                    }
            }
        return out;
    };
    CMatrix Dx(n, n), Dy(n, n), Dz(n, n), De(n, n);
    De(0, 0) = 1.0;
    Dx(wid(1, 0, 0), wid(1, 0, 0)) = 1.0;
    Dy(wid(0, 1, 0), wid(0, 1, 0)) = 1.0;
    Dz(wid(0, 0, 1), wid(0, 0, 1)) += 0.5;
    Dz(wid(0, 1, 1), wid(0, 0, 1)) += 0.5;
    Dz(wid(0, 0, 1), wid(1, 0, 1)) += 0.5;
    Dz(wid(0, 1, 1), wid(1, 0, 1)) -= 0.5;
    s.coprod.assign(n * n * n, cplx(0, 0));
    for (std::size_t i = 0; i < n; ++i) {
        auto [a, b, c] = words[i];
        CMatrix M = De;
        for (int q = 0; q < a; ++q) M = tens_mul(M, Dx);
        for (int q = 0; q < b; ++q) M = tens_mul(M, Dy);
        for (int q = 0; q < c; ++q) M = tens_mul(M, Dz);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) s.coprod[(i * n + p) * n + q] = M(p, q);
    }
    // star: x* = x, y* = y, z* = z^{-1} = (z + xz + yz - xyz)/2; words reversed
    Vec zinv(n, cplx(0, 0));
    zinv[wid(0, 0, 1)] = 0.5;
    zinv[wid(1, 0, 1)] = 0.5;
    zinv[wid(0, 1, 1)] = 0.5;
    zinv[wid(1, 1, 1)] = -0.5;
    s.star = CMatrix(n, n);
    s.antipode = CMatrix(n, n);
    Vec xv(n, cplx(0, 0)), yv(n, cplx(0, 0)), zv(n, cplx(0, 0)), onev(n, cplx(0, 0));
    xv[wid(1, 0, 0)] = 1.0;
    yv[wid(0, 1, 0)] = 1.0;
    zv[wid(0, 0, 1)] = 1.0;
    onev[0] = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        auto [a, b, c] = words[i];
        // (x^a y^b z^c)^* = z^{-c} y^b x^a ; S(x^a y^b z^c) = z^c y^b x^a
        Vec st = c ? zinv : onev;
        Vec sa = c ? zv : onev;
        for (int q = 0; q < b; ++q) { st = mulv(st, yv); sa = mulv(sa, yv); }
        for (int q = 0; q < a; ++q) { st = mulv(st, xv); sa = mulv(sa, xv); }
        for (std::size_t k = 0; k < n; ++k) {
            s.star(k, i) = st[k];
            s.antipode(k, i) = sa[k];
        }
    }
    // left regular representation (a *-representation in this word basis)
    for (std::size_t i = 0; i < n; ++i) {
        CMatrix m(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(k, j) = s.mult[(i * n + j) * n + k];
        s.rep.push_back(std::move(m));
    }
    s.rep_dim = n;
    s.validate_shape();
    return s;
}

double lee_yang_zeta() {
    double z = 0.8;   // Newton on z^4 + z^2 - 1
    for (int it = 0; it < 64; ++it) {
        const double f = ((z * z + 1) * z * z) - 1.0;
        const double df = 4 * z * z * z + 2 * z;
        const double step = f / df;
        z -= step;
        if (std::abs(step) < 1e-17) break;
    }
    return z;
}

WhaSpec build_lee_yang() {
    const std::size_t n = 13;
    const double z = lee_yang_zeta();
    auto zp = [&](int p) { return std::pow(z, p); };
    WhaSpec s;
    s.n = n;
    s.basis = {"e1_11", "e1_12", "e1_21", "e1_22", "e2_11", "e2_12", "e2_13",
               "e2_21", "e2_22", "e2_23", "e2_31", "e2_32", "e2_33"};
    // matrix-unit block data: block(i), row(i), col(i)
    auto block = [](std::size_t i) { return i < 4 ? 0 : 1; };
    auto rc = [](std::size_t i) {
        if (i < 4) return std::pair<std::size_t, std::size_t>{i / 2, i % 2};
        return std::pair<std::size_t, std::size_t>{(i - 4) / 3, (i - 4) % 3};
    };
    auto uidx = [](int blk, std::size_t r, std::size_t c) {
        return blk == 0 ? r * 2 + c : 4 + r * 3 + c;
    };
    s.mult.assign(n * n * n, cplx(0, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (block(i) != block(j)) continue;
            auto [r1, c1] = rc(i);
            auto [r2, c2] = rc(j);
            if (c1 == r2) s.mult[(i * n + j) * n + uidx(block(i), r1, c2)] = 1.0;
        }
    s.unit.assign(n, cplx(0, 0));
    for (std::size_t i : {uidx(0, 0, 0), uidx(0, 1, 1), uidx(1, 0, 0), uidx(1, 1, 1), uidx(1, 2, 2)})
        s.unit[i] = 1.0;
    s.counit.assign(n, cplx(0, 0));
    for (std::size_t i = 0; i < 4; ++i) s.counit[i] = 1.0;
    s.star = CMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto [r, c] = rc(i);
        s.star(uidx(block(i), c, r), i) = 1.0;
    }
    // antipode: S(e1^{rc}) = e1^{cr}; S(e2^{kl}) = zeta^{a(l)-a(k)} e2^{sigma(l) sigma(k)}
    // with sigma = (1 2)(3) and exponent potential a = (0, -2, -1).
    const int apot[3] = {0, -2, -1};
    const std::size_t sig[3] = {1, 0, 2};
    s.antipode = CMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto [r, c] = rc(i);
        if (block(i) == 0) {
            s.antipode(uidx(0, c, r), i) = 1.0;
        } else {
            s.antipode(uidx(1, sig[c], sig[r]), i) = zp(apot[c] - apot[r]);
        }
    }
    // coproduct rows on the printed generators; the remaining rows follow from
    // Delta(x^*) = (x_(1))^* (x) (x_(2))^*. The e2_13 and e2_22 entries use the
    // readings fixed by the axiom validator; the second term of Delta(e2_23) is
    // e2_23 (x) e1_12 (validator-fixed as well).
    struct Term { std::size_t a, b; double v; };
    auto setrow = [&](std::size_t i, std::initializer_list<Term> terms) {
        for (const auto& t : terms) s.coprod[(i * n + t.a) * n + t.b] += t.v;
    };
    const std::size_t e1_11 = 0, e1_12 = 1, e1_21 = 2, e1_22 = 3, e2_11 = 4, e2_12 = 5,
                      e2_13 = 6, e2_21 = 7, e2_22 = 8, e2_23 = 9, e2_31 = 10, e2_32 = 11,
                      e2_33 = 12;
    s.coprod.assign(n * n * n, cplx(0, 0));
    setrow(e1_11, {{e1_11, e1_11, 1}, {e2_11, e2_22, 1}});
    setrow(e1_12, {{e1_12, e1_12, 1}, {e2_12, e2_21, zp(2)}, {e2_13, e2_23, zp(1)}});
    setrow(e1_22, {{e1_22, e1_22, 1}, {e2_22, e2_11, zp(4)}, {e2_23, e2_13, zp(3)},
                   {e2_32, e2_31, zp(3)}, {e2_33, e2_33, zp(2)}});
    setrow(e2_11, {{e1_11, e2_11, 1}, {e2_11, e1_22, 1}, {e2_11, e2_33, 1}});
    setrow(e2_12, {{e1_12, e2_12, 1}, {e2_12, e1_21, 1}, {e2_13, e2_32, 1}});
    setrow(e2_13, {{e1_12, e2_13, 1}, {e2_13, e1_22, 1}, {e2_12, e2_31, zp(1)},
                   {e2_13, e2_33, -zp(2)}});
    setrow(e2_22, {{e1_22, e2_22, 1}, {e2_22, e1_11, 1}, {e2_33, e2_22, 1}});
    setrow(e2_23, {{e1_22, e2_23, 1}, {e2_23, e1_12, 1}, {e2_32, e2_21, zp(1)},
                   {e2_33, e2_23, -zp(2)}});
    setrow(e2_33, {{e1_22, e2_33, 1}, {e2_33, e1_22, 1}, {e2_22, e2_11, zp(2)},
                   {e2_23, e2_13, -zp(3)}, {e2_32, e2_31, -zp(3)}, {e2_33, e2_33, zp(4)}});
    // starred rows
    const std::pair<std::size_t, std::size_t> starred[] = {
        {e1_12, e1_21}, {e2_12, e2_21}, {e2_13, e2_31}, {e2_23, e2_32}};
    for (auto [src, dst] : starred)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const cplx v = s.coprod[(src * n + a) * n + b];
                if (v == cplx(0, 0)) continue;
                // (e_a)^* and (e_b)^* are single matrix units here
                auto [ra, ca] = rc(a);
                auto [rb, cb] = rc(b);
                s.coprod[(dst * n + uidx(block(a), ca, ra)) * n + uidx(block(b), cb, rb)] =
                    std::conj(v);
            }
    // representation: block embedding into End(C^5)
    for (std::size_t i = 0; i < n; ++i) {
        CMatrix m(5, 5);
        auto [r, c] = rc(i);
        if (block(i) == 0)
            m(r, c) = 1.0;
        else
            m(2 + r, 2 + c) = 1.0;
        s.rep.push_back(std::move(m));
    }
    s.rep_dim = 5;
    s.validate_shape();
    return s;
}

}  // namespace wharf
