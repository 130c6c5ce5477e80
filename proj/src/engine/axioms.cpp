#include <cmath>

#include "wharf/engine/engine.hpp"

namespace wharf {

namespace {

double vmax(const Vec& v) {
    double r = 0.0;
    for (const auto& c : v) r = std::max(r, std::abs(c));
    return r;
}

}  // namespace

CMatrix delta_matrix(const WhaSpec& spec, const AlgebraElement& x) { return spec.delta(x); }

Vec sweedler3(const WhaSpec& spec, const AlgebraElement& x) {
    return delta_power(spec, x, 2);
}

Vec delta_power(const WhaSpec& spec, const AlgebraElement& x, std::size_t k,
                std::size_t budget_entries) {
    const std::size_t n = spec.n;
    std::size_t total = n;
    for (std::size_t i = 0; i < k; ++i) {
        total *= n;
        if (budget_entries && total > budget_entries)
            throw std::runtime_error("delta_power: budget exceeded");
    }
    Vec cur = x;
    // expand the first leg repeatedly: Delta^(m+1) = (Delta (x) id^m) Delta^(m)
    for (std::size_t step = 0; step < k; ++step) {
        const std::size_t rest = cur.size() / n;
        Vec next(cur.size() * n, cplx(0, 0));
        for (std::size_t i = 0; i < n; ++i) {
            const cplx* blk = &spec.coprod[i * n * n];
            for (std::size_t m = 0; m < rest; ++m) {
                const cplx c = cur[i * rest + m];
                if (c == cplx(0, 0)) continue;
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b) {
                        const cplx v = blk[a * n + b];
                        if (v != cplx(0, 0)) next[(a * n + b) * rest + m] += c * v;
                    }
            }
        }
        cur.swap(next);
    }
    return cur;
}

AxiomReport validate_axioms(const WhaSpec& spec, double tol) {
    const std::size_t n = spec.n;
    AxiomReport rep;
    auto& R = rep.residuals;
    auto el = [&](std::size_t i) { return spec.basis_el(i); };

    // unit / associativity
    {
        double e = 0.0, a = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            e = std::max(e, max_abs_diff_vec(spec.mul(spec.unit, el(i)), el(i)));
            e = std::max(e, max_abs_diff_vec(spec.mul(el(i), spec.unit), el(i)));
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    a = std::max(a, max_abs_diff_vec(
                                        spec.mul(spec.mul(el(i), el(j)), el(k)),
                                        spec.mul(el(i), spec.mul(el(j), el(k)))));
        R["unit"] = e;
        R["assoc"] = a;
    }
    // counit
    {
        double e = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            CMatrix d = spec.delta(el(i));
            Vec left(n, cplx(0, 0)), right(n, cplx(0, 0));
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    left[b] += spec.counit[a] * d(a, b);
                    right[a] += spec.counit[b] * d(a, b);
                }
            e = std::max(e, max_abs_diff_vec(left, el(i)));
            e = std::max(e, max_abs_diff_vec(right, el(i)));
        }
        R["counit"] = e;
    }
    // coassociativity
    {
        double e = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            CMatrix d = spec.delta(el(i));
            Vec l(n * n * n, cplx(0, 0)), r(n * n * n, cplx(0, 0));
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    const cplx c = d(a, b);
                    if (c == cplx(0, 0)) continue;
                    const cplx* da = &spec.coprod[a * n * n];
                    const cplx* db = &spec.coprod[b * n * n];
                    for (std::size_t p = 0; p < n; ++p)
                        for (std::size_t q = 0; q < n; ++q) {
                            l[(p * n + q) * n + b] += c * da[p * n + q];
                            r[(a * n + p) * n + q] += c * db[p * n + q];
                        }
                }
            for (std::size_t k = 0; k < l.size(); ++k) e = std::max(e, std::abs(l[k] - r[k]));
        }
        R["coassoc"] = e;
    }
    // multiplicativity of Delta
    {
        double e = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            CMatrix di = spec.delta(el(i));
            for (std::size_t j = 0; j < n; ++j) {
                CMatrix lhs = spec.delta(spec.mul(el(i), el(j)));
                CMatrix dj = spec.delta(el(j));
                CMatrix rhs(n, n);
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b) {
                        const cplx ci = di(a, b);
                        if (ci == cplx(0, 0)) continue;
                        for (std::size_t c = 0; c < n; ++c)
                            for (std::size_t d2 = 0; d2 < n; ++d2) {
                                const cplx v = ci * dj(c, d2);
                                if (v == cplx(0, 0)) continue;
                                const cplx* m1 = &spec.mult[(a * n + c) * n];
                                const cplx* m2 = &spec.mult[(b * n + d2) * n];
                                for (std::size_t p = 0; p < n; ++p) {
                                    if (m1[p] == cplx(0, 0)) continue;
                                    const cplx vp = v * m1[p];
                                    for (std::size_t q = 0; q < n; ++q)
                                        rhs(p, q) += vp * m2[q];
                                }
                            }
                    }
                e = std::max(e, max_abs_diff(lhs, rhs));
            }
        }
        R["delta_mult"] = e;
    }
    // star compatibility: Delta(x^*) = (x_(1))^* (x) (x_(2))^*
    {
        double e = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            CMatrix lhs = spec.delta(spec.star_of(el(i)));
            CMatrix d = spec.delta(el(i));
            CMatrix rhs(n, n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    const cplx c = std::conj(d(a, b));
                    if (c == cplx(0, 0)) continue;
                    for (std::size_t p = 0; p < n; ++p) {
                        if (spec.star(p, a) == cplx(0, 0)) continue;
                        for (std::size_t q = 0; q < n; ++q)
                            rhs(p, q) += c * spec.star(p, a) * spec.star(q, b);
                    }
                }
            e = std::max(e, max_abs_diff(lhs, rhs));
        }
        R["star_compat"] = e;
    }
    // weak unit axiom
    {
        CMatrix d1 = spec.delta(spec.unit);
        Vec d2 = delta_power(spec, spec.unit, 2);
        Vec t1(n * n * n, cplx(0, 0)), t2(n * n * n, cplx(0, 0));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const cplx c1 = d1(a, b);
                if (c1 == cplx(0, 0)) continue;
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t d3 = 0; d3 < n; ++d3) {
                        const cplx v = c1 * d1(c, d3);
                        if (v == cplx(0, 0)) continue;
                        const cplx* mbc = &spec.mult[(b * n + c) * n];
                        const cplx* mcb = &spec.mult[(c * n + b) * n];
                        for (std::size_t e2 = 0; e2 < n; ++e2) {
                            if (mbc[e2] != cplx(0, 0)) t1[(a * n + e2) * n + d3] += v * mbc[e2];
                            if (mcb[e2] != cplx(0, 0)) t2[(a * n + e2) * n + d3] += v * mcb[e2];
                        }
                    }
            }
        double e = 0.0;
        for (std::size_t k = 0; k < d2.size(); ++k)
            e = std::max({e, std::abs(d2[k] - t1[k]), std::abs(d2[k] - t2[k])});
        R["weak_unit"] = e;
    }
    // weak counit axiom
    {
        CMatrix EM(n, n);   // eps(e_i e_j)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                EM(i, j) = dot(spec.counit, spec.mul(el(i), el(j)));
        double e = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                CMatrix dj = spec.delta(el(j));
                Vec eij = spec.mul(el(i), el(j));
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx lhs = dot(spec.counit, spec.mul(eij, el(k)));
                    cplx c1 = 0, c2 = 0;
                    for (std::size_t a = 0; a < n; ++a)
                        for (std::size_t b = 0; b < n; ++b) {
                            const cplx v = dj(a, b);
                            if (v == cplx(0, 0)) continue;
                            c1 += v * EM(i, a) * EM(b, k);
                            c2 += v * EM(i, b) * EM(a, k);
                        }
                    e = std::max({e, std::abs(lhs - c1), std::abs(lhs - c2)});
                }
            }
        R["weak_counit"] = e;
    }
    // antipode axioms (standard order; see header comment)
    {
        CMatrix d1 = spec.delta(spec.unit);
        CMatrix EM(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                EM(i, j) = dot(spec.counit, spec.mul(el(i), el(j)));
        double e = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            CMatrix d = spec.delta(el(i));
            Vec lhs1(n, cplx(0, 0)), lhs2(n, cplx(0, 0));
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    const cplx c = d(a, b);
                    if (c == cplx(0, 0)) continue;
                    Vec t = spec.mul(spec.antipode_of(el(a)), el(b));
                    for (std::size_t k = 0; k < n; ++k) lhs1[k] += c * t[k];
                    Vec t2 = spec.mul(el(a), spec.antipode_of(el(b)));
                    for (std::size_t k = 0; k < n; ++k) lhs2[k] += c * t2[k];
                }
            Vec rhs1(n, cplx(0, 0)), rhs2(n, cplx(0, 0));
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) {
                    const cplx v = d1(p, q);
                    if (v == cplx(0, 0)) continue;
                    rhs1[p] += v * EM(i, q);   // 1_(1) eps(x 1_(2))
                    rhs2[q] += v * EM(p, i);   // eps(1_(1) x) 1_(2)
                }
            e = std::max({e, max_abs_diff_vec(lhs1, rhs1), max_abs_diff_vec(lhs2, rhs2)});
        }
        R["antipode"] = e;
    }
    // derived antipode properties
    {
        double anti = 0.0, sstar = 0.0, coanti = 0.0;
        CMatrix Sinv;
        {
            auto ls = solve_linear(spec.antipode, CMatrix::identity(n));
            Sinv = ls.solution;
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                anti = std::max(anti, max_abs_diff_vec(
                                          spec.antipode_of(spec.mul(el(i), el(j))),
                                          spec.mul(spec.antipode_of(el(j)), spec.antipode_of(el(i)))));
            Vec sinv_i(n, cplx(0, 0));
            for (std::size_t k = 0; k < n; ++k) sinv_i[k] = Sinv(k, i);
            sstar = std::max(sstar, max_abs_diff_vec(spec.antipode_of(spec.star_of(el(i))),
                                                     spec.star_of(sinv_i)));
            // Delta(S x) = S(x_(2)) (x) S(x_(1))
            CMatrix lhs = spec.delta(spec.antipode_of(el(i)));
            CMatrix d = spec.delta(el(i));
            CMatrix rhs(n, n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    const cplx c = d(a, b);
                    if (c == cplx(0, 0)) continue;
                    for (std::size_t p = 0; p < n; ++p) {
                        if (spec.antipode(p, b) == cplx(0, 0)) continue;
                        for (std::size_t q = 0; q < n; ++q)
                            rhs(p, q) += c * spec.antipode(p, b) * spec.antipode(q, a);
                    }
                }
            coanti = std::max(coanti, max_abs_diff(lhs, rhs));
        }
        R["S_antimult"] = anti;
        R["S_star"] = sstar;
        R["S_coantihom"] = coanti;
    }
    // representation checks
    {
        double rm = 0.0, rs = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                rm = std::max(rm, max_abs_diff(spec.phi(spec.mul(el(i), el(j))),
                                               matmul(spec.rep[i], spec.rep[j])));
            rs = std::max(rs, max_abs_diff(spec.phi(spec.star_of(el(i))), spec.rep[i].adjoint()));
        }
        R["rep_mult"] = rm;
        R["rep_star"] = rs;
        R["rep_unit"] = max_abs_diff(spec.phi(spec.unit), CMatrix::identity(spec.rep_dim));
    }
    // Hopf extras
    {
        CMatrix d1 = spec.delta(spec.unit);
        CMatrix outer(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) outer(a, b) = spec.unit[a] * spec.unit[b];
        R["hopf_unit"] = max_abs_diff(d1, outer);
        double he = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                he = std::max(he, std::abs(dot(spec.counit, spec.mul(el(i), el(j))) -
                                           spec.counit[i] * spec.counit[j]));
        R["hopf_counit"] = he;
    }
    double worst = 0.0;
    for (const auto& [k, v] : R)
        if (k != "hopf_unit" && k != "hopf_counit") worst = std::max(worst, v);
    rep.worst_weak = worst;
    rep.is_weak_hopf = worst <= tol;
    rep.is_hopf = rep.is_weak_hopf && R["hopf_unit"] <= tol && R["hopf_counit"] <= tol;
    return rep;
}

}  // namespace wharf
