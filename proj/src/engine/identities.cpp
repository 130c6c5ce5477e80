#include "wharf/engine/identities.hpp"

#include <cmath>
#include <random>

namespace wharf {

namespace {

struct NormalGen {
    std::mt19937_64 rng;
    explicit NormalGen(std::uint64_t seed) : rng(seed) {}
    double operator()() {
        const double u1 = (rng() >> 11) * 0x1.0p-53 + 0x1.0p-54;
        const double u2 = (rng() >> 11) * 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }
    Vec cvec(std::size_t n) {
        Vec v(n);
        for (auto& x : v) {
            const double re = (*this)();
            const double im = (*this)();
            x = cplx(re, im);
        }
        return v;
    }
};

double vmax(const Vec& v) {
    double r = 0;
    for (const auto& c : v) r = std::max(r, std::abs(c));
    return r;
}

Vec sub(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

}  // namespace

std::map<std::string, double> identity_suite(const WhaSpec& spec, const DistinguishedElements& d,
                                             std::uint64_t seed) {
    const std::size_t n = spec.n;
    std::map<std::string, double> out;
    NormalGen gen(seed);
    auto el = [&](std::size_t i) { return spec.basis_el(i); };
    const CMatrix dOm = spec.delta(d.Omega);
    auto applyT = [&](const Vec& x) {
        Vec r(n, cplx(0, 0));
        for (std::size_t j = 0; j < n; ++j) {
            if (x[j] == cplx(0, 0)) continue;
            for (std::size_t p = 0; p < n; ++p) r[p] += d.T(p, j) * x[j];
        }
        return r;
    };
    const bool hopf = validate_axioms(spec).is_hopf;

    // pulling-through equations, 20 random points each
    {
        double e1 = 0, e2 = 0;
        for (int trial = 0; trial < 20; ++trial) {
            Vec x = gen.cvec(n);
            Vec Tx = applyT(x);
            CMatrix lhs(n, n), rhs(n, n), lhs2(n, n), rhs2(n, n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    const cplx w = dOm(a, b);
                    if (w == cplx(0, 0)) continue;
                    Vec ta = spec.mul(Tx, el(a));
                    Vec xb = spec.mul(x, el(b));
                    // pt2: T(Omega_1) x (x) Omega_2 = T(Omega_1) (x) x Omega_2
                    Vec Ta = applyT(el(a));
                    Vec tax = spec.mul(Ta, x);
                    for (std::size_t k = 0; k < n; ++k) {
                        lhs(k, b) += w * ta[k];
                        rhs(a, k) += w * xb[k];
                        lhs2(k, b) += w * tax[k];
                    }
                    for (std::size_t q = 0; q < n; ++q) {
                        if (Ta[q] == cplx(0, 0)) continue;
                        for (std::size_t k = 0; k < n; ++k) rhs2(q, k) += w * Ta[q] * xb[k];
                    }
                }
            e1 = std::max(e1, max_abs_diff(lhs, rhs));
            e2 = std::max(e2, max_abs_diff(lhs2, rhs2));
        }
        out["pulling_through"] = e1;
        out["pulling_through_shifted"] = e2;
    }
    // omega o S = omega = omega o T
    {
        double e = 0;
        for (std::size_t i = 0; i < n; ++i) {
            e = std::max(e, std::abs(dot(d.omega, spec.antipode_of(el(i))) - d.omega[i]));
            e = std::max(e, std::abs(dot(d.omega, applyT(el(i))) - d.omega[i]));
        }
        out["omega_S_T_invariance"] = e;
    }
    // omega(xi T(Omega_1)) Omega_2 = 1
    {
        Vec acc(n, cplx(0, 0));
        for (std::size_t a = 0; a < n; ++a) {
            cplx w = 0;
            Vec xiTa = spec.mul(d.xi, applyT(el(a)));
            w = dot(d.omega, xiTa);
            for (std::size_t b = 0; b < n; ++b) acc[b] += w * dOm(a, b);
        }
        out["omega_on_Omega"] = vmax(sub(acc, spec.unit));
    }
    // xi^{-1} = omega(Omega_1) Omega_2
    {
        Vec acc(n, cplx(0, 0));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) acc[b] += d.omega[a] * dOm(a, b);
        out["xi_inverse_formula"] = vmax(sub(acc, d.xi_inv));
    }
    // T(xi) = xi and T(x^*) = xi^{-1} T(x)^* xi
    {
        out["T_fixes_xi"] = vmax(sub(applyT(d.xi), d.xi));
        double e = 0;
        for (int trial = 0; trial < 20; ++trial) {
            Vec x = gen.cvec(n);
            Vec lhs = applyT(spec.star_of(x));
            Vec rhs = spec.mul(spec.mul(d.xi_inv, spec.star_of(applyT(x))), d.xi);
            e = std::max(e, vmax(sub(lhs, rhs)));
        }
        out["T_star_twist"] = e;
    }
    // ghat(1_1) 1_2 = 1 = 1_1 ghat(1_2);  ghat(x_1) x_2 = gL x gL^{-1};  x_1 ghat(x_2) = gR x gR^{-1}
    {
        CMatrix d1 = spec.delta(spec.unit);
        Vec acc1(n, cplx(0, 0)), acc2(n, cplx(0, 0));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                acc1[b] += d.ghat[a] * d1(a, b);
                acc2[a] += d.ghat[b] * d1(a, b);
            }
        out["ghat_unit"] = std::max(vmax(sub(acc1, spec.unit)), vmax(sub(acc2, spec.unit)));
        Vec gLi = pullback(spec.rep, psd_inverse(spec.phi(d.gL)));
        Vec gRi = pullback(spec.rep, psd_inverse(spec.phi(d.gR)));
        double e = 0;
        for (int trial = 0; trial < 10; ++trial) {
            Vec x = gen.cvec(n);
            CMatrix dx = spec.delta(x);
            Vec l1(n, cplx(0, 0)), l2(n, cplx(0, 0));
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    l1[b] += d.ghat[a] * dx(a, b);
                    l2[a] += d.ghat[b] * dx(a, b);
                }
            e = std::max(e, vmax(sub(l1, spec.mul(spec.mul(d.gL, x), gLi))));
            e = std::max(e, vmax(sub(l2, spec.mul(spec.mul(d.gR, x), gRi))));
        }
        out["ghat_conjugation"] = e;
    }
    // Omega = (D2 eps1)^{-1} ghat(t_1) t_2 = (D2 eps1)^{-1} t_1 ghat(t_2)
    {
        CMatrix dt = spec.delta(d.t_dual_integral);
        Vec a1(n, cplx(0, 0)), a2(n, cplx(0, 0));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                a1[b] += d.ghat[a] * dt(a, b);
                a2[a] += d.ghat[b] * dt(a, b);
            }
        const double s = 1.0 / (d.D2 * d.eps1);
        for (auto& v : a1) v *= s;
        for (auto& v : a2) v *= s;
        out["Omega_from_t_left"] = vmax(sub(a1, d.Omega));
        out["Omega_from_t_right"] = vmax(sub(a2, d.Omega));
    }
    // omega(x) = (D2 eps1)^{-1} hhat(gL^{-1} gR^{-1} x) (and the right version)
    {
        Vec gLi = pullback(spec.rep, psd_inverse(spec.phi(d.gL)));
        Vec gRi = pullback(spec.rep, psd_inverse(spec.phi(d.gR)));
        Vec gg = spec.mul(gLi, gRi);
        double e = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx lhs = d.omega[i];
            const cplx r1 = dot(d.dual_haar, spec.mul(gg, el(i))) / (d.D2 * d.eps1);
            const cplx r2 = dot(d.dual_haar, spec.mul(el(i), gg)) / (d.D2 * d.eps1);
            e = std::max({e, std::abs(lhs - r1), std::abs(lhs - r2)});
        }
        out["omega_from_dual_haar"] = e;
    }
    // chi_a(g) = eps(1) d_a
    {
        double e = 0;
        for (std::size_t a = 0; a < d.sector_data.r; ++a)
            e = std::max(e, std::abs(dot(d.sector_data.characters[a], d.g) -
                                     d.eps1 * d.sector_data.fp_dims[a]));
        out["character_of_g"] = e;
    }
    // t: hhat(t_1) t_2 = 1; left integral; t_1 (x) t_2 = t_2 (x) S^2(t_1)
    {
        CMatrix dt = spec.delta(d.t_dual_integral);
        Vec acc(n, cplx(0, 0));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) acc[b] += d.dual_haar[a] * dt(a, b);
        out["t_normalization"] = vmax(sub(acc, spec.unit));
        CMatrix rhs(n, n);
        for (std::size_t a2 = 0; a2 < n; ++a2)
            for (std::size_t b2 = 0; b2 < n; ++b2) {
                const cplx w = dt(a2, b2);
                if (w == cplx(0, 0)) continue;
                Vec s2a = spec.antipode_of(spec.antipode_of(el(a2)));
                for (std::size_t k = 0; k < n; ++k) rhs(b2, k) += w * s2a[k];
            }
        out["t_twisted_cocommutativity"] = max_abs_diff(dt, rhs);
    }
    // S^2 = g . g^{-1}
    {
        Vec gi = pullback(spec.rep, psd_inverse(spec.phi(d.g)));
        double e = 0;
        for (std::size_t i = 0; i < n; ++i)
            e = std::max(e, vmax(sub(spec.antipode_of(spec.antipode_of(el(i))),
                                     spec.mul(spec.mul(d.g, el(i)), gi))));
        out["S2_conjugation"] = e;
    }
    out["haar_S_invariant"] = vmax(sub(spec.antipode_of(d.haar), d.haar));
    // biconnected balance
    {
        double s1 = 0, s2 = 0;
        for (double v : d.sector_data.fp_dims) s1 += v * v;
        for (double v : d.dual_fp_dims) s2 += v * v;
        out["fp_dim_balance"] = std::abs(s1 - s2);
    }
    // trivial-sector identities (valid on every biconnected spec)
    {
        auto [AL, AR] = counital_subalgebras(spec);
        Vec d31 = sweedler3(spec, spec.unit);
        auto rand_in = [&](const std::vector<Vec>& basis) {
            Vec v(n, cplx(0, 0));
            for (const auto& b : basis) {
                const double re = gen();
                const double im = gen();
                for (std::size_t i = 0; i < n; ++i) v[i] += cplx(re, im) * b[i];
            }
            return v;
        };
        double e_pull = 0, e_cp = 0;
        for (int trial = 0; trial < 6; ++trial) {
            Vec xL = rand_in(AL);
            Vec yR = rand_in(AR);
            // pullthrvac
            Vec lhs(n * n * n, cplx(0, 0)), rhs(n * n * n, cplx(0, 0));
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t c = 0; c < n; ++c) {
                        const cplx w = d31[(a * n + b) * n + c];
                        if (w == cplx(0, 0)) continue;
                        Vec l1 = spec.mul(xL, spec.antipode_of(el(a)));
                        Vec l3 = spec.mul(spec.antipode_of(el(c)), yR);
                        Vec r1 = spec.antipode_of(el(a));
                        Vec r2 = spec.mul(spec.mul(yR, el(b)), xL);
                        Vec r3 = spec.antipode_of(el(c));
                        for (std::size_t p = 0; p < n; ++p) {
                            if (l1[p] == cplx(0, 0) && r1[p] == cplx(0, 0)) continue;
                            for (std::size_t q = 0; q < n; ++q)
                                for (std::size_t s = 0; s < n; ++s) {
                                    if (l1[p] != cplx(0, 0) && l3[s] != cplx(0, 0) && q == b)
                                        lhs[(p * n + q) * n + s] += w * l1[p] * l3[s];
                                    if (r1[p] != cplx(0, 0))
                                        rhs[(p * n + q) * n + s] += w * r1[p] * r2[q] * r3[s];
                                }
                        }
                    }
            e_pull = std::max(e_pull, vmax(sub(lhs, rhs)));
            // CPminGkey
            e_cp = std::max(e_cp, vmax(sub(spec.mul(d.xiR, spec.antipode_of(spec.star_of(xL))),
                                           spec.mul(spec.star_of(spec.antipode_of(xL)), d.xiR))));
            e_cp = std::max(e_cp,
                            vmax(sub(spec.mul(spec.antipode_of(yR), d.xiL),
                                     spec.mul(d.xiL, spec.star_of(spec.antipode_of(spec.star_of(yR)))))));
        }
        out["trivial_pulling_through"] = e_pull;
        out["xi_antipode_exchange"] = e_cp;
        // hOmega1
        Vec acc(n, cplx(0, 0));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) acc[b] += d.dual_haar[a] * dOm(a, b);
        Vec ref = spec.unit;
        for (auto& v : ref) v *= 1.0 / (d.D2 * d.eps1);
        out["dual_haar_on_Omega"] = vmax(sub(acc, ref));
        // trvac1: 1_1 hhat(1_2) (x) 1_3 = eps1^{-1} 1 (x) 1
        CMatrix t1m(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    const cplx w = d31[(a * n + b) * n + c];
                    if (w != cplx(0, 0)) t1m(a, c) += w * d.dual_haar[b];
                }
        CMatrix ref1(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t c = 0; c < n; ++c) ref1(a, c) = spec.unit[a] * spec.unit[c] / d.eps1;
        out["unit_dual_haar_slice"] = max_abs_diff(t1m, ref1);
        // trvac2: 1_1 (x) omega(1_2) 1_3 = D2 xiR^{-1} (x) xiL^{-1}
        Vec xiLi = pullback(spec.rep, psd_inverse(spec.phi(d.xiL)));
        Vec xiRi = pullback(spec.rep, psd_inverse(spec.phi(d.xiR)));
        CMatrix t2m(n, n), ref2(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    const cplx w = d31[(a * n + b) * n + c];
                    if (w != cplx(0, 0)) t2m(a, c) += w * d.omega[b];
                }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t c = 0; c < n; ++c) ref2(a, c) = d.D2 * xiRi[a] * xiLi[c];
        out["unit_omega_slice"] = max_abs_diff(t2m, ref2);
        // omega1omega: omega(1_1) 1_2 omega(1_3) = D2 omega(1) xi^{-1}
        Vec mid(n, cplx(0, 0));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    const cplx w = d31[(a * n + b) * n + c];
                    if (w != cplx(0, 0)) mid[b] += w * d.omega[a] * d.omega[c];
                }
        Vec refm = d.xi_inv;
        const cplx w1 = dot(d.omega, spec.unit);
        for (auto& v : refm) v *= d.D2 * w1;
        out["omega_unit_sandwich"] = vmax(sub(mid, refm));
        // coproduct of xi^{-1}: Delta2(xi^{-1}) = xiL^{-1} 1_1 (x) 1_2 (x) xiR^{-1} 1_3
        Vec d3xi = sweedler3(spec, d.xi_inv);
        Vec rhs3(n * n * n, cplx(0, 0));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    const cplx w = d31[(a * n + b) * n + c];
                    if (w == cplx(0, 0)) continue;
                    Vec l = spec.mul(xiLi, el(a));
                    Vec r = spec.mul(xiRi, el(c));
                    for (std::size_t p = 0; p < n; ++p) {
                        if (l[p] == cplx(0, 0)) continue;
                        for (std::size_t s = 0; s < n; ++s)
                            rhs3[(p * n + b) * n + s] += w * l[p] * r[s];
                    }
                }
        out["xi_inverse_coproduct"] = vmax(sub(d3xi, rhs3));
        // T restricted to A^L is S; to A^R is S^{-1}
        CMatrix Sinv = solve_linear(spec.antipode, CMatrix::identity(n)).solution;
        double e = 0;
        for (const auto& v : AL) e = std::max(e, vmax(sub(applyT(v), spec.antipode_of(v))));
        for (const auto& v : AR) {
            Vec si(n, cplx(0, 0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k) si[k] += Sinv(k, i) * v[i];
            e = std::max(e, vmax(sub(applyT(v), si)));
        }
        out["T_on_counital_subalgebras"] = e;
    }
    if (hopf) {
        // omegaMidHA: x_1 (x) omega(x_2) x_3 = omega(x) 1 (x) 1
        double e = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Vec d3 = sweedler3(spec, el(i));
            CMatrix lhs(n, n), rhs(n, n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t c = 0; c < n; ++c) {
                        const cplx w = d3[(a * n + b) * n + c];
                        if (w != cplx(0, 0)) lhs(a, c) += w * d.omega[b];
                    }
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t c = 0; c < n; ++c)
                    rhs(a, c) = d.omega[i] * spec.unit[a] * spec.unit[c];
            e = std::max(e, max_abs_diff(lhs, rhs));
        }
        out["omega_mid"] = e;
        // mu_x(1) = D^2 omega(x)
        double e2 = 0;
        for (int trial = 0; trial < 5; ++trial) {
            Vec x = gen.cvec(n);
            auto [mu, mup] = radon_nikodym(spec, x, d.Omega);
            e2 = std::max(e2, std::abs(dot(mup, spec.unit) - d.D2 * dot(d.omega, x)));
        }
        out["mu_x_normalization"] = e2;
    }
    return out;
}

std::size_t omega_uniqueness_violations(const WhaSpec& spec, const DistinguishedElements& d,
                                        std::size_t samples, std::uint64_t seed) {
    NormalGen gen(seed);
    const std::size_t n = spec.n;
    std::size_t bad = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        Vec f(n, cplx(0, 0));
        for (std::size_t a = 0; a < d.sector_data.r; ++a) {
            const double c = std::abs(gen()) + 0.05;
            for (std::size_t i = 0; i < n; ++i) f[i] += c * d.sector_data.characters[a][i];
        }
        const cplx nrm = dot(f, spec.unit);
        for (auto& v : f) v /= (std::abs(nrm) + 1e-12);
        if (max_abs_diff_vec(f, d.omega) < 1e-6) continue;
        double dev = 0;
        for (std::size_t k = 0; k < n; ++k) {
            CMatrix dk = spec.delta(spec.basis_el(k));
            cplx acc = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (dk(a, b) != cplx(0, 0)) acc += f[a] * f[b] * dk(a, b);
            dev = std::max(dev, std::abs(acc - f[k]));
        }
        if (dev <= 1e-6) ++bad;
    }
    return bad;
}

}  // namespace wharf
