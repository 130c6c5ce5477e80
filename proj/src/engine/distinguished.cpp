#include <algorithm>
#include <cmath>

#include "wharf/engine/engine.hpp"

namespace wharf {

namespace {

// sqrt / inverse of a positive algebra element through the representation
AlgebraElement alg_sqrt(const WhaSpec& spec, const AlgebraElement& x) {
    return pullback(spec.rep, psd_sqrt(spec.phi(x), 1e-8));
}

AlgebraElement alg_inv(const WhaSpec& spec, const AlgebraElement& x) {
    return pullback(spec.rep, psd_inverse(spec.phi(x), 1e-10));
}

std::vector<CMatrix> gns_representation(const WhaSpec& d, const Functional& omega_vec) {
    const std::size_t n = d.n;
    CMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec si = d.star_of(d.basis_el(i));
        for (std::size_t j = 0; j < n; ++j) {
            Vec prod = d.mul(si, d.basis_el(j));
            gram(i, j) = dot(omega_vec, prod);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            cplx v = 0.5 * (gram(i, j) + std::conj(gram(j, i)));
            gram(i, j) = v;
            gram(j, i) = std::conj(v);
        }
    auto eig = hermitian_eig(gram, true);
    double wmax = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.back();
    if (eig.eigenvalues.front() <= 1e-12 * std::max(1.0, wmax))
        throw std::runtime_error("GNS gram matrix not positive definite");
    CMatrix g12(n, n), g12i(n, n);
    const CMatrix& U = eig.eigenvectors;
    for (std::size_t k = 0; k < n; ++k) {
        const double sq = std::sqrt(eig.eigenvalues[k]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                g12(i, j) += U(i, k) * sq * std::conj(U(j, k));
                g12i(i, j) += U(i, k) / sq * std::conj(U(j, k));
            }
    }
    std::vector<CMatrix> reps;
    for (std::size_t i = 0; i < n; ++i) {
        CMatrix L(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            Vec p = d.mul(d.basis_el(i), d.basis_el(j));
            for (std::size_t k = 0; k < n; ++k) L(k, j) = p[k];
        }
        reps.push_back(matmul(matmul(g12, L), g12i));
    }
    return reps;
}

Functional regular_trace_functional(const WhaSpec& d) {
    Functional f(d.n, cplx(0, 0));
    for (std::size_t i = 0; i < d.n; ++i)
        for (std::size_t j = 0; j < d.n; ++j) f[i] += d.mult_at(i, j, j);
    return f;
}

}  // namespace

WhaSpec dualize(const WhaSpec& spec, std::uint64_t seed) {
    const std::size_t n = spec.n;
    WhaSpec d;
    d.n = n;
    for (const auto& lbl : spec.basis) d.basis.push_back("f_" + lbl);
    d.mult.assign(n * n * n, cplx(0, 0));
    d.coprod.assign(n * n * n, cplx(0, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                d.mult[(i * n + j) * n + k] = spec.coprod_at(k, i, j);
                d.coprod[(i * n + j) * n + k] = spec.mult_at(j, k, i);
            }
    d.unit.assign(n, cplx(0, 0));
    d.counit.assign(n, cplx(0, 0));
    for (std::size_t i = 0; i < n; ++i) {
        d.unit[i] = spec.counit[i];
        d.counit[i] = spec.unit[i];
    }
    d.antipode = CMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d.antipode(j, i) = spec.antipode(i, j);
    // (f^i)^* = sum_j conj(M[i][j]) f^j with M = star . conj(antipode)
    CMatrix M(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
            cplx s = 0;
            for (std::size_t l = 0; l < n; ++l) s += spec.star(k, l) * std::conj(spec.antipode(l, j));
            M(k, j) = s;
        }
    d.star = CMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d.star(j, i) = std::conj(M(i, j));
    // provisional faithful *-rep from the regular trace, then the
    // omega-functional GNS once dual sectors are available
    d.rep = gns_representation(d, regular_trace_functional(d));
    d.rep_dim = n;
    try {
        SectorData ds = sectors(d, seed);
        Functional omega_hat(n, cplx(0, 0));
        for (std::size_t a = 0; a < ds.r; ++a)
            for (std::size_t i = 0; i < n; ++i)
                omega_hat[i] += ds.fp_dims[a] / ds.D2 * ds.characters[a][i];
        d.rep = gns_representation(d, omega_hat);
    } catch (const std::exception&) {
        // non-connected dual: keep the regular-trace GNS representation
    }
    d.validate_shape();
    return d;
}

std::pair<Functional, Functional> radon_nikodym(const WhaSpec& spec, const AlgebraElement& x,
                                                const AlgebraElement& against, double tol) {
    const std::size_t n = spec.n;
    CMatrix da = spec.delta(against);
    CMatrix bx(n, 1);
    for (std::size_t i = 0; i < n; ++i) bx(i, 0) = x[i];
    // left: mu(a_(1)) a_(2) = x  ->  columns indexed by mu over the dual basis
    CMatrix Ml(n, n), Mr(n, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            Ml(q, p) += da(p, q);   // row = output index, col = functional slot
            Mr(p, q) += da(p, q);
        }
    auto ll = solve_linear(Ml, bx);
    auto rr = solve_linear(Mr, bx);
    if (ll.residual > tol || rr.residual > tol)
        throw std::runtime_error("radon_nikodym: `against` element is degenerate");
    Functional mu(n), mup(n);
    for (std::size_t i = 0; i < n; ++i) {
        mu[i] = ll.solution(i, 0);
        mup[i] = rr.solution(i, 0);
    }
    return {mu, mup};
}

DistinguishedElements distinguished_elements(const WhaSpec& spec, std::uint64_t seed) {
    const std::size_t n = spec.n;
    DistinguishedElements out;
    out.sector_data = sectors(spec, seed);
    if (!out.sector_data.connected)
        throw std::runtime_error("distinguished_elements: spec is not connected");
    if (!out.sector_data.coconnected)
        throw std::runtime_error("distinguished_elements: spec is not coconnected");
    WhaSpec dual = dualize(spec, seed);
    out.dual_sector_data = sectors(dual, seed);
    out.D2 = out.sector_data.D2;
    if (std::abs(out.D2 - out.dual_sector_data.D2) > 1e-8)
        throw std::runtime_error("distinguished_elements: FP dimension mismatch with dual");
    out.eps1 = std::real(dot(spec.counit, spec.unit));

    // omega and Omega from sector data
    out.omega.assign(n, cplx(0, 0));
    out.Omega.assign(n, cplx(0, 0));
    for (std::size_t a = 0; a < out.sector_data.r; ++a)
        for (std::size_t i = 0; i < n; ++i)
            out.omega[i] += out.sector_data.fp_dims[a] / out.D2 * out.sector_data.characters[a][i];
    for (std::size_t a = 0; a < out.dual_sector_data.r; ++a) {
        out.dual_characters.push_back(out.dual_sector_data.characters[a]);
        out.dual_fp_dims.push_back(out.dual_sector_data.fp_dims[a]);
        for (std::size_t i = 0; i < n; ++i)
            out.Omega[i] += out.dual_sector_data.fp_dims[a] / out.D2 *
                            out.dual_sector_data.characters[a][i];
    }
    out.haar = haar_integral(spec);
    out.dual_haar = haar_integral(dual);

    // dual trivial sector sanity: the Haar functional is a rank-one projector
    // within the trivial block of the dual representation
    {
        const std::size_t a0 = out.dual_sector_data.trivial_sector;
        CMatrix ph = dual.phi(out.dual_haar);
        auto ns = null_space(ph, 1e-8);
        const std::size_t rank = ph.rows - ns.size();
        if (rank != out.dual_sector_data.multiplicities[a0])
            throw std::runtime_error("distinguished_elements: dual Haar rank inconsistent with "
                                     "trivial sector multiplicity");
    }

    // t: left integral normalized by hhat(t_(1)) t_(2) = 1
    {
        CMatrix d1 = spec.delta(spec.unit);
        CMatrix EM(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                EM(i, j) = dot(spec.counit, spec.mul(spec.basis_el(i), spec.basis_el(j)));
        CMatrix sys(n * n, n);
        for (std::size_t j = 0; j < n; ++j) {
            Vec cvec(n, cplx(0, 0));
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q)
                    if (d1(p, q) != cplx(0, 0)) cvec[p] += d1(p, q) * EM(j, q);
            for (std::size_t i = 0; i < n; ++i) {
                Vec lhs = spec.mul(spec.basis_el(i), spec.basis_el(j));
                Vec rhs = spec.mul(spec.basis_el(i), cvec);
                for (std::size_t k = 0; k < n; ++k) sys(j * n + k, i) = lhs[k] - rhs[k];
            }
        }
        auto Lspace = null_space(sys);
        if (Lspace.empty()) throw std::runtime_error("distinguished_elements: no left integrals");
        CMatrix A(n, Lspace.size()), b(n, 1);
        for (std::size_t c = 0; c < Lspace.size(); ++c) {
            // hhat(t_(1)) t_(2) for basis vector c
            CMatrix dt = spec.delta(Lspace[c]);
            for (std::size_t k = 0; k < n; ++k) {
                cplx s = 0;
                for (std::size_t a = 0; a < n; ++a) s += out.dual_haar[a] * dt(a, k);
                A(k, c) = s;
            }
        }
        for (std::size_t k = 0; k < n; ++k) b(k, 0) = spec.unit[k];
        auto ls = solve_linear(A, b);
        if (ls.residual > 1e-9)
            throw std::runtime_error("distinguished_elements: dual left integral normalization failed");
        out.t_dual_integral.assign(n, cplx(0, 0));
        for (std::size_t c = 0; c < Lspace.size(); ++c)
            for (std::size_t i = 0; i < n; ++i)
                out.t_dual_integral[i] += ls.solution(c, 0) * Lspace[c][i];
    }

    // gL = (h_(1) hhat(h_(2)))^{1/2}, gR = S(gL), g = gL gR^{-1}
    {
        CMatrix dh = spec.delta(out.haar);
        Vec arg(n, cplx(0, 0));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (dh(a, b) != cplx(0, 0)) arg[a] += dh(a, b) * out.dual_haar[b];
        out.gL = alg_sqrt(spec, arg);
        out.gR = spec.antipode_of(out.gL);
        out.g = spec.mul(out.gL, alg_inv(spec, out.gR));
    }
    // ghat = ghat_L ghat_R^{-1} computed inside the dual
    {
        CMatrix dh = dual.delta(out.dual_haar);
        Vec arg(n, cplx(0, 0));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (dh(a, b) != cplx(0, 0)) arg[a] += dh(a, b) * out.haar[b];
        Vec ghL = alg_sqrt(dual, arg);
        Vec ghR = dual.antipode_of(ghL);
        out.ghat = dual.mul(ghL, alg_inv(dual, ghR));
    }
    // T from the pulling-through equation: T(x) Omega_(1) (x) Omega_(2) = Omega_(1) (x) x Omega_(2)
    {
        CMatrix dOm = spec.delta(out.Omega);
        CMatrix lift(n * n, n);
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t b = 0; b < n; ++b) {
                    const cplx v = dOm(c, b);
                    if (v == cplx(0, 0)) continue;
                    const cplx* mrow = &spec.mult[(y * n + c) * n];
                    for (std::size_t A2 = 0; A2 < n; ++A2)
                        if (mrow[A2] != cplx(0, 0)) lift(A2 * n + b, y) += v * mrow[A2];
                }
        }
        out.T = CMatrix(n, n);
        CMatrix rhs(n * n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t b = 0; b < n; ++b) {
                    const cplx v = dOm(c, b);
                    if (v == cplx(0, 0)) continue;
                    const cplx* mrow = &spec.mult[(j * n + b) * n];
                    for (std::size_t B2 = 0; B2 < n; ++B2)
                        if (mrow[B2] != cplx(0, 0)) rhs(c * n + B2, j) += v * mrow[B2];
                }
        auto ls = solve_linear(lift, rhs);
        if (ls.residual > 1e-9)
            throw std::runtime_error("distinguished_elements: pulling-through solve failed");
        out.T = ls.solution;
        // cross-check against T(x) = S(x_(1)) ghat(x_(2))
        double resid = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            CMatrix d = spec.delta(spec.basis_el(i));
            Vec want(n, cplx(0, 0));
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    const cplx v = d(a, b);
                    if (v == cplx(0, 0)) continue;
                    const cplx w = v * out.ghat[b];
                    if (w == cplx(0, 0)) continue;
                    for (std::size_t p = 0; p < n; ++p) want[p] += w * spec.antipode(p, a);
                }
            for (std::size_t p = 0; p < n; ++p) resid = std::max(resid, std::abs(out.T(p, i) - want[p]));
        }
        out.T_expdef_residual = resid;
    }
    // xi via xi^{-1} = omega(Omega_(1)) Omega_(2); xi_L/R from gL, gR
    {
        CMatrix dOm = spec.delta(out.Omega);
        out.xi_inv.assign(n, cplx(0, 0));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (dOm(a, b) != cplx(0, 0)) out.xi_inv[b] += out.omega[a] * dOm(a, b);
        out.xi = alg_inv(spec, out.xi_inv);
        out.xiL.assign(n, cplx(0, 0));
        out.xiR.assign(n, cplx(0, 0));
        for (std::size_t i = 0; i < n; ++i) {
            out.xiL[i] = out.D2 * out.eps1 * out.gL[i];
            out.xiR[i] = out.D2 * out.eps1 * out.gR[i];
        }
    }
    // c_omega: central positive weight with tr(phi(c) phi(x)) = omega(x)
    {
        out.c_omega.assign(n, cplx(0, 0));
        for (std::size_t a = 0; a < out.sector_data.r; ++a) {
            const double coef = out.sector_data.fp_dims[a] /
                                (out.D2 * (double)out.sector_data.multiplicities[a]);
            for (std::size_t i = 0; i < n; ++i)
                out.c_omega[i] += coef * out.sector_data.idempotents[a][i];
        }
        double resid = 0.0;
        CMatrix pc = spec.phi(out.c_omega);
        for (std::size_t i = 0; i < n; ++i)
            resid = std::max(resid, std::abs(matmul(pc, spec.rep[i]).trace() - out.omega[i]));
        if (resid > 1e-9)
            throw std::runtime_error("distinguished_elements: c_omega does not reproduce omega");
    }
    return out;
}

std::map<std::string, double> hopf_specialization_report(const WhaSpec& spec,
                                                         const DistinguishedElements& d) {
    auto rep = validate_axioms(spec);
    if (!rep.is_hopf)
        throw std::runtime_error("hopf_specialization_report: spec is not a Hopf algebra");
    const std::size_t n = spec.n;
    std::map<std::string, double> out;
    // S^2 = id
    double s2 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s2 = std::max(s2, max_abs_diff_vec(spec.antipode_of(spec.antipode_of(spec.basis_el(i))),
                                           spec.basis_el(i)));
    out["S2_id"] = s2;
    out["g_unit"] = max_abs_diff_vec(d.g, spec.unit);
    out["Omega_haar"] = max_abs_diff_vec(d.Omega, d.haar);
    double ts = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ts = std::max(ts, std::abs(d.T(i, j) - spec.antipode(i, j)));
    out["T_S"] = ts;
    Vec d2om(n);
    for (std::size_t i = 0; i < n; ++i) d2om[i] = d.D2 * d.Omega[i];
    out["t_D2Omega"] = max_abs_diff_vec(d.t_dual_integral, d2om);
    Vec d2one(n);
    for (std::size_t i = 0; i < n; ++i) d2one[i] = d.D2 * spec.unit[i];
    out["xi_D2unit"] = max_abs_diff_vec(d.xi, d2one);
    Vec gref(n);
    for (std::size_t i = 0; i < n; ++i) gref[i] = spec.unit[i] / std::sqrt(d.D2);
    out["gL_invD"] = std::max(max_abs_diff_vec(d.gL, gref), max_abs_diff_vec(d.gR, gref));
    return out;
}

}  // namespace wharf
