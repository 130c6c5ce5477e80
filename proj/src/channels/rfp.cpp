#include <cmath>

#include "wharf/channels/channels.hpp"
#include "wharf/core/kernels.hpp"
#include "wharf/mpdo/mpdo.hpp"

namespace wharf {

namespace {

std::vector<CMatrix> weighted_phis(const WhaSpec& spec, const AlgebraElement& c) {
    std::vector<CMatrix> out;
    for (std::size_t i = 0; i < spec.n; ++i) out.push_back(spec.phi(spec.mul(c, spec.basis_el(i))));
    return out;
}

void require_biconnected(const DistinguishedElements& d, const char* who) {
    if (!d.sector_data.connected || !d.sector_data.coconnected)
        throw std::runtime_error(std::string(who) + ": spec is not biconnected");
}

}  // namespace

CMatrix transfer_coarse(const WhaSpec& spec, const DistinguishedElements& d) {
    require_biconnected(d, "coarse_grain");
    const std::size_t n = spec.n, dim = spec.rep_dim;
    Vec d3 = sweedler3(spec, d.Omega);
    auto phic = weighted_phis(spec, d.c_omega);
    std::vector<CMatrix> A;   // phi(xi T(e_a))
    for (std::size_t a = 0; a < n; ++a) {
        Vec Te(n, cplx(0, 0));
        for (std::size_t p = 0; p < n; ++p) Te[p] = d.T(p, a);
        A.push_back(spec.phi(spec.mul(d.xi, Te)));
    }
    const std::size_t d2 = dim * dim;
    CMatrix tf(d2 * d2, d2);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const cplx w = d3[(a * n + b) * n + c];
                if (w == cplx(0, 0)) continue;
                const CMatrix& B = phic[b];
                const CMatrix& C = phic[c];
                const CMatrix& Am = A[a];
                for (std::size_t o = 0; o < dim; ++o)
                    for (std::size_t p = 0; p < dim; ++p)
                        for (std::size_t u = 0; u < dim; ++u) {
                            const cplx bo = w * B(o, u);
                            if (bo == cplx(0, 0)) continue;
                            for (std::size_t v = 0; v < dim; ++v) {
                                const cplx coef = bo * C(p, v);
                                if (coef == cplx(0, 0)) continue;
                                // row (o p, u v), columns (i j) weighted by A[j, i]
                                const std::size_t row = (o * dim + p) * d2 + (u * dim + v);
                                for (std::size_t j = 0; j < dim; ++j)
                                    for (std::size_t i = 0; i < dim; ++i)
                                        tf(row, i * dim + j) += coef * Am(j, i);
                            }
                        }
            }
    return tf;
}

Channel coarse_grain(const WhaSpec& spec, const DistinguishedElements& d) {
    const std::size_t dim = spec.rep_dim;
    Channel ch;
    ch.d_in = dim;
    ch.d_out = dim * dim;
    ch.label = "coarse_grain";
    ch.choi = transfer_to_choi(transfer_coarse(spec, d), ch.d_in, ch.d_out);
    return ch;
}

CMatrix transfer_fine(const WhaSpec& spec, const DistinguishedElements& d, const CMatrix* rho0) {
    require_biconnected(d, "fine_grain");
    const std::size_t n = spec.n, dim = spec.rep_dim;
    CMatrix mixed(dim, dim);
    if (rho0) {
        mixed = *rho0;
        if (mixed.rows != dim || !is_psd(mixed, 1e-9) || std::abs(mixed.trace() - cplx(1, 0)) > 1e-9)
            throw std::invalid_argument("fine_grain: rho0 is not a state on V");
    } else {
        for (std::size_t i = 0; i < dim; ++i) mixed(i, i) = 1.0 / (double)dim;
    }
    CMatrix dOm = spec.delta(d.Omega);
    auto phic = weighted_phis(spec, d.c_omega);
    const std::size_t d2 = dim * dim;
    CMatrix tf(d2, d2 * d2);
    for (std::size_t a = 0; a < n; ++a) {
        bool any = false;
        for (std::size_t b = 0; b < n; ++b)
            if (dOm(a, b) != cplx(0, 0)) any = true;
        if (!any) continue;
        // A2 = (phi (x) phi)(Delta(xi T(e_a)))
        Vec Te(n, cplx(0, 0));
        for (std::size_t p = 0; p < n; ++p) Te[p] = d.T(p, a);
        CMatrix dv = spec.delta(spec.mul(d.xi, Te));
        CMatrix A2(d2, d2);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                const cplx v = dv(p, q);
                if (v == cplx(0, 0)) continue;
                const CMatrix& P = spec.rep[p];
                const CMatrix& Q = spec.rep[q];
                for (std::size_t i = 0; i < dim; ++i)
                    for (std::size_t k = 0; k < dim; ++k) {
                        const cplx pv = v * P(i, k);
                        if (pv == cplx(0, 0)) continue;
                        for (std::size_t j = 0; j < dim; ++j)
                            for (std::size_t l = 0; l < dim; ++l)
                                A2(i * dim + j, k * dim + l) += pv * Q(j, l);
                    }
            }
        // out(o,p) += tr(A2 X) * sum_b dOm(a,b) phic[b](o,p)
        CMatrix wout(dim, dim);
        for (std::size_t b = 0; b < n; ++b) {
            const cplx v = dOm(a, b);
            if (v == cplx(0, 0)) continue;
            kernels::ops().axpy(dim * dim, v, phic[b].data.data(), wout.data.data());
        }
        for (std::size_t o = 0; o < dim; ++o)
            for (std::size_t p = 0; p < dim; ++p) {
                const cplx w = wout(o, p);
                if (w == cplx(0, 0)) continue;
                const std::size_t row = o * dim + p;
                // tr(A2 X) = sum_{IJ} A2(J, I) X(I, J): columns indexed (I,J)
                for (std::size_t I = 0; I < d2; ++I)
                    for (std::size_t J = 0; J < d2; ++J) tf(row, I * d2 + J) += w * A2(J, I);
            }
    }
    // + tr(Pperp X) rho0
    CMatrix d1 = spec.delta(spec.unit);
    CMatrix P1(d2, d2);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const cplx v = d1(a, b);
            if (v == cplx(0, 0)) continue;
            const CMatrix& A = spec.rep[a];
            const CMatrix& B = spec.rep[b];
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t k = 0; k < dim; ++k) {
                    const cplx pv = v * A(i, k);
                    if (pv == cplx(0, 0)) continue;
                    for (std::size_t j = 0; j < dim; ++j)
                        for (std::size_t l = 0; l < dim; ++l)
                            P1(i * dim + j, k * dim + l) += pv * B(j, l);
                }
        }
    CMatrix Pp = CMatrix::identity(d2) - P1;
    for (std::size_t o = 0; o < dim; ++o)
        for (std::size_t p = 0; p < dim; ++p) {
            const cplx w = mixed(o, p);
            if (w == cplx(0, 0)) continue;
            const std::size_t row = o * dim + p;
            for (std::size_t I = 0; I < d2; ++I)
                for (std::size_t J = 0; J < d2; ++J) tf(row, I * d2 + J) += w * Pp(J, I);
        }
    return tf;
}

Channel fine_grain(const WhaSpec& spec, const DistinguishedElements& d, const CMatrix* rho0) {
    const std::size_t dim = spec.rep_dim;
    Channel ch;
    ch.d_in = dim * dim;
    ch.d_out = dim;
    ch.label = "fine_grain";
    ch.choi = transfer_to_choi(transfer_fine(spec, d, rho0), ch.d_in, ch.d_out);
    return ch;
}

namespace {

// inner map X (x) Y -> sum_abc w3[a,b,c] tr(L[a] X) phic[b] tr(R[c] Y)
CMatrix transfer_inner(const WhaSpec& spec, const Vec& w3, const std::vector<CMatrix>& L,
                       const std::vector<CMatrix>& phic, const std::vector<CMatrix>& R,
                       double scale) {
    const std::size_t n = spec.n, dim = spec.rep_dim;
    const std::size_t d2 = dim * dim;
    CMatrix tf(d2, d2 * d2);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            bool any = false;
            for (std::size_t c = 0; c < n; ++c)
                if (w3[(a * n + b) * n + c] != cplx(0, 0)) any = true;
            if (!any) continue;
            for (std::size_t c = 0; c < n; ++c) {
                const cplx w = w3[(a * n + b) * n + c] * scale;
                if (w == cplx(0, 0)) continue;
                // rows (o,p) from phic[b]; columns ((ik),(jl)) from L[a](j,i) R[c](l,k)
                for (std::size_t o = 0; o < dim; ++o)
                    for (std::size_t p = 0; p < dim; ++p) {
                        const cplx base = w * phic[b](o, p);
                        if (base == cplx(0, 0)) continue;
                        const std::size_t row = o * dim + p;
                        for (std::size_t i = 0; i < dim; ++i)
                            for (std::size_t j = 0; j < dim; ++j) {
                                const cplx lv = L[a](j, i);
                                if (lv == cplx(0, 0)) continue;
                                const cplx bl = base * lv;
                                for (std::size_t k = 0; k < dim; ++k)
                                    for (std::size_t l = 0; l < dim; ++l) {
                                        const cplx rv = R[c](l, k);
                                        if (rv == cplx(0, 0)) continue;
                                        // X index (i k), row; (j l) column of the window matrix
                                        tf(row, (i * dim + k) * d2 + (j * dim + l)) += bl * rv;
                                    }
                            }
                    }
            }
        }
    return tf;
}

}  // namespace

CMatrix transfer_glue_inner_hopf(const WhaSpec& spec, const DistinguishedElements& d,
                                 const AlgebraElement& x) {
    auto rep = validate_axioms(spec);
    if (!rep.is_hopf)
        throw std::runtime_error("glue_hopf: spec is not a Hopf algebra (use glue_trivial)");
    const double wx = std::real(dot(d.omega, x));
    if (wx <= 1e-12 || !is_psd(spec.phi(x), 1e-9))
        throw std::invalid_argument("glue_hopf: x is not positive non-zero");
    Vec d3 = sweedler3(spec, x);
    auto phic = weighted_phis(spec, d.c_omega);
    std::vector<CMatrix> S;
    for (std::size_t a = 0; a < spec.n; ++a) S.push_back(spec.phi(spec.antipode_of(spec.basis_el(a))));
    return transfer_inner(spec, d3, S, phic, S, 1.0 / wx);
}

CMatrix transfer_glue_inner_trivial(const WhaSpec& spec, const DistinguishedElements& d) {
    require_biconnected(d, "glue_trivial");
    Vec d3 = sweedler3(spec, spec.unit);
    auto phic = weighted_phis(spec, d.c_omega);
    std::vector<CMatrix> L, R;
    for (std::size_t a = 0; a < spec.n; ++a) {
        L.push_back(spec.phi(spec.mul(spec.antipode_of(spec.basis_el(a)), d.xiL)));
        R.push_back(spec.phi(spec.mul(d.xiR, spec.antipode_of(spec.basis_el(a)))));
    }
    return transfer_inner(spec, d3, L, phic, R, 1.0 / d.D2);
}

Channel glue_hopf(const WhaSpec& spec, const DistinguishedElements& d, const AlgebraElement& x) {
    const std::size_t dim = spec.rep_dim;
    CMatrix tf = matmul(transfer_coarse(spec, d), transfer_glue_inner_hopf(spec, d, x));
    Channel ch;
    ch.d_in = dim * dim;
    ch.d_out = dim * dim;
    ch.label = "glue_hopf";
    ch.choi = transfer_to_choi(tf, ch.d_in, ch.d_out);
    return ch;
}

Channel glue_trivial(const WhaSpec& spec, const DistinguishedElements& d) {
    const std::size_t dim = spec.rep_dim;
    CMatrix tf = matmul(transfer_coarse(spec, d), transfer_glue_inner_trivial(spec, d));
    Channel ch;
    ch.d_in = dim * dim;
    ch.d_out = dim * dim;
    ch.label = "glue_trivial";
    ch.choi = transfer_to_choi(tf, ch.d_in, ch.d_out);
    return ch;
}

NoGluingWitness no_gluing_witness(const WhaSpec& spec, const DistinguishedElements& d) {
    require_biconnected(d, "no_gluing_witness");
    const std::size_t dim = spec.rep_dim;
    auto r2 = build_rho(spec, d, d.Omega, 2, "Omega");
    auto r4 = build_rho(spec, d, d.Omega, 4, "Omega");
    NoGluingWitness w;
    CMatrix m1 = partial_trace(r2.rho, {dim, dim}, {0});
    CMatrix m2 = partial_trace(r2.rho, {dim, dim}, {1});
    w.lhs = kron(m1, m2);
    w.rhs = partial_trace(r4.rho, {dim, dim, dim, dim}, {0, 1});
    w.distance = trace_distance(w.lhs, w.rhs);
    CMatrix rm1 = partial_trace(w.rhs, {dim, dim}, {0});
    CMatrix rm2 = partial_trace(w.rhs, {dim, dim}, {1});
    w.product_deviation = trace_distance(w.rhs, kron(rm1, rm2));
    return w;
}

}  // namespace wharf
