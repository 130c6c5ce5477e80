#include "wharf/mpdo/mpdo.hpp"

#include <cmath>
#include <cstdlib>

#include "wharf/core/kernels.hpp"

namespace wharf {

std::size_t budget_entries() {
    if (const char* env = std::getenv("WHA_BUDGET_ENTRIES")) {
        const long long v = std::atoll(env);
        if (v > 0) return (std::size_t)v;
    }
    return 20000000;
}

namespace {

// weighted site blocks W[a][m] = sum_i D[a,i,m] phi(c e_i)
std::vector<CMatrix> site_blocks(const WhaSpec& spec, const AlgebraElement* weight) {
    const std::size_t n = spec.n, dim = spec.rep_dim;
    std::vector<CMatrix> phis;
    for (std::size_t i = 0; i < n; ++i)
        phis.push_back(weight ? spec.phi(spec.mul(*weight, spec.basis_el(i))) : spec.rep[i]);
    std::vector<CMatrix> blocks(n * n, CMatrix(dim, dim));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t m = 0; m < n; ++m) {
                const cplx v = spec.coprod_at(a, i, m);
                if (v == cplx(0, 0)) continue;
                CMatrix& b = blocks[a * n + m];
                kernels::ops().axpy(dim * dim, v, phis[i].data.data(), b.data.data());
            }
    return blocks;
}

// chain assembly: P_{k+1}[m] = sum_l P_k[l] (x) W[l][m]
CMatrix assemble_chain(const WhaSpec& spec, const std::vector<CMatrix>& W, const AlgebraElement& x,
                       std::size_t N) {
    const std::size_t n = spec.n, dim = spec.rep_dim;
    std::size_t total = 1;
    for (std::size_t s = 0; s < N; ++s) {
        total *= dim;
        if (total * total > budget_entries())
            throw std::runtime_error("build_rho: dense budget exceeded (" + std::to_string(N) +
                                     " sites of dim " + std::to_string(dim) + ")");
    }
    std::vector<CMatrix> P(n, CMatrix(dim, dim));
    for (std::size_t a = 0; a < n; ++a) {
        if (x[a] == cplx(0, 0)) continue;
        for (std::size_t m = 0; m < n; ++m)
            kernels::ops().axpy(dim * dim, x[a], W[a * n + m].data.data(), P[m].data.data());
    }
    for (std::size_t step = 1; step < N; ++step) {
        const std::size_t cur = P[0].rows;
        std::vector<CMatrix> Q(n, CMatrix(cur * dim, cur * dim));
        for (std::size_t l = 0; l < n; ++l) {
            bool nonzero = false;
            for (const auto& v : P[l].data)
                if (v != cplx(0, 0)) { nonzero = true; break; }
            if (!nonzero) continue;
            for (std::size_t m = 0; m < n; ++m) {
                const CMatrix& wb = W[l * n + m];
                bool wz = true;
                for (const auto& v : wb.data)
                    if (v != cplx(0, 0)) { wz = false; break; }
                if (wz) continue;
                // Q[m] += P[l] (x) wb
                CMatrix& q = Q[m];
                for (std::size_t i = 0; i < cur; ++i)
                    for (std::size_t j = 0; j < cur; ++j) {
                        const cplx s = P[l](i, j);
                        if (s == cplx(0, 0)) continue;
                        for (std::size_t p = 0; p < dim; ++p)
                            kernels::ops().axpy(dim, s, &wb(p, 0),
                                                &q(i * dim + p, j * dim));
                    }
            }
        }
        P.swap(Q);
    }
    CMatrix out(P[0].rows, P[0].cols);
    for (std::size_t m = 0; m < n; ++m) {
        if (spec.counit[m] == cplx(0, 0)) continue;
        kernels::ops().axpy(out.size(), spec.counit[m], P[m].data.data(), out.data.data());
    }
    return out;
}

}  // namespace

MpdoState build_rho(const WhaSpec& spec, const DistinguishedElements& d, const AlgebraElement& x,
                    std::size_t N, const std::string& label) {
    if (N == 0) throw std::invalid_argument("build_rho: N must be positive");
    const double wx = std::real(dot(d.omega, x));
    const double wx_im = std::abs(std::imag(dot(d.omega, x)));
    if (wx <= 1e-12 || wx_im > 1e-9)
        throw std::invalid_argument("build_rho: x is not a positive non-zero element (omega(x)=" +
                                    std::to_string(wx) + ")");
    if (!is_psd(spec.phi(x), 1e-9))
        throw std::invalid_argument("build_rho: phi(x) is not positive semidefinite");
    auto W = site_blocks(spec, &d.c_omega);
    MpdoState st;
    st.N = N;
    st.x_label = label;
    st.norm_omega = wx;
    st.rho = assemble_chain(spec, W, x, N);
    const double inv = 1.0 / wx;
    for (auto& v : st.rho.data) v *= inv;
    return st;
}

MpoTensor export_mpo_tensor(const WhaSpec& spec, const DistinguishedElements& d, bool weighted) {
    MpoTensor t;
    t.bond_dim = spec.n;
    t.phys_dim = spec.rep_dim;
    t.weighted = weighted;
    t.blocks = site_blocks(spec, weighted ? &d.c_omega : nullptr);
    return t;
}

CMatrix mpo_closure(const WhaSpec& spec, const MpoTensor& t, const AlgebraElement& x, std::size_t N) {
    return assemble_chain(spec, t.blocks, x, N);
}

double marginal_check(const WhaSpec& spec, const DistinguishedElements& d, const AlgebraElement& x,
                      std::size_t N) {
    if (N < 2) throw std::invalid_argument("marginal_check: N >= 2 required");
    auto st = build_rho(spec, d, x, N);
    const std::size_t dim = spec.rep_dim;
    std::vector<std::size_t> dims(N, dim), keep;
    for (std::size_t s = 0; s + 1 < N; ++s) keep.push_back(s);
    CMatrix lhs = partial_trace(st.rho, dims, keep);
    // y = (id (x) omega) Delta(x)
    CMatrix dx = spec.delta(x);
    AlgebraElement y(spec.n, cplx(0, 0));
    for (std::size_t a = 0; a < spec.n; ++a)
        for (std::size_t b = 0; b < spec.n; ++b)
            if (dx(a, b) != cplx(0, 0)) y[a] += dx(a, b) * d.omega[b];
    auto st2 = build_rho(spec, d, y, N - 1);
    const double scale = std::real(dot(d.omega, y)) / std::real(dot(d.omega, x));
    CMatrix rhs = st2.rho;
    for (auto& v : rhs.data) v *= scale;
    return trace_distance(lhs, rhs) * 2.0;   // 1-norm of the difference
}

}  // namespace wharf
