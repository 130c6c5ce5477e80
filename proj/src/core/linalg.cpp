#include "wharf/core/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include <lapacke.h>

#include "wharf/core/kernels.hpp"

namespace wharf {

double max_abs(const CMatrix& m) {
    double r = 0.0;
    for (const auto& v : m.data) r = std::max(r, std::abs(v));
    return r;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    a.check_same_shape(b);
    double r = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) r = std::max(r, std::abs(a.data[i] - b.data[i]));
    return r;
}

bool all_finite(const CMatrix& m) {
    for (const auto& v : m.data)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul: inner dims differ");
    CMatrix c(a.rows, b.cols);
    kernels::ops().gemm_acc(a.rows, a.cols, b.cols, a.data.data(), b.data.data(), c.data.data());
    return c;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows * b.rows, a.cols * b.cols);
    const auto& scal = kernels::ops().scal_to;
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) {
            const cplx s = a(i, j);
            if (s == cplx(0.0, 0.0)) continue;
            for (std::size_t p = 0; p < b.rows; ++p)
                scal(b.cols, s, &b(p, 0), &out(i * b.rows + p, j * b.cols));
        }
    return out;
}

CMatrix partial_trace(const CMatrix& m, const std::vector<std::size_t>& site_dims,
                      const std::vector<std::size_t>& keep) {
    if (!m.square()) throw std::invalid_argument("partial_trace: matrix not square");
    std::size_t total = 1;
    for (auto d : site_dims) total *= d;
    if (total != m.rows) throw std::invalid_argument("partial_trace: dims do not factor the matrix");
    const std::size_t ns = site_dims.size();
    std::vector<bool> kept(ns, false);
    for (auto k : keep) {
        if (k >= ns) throw std::invalid_argument("partial_trace: keep index out of range");
        kept[k] = true;
    }
    std::size_t dk = 1, dt = 1;
    for (std::size_t s = 0; s < ns; ++s) (kept[s] ? dk : dt) *= site_dims[s];
    // strides of each site in the row index
    std::vector<std::size_t> stride(ns, 1);
    for (std::size_t s = ns; s-- > 1;) stride[s - 1] = stride[s] * site_dims[s];
    std::vector<std::size_t> kept_sites, traced_sites;
    for (std::size_t s = 0; s < ns; ++s) (kept[s] ? kept_sites : traced_sites).push_back(s);
    // enumerate kept/traced multi-indices -> flat offsets
    auto offsets = [&](const std::vector<std::size_t>& sites) {
        std::vector<std::size_t> offs{0};
        for (auto s : sites) {
            std::vector<std::size_t> next;
            next.reserve(offs.size() * site_dims[s]);
            for (auto o : offs)
                for (std::size_t v = 0; v < site_dims[s]; ++v) next.push_back(o + v * stride[s]);
            offs.swap(next);
        }
        return offs;
    };
    const auto ko = offsets(kept_sites);
    const auto to = offsets(traced_sites);
    CMatrix out(dk, dk);
    for (std::size_t i = 0; i < dk; ++i)
        for (std::size_t j = 0; j < dk; ++j) {
            cplx s = 0;
            for (auto t : to) s += m.data[(ko[i] + t) * m.cols + (ko[j] + t)];
            out(i, j) = s;
        }
    return out;
}

namespace {

void require_hermitian(const CMatrix& m, double tol) {
    if (!m.square()) throw std::invalid_argument("expected a square matrix");
    double dev = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = i; j < m.cols; ++j)
            dev = std::max(dev, std::abs(m(i, j) - std::conj(m(j, i))));
    if (dev > tol) throw std::invalid_argument("matrix not Hermitian (dev " + std::to_string(dev) + ")");
}

}  // namespace

EigReport hermitian_eig(const CMatrix& m, bool want_vectors, double herm_tol) {
    require_hermitian(m, herm_tol);
    const lapack_int n = (lapack_int)m.rows;
    EigReport rep;
    rep.eigenvalues.resize(m.rows);
    CMatrix a = m;
    // symmetrize to kill tolerated deviation
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = i; j < a.cols; ++j) {
            cplx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    lapack_int info = LAPACKE_zheevd(LAPACK_ROW_MAJOR, want_vectors ? 'V' : 'N', 'L', n,
                                     reinterpret_cast<lapack_complex_double*>(a.data.data()), n,
                                     rep.eigenvalues.data());
    if (info != 0) throw std::runtime_error("zheevd failed, info=" + std::to_string(info));
    if (want_vectors) rep.eigenvectors = std::move(a);
    rep.hermitian_flag = true;
    return rep;
}

double min_eigenvalue(const CMatrix& m, double herm_tol) {
    auto rep = hermitian_eig(m, false, herm_tol);
    return rep.eigenvalues.empty() ? 0.0 : rep.eigenvalues.front();
}

bool is_psd(const CMatrix& m, double tol, double herm_tol) {
    return min_eigenvalue(m, herm_tol) >= -tol;
}

double trace_distance(const CMatrix& a, const CMatrix& b) {
    CMatrix d = a - b;
    // symmetrized difference; inputs are Hermitian in all uses
    auto rep = hermitian_eig(d, false, 1e-6);
    double s = 0.0;
    for (double w : rep.eigenvalues) s += std::abs(w);
    return 0.5 * s;
}

LstsqResult solve_linear(const CMatrix& a, const CMatrix& b) {
    if (a.rows != b.rows) throw std::invalid_argument("solve_linear: row mismatch");
    const lapack_int m = (lapack_int)a.rows, n = (lapack_int)a.cols, nrhs = (lapack_int)b.cols;
    const lapack_int ldb = std::max(m, n) == 0 ? 1 : std::max(m, n);
    CMatrix awork = a;
    Vec bwork((std::size_t)ldb * nrhs, cplx(0, 0));
    for (lapack_int i = 0; i < m; ++i)
        for (lapack_int j = 0; j < nrhs; ++j) bwork[(std::size_t)i * nrhs + j] = b(i, j);
    std::vector<double> sv(std::min(m, n) ? std::min(m, n) : 1);
    lapack_int rank = 0;
    lapack_int info = LAPACKE_zgelsd(LAPACK_ROW_MAJOR, m, n, nrhs,
                                     reinterpret_cast<lapack_complex_double*>(awork.data.data()),
                                     n, reinterpret_cast<lapack_complex_double*>(bwork.data()),
                                     nrhs, sv.data(), -1.0, &rank);
    if (info != 0) throw std::runtime_error("zgelsd failed, info=" + std::to_string(info));
    LstsqResult out;
    out.solution = CMatrix(a.cols, b.cols);
    for (std::size_t i = 0; i < (std::size_t)n; ++i)
        for (std::size_t j = 0; j < (std::size_t)nrhs; ++j)
            out.solution(i, j) = bwork[i * nrhs + j];
    CMatrix r = matmul(a, out.solution) - b;
    out.residual = max_abs(r);
    return out;
}

std::vector<Vec> null_space(const CMatrix& a, double tol) {
    const lapack_int m = (lapack_int)a.rows, n = (lapack_int)a.cols;
    const lapack_int mn = std::min(m, n);
    CMatrix awork = a;
    std::vector<double> sv(mn ? mn : 1);
    CMatrix u(m, m), vt(n, n);
    lapack_int info = LAPACKE_zgesdd(LAPACK_ROW_MAJOR, 'A', m, n,
                                     reinterpret_cast<lapack_complex_double*>(awork.data.data()), n,
                                     sv.data(),
                                     reinterpret_cast<lapack_complex_double*>(u.data.data()), m,
                                     reinterpret_cast<lapack_complex_double*>(vt.data.data()), n);
    if (info != 0) throw std::runtime_error("zgesdd failed, info=" + std::to_string(info));
    const double smax = mn ? sv[0] : 0.0;
    const double cut = tol * std::max(1.0, smax);
    std::vector<Vec> basis;
    for (lapack_int r = 0; r < n; ++r) {
        if (r < mn && sv[r] > cut) continue;
        Vec row(n);
        for (lapack_int j = 0; j < n; ++j) row[j] = std::conj(vt(r, j));
        basis.push_back(std::move(row));
    }
    return basis;
}

Vec pullback(const std::vector<CMatrix>& rep, const CMatrix& target, double tol) {
    const std::size_t n = rep.size();
    if (n == 0) throw std::invalid_argument("pullback: empty representation");
    const std::size_t d2 = rep[0].size();
    CMatrix a(d2, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < d2; ++k) a(k, i) = rep[i].data[k];
    CMatrix b(d2, 1);
    for (std::size_t k = 0; k < d2; ++k) b(k, 0) = target.data[k];
    auto res = solve_linear(a, b);
    if (res.residual > tol)
        throw std::runtime_error("pullback: element not in algebra image (residual " +
                                 std::to_string(res.residual) + ")");
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = res.solution(i, 0);
    return out;
}

namespace {

CMatrix psd_function(const CMatrix& m, double tol, bool inverse) {
    auto rep = hermitian_eig(m, true);
    const std::size_t n = m.rows;
    for (double w : rep.eigenvalues) {
        if (w < -tol) throw std::invalid_argument("matrix has negative eigenvalue " + std::to_string(w));
        if (inverse && w <= tol) throw std::invalid_argument("matrix not positive definite");
    }
    CMatrix out(n, n);
    const CMatrix& U = rep.eigenvectors;
    for (std::size_t k = 0; k < n; ++k) {
        const double w = std::max(rep.eigenvalues[k], 0.0);
        const double f = inverse ? 1.0 / rep.eigenvalues[k] : std::sqrt(w);
        for (std::size_t i = 0; i < n; ++i) {
            const cplx ui = U(i, k) * f;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += ui * std::conj(U(j, k));
        }
    }
    return out;
}

}  // namespace

CMatrix psd_sqrt(const CMatrix& m, double tol) { return psd_function(m, tol, false); }
CMatrix psd_inverse(const CMatrix& m, double tol) { return psd_function(m, tol, true); }

}  // namespace wharf
