#include <algorithm>
#include <cmath>
#include <random>

#include "wharf/engine/engine.hpp"

namespace wharf {

namespace {

Vec flatten(const CMatrix& m) { return m.data; }

// deterministic standard normals (Box-Muller on mt19937_64)
struct NormalGen {
    std::mt19937_64 rng;
    explicit NormalGen(std::uint64_t seed) : rng(seed) {}
    double operator()() {
        const double u1 = (rng() >> 11) * 0x1.0p-53 + 0x1.0p-54;
        const double u2 = (rng() >> 11) * 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }
};

CMatrix rows_to_matrix(const std::vector<Vec>& rows, std::size_t n) {
    CMatrix m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace

AlgebraElement random_positive_element(const WhaSpec& spec, std::uint64_t seed) {
    NormalGen g(seed);
    Vec y(spec.n);
    for (auto& v : y) {
        const double re = g();
        const double im = g();
        v = cplx(re, im);
    }
    return spec.mul(spec.star_of(y), y);
}

std::vector<Vec> intersect_spans(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a[0].size();
    CMatrix m(n, a.size() + b.size());
    for (std::size_t c = 0; c < a.size(); ++c)
        for (std::size_t i = 0; i < n; ++i) m(i, c) = a[c][i];
    for (std::size_t c = 0; c < b.size(); ++c)
        for (std::size_t i = 0; i < n; ++i) m(i, a.size() + c) = -b[c][i];
    auto ker = null_space(m);
    std::vector<Vec> out;
    for (const auto& k : ker) {
        Vec v(n, cplx(0, 0));
        for (std::size_t c = 0; c < a.size(); ++c)
            for (std::size_t i = 0; i < n; ++i) v[i] += k[c] * a[c][i];
        out.push_back(std::move(v));
    }
    return out;
}

std::pair<std::vector<Vec>, std::vector<Vec>> counital_subalgebras(const WhaSpec& spec) {
    const std::size_t n = spec.n;
    CMatrix d1 = spec.delta(spec.unit);
    // A^L: Delta(x) = x 1_(1) (x) 1_(2) = 1_(1) x (x) 1_(2)
    // A^R: Delta(y) = 1_(1) (x) y 1_(2) = 1_(1) (x) 1_(2) y
    auto build = [&](bool left) {
        CMatrix sys(4 * n * n, n);
        for (std::size_t i = 0; i < n; ++i) {
            CMatrix d = spec.delta(spec.basis_el(i));
            // variant rows: Delta(e_i) - form(e_i)
            for (int variant = 0; variant < 2; ++variant) {
                CMatrix form(n, n);
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        const cplx v = d1(p, q);
                        if (v == cplx(0, 0)) continue;
                        if (left) {
                            Vec prod = variant == 0 ? spec.mul(spec.basis_el(i), spec.basis_el(p))
                                                    : spec.mul(spec.basis_el(p), spec.basis_el(i));
                            for (std::size_t a = 0; a < n; ++a) form(a, q) += v * prod[a];
                        } else {
                            Vec prod = variant == 0 ? spec.mul(spec.basis_el(i), spec.basis_el(q))
                                                    : spec.mul(spec.basis_el(q), spec.basis_el(i));
                            for (std::size_t b = 0; b < n; ++b) form(p, b) += v * prod[b];
                        }
                    }
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q)
                        sys((std::size_t)variant * n * n + p * n + q, i) = d(p, q) - form(p, q);
            }
        }
        // stack both variants (rows 0..2n^2) -- already in sys
        return null_space(sys);
    };
    return {build(true), build(false)};
}

namespace {

std::vector<Vec> center_basis(const WhaSpec& spec) {
    const std::size_t n = spec.n;
    CMatrix sys(n * n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            Vec comm = spec.mul(spec.basis_el(i), spec.basis_el(j));
            Vec anti = spec.mul(spec.basis_el(j), spec.basis_el(i));
            for (std::size_t k = 0; k < n; ++k) sys(j * n + k, i) = comm[k] - anti[k];
        }
    }
    return null_space(sys);
}

std::vector<Vec> dual_structure_AL_center(const Vec& mult, const Vec& coprod, const Vec& unit,
                                          std::size_t n);

}  // namespace

SectorData sectors(const WhaSpec& spec, std::uint64_t seed) {
    const std::size_t n = spec.n;
    SectorData out;
    auto zb = center_basis(spec);
    const std::size_t r = zb.size();
    // hermitian basis of the center
    std::vector<Vec> cand;
    for (const auto& v : zb) {
        Vec h(n), a(n);
        Vec vs = spec.star_of(v);
        for (std::size_t i = 0; i < n; ++i) {
            h[i] = 0.5 * (v[i] + vs[i]);
            a[i] = cplx(0, -0.5) * (v[i] - vs[i]);
        }
        cand.push_back(h);
        cand.push_back(a);
    }
    CMatrix cm = rows_to_matrix(cand, n);
    // orthonormal row space via SVD of cm^T null complement: reuse null_space on transpose trick
    // simpler: Gram-Schmidt with rank detection
    std::vector<Vec> hb;
    for (const auto& v : cand) {
        Vec w = v;
        for (const auto& u : hb) {
            cplx ip = 0;
            for (std::size_t i = 0; i < n; ++i) ip += std::conj(u[i]) * w[i];
            for (std::size_t i = 0; i < n; ++i) w[i] -= ip * u[i];
        }
        double nrm = 0;
        for (const auto& c : w) nrm += std::norm(c);
        nrm = std::sqrt(nrm);
        if (nrm > 1e-9) {
            for (auto& c : w) c /= nrm;
            hb.push_back(std::move(w));
        }
    }
    if (hb.size() != r) throw std::runtime_error("sectors: hermitian center basis degenerate");

    NormalGen gen(seed);
    std::vector<std::vector<std::size_t>> clusters;
    CMatrix U;
    std::vector<double> w;
    bool ok = false;
    for (int attempt = 0; attempt < 8 && !ok; ++attempt) {
        Vec c(n, cplx(0, 0));
        for (std::size_t k = 0; k < r; ++k) {
            const double coef = gen();
            for (std::size_t i = 0; i < n; ++i) c[i] += coef * hb[k][i];
        }
        Vec cs = spec.star_of(c);
        for (std::size_t i = 0; i < n; ++i) c[i] = 0.5 * (c[i] + cs[i]);
        CMatrix H = spec.phi(c);
        auto eig = hermitian_eig(H, true);
        clusters.clear();
        for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
            if (!clusters.empty() &&
                std::abs(eig.eigenvalues[i] - eig.eigenvalues[clusters.back().back()]) < kClusterTol)
                clusters.back().push_back(i);
            else
                clusters.push_back({i});
        }
        if (clusters.size() == r) {
            U = eig.eigenvectors;
            w = eig.eigenvalues;
            ok = true;
        }
    }
    if (!ok) throw std::runtime_error("sectors: eigenvalue clusters ambiguous at tolerance");

    const std::size_t dim = spec.rep_dim;
    std::vector<AlgebraElement> idems;
    for (const auto& cl : clusters) {
        CMatrix P(dim, dim);
        for (auto col : cl)
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) P(i, j) += U(i, col) * std::conj(U(j, col));
        idems.push_back(pullback(spec.rep, P));
    }
    // left regular representation matrices (for traces)
    auto reg_trace = [&](const AlgebraElement& x) {
        cplx t = 0;
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i)
                if (x[i] != cplx(0, 0)) t += x[i] * spec.mult_at(i, j, j);
        }
        return t;
    };
    std::vector<Functional> chars;
    std::vector<std::size_t> dims;
    for (const auto& e : idems) {
        const double na2 = std::real(reg_trace(e));
        const std::size_t na = (std::size_t)std::llround(std::sqrt(na2));
        if (std::abs((double)na * na - na2) > 1e-6)
            throw std::runtime_error("sectors: block dimension not a perfect square");
        dims.push_back(na);
        Functional chi(n);
        for (std::size_t i = 0; i < n; ++i)
            chi[i] = reg_trace(spec.mul(spec.basis_el(i), e)) / (double)na;
        chars.push_back(std::move(chi));
    }
    // canonical ordering: ascending irrep dim, then lexicographic idempotent support
    std::vector<std::size_t> order(idems.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (dims[a] != dims[b]) return dims[a] < dims[b];
        for (std::size_t i = 0; i < n; ++i) {
            const double va = std::round(std::real(idems[a][i]) * 1e8);
            const double vb = std::round(std::real(idems[b][i]) * 1e8);
            if (va != vb) return va > vb;
        }
        return false;
    });
    for (auto k : order) {
        out.idempotents.push_back(idems[k]);
        out.characters.push_back(chars[k]);
        out.irrep_dims.push_back(dims[k]);
    }
    out.r = out.idempotents.size();
    // multiplicities in the attached representation
    for (std::size_t a = 0; a < out.r; ++a) {
        const double nu = std::real(spec.phi(out.idempotents[a]).trace()) / (double)out.irrep_dims[a];
        out.multiplicities.push_back((std::size_t)std::llround(nu));
    }
    // fusion coefficients: (chi_a chi_b)(e_k) = (chi_a (x) chi_b)(Delta e_k), expand in chars
    CMatrix X(out.r, n);
    for (std::size_t a = 0; a < out.r; ++a)
        for (std::size_t i = 0; i < n; ++i) X(a, i) = out.characters[a][i];
    out.fusion.assign(out.r, std::vector<std::vector<long>>(out.r, std::vector<long>(out.r, 0)));
    for (std::size_t a = 0; a < out.r; ++a)
        for (std::size_t b = 0; b < out.r; ++b) {
            Vec prod(n, cplx(0, 0));
            for (std::size_t k = 0; k < n; ++k) {
                CMatrix d = spec.delta(spec.basis_el(k));
                cplx sum = 0;
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q)
                        if (d(p, q) != cplx(0, 0))
                            sum += d(p, q) * out.characters[a][p] * out.characters[b][q];
                prod[k] = sum;
            }
            // solve prod = sum_c N X_c
            CMatrix A(n, out.r), B(n, 1);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t c = 0; c < out.r; ++c) A(i, c) = X(c, i);
                B(i, 0) = prod[i];
            }
            auto ls = solve_linear(A, B);
            if (ls.residual > 1e-8)
                throw std::runtime_error("sectors: character product not in character span");
            for (std::size_t c = 0; c < out.r; ++c) {
                const double v = std::real(ls.solution(c, 0));
                const double rd = std::llround(v);
                if (std::abs(v - rd) > 1e-4 || std::abs(std::imag(ls.solution(c, 0))) > 1e-4)
                    throw std::runtime_error("sectors: fusion coefficient far from integer");
                if (std::abs(v - rd) > 1e-6)
                    throw std::runtime_error("sectors: fusion coefficient not integral at 1e-6");
                out.fusion[a][b][c] = (long)rd;
            }
        }
    // Frobenius-Perron dimensions: positive eigenvector of N_total by power iteration
    std::vector<double> v(out.r, 1.0);
    for (int it = 0; it < 2000; ++it) {
        std::vector<double> nv(out.r, 0.0);
        for (std::size_t a = 0; a < out.r; ++a)
            for (std::size_t b = 0; b < out.r; ++b)
                for (std::size_t c = 0; c < out.r; ++c) nv[c] += (double)out.fusion[a][b][c] * v[b];
        double nrm = 0;
        for (double q : nv) nrm += q * q;
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i < out.r; ++i) v[i] = nv[i] / nrm;
    }
    std::size_t jmax = 0;
    for (std::size_t i = 1; i < out.r; ++i)
        if (v[i] > v[jmax]) jmax = i;
    for (std::size_t a = 0; a < out.r; ++a) {
        double num = 0;
        for (std::size_t b = 0; b < out.r; ++b) num += (double)out.fusion[a][b][jmax] * v[b];
        out.fp_dims.push_back(num / v[jmax]);
        out.D2 += out.fp_dims.back() * out.fp_dims.back();
    }
    // connectedness: dim(A^L  intersect  Z(A)) = 1
    auto [AL, AR] = counital_subalgebras(spec);
    out.connected = intersect_spans(AL, zb).size() == 1;
    // coconnected: the same test on the dual structure constants
    {
        Vec dm(n * n * n), dd(n * n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    dm[(i * n + j) * n + k] = spec.coprod_at(k, i, j);
                    dd[(i * n + j) * n + k] = spec.mult_at(j, k, i);
                }
        auto inter = dual_structure_AL_center(dm, dd, spec.counit, n);
        out.coconnected = inter.size() == 1;
    }
    // trivial sector: the one carrying the Haar integral (unique only for
    // connected specs; marked invalid with r otherwise)
    AlgebraElement h = haar_integral(spec);
    std::size_t found = out.r;
    bool unique = true;
    for (std::size_t a = 0; a < out.r; ++a) {
        Vec he = spec.mul(h, out.idempotents[a]);
        double m = 0;
        for (const auto& c2 : he) m = std::max(m, std::abs(c2));
        if (m > 1e-8) {
            if (found != out.r) unique = false;
            found = a;
        }
    }
    out.trivial_sector = out.r;
    if (found != out.r && unique && std::abs(out.fp_dims[found] - 1.0) <= 1e-8)
        out.trivial_sector = found;
    if (out.connected && out.trivial_sector == out.r)
        throw std::runtime_error("sectors: connected spec without an identifiable trivial sector");
    return out;
}

namespace {

// dim(A^L ∩ Z) computed from bare structure constants (no representation):
// used for the coconnectedness test on the dual.
std::vector<Vec> dual_structure_AL_center(const Vec& mult, const Vec& coprod, const Vec& unit,
                                          std::size_t n) {
    WhaSpec tmp;
    tmp.n = n;
    tmp.mult = mult;
    tmp.coprod = coprod;
    tmp.unit = unit;
    // delta/mul of WhaSpec only touch mult/coprod/n
    auto [AL, AR] = counital_subalgebras(tmp);
    (void)AR;
    // center
    CMatrix sys(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            Vec comm = tmp.mul(tmp.basis_el(i), tmp.basis_el(j));
            Vec anti = tmp.mul(tmp.basis_el(j), tmp.basis_el(i));
            for (std::size_t k = 0; k < n; ++k) sys(j * n + k, i) = comm[k] - anti[k];
        }
    auto zb = null_space(sys);
    return intersect_spans(AL, zb);
}

}  // namespace

AlgebraElement haar_integral(const WhaSpec& spec) {
    const std::size_t n = spec.n;
    CMatrix d1 = spec.delta(spec.unit);
    CMatrix EM(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            EM(i, j) = dot(spec.counit, spec.mul(spec.basis_el(i), spec.basis_el(j)));
    // left: t e_j = t * (1_(1) eps(e_j 1_(2)));  right: e_j t = (eps(1_(1) e_j) 1_(2)) * t
    auto integral_space = [&](bool left) {
        CMatrix sys(n * n, n);
        for (std::size_t j = 0; j < n; ++j) {
            Vec cvec(n, cplx(0, 0));
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) {
                    const cplx v = d1(p, q);
                    if (v == cplx(0, 0)) continue;
                    if (left)
                        cvec[p] += v * EM(j, q);
                    else
                        cvec[q] += v * EM(p, j);
                }
            for (std::size_t i = 0; i < n; ++i) {
                Vec lhs = left ? spec.mul(spec.basis_el(i), spec.basis_el(j))
                               : spec.mul(spec.basis_el(j), spec.basis_el(i));
                Vec rhs = left ? spec.mul(spec.basis_el(i), cvec) : spec.mul(cvec, spec.basis_el(i));
                for (std::size_t k = 0; k < n; ++k) sys(j * n + k, i) = lhs[k] - rhs[k];
            }
        }
        return null_space(sys);
    };
    auto L = integral_space(true);
    auto R = integral_space(false);
    auto basis = intersect_spans(L, R);
    if (basis.empty()) throw std::runtime_error("haar: no two-sided integrals");
    if (basis.size() > 3)
        throw std::runtime_error("haar: integral space dimension " + std::to_string(basis.size()) +
                                 " > 3, aborting");
    // Newton iteration on h^2 = h restricted to the span, seeded by projecting 1
    const std::size_t k = basis.size();
    CMatrix B(n, k);
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t i = 0; i < n; ++i) B(i, c) = basis[c][i];
    CMatrix one(n, 1);
    for (std::size_t i = 0; i < n; ++i) one(i, 0) = spec.unit[i];
    auto ls = solve_linear(B, one);
    Vec h(n, cplx(0, 0));
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t i = 0; i < n; ++i) h[i] += ls.solution(c, 0) * basis[c][i];
    for (int it = 0; it < 200; ++it) {
        Vec f = spec.mul(h, h);
        double err = 0;
        for (std::size_t i = 0; i < n; ++i) {
            f[i] -= h[i];
            err = std::max(err, std::abs(f[i]));
        }
        if (err < 1e-13) break;
        CMatrix J(n, k), Fm(n, 1);
        for (std::size_t c = 0; c < k; ++c) {
            Vec jb = spec.mul(h, basis[c]);
            Vec jb2 = spec.mul(basis[c], h);
            for (std::size_t i = 0; i < n; ++i) J(i, c) = jb[i] + jb2[i] - basis[c][i];
        }
        for (std::size_t i = 0; i < n; ++i) Fm(i, 0) = -f[i];
        auto step = solve_linear(J, Fm);
        for (std::size_t c = 0; c < k; ++c)
            for (std::size_t i = 0; i < n; ++i) h[i] += step.solution(c, 0) * basis[c][i];
    }
    Vec hs = spec.star_of(h);
    for (std::size_t i = 0; i < n; ++i) h[i] = 0.5 * (h[i] + hs[i]);
    Vec idem = spec.mul(h, h);
    if (max_abs_diff_vec(idem, h) > 1e-10)
        throw std::runtime_error("haar: no positive idempotent found in integral space (dim " +
                                 std::to_string(k) + ")");
    if (!is_psd(spec.phi(h), 1e-10))
        throw std::runtime_error("haar: integral not positive");
    return h;
}

}  // namespace wharf
