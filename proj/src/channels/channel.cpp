#include <cmath>
#include <random>

#include "wharf/channels/channels.hpp"
#include "wharf/core/kernels.hpp"

namespace wharf {

Channel::CptpResiduals Channel::cptp_residuals() const {
    CptpResiduals out;
    out.herm_residual = max_abs_diff(choi, choi.adjoint());
    out.choi_min_eig = min_eigenvalue(choi, std::max(1e-6, out.herm_residual * 2));
    // partial trace over the output slot must give I_{d_in}
    CMatrix tp(d_in, d_in);
    for (std::size_t i = 0; i < d_in; ++i)
        for (std::size_t j = 0; j < d_in; ++j) {
            cplx s = 0;
            for (std::size_t a = 0; a < d_out; ++a) s += choi(i * d_out + a, j * d_out + a);
            tp(i, j) = s;
        }
    out.tp_residual = max_abs_diff(tp, CMatrix::identity(d_in));
    return out;
}

CMatrix transfer_to_choi(const CMatrix& tf, std::size_t d_in, std::size_t d_out) {
    CMatrix c(d_in * d_out, d_in * d_out);
    for (std::size_t o = 0; o < d_out; ++o)
        for (std::size_t p = 0; p < d_out; ++p)
            for (std::size_t i = 0; i < d_in; ++i)
                for (std::size_t j = 0; j < d_in; ++j)
                    c(i * d_out + o, j * d_out + p) = tf(o * d_out + p, i * d_in + j);
    return c;
}

CMatrix choi_to_transfer(const CMatrix& choi, std::size_t d_in, std::size_t d_out) {
    CMatrix tf(d_out * d_out, d_in * d_in);
    for (std::size_t o = 0; o < d_out; ++o)
        for (std::size_t p = 0; p < d_out; ++p)
            for (std::size_t i = 0; i < d_in; ++i)
                for (std::size_t j = 0; j < d_in; ++j)
                    tf(o * d_out + p, i * d_in + j) = choi(i * d_out + o, j * d_out + p);
    return tf;
}

CMatrix apply_transfer(const CMatrix& tf, const CMatrix& x) {
    const std::size_t d_out2 = tf.rows;
    const std::size_t d_out = (std::size_t)std::llround(std::sqrt((double)d_out2));
    CMatrix xin(x.size(), 1);
    for (std::size_t k = 0; k < x.size(); ++k) xin(k, 0) = x.data[k];
    CMatrix out_flat = matmul(tf, xin);
    CMatrix out(d_out, d_out);
    out.data = std::move(out_flat.data);
    return out;
}

Channel choi_from_action(const std::function<CMatrix(const CMatrix&)>& apply, std::size_t d_in,
                         std::size_t d_out, const std::string& label, std::uint64_t seed) {
    // linearity probe on random pairs
    std::mt19937_64 rng(seed);
    auto rnd = [&]() { return (double)(rng() >> 11) * 0x1.0p-53 - 0.5; };
    for (int trial = 0; trial < 2; ++trial) {
        CMatrix a(d_in, d_in), b(d_in, d_in), c(d_in, d_in);
        for (std::size_t k = 0; k < a.size(); ++k) {
            a.data[k] = cplx(rnd(), rnd());
            b.data[k] = cplx(rnd(), rnd());
        }
        const cplx alpha(rnd(), rnd());
        for (std::size_t k = 0; k < a.size(); ++k) c.data[k] = a.data[k] + alpha * b.data[k];
        CMatrix lhs = apply(c);
        CMatrix rhs = apply(a);
        CMatrix rb = apply(b);
        for (std::size_t k = 0; k < rhs.size(); ++k) rhs.data[k] += alpha * rb.data[k];
        if (max_abs_diff(lhs, rhs) > 1e-8 * std::max(1.0, max_abs(lhs)))
            throw std::invalid_argument("choi_from_action: map is not linear");
    }
    Channel ch;
    ch.d_in = d_in;
    ch.d_out = d_out;
    ch.label = label;
    ch.choi = CMatrix(d_in * d_out, d_in * d_out);
    for (std::size_t i = 0; i < d_in; ++i)
        for (std::size_t j = 0; j < d_in; ++j) {
            CMatrix e(d_in, d_in);
            e(i, j) = 1.0;
            CMatrix out = apply(e);
            for (std::size_t o = 0; o < d_out; ++o)
                for (std::size_t p = 0; p < d_out; ++p)
                    ch.choi(i * d_out + o, j * d_out + p) = out(o, p);
        }
    return ch;
}

std::vector<CMatrix> kraus_from_choi(const Channel& ch, double tol) {
    auto eig = hermitian_eig(ch.choi, true, 1e-8);
    std::vector<CMatrix> ks;
    const std::size_t d_in = ch.d_in, d_out = ch.d_out;
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        const double w = eig.eigenvalues[k];
        if (w <= tol) continue;
        CMatrix K(d_out, d_in);
        const double s = std::sqrt(w);
        for (std::size_t i = 0; i < d_in; ++i)
            for (std::size_t o = 0; o < d_out; ++o)
                K(o, i) = s * eig.eigenvectors(i * d_out + o, k);
        ks.push_back(std::move(K));
    }
    return ks;
}

CMatrix apply_window(const CMatrix& tf, const CMatrix& state, std::size_t nsites, std::size_t dim,
                     std::size_t s0, std::size_t w_in, std::size_t w_out) {
    std::size_t dL = 1, dW = 1, dR = 1;
    for (std::size_t s = 0; s < s0; ++s) dL *= dim;
    for (std::size_t s = 0; s < w_in; ++s) dW *= dim;
    for (std::size_t s = s0 + w_in; s < nsites; ++s) dR *= dim;
    std::size_t dWo = 1;
    for (std::size_t s = 0; s < w_out; ++s) dWo *= dim;
    if (tf.rows != dWo * dWo || tf.cols != dW * dW)
        throw std::invalid_argument("apply_window: transfer shape mismatch");
    const std::size_t rest = dL * dR * dL * dR;
    // permute state[(l w r),(l' w' r')] -> perm[(w w'), (l r l' r')]
    CMatrix perm(dW * dW, rest);
    for (std::size_t l = 0; l < dL; ++l)
        for (std::size_t w = 0; w < dW; ++w)
            for (std::size_t r = 0; r < dR; ++r) {
                const std::size_t row = (l * dW + w) * dR + r;
                for (std::size_t l2 = 0; l2 < dL; ++l2)
                    for (std::size_t w2 = 0; w2 < dW; ++w2)
                        for (std::size_t r2 = 0; r2 < dR; ++r2) {
                            const std::size_t col = (l2 * dW + w2) * dR + r2;
                            perm(w * dW + w2, ((l * dR + r) * dL + l2) * dR + r2) =
                                state(row, col);
                        }
            }
    CMatrix moved = matmul(tf, perm);
    const std::size_t total = dL * dWo * dR;
    CMatrix out(total, total);
    for (std::size_t l = 0; l < dL; ++l)
        for (std::size_t w = 0; w < dWo; ++w)
            for (std::size_t r = 0; r < dR; ++r) {
                const std::size_t row = (l * dWo + w) * dR + r;
                for (std::size_t l2 = 0; l2 < dL; ++l2)
                    for (std::size_t w2 = 0; w2 < dWo; ++w2)
                        for (std::size_t r2 = 0; r2 < dR; ++r2)
                            out(row, (l2 * dWo + w2) * dR + r2) =
                                moved(w * dWo + w2, ((l * dR + r) * dL + l2) * dR + r2);
            }
    return out;
}

CMatrix apply_replace_window(const CMatrix& rho_blk, const CMatrix& state, std::size_t nsites,
                             std::size_t dim, std::size_t s0, std::size_t w) {
    std::size_t dL = 1, dW = 1, dR = 1;
    for (std::size_t s = 0; s < s0; ++s) dL *= dim;
    for (std::size_t s = 0; s < w; ++s) dW *= dim;
    for (std::size_t s = s0 + w; s < nsites; ++s) dR *= dim;
    if (rho_blk.rows != dW) throw std::invalid_argument("apply_replace_window: block dim mismatch");
    // tmp[(l r),(l' r')] = sum_w state[(l w r),(l' w r')]
    CMatrix tmp(dL * dR, dL * dR);
    for (std::size_t l = 0; l < dL; ++l)
        for (std::size_t r = 0; r < dR; ++r)
            for (std::size_t l2 = 0; l2 < dL; ++l2)
                for (std::size_t r2 = 0; r2 < dR; ++r2) {
                    cplx s = 0;
                    for (std::size_t w1 = 0; w1 < dW; ++w1)
                        s += state((l * dW + w1) * dR + r, (l2 * dW + w1) * dR + r2);
                    tmp(l * dR + r, l2 * dR + r2) = s;
                }
    const std::size_t total = dL * dW * dR;
    CMatrix out(total, total);
    for (std::size_t l = 0; l < dL; ++l)
        for (std::size_t w1 = 0; w1 < dW; ++w1)
            for (std::size_t r = 0; r < dR; ++r)
                for (std::size_t l2 = 0; l2 < dL; ++l2)
                    for (std::size_t w2 = 0; w2 < dW; ++w2)
                        for (std::size_t r2 = 0; r2 < dR; ++r2)
                            out((l * dW + w1) * dR + r, (l2 * dW + w2) * dR + r2) =
                                tmp(l * dR + r, l2 * dR + r2) * rho_blk(w1, w2);
    return out;
}

}  // namespace wharf
