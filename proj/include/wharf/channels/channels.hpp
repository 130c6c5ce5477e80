#pragma once

#include <functional>

#include "wharf/engine/engine.hpp"

namespace wharf {

/// CPTP map stored as a Choi matrix: C[(i,o),(j,p)] = E(E_ij)[o,p].
struct Channel {
    std::size_t d_in = 0;
    std::size_t d_out = 0;
    CMatrix choi;
    std::string label;

    struct CptpResiduals {
        double choi_min_eig = 0.0;
        double tp_residual = 0.0;
        double herm_residual = 0.0;
    };
    CptpResiduals cptp_residuals() const;
};

/// Transfer matrix of a channel: out_flat = Tf * in_flat (row-major matrix
/// flattening on both sides).
CMatrix transfer_to_choi(const CMatrix& tf, std::size_t d_in, std::size_t d_out);
CMatrix choi_to_transfer(const CMatrix& choi, std::size_t d_in, std::size_t d_out);
CMatrix apply_transfer(const CMatrix& tf, const CMatrix& x);

Channel choi_from_action(const std::function<CMatrix(const CMatrix&)>& apply, std::size_t d_in,
                         std::size_t d_out, const std::string& label = "",
                         std::uint64_t seed = 7);

std::vector<CMatrix> kraus_from_choi(const Channel& ch, double tol = 1e-10);

/// Coarse-graining channel T: End(V) -> End(V (x) V),
/// X -> tr(phi(xi T(Omega_(1))) X) phi(c Omega_(2)) (x) phi(c Omega_(3)).
CMatrix transfer_coarse(const WhaSpec& spec, const DistinguishedElements& d);
Channel coarse_grain(const WhaSpec& spec, const DistinguishedElements& d);

/// Fine-graining channel S: End(V (x) V) -> End(V) with mixed-state fallback rho0
/// on the complement of phi2(Delta(1)).
CMatrix transfer_fine(const WhaSpec& spec, const DistinguishedElements& d,
                      const CMatrix* rho0 = nullptr);
Channel fine_grain(const WhaSpec& spec, const DistinguishedElements& d,
                   const CMatrix* rho0 = nullptr);

/// Inner gluing map End(V (x) V) -> End(V) for Hopf specs (generator x) and the
/// trivial-sector variant for weak specs. The full gluing channel is T o inner.
CMatrix transfer_glue_inner_hopf(const WhaSpec& spec, const DistinguishedElements& d,
                                 const AlgebraElement& x);
CMatrix transfer_glue_inner_trivial(const WhaSpec& spec, const DistinguishedElements& d);

Channel glue_hopf(const WhaSpec& spec, const DistinguishedElements& d, const AlgebraElement& x);
Channel glue_trivial(const WhaSpec& spec, const DistinguishedElements& d);

struct NoGluingWitness {
    CMatrix lhs;               // tr_{2,3}(rho_2(Omega) (x) rho_2(Omega))
    CMatrix rhs;               // tr_{3,4}(rho_4(Omega))
    double distance = 0.0;     // trace distance between the two
    double product_deviation = 0.0;   // || rhs - marg1 (x) marg2 ||_1 / 2
};
NoGluingWitness no_gluing_witness(const WhaSpec& spec, const DistinguishedElements& d);

/// Apply a channel transfer to sites [s0, s0+w_in) of an nsites chain with
/// per-site dimension `dim`; the window is replaced by w_out sites.
CMatrix apply_window(const CMatrix& tf, const CMatrix& state, std::size_t nsites, std::size_t dim,
                     std::size_t s0, std::size_t w_in, std::size_t w_out);

/// Replace the window with a fixed state: X -> tr_window(X) (x) rho_blk.
CMatrix apply_replace_window(const CMatrix& rho_blk, const CMatrix& state, std::size_t nsites,
                             std::size_t dim, std::size_t s0, std::size_t w);

}  // namespace wharf
